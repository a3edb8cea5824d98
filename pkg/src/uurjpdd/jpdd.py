"""Young-diagram combinatorics on the d x d grid of products ``p_i q_j``.

Cells are 1-based ``(row, column)`` pairs. A partition ``(k_1, ..., k_n)``
stands for the region whose i-th row holds the first ``k_i`` cells.
"""
from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import OutOfRange, UnsortedInput

Partition = tuple[int, ...]
Cell = tuple[int, int]
Region = frozenset


def is_partition(p: Partition, d: int) -> bool:
    return (
        len(p) >= 1
        and len(p) <= d
        and all(1 <= k <= d for k in p)
        and all(a >= b for a, b in zip(p, p[1:]))
    )


def partitions_of(k: int, d: int) -> list[Partition]:
    """Partitions of ``k`` fitting in a d x d box, lexicographically descending."""
    if k < 1 or k > d * d:
        raise OutOfRange(f"k={k} outside 1..{d * d}")
    out: list[Partition] = []

    def grow(prefix: list[int], remaining: int, cap: int):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if len(prefix) == d:
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            grow(prefix, remaining - part, part)
            prefix.pop()

    grow([], k, d)
    return out


def successors(p: Partition, d: int) -> list[Partition]:
    """Partitions reachable by adding one box: grow a row or open a new one."""
    found: list[Partition] = []
    for i in range(len(p)):
        q = p[:i] + (p[i] + 1,) + p[i + 1:]
        if is_partition(q, d) and q not in found:
            found.append(q)
    q = p + (1,)
    if is_partition(q, d) and q not in found:
        found.append(q)
    return found


def region_of_partition(p: Partition) -> Region:
    return frozenset((i, j) for i, k in enumerate(p, start=1) for j in range(1, k + 1))


def is_partition_shaped(region: Iterable[Cell]) -> bool:
    """True if some relabelling of rows and columns turns the region into a
    Young diagram, i.e. the column sets of its occupied rows form a chain."""
    rows: dict[int, set[int]] = {}
    for i, j in region:
        rows.setdefault(i, set()).add(j)
    chain = sorted(rows.values(), key=len, reverse=True)
    return all(b <= a for a, b in zip(chain, chain[1:]))


def partition_of_region(region: Iterable[Cell]) -> Partition | None:
    """Row lengths of a partition-shaped region, else ``None``."""
    if not is_partition_shaped(region):
        return None
    counts: dict[int, int] = {}
    for i, _ in region:
        counts[i] = counts.get(i, 0) + 1
    return tuple(sorted(counts.values(), reverse=True))


def _is_descending(v: np.ndarray) -> bool:
    return bool(np.all(v[:-1] >= v[1:]))


def is_connected_region(region: Iterable[Cell], p, q) -> bool:
    """Connectedness of a region of the product grid.

    Every cell attaining the region's largest product must have its upper or
    left neighbour in the region. Cells on the first row or first column are
    accepted as anchored to the (1, 1) corner.
    """
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    if not (_is_descending(p) and _is_descending(q)):
        raise UnsortedInput("p and q must be sorted in descending order")
    cells = set(region)
    if not cells:
        return False
    vals = {(i, j): p[i - 1] * q[j - 1] for i, j in cells}
    top = max(vals.values())
    for (i, j), v in vals.items():
        if v < top:
            continue
        if i == 1 or j == 1:
            continue
        if (i - 1, j) not in cells and (i, j - 1) not in cells:
            return False
    return True
