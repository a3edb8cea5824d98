"""Majorization vectors and entropic bounds for universal uncertainty
relations of two orthonormal bases."""
from ._backend import BACKEND
from .bounds import BoundReport, VerificationReport, jpdd_bound, mu_bound, verify_uur
from .jpdd import partitions_of, region_of_partition, successors
from .majorization import UncertaintyMeasure, majorizes, measure_value, tensor_distribution
from .measurement import BasisPair, overlap_stats, probabilities, sample_haar_state
from .omega import build_norm_table, omega_k, omega_partition_value, omega_vector
from .oracle import brute_force_omega_k, region_max

__all__ = [
    "BACKEND",
    "BasisPair",
    "BoundReport",
    "UncertaintyMeasure",
    "VerificationReport",
    "brute_force_omega_k",
    "build_norm_table",
    "jpdd_bound",
    "majorizes",
    "measure_value",
    "mu_bound",
    "omega_k",
    "omega_partition_value",
    "omega_vector",
    "overlap_stats",
    "partitions_of",
    "probabilities",
    "region_max",
    "region_of_partition",
    "sample_haar_state",
    "successors",
    "tensor_distribution",
    "verify_uur",
]
