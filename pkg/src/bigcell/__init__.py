"""Big cell 모듈 - sieves and the K_S covering judgment"""

from .sieve import Sieve, empty_sieve, format_sieve, maximal_sieve, parse_sieve, pullback
from .topology import (
    CertificateKind,
    PointCertificate,
    cover_witness,
    finite_subcover,
    is_cover,
    is_trivializing_zariski,
    point_certificate,
    sigma_cover_law,
    tower_supernatural,
    verify_certificate,
)

__all__ = [
    "Sieve",
    "empty_sieve",
    "format_sieve",
    "maximal_sieve",
    "parse_sieve",
    "pullback",
    "CertificateKind",
    "PointCertificate",
    "cover_witness",
    "finite_subcover",
    "is_cover",
    "is_trivializing_zariski",
    "point_certificate",
    "sigma_cover_law",
    "tower_supernatural",
    "verify_certificate",
]
