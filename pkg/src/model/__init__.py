"""行列式模型模块

行列式芽的构造、IDS 证书以及奇异轨迹理想。
"""

from .determinantal import (
    DeterminantalGerm,
    IdsCertificate,
    build_germ,
    expected_dimension,
    rank_drop_ideal,
    singular_locus_ideal,
    verify_ids,
)

__all__ = [
    "DeterminantalGerm",
    "IdsCertificate",
    "build_germ",
    "expected_dimension",
    "rank_drop_ideal",
    "singular_locus_ideal",
    "verify_ids",
]
