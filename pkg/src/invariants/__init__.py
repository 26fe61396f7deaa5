"""不变量计算模块

一般性上下文、极重数、Milnor 数交叉校验以及单个 IDS 的不变量报告。
"""

from .genericity import DrawRecord, GenericityContext, RandomSource
from .polar import multiplicity_m0, polar_multiplicity, top_polar_multiplicity
from .milnor import (
    generic_section_milnor,
    milnor_hypersurface,
    milnor_icis_le_greuel,
    milnor_monomial_curve,
    mu_star_sequence,
)
from .report import (
    BouquetStatus,
    ConnectivityClass,
    InvariantReport,
    alternating_nu,
    classify_connectivity,
    vanishing_euler,
)

__all__ = [
    "DrawRecord",
    "GenericityContext",
    "RandomSource",
    "multiplicity_m0",
    "polar_multiplicity",
    "top_polar_multiplicity",
    "generic_section_milnor",
    "milnor_hypersurface",
    "milnor_icis_le_greuel",
    "milnor_monomial_curve",
    "mu_star_sequence",
    "BouquetStatus",
    "ConnectivityClass",
    "InvariantReport",
    "alternating_nu",
    "classify_connectivity",
    "vanishing_euler",
]
