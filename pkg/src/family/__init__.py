"""族分析模块

单参数行列式族的成员实例化、好族检验、不变量常数性与等奇异判定。
"""

from .family import GENERIC, DeterminantalFamily, parameter_label
from .analyzer import (
    AnalysisMode,
    CheckStatus,
    ConservationRecord,
    FamilyAnalyzer,
    FamilyReport,
    MemberReport,
    MemberRole,
    TopologicalVerdict,
    WhitneyVerdict,
    chi_fiber,
    conservation_check,
    goodness_check,
    invariant_table,
    relative_polar_multiplicity,
    relative_top_polar,
    semicontinuity_check,
    topological_verdict,
    whitney_verdict,
)

__all__ = [
    "GENERIC",
    "DeterminantalFamily",
    "parameter_label",
    "AnalysisMode",
    "CheckStatus",
    "ConservationRecord",
    "FamilyAnalyzer",
    "FamilyReport",
    "MemberReport",
    "MemberRole",
    "TopologicalVerdict",
    "WhitneyVerdict",
    "chi_fiber",
    "conservation_check",
    "goodness_check",
    "invariant_table",
    "relative_polar_multiplicity",
    "relative_top_polar",
    "semicontinuity_check",
    "topological_verdict",
    "whitney_verdict",
]
