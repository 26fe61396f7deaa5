"""基计算引擎模块

提供单项式序、理想及其 Gröbner/局部标准基，以及理想论运算。
"""

from .orders import GLOBAL_DEGREVLEX, LOCAL_NEGDEGREVLEX, MonomialOrder, OrderKind
from .ideal import Ideal
from .hilbert import INFINITE
from .deadline import check_deadline, current_limit, run_as_task, task_deadline, time_limit
from .operations import (
    eliminate,
    groebner_basis,
    hilbert_samuel_multiplicity,
    hilbert_series_local,
    ideal_quotient,
    intersect,
    krull_dimension,
    local_quotient_dimension,
    normal_form,
    saturate_by_element,
    saturation,
    standard_basis_local,
    vanishes_only_at_origin,
)

__all__ = [
    "GLOBAL_DEGREVLEX",
    "LOCAL_NEGDEGREVLEX",
    "MonomialOrder",
    "OrderKind",
    "Ideal",
    "INFINITE",
    "time_limit",
    "check_deadline",
    "current_limit",
    "task_deadline",
    "run_as_task",
    "eliminate",
    "groebner_basis",
    "hilbert_samuel_multiplicity",
    "hilbert_series_local",
    "ideal_quotient",
    "intersect",
    "krull_dimension",
    "local_quotient_dimension",
    "normal_form",
    "saturate_by_element",
    "saturation",
    "standard_basis_local",
    "vanishes_only_at_origin",
]
