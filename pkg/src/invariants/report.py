"""不变量报告模块

汇总 m_0..m_d，按交错和公式计算消失 Euler 示性数 nu，并给出连通性分类。
"""

import contextvars
import logging
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from typing import Callable, Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..engine.deadline import run_as_task
from ..errors import CertificateFailureError
from ..model.determinantal import DeterminantalGerm, IdsCertificate, verify_ids
from ..utils.logger import get_logger, log_with_context
from .genericity import DrawRecord, GenericityContext
from .polar import multiplicity_m0, polar_multiplicity, top_polar_multiplicity

logger = get_logger(__name__)


class ConnectivityClass(str, Enum):
    """光滑化 (d-1)-连通性已知成立的类别"""

    CURVE = 'Curve'
    HYPERSURFACE = 'Hypersurface'
    ICIS = 'ICIS'
    GENERAL_IDS = 'GeneralIDS'


class BouquetStatus(str, Enum):
    """光滑化是否同伦于 nu 个 d 维球面的花束（仅作元数据）"""

    KNOWN = 'known'
    UNKNOWN = 'unknown'
    UNVERIFIED = 'unverified'


AUTO_CONNECTED = (ConnectivityClass.CURVE, ConnectivityClass.HYPERSURFACE, ConnectivityClass.ICIS)


class InvariantReport(BaseModel):
    """单个 IDS 的不变量报告"""

    model_config = ConfigDict(frozen=True)

    N: int
    d: int
    s: int
    coefficient_field: str
    m: List[int]
    nu: int
    chi_smoothing: int
    connectivity_class: ConnectivityClass
    smoothing_connected: bool
    bouquet_status: BouquetStatus
    ids_certificate: IdsCertificate = Field(exclude=True)
    seed: int = Field(exclude=True)
    draws: List[DrawRecord]

    @property
    def cw_cell_profile(self) -> Tuple[int, ...]:
        """光滑化 CW 结构中各维胞腔个数，即 m 本身"""
        return tuple(self.m)

    def invariants(self) -> Tuple:
        """与种子无关的不变量部分，用于比较"""
        return (tuple(self.m), self.nu, self.chi_smoothing, self.connectivity_class, self.smoothing_connected)


def alternating_nu(m: List[int], d: int) -> int:
    """nu = (-1)^d (sum_i (-1)^i m_i - 1)"""
    total = sum((-1) ** i * value for i, value in enumerate(m))
    return (-1) ** d * (total - 1)


def classify_connectivity(N: int, d: int, s: int) -> ConnectivityClass:
    if d == 1:
        return ConnectivityClass.CURVE
    if N - d == 1:
        return ConnectivityClass.HYPERSURFACE
    if s == 1:
        return ConnectivityClass.ICIS
    return ConnectivityClass.GENERAL_IDS


def bouquet_status(connectivity: ConnectivityClass, d: int) -> BouquetStatus:
    if connectivity in AUTO_CONNECTED:
        return BouquetStatus.KNOWN
    if d == 2:
        return BouquetStatus.UNKNOWN
    return BouquetStatus.UNVERIFIED


def _run_tasks(tasks: Dict[int, Callable[[], int]], max_workers: int) -> Dict[int, int]:
    """执行 m_i 计算任务，多线程时每个任务复制当前上下文（含截止时间）"""
    if max_workers <= 1 or len(tasks) <= 1:
        return {index: run_as_task(task) for index, task in tasks.items()}
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        futures = {
            index: executor.submit(contextvars.copy_context().run, run_as_task, task)
            for index, task in tasks.items()
        }
        return {index: future.result() for index, future in futures.items()}


def vanishing_euler(
    germ: DeterminantalGerm,
    ctx: GenericityContext,
    certificate: Optional[IdsCertificate] = None,
    max_workers: int = 1,
    local_only: bool = False
) -> InvariantReport:
    """计算 m_0..m_d 与消失 Euler 示性数

    Args:
        germ: 行列式芽
        ctx: 一般性上下文（内部派生一个记录独立的副本）
        certificate: 已计算的 IDS 证书，缺省时重新检验
        max_workers: 并行计算 m_i 的线程数
        local_only: 允许原点以外的奇点。调用方须已确认原点是奇异轨迹的
            孤立点；各 m_i 都是原点处的局部量，不受远处奇点影响

    Returns:
        不变量报告

    Raises:
        CertificateFailureError: 芽不是 IDS
    """
    certificate = certificate or verify_ids(germ)
    accepted = certificate.is_ids or (
        local_only and certificate.codim_bound_ok and certificate.rank_drop_isolated
    )
    if not accepted:
        raise CertificateFailureError(certificate)
    local = ctx.fork()
    d = germ.d

    tasks: Dict[int, Callable[[], int]] = {0: lambda: multiplicity_m0(germ)}
    for i in range(1, d):
        tasks[i] = (lambda i=i: polar_multiplicity(germ, i, local))
    if d >= 1:
        tasks[d] = lambda: top_polar_multiplicity(germ, local)
    values = _run_tasks(tasks, max_workers)
    m = [values[i] for i in range(d + 1)]

    nu = alternating_nu(m, d)
    connectivity = classify_connectivity(germ.N, d, germ.s)
    report = InvariantReport(
        N=germ.N,
        d=d,
        s=germ.s,
        coefficient_field=germ.ring.field.label,
        m=m,
        nu=nu,
        chi_smoothing=1 + (-1) ** d * nu,
        connectivity_class=connectivity,
        smoothing_connected=d >= 1,
        bouquet_status=bouquet_status(connectivity, d),
        ids_certificate=certificate,
        seed=ctx.seed,
        draws=local.records,
    )
    log_with_context(logger, logging.INFO, "不变量计算完成", m=tuple(m), nu=nu, cls=connectivity.value)
    return report
