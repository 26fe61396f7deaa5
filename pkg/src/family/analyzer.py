"""族分析模块

对单参数行列式族实例化成员、检验好族条件、比较不变量，并给出拓扑型
常数判定、Whitney 等奇异判定、相对极重数、守恒检验与 d = 2 半连续性检验。
"""

import contextvars
import logging
import sys
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field
from tqdm import tqdm

from ..engine.deadline import run_as_task
from ..engine.hilbert import INFINITE
from ..engine.operations import (
    hilbert_samuel_multiplicity,
    krull_dimension,
    local_quotient_dimension,
    saturate_by_element,
)
from ..errors import (
    CertificateFailureError,
    DeterminantalModelError,
    GenericityUnstableError,
    InputDocumentError,
    NonFiniteCriticalSchemeError,
    WrongPolarDimensionError,
)
from ..invariants.genericity import GenericityContext, RandomSource
from ..invariants.milnor import mu_star_sequence
from ..invariants.polar import constant_rows, critical_minors
from ..invariants.report import ConnectivityClass, InvariantReport, vanishing_euler
from ..model.determinantal import DeterminantalGerm, IdsCertificate, verify_ids
from ..utils.logger import get_logger, log_with_context
from .family import GENERIC, DeterminantalFamily, ParameterValue, parameter_label

logger = get_logger(__name__)


class AnalysisMode(str, Enum):
    """成员分析模式"""

    GENERIC = 'generic'
    SAMPLED = 'sampled'


class MemberRole(str, Enum):
    SPECIAL = 'special'
    GENERIC = 'generic'
    SAMPLE = 'sample'


class TopologicalVerdict(str, Enum):
    """拓扑型常数判定（只给出充分条件方向）"""

    CONSTANT_TOP_TYPE = 'ConstantTopType'
    HYPOTHESIS_UNVERIFIED_D2 = 'HypothesisUnverified(d=2)'
    HYPOTHESIS_UNVERIFIED_CONNECTIVITY = 'HypothesisUnverified(connectivity)'
    NOT_CONCLUDED = 'NotConcluded'


class WhitneyVerdict(str, Enum):
    """Whitney 等奇异判定（充要条件）"""

    WHITNEY_EQUISINGULAR = 'WhitneyEquisingular'
    NOT_WHITNEY = 'NotWhitney'
    NOT_CONCLUDED = 'NotConcluded'


class CheckStatus(str, Enum):
    HOLDS = 'Holds'
    FAILS = 'Fails'
    NOT_APPLICABLE = 'NotApplicable'
    INCONCLUSIVE = 'Inconclusive'


class MemberReport(BaseModel):
    """族中一个成员的分析结果"""

    model_config = ConfigDict(frozen=True)

    label: str
    role: MemberRole
    certificate: Optional[IdsCertificate] = None
    invariants: Optional[InvariantReport] = None
    agrees_with_generic: Optional[bool] = None
    error: Optional[str] = None
    # 证书因原点以外的奇点失败、原点处仍孤立时为 True，不变量只在原点处有意义
    local_invariants: bool = False

    @property
    def certified(self) -> bool:
        return self.certificate is not None and self.certificate.is_ids


class ConservationRecord(BaseModel):
    """m_d(X_0,0) = sum mu(p|X_t, y) + m_d(X_t,0) 的检验记录"""

    model_config = ConfigDict(frozen=True)

    status: CheckStatus
    lhs: Optional[int] = None
    rhs: Optional[int] = None
    critical_count: Optional[int] = None
    diagnostic: Optional[str] = None

    @property
    def holds(self) -> Optional[bool]:
        if self.status in (CheckStatus.HOLDS, CheckStatus.FAILS):
            return self.status == CheckStatus.HOLDS
        return None


class FamilyReport(BaseModel):
    """族分析报告"""

    model_config = ConfigDict(frozen=True)

    N: int
    d: int
    s: int
    parameter: str
    mode: AnalysisMode
    origin_preserving: bool
    members: List[MemberReport]
    good: bool
    goodness_inferred: bool = False
    nu_constant: Optional[bool] = None
    mi_constant: Optional[bool] = None
    topological_verdict: TopologicalVerdict = TopologicalVerdict.NOT_CONCLUDED
    whitney_verdict: WhitneyVerdict = WhitneyVerdict.NOT_CONCLUDED
    relative_polar: List[int] = Field(default_factory=list)
    relative_md: Optional[int] = None
    chi_fiber: Optional[int] = None
    conservation: Optional[ConservationRecord] = None
    semicontinuity: CheckStatus = CheckStatus.NOT_APPLICABLE
    mu_star: Dict[str, List[int]] = Field(default_factory=dict)
    notes: List[str] = Field(default_factory=list)

    def member(self, role: MemberRole) -> Optional[MemberReport]:
        for item in self.members:
            if item.role == role:
                return item
        return None

    @property
    def special(self) -> MemberReport:
        return self.member(MemberRole.SPECIAL)

    def compared_members(self) -> List[MemberReport]:
        """与 t=0 成员比较常数性的成员：generic 模式为一般成员，sampled 模式为各样本"""
        if self.mode == AnalysisMode.GENERIC:
            return [m for m in self.members if m.role == MemberRole.GENERIC]
        return [m for m in self.members if m.role == MemberRole.SAMPLE]


# ---------------------------------------------------------------------------
# 成员与好族检验
# ---------------------------------------------------------------------------

def validate_samples(samples: Sequence, mode: AnalysisMode) -> List[Fraction]:
    values = [Fraction(v) for v in samples]
    if any(v == 0 for v in values):
        raise InputDocumentError("样本参数值不能为 0（t=0 成员总是单独分析）")
    if mode == AnalysisMode.SAMPLED and not values:
        raise InputDocumentError("sampled 模式至少需要一个样本参数值")
    return values


def goodness_check(family: DeterminantalFamily, samples: Sequence = ()) -> bool:
    """好族检验：一般参数及每个样本处奇异轨迹都只在原点

    Args:
        family: 行列式族
        samples: 有理样本参数值

    Returns:
        全部成员通过 IDS 证书时为 True
    """
    for value in [GENERIC] + [Fraction(v) for v in samples]:
        label = parameter_label(family.parameter, value)
        try:
            certificate = verify_ids(family.instantiate(value))
        except DeterminantalModelError as e:
            logger.warning(f"成员 {label} 不是行列式芽: {e.message}")
            return False
        if not certificate.is_ids:
            logger.warning(f"成员 {label} 不是 IDS: {', '.join(certificate.failures())}")
            return False
    return True


def analyze_member(
    family: DeterminantalFamily,
    value: ParameterValue,
    role: MemberRole,
    ctx: GenericityContext,
    compute_invariants: bool = True
) -> MemberReport:
    """实例化一个成员，认证并（可选）计算不变量"""
    label = parameter_label(family.parameter, value)
    try:
        germ = family.instantiate(value)
    except DeterminantalModelError as e:
        if role == MemberRole.SPECIAL:
            raise
        logger.warning(f"成员 {label} 被拒绝: {e.message}")
        return MemberReport(label=label, role=role, error=e.message)
    certificate = verify_ids(germ)
    if not compute_invariants:
        return MemberReport(label=label, role=role, certificate=certificate)
    if certificate.is_ids:
        invariants = vanishing_euler(germ, ctx, certificate)
        return MemberReport(label=label, role=role, certificate=certificate, invariants=invariants)
    if role == MemberRole.SPECIAL or not _isolated_icis_at_origin(germ, certificate):
        return MemberReport(label=label, role=role, certificate=certificate)

    logger.info(f"成员 {label} 在原点以外有奇点，计算原点处的局部不变量")
    try:
        invariants = vanishing_euler(germ, ctx, certificate, local_only=True)
    except GenericityUnstableError as e:
        logger.warning(f"成员 {label} 的局部不变量无法确定: {e.message}")
        return MemberReport(label=label, role=role, certificate=certificate, error=e.message)
    return MemberReport(
        label=label, role=role, certificate=certificate, invariants=invariants, local_invariants=True
    )


def _isolated_icis_at_origin(germ: DeterminantalGerm, certificate: IdsCertificate) -> bool:
    """ICIS 成员的奇点在原点处孤立（局部商空间维数有限），远处可以另有奇点"""
    if not germ.is_icis or certificate.smooth_off_origin:
        return False
    return local_quotient_dimension(germ.singular_locus) != INFINITE


def _member_plan(samples: List[Fraction], mode: AnalysisMode):
    plan = [(Fraction(0), MemberRole.SPECIAL, True), (GENERIC, MemberRole.GENERIC, mode == AnalysisMode.GENERIC)]
    plan += [(value, MemberRole.SAMPLE, True) for value in samples]
    return plan


def _flag_agreement(members: List[MemberReport]) -> List[MemberReport]:
    generic = next((m for m in members if m.role == MemberRole.GENERIC), None)
    if generic is None or generic.invariants is None:
        return members
    flagged = []
    for member in members:
        if member.role == MemberRole.SAMPLE and member.invariants is not None:
            agrees = member.invariants.invariants() == generic.invariants.invariants()
            if not agrees:
                logger.warning(f"样本成员 {member.label} 与一般成员的不变量不一致")
            member = member.model_copy(update={'agrees_with_generic': agrees})
        flagged.append(member)
    return flagged


def _constancy(report_special: Optional[InvariantReport], others: List[MemberReport], key: Callable) -> Optional[bool]:
    if report_special is None or not others or any(m.invariants is None for m in others):
        return None
    reference = key(report_special)
    return all(key(m.invariants) == reference for m in others)


def assemble_table(
    family: DeterminantalFamily,
    members: List[MemberReport],
    mode: AnalysisMode
) -> FamilyReport:
    """由成员结果组装（部分填写的）族报告"""
    order = {MemberRole.SPECIAL: 0, MemberRole.GENERIC: 1, MemberRole.SAMPLE: 2}
    members = sorted(members, key=lambda m: (order[m.role], m.label))
    if mode == AnalysisMode.GENERIC:
        members = _flag_agreement(members)
    report = FamilyReport(
        N=family.N,
        d=family.d,
        s=family.s,
        parameter=family.parameter,
        mode=mode,
        origin_preserving=family.origin_preserving,
        members=members,
        good=all(m.certified for m in members if m.role != MemberRole.SPECIAL),
    )
    special = report.special.invariants
    compared = report.compared_members()
    return report.model_copy(update={
        'nu_constant': _constancy(special, compared, lambda r: r.nu),
        'mi_constant': _constancy(special, compared, lambda r: tuple(r.m)),
    })


def invariant_table(
    family: DeterminantalFamily,
    ctx: GenericityContext,
    samples: Sequence = (),
    mode: AnalysisMode = AnalysisMode.GENERIC
) -> FamilyReport:
    """顺序计算各成员的不变量并给出常数性

    t=0 成员必须是 IDS；好族条件不成立时不变量仍按能算的成员给出，
    判定字段保持 NotConcluded。

    Raises:
        CertificateFailureError: t=0 成员不是 IDS
    """
    values = validate_samples(samples, mode)
    members = [
        analyze_member(family, value, role, ctx, compute)
        for value, role, compute in _member_plan(values, mode)
    ]
    return _require_special(assemble_table(family, members, mode))


def _require_special(report: FamilyReport) -> FamilyReport:
    special = report.special
    if not special.certified:
        raise CertificateFailureError(special.certificate)
    return report


# ---------------------------------------------------------------------------
# 判定
# ---------------------------------------------------------------------------

def icis_goodness_inferred(report: FamilyReport) -> bool:
    """ICIS 捷径：s = 1 且 m_d 常数时可推出族是好的

    比较成员的证书可以因原点以外的奇点失败，此时使用原点处的局部 m_d。
    """
    if report.good or report.s != 1:
        return False
    special = report.special.invariants
    compared = report.compared_members()
    md_constant = _constancy(special, compared, lambda r: r.m[-1])
    return bool(md_constant)


def topological_verdict(report: FamilyReport) -> TopologicalVerdict:
    """拓扑型常数判定

    好族、d != 2、光滑化 (d-1)-连通且 nu 常数时拓扑型常数；
    定理只有一个方向，其余情形不下结论。
    """
    if not (report.good or report.goodness_inferred) or not report.nu_constant:
        return TopologicalVerdict.NOT_CONCLUDED
    if report.d == 2:
        return TopologicalVerdict.HYPOTHESIS_UNVERIFIED_D2
    if report.special.invariants.connectivity_class == ConnectivityClass.GENERAL_IDS:
        return TopologicalVerdict.HYPOTHESIS_UNVERIFIED_CONNECTIVITY
    return TopologicalVerdict.CONSTANT_TOP_TYPE


def whitney_verdict(report: FamilyReport) -> WhitneyVerdict:
    """Whitney 等奇异判定：好族时等价于全部极重数常数"""
    good = report.good or report.goodness_inferred or icis_goodness_inferred(report)
    if not good or report.mi_constant is None:
        return WhitneyVerdict.NOT_CONCLUDED
    if report.mi_constant:
        return WhitneyVerdict.WHITNEY_EQUISINGULAR
    return WhitneyVerdict.NOT_WHITNEY


def chi_fiber(report: FamilyReport) -> Optional[int]:
    """chi(X_t) = 1 + (-1)^d (nu(X_0,0) - nu(X_t,0))，仅对好族给出"""
    if not (report.good or report.goodness_inferred):
        return None
    compared = report.compared_members()
    if not compared or any(m.invariants is None for m in compared):
        return None
    nus = {m.invariants.nu for m in compared}
    if len(nus) != 1:
        return None
    return 1 + (-1) ** report.d * (report.special.invariants.nu - nus.pop())


def semicontinuity_check(family: DeterminantalFamily, report: FamilyReport) -> CheckStatus:
    """d = 2 时 nu(X_t,0) <= nu(X_0,0) 的检验"""
    special = report.special.invariants
    if report.d != 2 or special is None or not family.origin_preserving:
        return CheckStatus.NOT_APPLICABLE
    others = [
        m for m in report.members
        if m.role != MemberRole.SPECIAL and (m.certified or m.local_invariants)
    ]
    if not others or any(m.invariants is None for m in others if m.role == MemberRole.SAMPLE):
        return CheckStatus.INCONCLUSIVE
    values = [m.invariants.nu for m in others if m.invariants is not None]
    if not values:
        return CheckStatus.INCONCLUSIVE
    return CheckStatus.HOLDS if all(v <= special.nu for v in values) else CheckStatus.FAILS


# ---------------------------------------------------------------------------
# 相对极重数与守恒检验
# ---------------------------------------------------------------------------

def _relative_rows(family: DeterminantalFamily, projection: List[List[Fraction]]) -> List[List[Fraction]]:
    """P = (p(x), t) 的微分：p 的各行在 t 列补零，最后一行为 dt"""
    names = family.total_ring.variables
    rows = []
    for coefficients in projection:
        by_name = dict(zip(family.space_variables, coefficients))
        rows.append([by_name.get(name, 0) for name in names])
    rows.append([1 if name == family.parameter else 0 for name in names])
    return rows


def relative_polar_multiplicity(family: DeterminantalFamily, i: int, ctx: GenericityContext) -> int:
    """相对极重数 m_i(X, pi, 0)，1 <= i <= d

    在 QQ[x, t] 中取 P = (p(x), t)，p: C^N -> C^{d-i+1} 为一般线性投影，
    临界理想为 I_s(F) 加上 [雅可比矩阵; DP] 的 N-i+2 阶子式，
    关于一般线性型 l(x) 饱和化以去掉 t 轴上的奇异轨迹。

    Raises:
        ValueError: i 超出范围
        WrongPolarDimensionError: 相对极簇维数始终不是 d+1-i
    """
    if not 1 <= i <= family.d:
        raise ValueError(f"相对极重数下标 i={i} 超出范围 1..{family.d}")
    ring = family.total_ring
    ideal = family.total_space_ideal
    expected = family.d + 1 - i
    quantity = f"m_{i}(X,pi)"

    def compute(source: RandomSource) -> int:
        rows = constant_rows(ring, _relative_rows(family, source.matrix(family.d - i + 1, family.N)))
        minors = critical_minors(ideal.generators, ring, rows, family.N - i + 2)
        polar = saturate_by_element(ideal.with_generators(minors), source.linear_form(ring, family.space_variables))
        dimension = krull_dimension(polar)
        if dimension not in (expected, -1):
            raise WrongPolarDimensionError(quantity, expected, [dimension])
        return hilbert_samuel_multiplicity(polar)

    value = ctx.stable_value(quantity, compute)
    logger.info(f"{quantity} = {value}")
    return value


def relative_top_polar(family: DeterminantalFamily, ctx: GenericityContext) -> int:
    """相对顶极重数 m_d(X, pi, 0)；m_d 常数的好族中为 0"""
    return relative_polar_multiplicity(family, family.d, ctx)


def critical_point_count(family: DeterminantalFamily, ctx: GenericityContext) -> int:
    """趋于原点的 p|X_t 光滑部分临界点个数（计重数）

    在总空间上取 p 的相对临界理想，关于 l(x) 和 t 饱和化后与 {t = 0}
    在 (x, t) 原点处求局部相交数。

    Raises:
        NonFiniteCriticalSchemeError: 局部相交数始终不是有限的
    """
    ring = family.total_ring
    ideal = family.total_space_ideal
    t = ring.gen(family.parameter)
    quantity = "sum mu(p|X_t)"

    def compute(source: RandomSource) -> int:
        gradient = constant_rows(ring, [source.vector(family.N)])
        minors = critical_minors(
            ideal.generators, ring, gradient, family.N - family.d + 1, family.space_variables
        )
        critical = saturate_by_element(
            ideal.with_generators(minors), source.linear_form(ring, family.space_variables)
        )
        value = local_quotient_dimension(saturate_by_element(critical, t).with_generators([t]))
        if value == INFINITE:
            raise NonFiniteCriticalSchemeError(quantity)
        return int(value)

    return ctx.stable_value(quantity, compute)


def conservation_check(family: DeterminantalFamily, ctx: GenericityContext, report: FamilyReport) -> ConservationRecord:
    """检验 m_d(X_0,0) = sum mu(p|X_t, y) + m_d(X_t,0)

    非好族或临界点个数非有限时状态为 Inconclusive。
    """
    if family.d == 0:
        return ConservationRecord(status=CheckStatus.NOT_APPLICABLE, diagnostic="d = 0 时不适用")
    if not (report.good or report.goodness_inferred):
        return ConservationRecord(status=CheckStatus.INCONCLUSIVE, diagnostic="族不是好族")
    special = report.special.invariants
    compared = [m.invariants for m in report.compared_members() if m.invariants is not None]
    if special is None or not compared:
        return ConservationRecord(status=CheckStatus.INCONCLUSIVE, diagnostic="缺少成员不变量")
    try:
        count = critical_point_count(family, ctx)
    except GenericityUnstableError as e:
        return ConservationRecord(status=CheckStatus.INCONCLUSIVE, diagnostic=e.message)
    lhs = special.m[-1]
    rhs = count + compared[0].m[-1]
    diagnostic = None
    if count > 0:
        diagnostic = f"X_t 光滑部分上有 {count} 个趋于原点的临界点，等式按完整形式检验"
    status = CheckStatus.HOLDS if lhs == rhs else CheckStatus.FAILS
    log_with_context(logger, logging.INFO, "守恒检验", lhs=lhs, rhs=rhs, critical=count, status=status.value)
    return ConservationRecord(status=status, lhs=lhs, rhs=rhs, critical_count=count, diagnostic=diagnostic)


# ---------------------------------------------------------------------------
# 分析器
# ---------------------------------------------------------------------------

class FamilyAnalyzer:
    """族分析器

    按阶段协调成员分析、判定与相对极重数计算，记录状态与各阶段耗时。
    """

    STATUS_IDLE = 'idle'
    STATUS_MEMBERS = 'analyzing_members'
    STATUS_VERDICTS = 'verdicts'
    STATUS_RELATIVE_POLAR = 'relative_polar'
    STATUS_CONSERVATION = 'conservation'
    STATUS_COMPLETED = 'completed'
    STATUS_FAILED = 'failed'

    def __init__(
        self,
        ctx: GenericityContext,
        mode: AnalysisMode = AnalysisMode.GENERIC,
        samples: Sequence = (),
        max_workers: int = 1,
        show_progress: bool = False
    ):
        """初始化族分析器

        Args:
            ctx: 一般性上下文
            mode: 分析模式
            samples: 有理样本参数值
            max_workers: 成员并行分析的线程数
            show_progress: 是否在 stderr 显示进度条

        Raises:
            InputDocumentError: 样本参数值不合法
        """
        self.ctx = ctx
        self.mode = AnalysisMode(mode)
        self.samples = validate_samples(samples, self.mode)
        self.max_workers = max(1, max_workers)
        self.show_progress = show_progress
        self.status = self.STATUS_IDLE
        self.timings: Dict[str, float] = {}
        logger.info(f"族分析器已初始化: 模式 {self.mode.value}, 样本 {[str(v) for v in self.samples]}")

    def _stage(self, status: str, started: float) -> float:
        now = time.perf_counter()
        self.timings[self.status] = self.timings.get(self.status, 0.0) + now - started
        self.status = status
        return now

    def analyze(self, family: DeterminantalFamily) -> FamilyReport:
        """完整分析一个族

        Returns:
            填写完整的族报告

        Raises:
            CertificateFailureError: t=0 成员不是 IDS
            GenericityUnstableError: 一般性计算不稳定
            ComputationTimeoutError: 超时
        """
        self.timings = {}
        self.status = self.STATUS_MEMBERS
        started = time.perf_counter()
        try:
            report = _require_special(assemble_table(family, self._analyze_members(family), self.mode))
            started = self._stage(self.STATUS_VERDICTS, started)

            inferred = icis_goodness_inferred(report)
            report = report.model_copy(update={'goodness_inferred': inferred})
            report = report.model_copy(update={
                'topological_verdict': topological_verdict(report),
                'whitney_verdict': whitney_verdict(report),
                'chi_fiber': chi_fiber(report),
                'semicontinuity': run_as_task(semicontinuity_check, family, report),
                'mu_star': run_as_task(self._mu_star, family, report),
            })
            report = report.model_copy(update={'notes': self._notes(report)})
            started = self._stage(self.STATUS_RELATIVE_POLAR, started)

            if report.good or inferred:
                polar = [
                    run_as_task(relative_polar_multiplicity, family, i, self.ctx)
                    for i in range(1, family.d + 1)
                ]
                report = report.model_copy(update={
                    'relative_polar': polar[:-1],
                    'relative_md': polar[-1] if polar else None,
                })
            started = self._stage(self.STATUS_CONSERVATION, started)

            conservation = run_as_task(conservation_check, family, self.ctx, report)
            report = report.model_copy(update={'conservation': conservation})
            self._stage(self.STATUS_COMPLETED, started)
        except Exception as e:
            self.status = self.STATUS_FAILED
            logger.error(f"族分析失败: {str(e)}")
            raise

        log_with_context(
            logger, logging.INFO, "族分析完成",
            good=report.good,
            topological=report.topological_verdict.value,
            whitney=report.whitney_verdict.value,
        )
        return report

    def _analyze_members(self, family: DeterminantalFamily) -> List[MemberReport]:
        plan = _member_plan(self.samples, self.mode)
        members: List[MemberReport] = []
        progress = tqdm(total=len(plan), desc="成员分析", disable=not self.show_progress, file=sys.stderr)
        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            futures = {
                executor.submit(
                    contextvars.copy_context().run,
                    run_as_task, analyze_member, family, value, role, self.ctx, compute
                ): parameter_label(family.parameter, value)
                for value, role, compute in plan
            }
            try:
                for future in as_completed(futures):
                    members.append(future.result())
                    progress.update(1)
                    logger.debug(f"成员 {futures[future]} 分析完成")
            finally:
                progress.close()
        return members

    def _mu_star(self, family: DeterminantalFamily, report: FamilyReport) -> Dict[str, List[int]]:
        """超曲面族在 t=0 与比较成员处的 mu* 序列"""
        if family.s != 1 or family.N - family.d != 1 or family.m * family.n != 1:
            return {}
        sequences = {}
        for label, value in [(report.special.label, Fraction(0))] + self._compared_values(family, report):
            germ = family.instantiate(value)
            g = germ.minors_ideal.generators[0]
            sequences[label] = mu_star_sequence(g, self.ctx.fork(), germ.ring)
        return sequences

    def _compared_values(self, family: DeterminantalFamily, report: FamilyReport):
        if self.mode == AnalysisMode.GENERIC:
            return [('generic', GENERIC)] if report.good or report.goodness_inferred else []
        certified = {m.label for m in report.compared_members() if m.invariants is not None}
        labelled = [(parameter_label(family.parameter, value), value) for value in self.samples]
        return [(label, value) for label, value in labelled if label in certified]

    def _notes(self, report: FamilyReport) -> List[str]:
        notes = []
        if report.mode == AnalysisMode.GENERIC and self.samples:
            notes.append("样本成员仅作交叉校验，常数性按 t=0 与一般成员比较")
        if report.goodness_inferred:
            notes.append("ICIS 族 m_d 常数，由此推出族是好族")
        if report.chi_fiber is not None:
            notes.append("好族中 chi(X_t) = 1 当且仅当 nu 常数")
        if report.topological_verdict == TopologicalVerdict.CONSTANT_TOP_TYPE:
            notes.append("拓扑平凡的族 nu 必为常数")
        return notes

    def get_status(self) -> Dict[str, object]:
        return {'status': self.status, 'timings': dict(self.timings)}
