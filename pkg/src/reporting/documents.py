"""报告文档模块

把单芽分析或族分析的结果组装成可序列化的报告文档，并提供 JSON schema。
"""

from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict

from .. import __version__
from ..family.analyzer import AnalysisMode, FamilyReport
from ..invariants.genericity import GenericityContext
from ..invariants.report import BouquetStatus, ConnectivityClass, InvariantReport
from ..model.determinantal import IdsCertificate
from ..utils.file_utils import get_text_hash

TOOL_NAME = 'ids-equisingularity'

REDUCEDNESS_CAVEAT = "证书采用雅可比判别法，假设子式理想既约（reducedness_assumed）"
TOP_POLAR_CAVEAT = "m_d 通过 (x, eps) 原点处的局部化计数光滑化上的临界点，以此解释“原点附近”"
BOUQUET_CAVEATS = {
    BouquetStatus.KNOWN: "光滑化同伦于 nu 个 d 维球面的花束",
    BouquetStatus.UNKNOWN: "d = 2 的一般 IDS：光滑化是否 1-连通尚不知道",
    BouquetStatus.UNVERIFIED: "一般 IDS：光滑化的 (d-1)-连通性未验证，d >= 3 时可能不是球面花束",
}
MODE_CAVEATS = {
    AnalysisMode.GENERIC: "generic 模式：常数性比较 t=0 与 QQ(t) 上的一般成员",
    AnalysisMode.SAMPLED: "sampled 模式：仅在有理样本处比较，抽样本身不能证明常数性",
}


class GenericitySettings(BaseModel):
    """报告使用的一般性参数"""

    model_config = ConfigDict(frozen=True)

    seed: int
    coefficient_bound: int
    agreeing_draws: int
    retry_budget: int

    @classmethod
    def from_context(cls, ctx: GenericityContext) -> 'GenericitySettings':
        return cls(
            seed=ctx.seed,
            coefficient_bound=ctx.coefficient_bound,
            agreeing_draws=ctx.agreeing_draws,
            retry_budget=ctx.retry_budget,
        )


class ReportDocument(BaseModel):
    """命令行输出的报告文档

    每个不变量值只出现一次：单芽报告的证书在顶层，族报告的证书在各成员中。
    """

    model_config = ConfigDict(frozen=True)

    tool: str = TOOL_NAME
    tool_version: str = __version__
    command: Literal['analyze', 'family']
    input_echo: str
    input_digest: str
    genericity: GenericitySettings
    mode: Optional[AnalysisMode] = None
    certificate: Optional[IdsCertificate] = None
    invariants: Optional[InvariantReport] = None
    family: Optional[FamilyReport] = None
    caveats: List[str]
    timings: Optional[Dict[str, float]] = None


def _invariant_caveats(report: InvariantReport) -> List[str]:
    caveats = [TOP_POLAR_CAVEAT] if report.d >= 1 else []
    caveats.append(BOUQUET_CAVEATS[report.bouquet_status])
    return caveats


def _rounded(timings: Optional[Dict[str, float]]) -> Optional[Dict[str, float]]:
    if timings is None:
        return None
    return {stage: round(seconds, 4) for stage, seconds in timings.items()}


def germ_document(
    text: str,
    ctx: GenericityContext,
    certificate: IdsCertificate,
    report: Optional[InvariantReport] = None,
    timings: Optional[Dict[str, float]] = None
) -> ReportDocument:
    """单芽分析的报告文档（证书失败时 ``report`` 为 None）"""
    caveats = [REDUCEDNESS_CAVEAT] if certificate.reducedness_assumed else []
    if report is not None:
        caveats += _invariant_caveats(report)
    return ReportDocument(
        command='analyze',
        input_echo=text,
        input_digest=get_text_hash(text),
        genericity=GenericitySettings.from_context(ctx),
        certificate=certificate,
        invariants=report,
        caveats=caveats,
        timings=_rounded(timings),
    )


def family_document(
    text: str,
    ctx: GenericityContext,
    report: FamilyReport,
    timings: Optional[Dict[str, float]] = None
) -> ReportDocument:
    """族分析的报告文档"""
    caveats = [REDUCEDNESS_CAVEAT, MODE_CAVEATS[report.mode]]
    special = report.special.invariants
    if special is not None:
        caveats += _invariant_caveats(special)
    if special is not None and special.connectivity_class == ConnectivityClass.GENERAL_IDS and report.d >= 3:
        caveats.append("d >= 3 的一般 IDS 存在光滑化不是球面花束的例子，拓扑判定不作推断")
    return ReportDocument(
        command='family',
        input_echo=text,
        input_digest=get_text_hash(text),
        genericity=GenericitySettings.from_context(ctx),
        mode=report.mode,
        family=report,
        caveats=caveats,
        timings=_rounded(timings),
    )


def report_schema() -> Dict[str, Any]:
    """报告文档的 JSON schema（序列化模式）"""
    return ReportDocument.model_json_schema(mode='serialization')
