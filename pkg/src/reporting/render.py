"""报告渲染模块

把报告文档渲染为对齐的文本或单个 JSON 文档。相同输入、种子与版本下
输出逐字节一致（耗时只在显式要求时出现）。
"""

import json
from typing import List, Optional, Sequence, Tuple

from ..family.analyzer import FamilyReport, MemberReport
from ..invariants.report import InvariantReport
from ..model.determinantal import IdsCertificate
from .documents import ReportDocument, report_schema

LABEL_WIDTH = 22


def _yes_no(value: Optional[bool]) -> str:
    if value is None:
        return '-'
    return '是' if value else '否'


def _lines(pairs: Sequence[Tuple[str, object]], indent: str = '') -> List[str]:
    return [f"{indent}{label:<{LABEL_WIDTH}}{value}" for label, value in pairs]


def _certificate_lines(certificate: IdsCertificate, indent: str = '') -> List[str]:
    return _lines([
        ('余维数界', _yes_no(certificate.codim_bound_ok)),
        ('秩下降轨迹孤立', _yes_no(certificate.rank_drop_isolated)),
        ('原点外光滑', _yes_no(certificate.smooth_off_origin)),
        ('假设子式理想既约', _yes_no(certificate.reducedness_assumed)),
        ('IDS', _yes_no(certificate.is_ids)),
    ], indent)


def _invariant_lines(report: InvariantReport, indent: str = '') -> List[str]:
    lines = _lines([
        ('(N, d, s)', f"({report.N}, {report.d}, {report.s})"),
        ('系数域', report.coefficient_field),
        ('极重数 m_0..m_d', ', '.join(str(v) for v in report.m)),
        ('消失 Euler 示性数 nu', report.nu),
        ('chi(X_A)', report.chi_smoothing),
        ('连通性类别', report.connectivity_class.value),
        ('光滑化连通', _yes_no(report.smoothing_connected)),
        ('球面花束', report.bouquet_status.value),
    ], indent)
    for record in report.draws:
        attempts = ','.join(str(a) for a in record.attempts)
        lines.append(f"{indent}{'抽样 ' + record.quantity:<{LABEL_WIDTH}}{record.value} (attempts {attempts})")
    return lines


def _member_lines(member: MemberReport) -> List[str]:
    lines = [f"  [{member.label}] ({member.role.value})"]
    if member.error:
        lines.append(f"    错误: {member.error}")
    if member.certificate is not None:
        lines += _certificate_lines(member.certificate, '    ')
    if member.invariants is not None:
        lines += _invariant_lines(member.invariants, '    ')
    if member.agrees_with_generic is not None:
        lines += _lines([('与一般成员一致', _yes_no(member.agrees_with_generic))], '    ')
    if member.local_invariants:
        lines.append('    不变量只在原点处计算（原点以外另有奇点）')
    return lines


def _family_lines(report: FamilyReport) -> List[str]:
    lines = ['族分析']
    lines += _lines([
        ('参数', report.parameter),
        ('模式', report.mode.value),
        ('(N, d, s)', f"({report.N}, {report.d}, {report.s})"),
        ('保持原点', _yes_no(report.origin_preserving)),
        ('好族', _yes_no(report.good)),
        ('由 ICIS 推出好族', _yes_no(report.goodness_inferred)),
        ('nu 常数', _yes_no(report.nu_constant)),
        ('m_i 常数', _yes_no(report.mi_constant)),
        ('拓扑判定', report.topological_verdict.value),
        ('Whitney 判定', report.whitney_verdict.value),
        ('相对极重数 m_1..m_{d-1}', ', '.join(str(v) for v in report.relative_polar) or '-'),
        ('相对顶极重数 m_d', '-' if report.relative_md is None else report.relative_md),
        ('chi(X_t)', '-' if report.chi_fiber is None else report.chi_fiber),
        ('d=2 半连续性', report.semicontinuity.value),
    ], '  ')
    if report.conservation is not None:
        record = report.conservation
        lines += _lines([
            ('守恒检验', record.status.value),
            ('  m_d(X_0,0)', '-' if record.lhs is None else record.lhs),
            ('  sum mu + m_d(X_t,0)', '-' if record.rhs is None else record.rhs),
        ], '  ')
        if record.diagnostic:
            lines.append(f"    {record.diagnostic}")
    for label, sequence in report.mu_star.items():
        lines += _lines([(f"mu* [{label}]", ', '.join(str(v) for v in sequence))], '  ')
    lines.append('')
    lines.append('成员')
    for member in report.members:
        lines += _member_lines(member)
    for note in report.notes:
        lines.append(f"  注: {note}")
    return lines


def render_text(document: ReportDocument) -> str:
    """渲染为对齐的文本报告"""
    lines = [f"{document.tool} {document.tool_version} - {document.command}"]
    lines += _lines([
        ('输入摘要 (sha256)', document.input_digest),
        ('种子', document.genericity.seed),
        ('系数界 B', document.genericity.coefficient_bound),
        ('一致抽样次数', document.genericity.agreeing_draws),
        ('重试次数', document.genericity.retry_budget),
    ])
    lines.append('')
    lines.append('输入')
    lines += [f"  | {line}" for line in document.input_echo.rstrip('\n').splitlines()]
    lines.append('')
    if document.certificate is not None:
        lines.append('IDS 证书')
        lines += _certificate_lines(document.certificate, '  ')
        lines.append('')
    if document.invariants is not None:
        lines.append('不变量')
        lines += _invariant_lines(document.invariants, '  ')
        lines.append('')
    if document.family is not None:
        lines += _family_lines(document.family)
        lines.append('')
    if document.caveats:
        lines.append('说明')
        lines += [f"  * {caveat}" for caveat in document.caveats]
    if document.timings is not None:
        lines.append('')
        lines.append('耗时（秒）')
        lines += _lines(sorted(document.timings.items()), '  ')
    return '\n'.join(lines) + '\n'


def render_json(document: ReportDocument) -> str:
    """渲染为单个 JSON 文档（键按字母序，便于比较两次运行的输出）"""
    return json.dumps(document.model_dump(mode='json'), indent=2, sort_keys=True, ensure_ascii=False) + '\n'


def render_schema() -> str:
    return json.dumps(report_schema(), indent=2, ensure_ascii=False) + '\n'
