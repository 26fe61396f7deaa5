"""IDS 等奇异性分析工具主入口

提供命令行界面：analyze 分析单个行列式芽，family 分析单参数族，
schema 输出报告文档的 JSON schema。
"""

import argparse
import sys
import time
from contextlib import contextmanager
from typing import Dict, Iterator, List, Optional

from .config.manager import ConfigManager, load_config, parse_samples
from .engine.deadline import run_as_task, time_limit
from .errors import IdsToolError
from .family.analyzer import AnalysisMode, FamilyAnalyzer
from .invariants.genericity import GenericityContext
from .invariants.report import vanishing_euler
from .model.determinantal import verify_ids
from .reporting.documents import ReportDocument, family_document, germ_document
from .reporting.input_document import InputDocument, load_family, load_germ, parse_input_document
from .reporting.render import render_json, render_schema, render_text
from .utils.file_utils import read_text_file, write_text_file
from .utils.logger import PACKAGE_LOGGER, get_logger, setup_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERRUPTED = 130


def _add_analysis_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('input', help='输入文档路径')
    parser.add_argument('--json', action='store_true', help='输出单个 JSON 文档')
    parser.add_argument('--seed', type=int, help='随机种子 (0..2^64-1)')
    parser.add_argument('--bound', type=int, help='随机系数分子分母上界 B')
    parser.add_argument('--verify-genericity', type=int, metavar='K', help='需要一致的独立抽样次数')
    parser.add_argument('--retry-budget', type=int, help='额外抽样次数')
    parser.add_argument('--timeout', type=float, metavar='SECONDS', help='计算时间限制（秒）')
    parser.add_argument('--workers', type=int, help='并行线程数')
    parser.add_argument('--config', help='YAML 配置文件路径')
    parser.add_argument('-o', '--output', help='把报告写入文件而不是 stdout')
    parser.add_argument('--timings', action='store_true', help='在报告中包含各阶段耗时')
    parser.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], help='日志级别')


def build_parser() -> argparse.ArgumentParser:
    """构造命令行解析器"""
    parser = argparse.ArgumentParser(description='孤立行列式奇点 (IDS) 族的等奇异性不变量分析')
    subparsers = parser.add_subparsers(dest='command', help='可用命令')

    analyze_parser = subparsers.add_parser('analyze', help='分析单个行列式芽')
    _add_analysis_arguments(analyze_parser)

    family_parser = subparsers.add_parser('family', help='分析单参数行列式族')
    _add_analysis_arguments(family_parser)
    family_parser.add_argument('--samples', help='逗号分隔的有理样本参数值，例如 1/2,1/3')
    family_parser.add_argument('--mode', choices=[m.value for m in AnalysisMode], help='分析模式')
    family_parser.add_argument('--progress', action='store_true', help='在 stderr 显示成员分析进度')

    schema_parser = subparsers.add_parser('schema', help='输出报告文档的 JSON schema')
    schema_parser.add_argument('-o', '--output', help='写入文件而不是 stdout')

    return parser


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """解析命令行参数

    Returns:
        解析后的参数对象
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help(sys.stderr)
        sys.exit(EXIT_INPUT)
    return args


def resolve_config(args: argparse.Namespace, doc: InputDocument) -> ConfigManager:
    """按优先级合并配置：命令行 > 文档 options > 环境变量 > YAML > 默认值"""
    config = load_config(args.config)
    for key, value in doc.options.as_config().items():
        config.update(key, value)
    overrides = {
        'analysis.seed': args.seed,
        'analysis.coefficient_bound': args.bound,
        'analysis.agreeing_draws': args.verify_genericity,
        'analysis.retry_budget': args.retry_budget,
        'analysis.samples': parse_samples(args.samples) if getattr(args, 'samples', None) else None,
        'analysis.mode': getattr(args, 'mode', None),
        'engine.timeout': args.timeout,
        'engine.max_workers': args.workers,
        'logging.level': args.log_level,
    }
    for key, value in overrides.items():
        if value is not None:
            config.update(key, value)
    return config


def genericity_context(config: ConfigManager) -> GenericityContext:
    return GenericityContext(
        seed=config.get('analysis.seed'),
        coefficient_bound=config.get('analysis.coefficient_bound'),
        retry_budget=config.get('analysis.retry_budget'),
        agreeing_draws=config.get('analysis.agreeing_draws'),
    )


@contextmanager
def stage(timings: Dict[str, float], name: str) -> Iterator[None]:
    """记录一个阶段的耗时"""
    started = time.perf_counter()
    try:
        yield
    finally:
        timings[name] = timings.get(name, 0.0) + time.perf_counter() - started
        logger.debug(f"阶段 {name} 耗时 {timings[name]:.3f}s")


def emit(document: ReportDocument, args: argparse.Namespace) -> None:
    """渲染并输出报告"""
    content = render_json(document) if args.json else render_text(document)
    if args.output:
        write_text_file(args.output, content)
        logger.info(f"报告已写入: {args.output}")
    else:
        sys.stdout.write(content)
        sys.stdout.flush()


def _prepare(args: argparse.Namespace):
    text = read_text_file(args.input)
    doc = parse_input_document(text)
    config = resolve_config(args, doc)
    setup_logger(
        PACKAGE_LOGGER,
        level=config.get('logging.level'),
        log_file=config.get('logging.file'),
        console_level=config.get('logging.console_level'),
        file_level=config.get('logging.file_level'),
    )
    logger.info(f"读取输入文档: {args.input}")
    return text, doc, config


def cmd_analyze(args: argparse.Namespace) -> int:
    """分析单个行列式芽

    Returns:
        退出码：0 成功，2 证书失败
    """
    text, doc, config = _prepare(args)
    ctx = genericity_context(config)
    timings: Dict[str, float] = {}
    with time_limit(config.get('engine.timeout')):
        with stage(timings, 'build_germ'):
            germ = run_as_task(load_germ, doc)
        with stage(timings, 'certificate'):
            certificate = run_as_task(verify_ids, germ)
        report = None
        if certificate.is_ids:
            with stage(timings, 'invariants'):
                report = vanishing_euler(germ, ctx, certificate, max_workers=config.get('engine.max_workers'))
    document = germ_document(text, ctx, certificate, report, timings if args.timings else None)
    emit(document, args)
    if not certificate.is_ids:
        logger.error(f"不是孤立行列式奇点: {', '.join(certificate.failures())}")
        return 2
    return EXIT_OK


def cmd_family(args: argparse.Namespace) -> int:
    """分析单参数行列式族

    Returns:
        退出码：0 成功
    """
    text, doc, config = _prepare(args)
    ctx = genericity_context(config)
    timings: Dict[str, float] = {}
    with time_limit(config.get('engine.timeout')):
        with stage(timings, 'build_family'):
            family = run_as_task(load_family, doc)
        analyzer = FamilyAnalyzer(
            ctx,
            mode=config.get('analysis.mode'),
            samples=config.get('analysis.samples'),
            max_workers=config.get('engine.max_workers'),
            show_progress=args.progress,
        )
        report = analyzer.analyze(family)
    timings.update(analyzer.timings)
    document = family_document(text, ctx, report, timings if args.timings else None)
    emit(document, args)
    return EXIT_OK


def cmd_schema(args: argparse.Namespace) -> int:
    """输出报告文档的 JSON schema"""
    content = render_schema()
    if args.output:
        write_text_file(args.output, content)
    else:
        sys.stdout.write(content)
    return EXIT_OK


COMMANDS = {
    'analyze': cmd_analyze,
    'family': cmd_family,
    'schema': cmd_schema,
}


def run(argv: Optional[List[str]] = None) -> int:
    """执行命令并返回退出码"""
    args = parse_arguments(argv)
    try:
        return COMMANDS[args.command](args)
    except IdsToolError as e:
        logger.error(f"{type(e).__name__}: {e.message}", exc_info=True)
        print(f"错误: {e.message}", file=sys.stderr)
        return e.exit_code
    except (ValueError, FileNotFoundError) as e:
        logger.error(f"配置错误: {str(e)}", exc_info=True)
        print(f"错误: {str(e)}", file=sys.stderr)
        return EXIT_INPUT
    except KeyboardInterrupt:
        logger.info("用户中断操作")
        return EXIT_INTERRUPTED
    except Exception as e:
        logger.error(f"程序执行失败: {str(e)}", exc_info=True)
        print(f"错误: {str(e)}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    """主函数"""
    sys.exit(run())


if __name__ == '__main__':
    main()
