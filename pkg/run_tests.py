#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
IDS 等奇异性工具测试执行脚本

此脚本用于检查测试环境并运行 tests/ 下的测试套件，
结束后写出 test_report.txt。设置 IDS_RUN_SLOW=1 可运行耗时的验收用例。
"""

import argparse
import importlib.util
import logging
import os
import subprocess
import sys
import time
from pathlib import Path

# 尝试从.env文件加载环境变量
try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    pass

# 设置日志配置
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    handlers=[
        logging.StreamHandler(),
        logging.FileHandler('test_run.log', encoding='utf-8')
    ]
)

logger = logging.getLogger('test_runner')

REQUIRED_MODULES = ['sympy', 'numpy', 'pydantic', 'yaml', 'dotenv', 'tqdm', 'pytest']


def check_environment():
    """检查测试环境"""
    logger.info("开始检查测试环境...")

    python_version = sys.version_info
    logger.info(f"Python版本: {python_version.major}.{python_version.minor}.{python_version.micro}")

    for dir_name in ['tests', 'src']:
        if not os.path.exists(dir_name):
            logger.error(f"目录 {dir_name} 不存在")
            return False

    missing = [name for name in REQUIRED_MODULES if importlib.util.find_spec(name) is None]
    if missing:
        logger.error(f"缺少依赖: {', '.join(missing)}，请先执行 pip install -r requirements.txt")
        return False

    if os.getenv('IDS_RUN_SLOW') == '1':
        logger.info("IDS_RUN_SLOW=1：将运行耗时的验收用例")

    logger.info("测试环境检查完成")
    return True


def run_tests(coverage: bool = False):
    """运行测试套件

    Returns:
        (是否成功, pytest 输出)
    """
    logger.info("开始运行测试套件...")
    command = [sys.executable, '-m', 'pytest', 'tests', '-v']
    if coverage:
        command += ['--cov=src', '--cov-report=term-missing']

    process = subprocess.run(command, stdout=subprocess.PIPE, stderr=subprocess.STDOUT, text=True)
    print(process.stdout)

    if process.returncode == 0:
        logger.info("测试套件运行成功")
    else:
        logger.error(f"测试套件运行失败，返回码: {process.returncode}")
    return process.returncode == 0, process.stdout


def generate_test_report(success, output, elapsed):
    """生成测试报告"""
    report_path = Path('test_report.txt')
    summary = [line for line in output.splitlines() if line.startswith('=') and ('passed' in line or 'failed' in line)]

    with open(report_path, 'w', encoding='utf-8') as f:
        f.write("IDS 等奇异性工具测试报告\n")
        f.write("=" * 50 + "\n\n")
        f.write(f"测试时间: {time.strftime('%Y-%m-%d %H:%M:%S')}\n")
        f.write(f"耗时: {elapsed:.1f} 秒\n")
        f.write(f"慢速用例: {'运行' if os.getenv('IDS_RUN_SLOW') == '1' else '跳过'}\n")
        f.write(f"测试结果: {'成功' if success else '失败'}\n")
        if summary:
            f.write(f"摘要: {summary[-1].strip('= ')}\n")

    logger.info(f"测试报告已生成: {report_path}")


def main():
    """主函数"""
    parser = argparse.ArgumentParser(description='运行 IDS 等奇异性工具测试')
    parser.add_argument('--coverage', action='store_true', help='统计 src 的测试覆盖率')
    args = parser.parse_args()

    print("=" * 60)
    print("        IDS 等奇异性工具测试        ")
    print("=" * 60)

    try:
        if not check_environment():
            print("❌ 环境检查失败")
            return 1
        print("✅ 环境检查完成\n")

        started = time.time()
        success, output = run_tests(args.coverage)
        generate_test_report(success, output, time.time() - started)

        print("=" * 60)
        if success:
            print("✅ 所有测试成功完成！")
            print("📋 详细报告已保存至: test_report.txt")
            return 0
        print("❌ 测试执行失败！")
        print("📋 错误详情请查看: test_report.txt 和 test_run.log")
        return 1

    except KeyboardInterrupt:
        print("\n❌ 测试被用户中断")
        return 1


if __name__ == '__main__':
    sys.exit(main())
