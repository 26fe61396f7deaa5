"""日志管理模块

包内各模块通过 ``get_logger(__name__)`` 取得包日志器 ``src`` 的子日志器，
处理器只挂在包日志器上，命令行调用一次 ``setup_logger`` 即可控制全部输出。
控制台日志写到 stderr，stdout 只用于报告。
"""

import logging
import os
import sys
from typing import Dict, Optional

from .file_utils import ensure_directory

PACKAGE_LOGGER = 'src'

# 文件日志带时间戳；控制台日志不带，便于比较两次运行的输出
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
CONSOLE_FORMAT = '%(levelname)s [%(name)s] %(message)s'

# 日志级别映射
LOG_LEVELS = {
    'DEBUG': logging.DEBUG,
    'INFO': logging.INFO,
    'WARNING': logging.WARNING,
    'WARN': logging.WARNING,
    'ERROR': logging.ERROR,
    'CRITICAL': logging.CRITICAL
}

# 全局日志器字典
_loggers: Dict[str, logging.Logger] = {}


def _level(name: Optional[str], default: int = logging.INFO) -> int:
    """把级别名称转换为 logging 常量，无法识别时为 default"""
    if not name:
        return default
    return LOG_LEVELS.get(name.upper(), default)


def setup_logger(
    name: str = PACKAGE_LOGGER,
    level: Optional[str] = 'INFO',
    log_file: Optional[str] = None,
    console_level: Optional[str] = None,
    file_level: Optional[str] = None
) -> logging.Logger:
    """设置日志器

    已登记的日志器再次设置时替换原有处理器，不会重复输出；
    命令行在配置解析完成后按最终级别重新设置一次。

    Args:
        name: 日志器名称
        level: 默认日志级别
        log_file: 日志文件路径
        console_level: 控制台输出级别，为 None 时使用默认级别
        file_level: 文件输出级别，为 None 时使用默认级别

    Returns:
        配置好的日志器实例
    """
    logger = _loggers.get(name) or logging.getLogger(name)
    default = _level(level)
    console = _level(console_level, default)
    levels = [default, console]
    logger.propagate = False

    for handler in logger.handlers[:]:
        logger.removeHandler(handler)
        handler.close()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(console)
    console_handler.setFormatter(logging.Formatter(CONSOLE_FORMAT))
    logger.addHandler(console_handler)

    if log_file:
        ensure_directory(os.path.dirname(log_file) or '.')
        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_handler.setLevel(_level(file_level, default))
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logger.addHandler(file_handler)
        levels.append(file_handler.level)

    # 日志器放行最低的处理器级别，由各处理器自行过滤
    logger.setLevel(min(levels))
    _loggers[name] = logger
    return logger


def get_logger(name: str = PACKAGE_LOGGER) -> logging.Logger:
    """获取日志器

    ``src.*`` 名称返回向包日志器传播的子日志器；其他未登记的名称按默认配置创建。
    """
    if name in _loggers:
        return _loggers[name]
    if name.startswith(PACKAGE_LOGGER + '.'):
        logger = logging.getLogger(name)
        logger.propagate = True
        _loggers[name] = logger
        return logger
    return setup_logger(name)


def log_with_context(logger: logging.Logger, level: int, message: str, **context) -> None:
    """记录带 ``[k=v ...]`` 上下文的消息，例如 ``饱和化稳定 [steps=3]``"""
    if not logger.isEnabledFor(level):
        return
    if context:
        message = f"{message} [{' '.join(f'{k}={v}' for k, v in context.items())}]"
    logger.log(level, message)


# 导入时按环境变量配置包日志器，命令行随后按最终配置重新设置
default_logger = setup_logger(PACKAGE_LOGGER, level=os.getenv('LOG_LEVEL', 'INFO'))
