"""工具模块

提供日志管理与文件处理等辅助功能。
"""

from .logger import setup_logger, get_logger, log_with_context
from .file_utils import ensure_directory, read_text_file, write_text_file, get_text_hash

__all__ = [
    "setup_logger",
    "get_logger",
    "log_with_context",
    "ensure_directory",
    "read_text_file",
    "write_text_file",
    "get_text_hash",
]
