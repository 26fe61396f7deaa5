"""文件处理工具模块

提供目录创建、输入文档读取、报告写出与内容摘要。
"""

import hashlib
from pathlib import Path
from typing import Union

from ..errors import InputDocumentError


def ensure_directory(path: Union[str, Path]) -> None:
    """确保目录存在

    如果目录不存在，则创建该目录及其父目录。

    Args:
        path: 目录路径
    """
    Path(path).mkdir(parents=True, exist_ok=True)


def read_text_file(file_path: Union[str, Path]) -> str:
    """读取 UTF-8 文本文件

    Args:
        file_path: 文件路径

    Returns:
        文件内容

    Raises:
        InputDocumentError: 文件不存在或无法读取
    """
    try:
        with open(file_path, 'r', encoding='utf-8') as f:
            return f.read()
    except FileNotFoundError:
        raise InputDocumentError(f"输入文件不存在: {file_path}") from None
    except (OSError, UnicodeDecodeError) as e:
        raise InputDocumentError(f"无法读取输入文件 {file_path}: {e}") from e


def write_text_file(file_path: Union[str, Path], content: str, overwrite: bool = True) -> None:
    """写入文本文件

    Args:
        file_path: 文件路径
        content: 文件内容
        overwrite: 是否覆盖已存在的文件

    Raises:
        InputDocumentError: 文件已存在且不允许覆盖，或写入失败
    """
    path = Path(file_path)
    if path.exists() and not overwrite:
        raise InputDocumentError(f"输出文件已存在: {file_path}")
    ensure_directory(path.parent)
    try:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(content)
    except OSError as e:
        raise InputDocumentError(f"无法写入输出文件 {file_path}: {e}") from e


def get_text_hash(text: str, algorithm: str = 'sha256') -> str:
    """计算文本（UTF-8 编码）的哈希值

    Args:
        text: 文本内容
        algorithm: 哈希算法，支持 'md5', 'sha1', 'sha256'

    Returns:
        十六进制哈希字符串
    """
    hash_obj = hashlib.new(algorithm)
    hash_obj.update(text.encode('utf-8'))
    return hash_obj.hexdigest()
