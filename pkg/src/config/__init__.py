"""配置管理模块

负责加载、解析和管理分析配置，支持YAML配置文件、.env 与环境变量。
"""

from .manager import ConfigManager, default_config, load_config, parse_samples

__all__ = ["ConfigManager", "default_config", "load_config", "parse_samples"]
