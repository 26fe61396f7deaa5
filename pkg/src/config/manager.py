"""配置管理器实现

负责加载、解析和验证分析配置，支持YAML格式和环境变量覆盖。
优先级：命令行参数 > 输入文档 options 行 > 环境变量 > YAML 文件 > 默认值；
前两者由命令行在 ``update`` 中写入。
"""

import copy
import os
from fractions import Fraction
from typing import Any, Dict, List, Optional

import yaml
from dotenv import load_dotenv

from ..utils.logger import LOG_LEVELS

# 加载环境变量
load_dotenv()

ANALYSIS_MODES = ('generic', 'sampled')

# 环境变量到配置键的映射
ENV_OVERRIDES = {
    'IDS_SEED': ('analysis.seed', int),
    'IDS_COEFFICIENT_BOUND': ('analysis.coefficient_bound', int),
    'IDS_RETRY_BUDGET': ('analysis.retry_budget', int),
    'IDS_AGREEING_DRAWS': ('analysis.agreeing_draws', int),
    'IDS_MODE': ('analysis.mode', str),
    'IDS_SAMPLES': ('analysis.samples', lambda text: parse_samples(text)),
    'IDS_TIMEOUT': ('engine.timeout', float),
    'IDS_MAX_WORKERS': ('engine.max_workers', int),
    'LOG_LEVEL': ('logging.level', str),
    'LOG_FILE': ('logging.file', str),
    'LOG_CONSOLE_LEVEL': ('logging.console_level', str),
    'LOG_FILE_LEVEL': ('logging.file_level', str),
}


def parse_samples(text: str) -> List[str]:
    """解析逗号分隔的有理样本列表，例如 ``1/2,1/3``

    Raises:
        ValueError: 某一项不是有理数
    """
    samples = []
    for item in text.split(','):
        item = item.strip()
        if not item:
            continue
        try:
            samples.append(str(Fraction(item)))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"样本值不是有理数: {item!r}") from None
    return samples


def default_config() -> Dict[str, Any]:
    """默认配置"""
    return {
        'analysis': {
            'seed': 20240601,
            'coefficient_bound': 50,
            'retry_budget': 5,
            'agreeing_draws': 2,
            'mode': 'generic',
            'samples': [],
        },
        'engine': {
            'timeout': None,
            'max_workers': 2,
        },
        'logging': {
            'level': 'INFO',
            'file': None,
            'console_level': None,
            'file_level': None,
        },
    }


class ConfigManager:
    """配置管理器类

    负责加载、解析和验证配置，支持从文件和环境变量中读取配置。
    """

    def __init__(self, config_file: Optional[str] = None):
        """初始化配置管理器

        Args:
            config_file: 配置文件路径，如果为None则使用默认配置

        Raises:
            FileNotFoundError: 指定的配置文件不存在
            ValueError: 配置无效
        """
        self.config_file = config_file
        self.config = self._load_config()
        self._validate_config()

    def _load_config(self) -> Dict[str, Any]:
        """加载配置

        默认值、YAML 文件与环境变量依次合并。

        Returns:
            合并后的配置字典
        """
        config = default_config()

        if self.config_file:
            if not os.path.exists(self.config_file):
                raise FileNotFoundError(f"配置文件不存在: {self.config_file}")
            with open(self.config_file, 'r', encoding='utf-8') as f:
                file_config = yaml.safe_load(f)
            if file_config:
                if not isinstance(file_config, dict):
                    raise ValueError(f"配置文件顶层必须是映射: {self.config_file}")
                self._merge_config(config, file_config)

        self._override_from_env(config)
        return config

    def _merge_config(self, base: Dict[str, Any], override: Dict[str, Any]) -> None:
        """深度合并配置

        Args:
            base: 基础配置
            override: 覆盖配置
        """
        for key, value in override.items():
            if key in base and isinstance(base[key], dict) and isinstance(value, dict):
                self._merge_config(base[key], value)
            else:
                base[key] = value

    def _override_from_env(self, config: Dict[str, Any]) -> None:
        """从环境变量覆盖配置

        Args:
            config: 配置字典

        Raises:
            ValueError: 环境变量的值无法转换
        """
        for variable, (key, convert) in ENV_OVERRIDES.items():
            raw = os.getenv(variable)
            if raw is None or raw == '':
                continue
            try:
                value = convert(raw)
            except ValueError as e:
                raise ValueError(f"环境变量 {variable}={raw!r} 无效: {e}") from e
            section, name = key.split('.')
            config[section][name] = value

    def _validate_config(self) -> None:
        """验证配置有效性

        Raises:
            ValueError: 如果配置无效
        """
        analysis = self.config.get('analysis', {})
        engine = self.config.get('engine', {})

        seed = analysis.get('seed')
        if not isinstance(seed, int) or not 0 <= seed <= 2 ** 64 - 1:
            raise ValueError("种子必须是 0..2^64-1 内的整数")

        bound = analysis.get('coefficient_bound')
        if not isinstance(bound, int) or bound <= 0:
            raise ValueError("系数界必须是正整数")

        retry = analysis.get('retry_budget')
        if not isinstance(retry, int) or retry < 0:
            raise ValueError("重试次数必须是非负整数")

        agreeing = analysis.get('agreeing_draws')
        if not isinstance(agreeing, int) or agreeing < 1:
            raise ValueError("一致抽样次数必须是正整数")

        if analysis.get('mode') not in ANALYSIS_MODES:
            raise ValueError(f"分析模式必须是 {'|'.join(ANALYSIS_MODES)} 之一")

        samples = analysis.get('samples')
        if not isinstance(samples, list):
            raise ValueError("样本值必须是列表")
        analysis['samples'] = parse_samples(','.join(str(s) for s in samples))

        timeout = engine.get('timeout')
        if timeout is not None and (not isinstance(timeout, (int, float)) or timeout <= 0):
            raise ValueError("超时设置必须是正数")

        workers = engine.get('max_workers')
        if not isinstance(workers, int) or workers < 1:
            raise ValueError("线程数必须是正整数")

        logging_config = self.config.get('logging', {})
        for key in ('level', 'console_level', 'file_level'):
            value = logging_config.get(key)
            if value is not None and str(value).upper() not in LOG_LEVELS:
                raise ValueError(f"日志级别无效: {key}={value}")

    def get(self, key: str, default: Any = None) -> Any:
        """获取配置项

        Args:
            key: 配置键，支持使用点号访问嵌套配置
            default: 默认值

        Returns:
            配置值或默认值
        """
        value = self.config
        try:
            for k in key.split('.'):
                value = value[k]
            return value
        except (KeyError, TypeError):
            return default

    def update(self, key: str, value: Any) -> None:
        """更新配置项并重新验证

        Args:
            key: 配置键，支持使用点号访问嵌套配置
            value: 新值
        """
        keys = key.split('.')
        config = self.config
        for k in keys[:-1]:
            config = config.setdefault(k, {})
        config[keys[-1]] = value
        self._validate_config()

    def to_dict(self) -> Dict[str, Any]:
        """获取完整配置字典（深拷贝）"""
        return copy.deepcopy(self.config)

    def save(self, file_path: Optional[str] = None) -> None:
        """保存配置到文件

        Args:
            file_path: 保存路径，如果为None则使用初始化时的路径
        """
        path = file_path or self.config_file
        if not path:
            raise ValueError("未指定保存路径")

        with open(path, 'w', encoding='utf-8') as f:
            yaml.safe_dump(self.config, f, default_flow_style=False, allow_unicode=True)


def load_config(config_file: Optional[str] = None) -> ConfigManager:
    """加载配置

    工厂函数，创建并返回配置管理器实例。

    Args:
        config_file: 配置文件路径

    Returns:
        配置管理器实例
    """
    return ConfigManager(config_file)
