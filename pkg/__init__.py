"""IDS 等奇异性分析项目

孤立行列式奇点族的等奇异性不变量计算工具
"""

__version__ = "1.0.0"
__author__ = "IDS Equisingularity Team"
__description__ = "孤立行列式奇点族的等奇异性不变量计算工具"
