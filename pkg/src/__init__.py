"""IDS 等奇异性分析项目主模块

本模块提供孤立行列式奇点 (IDS) 及其单参数族的等奇异性不变量计算，
包括精确多项式代数、局部标准基引擎、行列式模型、极重数与消失 Euler
示性数、族分析以及命令行报告。

版本: 1.0.0
"""

__version__ = "1.0.0"
__author__ = "IDS Equisingularity Team"
__description__ = "孤立行列式奇点族的等奇异性不变量计算工具"
