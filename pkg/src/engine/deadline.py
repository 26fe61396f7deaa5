"""计算期限模块

时间限制按任务计算：``time_limit`` 设定每个任务的限制秒数，
``task_deadline`` 为一个任务（一次基计算、一个 m_i、一个族成员）
启动新的截止时间，长时间运行的循环用 ``check_deadline`` 检查最内层任务的期限。
"""

import time
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Any, Callable, Iterator, Optional, Tuple, TypeVar

from ..errors import ComputationTimeoutError

T = TypeVar('T')

_limit: ContextVar[Optional[float]] = ContextVar('ids_task_limit', default=None)
# (截止时刻, 限制秒数)
_deadline: ContextVar[Optional[Tuple[float, float]]] = ContextVar('ids_deadline', default=None)


@contextmanager
def time_limit(seconds: Optional[float]) -> Iterator[None]:
    """设定每个任务的时间限制

    Args:
        seconds: 限制秒数；None 或 0 表示不限制
    """
    limit_token = _limit.set(seconds or None)
    deadline_token = _deadline.set(None)
    try:
        yield
    finally:
        _deadline.reset(deadline_token)
        _limit.reset(limit_token)


@contextmanager
def task_deadline() -> Iterator[None]:
    """在当前限制下为一个任务启动新的截止时间"""
    seconds = _limit.get()
    token = _deadline.set((time.monotonic() + seconds, seconds) if seconds else None)
    try:
        yield
    finally:
        _deadline.reset(token)


def current_limit() -> Optional[float]:
    return _limit.get()


def check_deadline(stage: str) -> None:
    """超过最内层任务的截止时间时抛出异常

    Raises:
        ComputationTimeoutError: 已超时
    """
    value = _deadline.get()
    if value is not None and time.monotonic() > value[0]:
        raise ComputationTimeoutError(stage, value[1])


def run_as_task(function: Callable[..., T], *args: Any) -> T:
    """在新的任务截止时间下调用 ``function``"""
    with task_deadline():
        return function(*args)
