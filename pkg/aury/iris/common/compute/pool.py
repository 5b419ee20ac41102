"""计算线程池。

numpy 在向量化比较和矩阵乘法时释放 GIL，线程池即可获得并行度。
每个任务在提交方上下文的副本中执行，工作线程中的日志因此带有 run_id 和 stage。
结果按提交顺序返回，与线程数和调度无关。
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
import contextvars
import os

from aury.iris.common.exceptions import ExitCode, IrisError
from aury.iris.common.logging import logger


class ThreadCountError(IrisError):
    """线程数无效。"""

    exit_code = ExitCode.USAGE


def resolve_threads(threads: int) -> int:
    """解析线程数：0 表示自动（CPU 核数）。"""
    if threads < 0:
        raise ThreadCountError(f"threads 必须 ≥ 0: {threads}", metadata={"threads": threads})
    if threads == 0:
        return os.cpu_count() or 1
    return threads


class ComputePool:
    """有序 map 的线程池封装。

    使用示例:
        with ComputePool(threads=4) as pool:
            blocks = pool.map(compare_block, tasks)
    """

    def __init__(self, threads: int = 1) -> None:
        self._threads = resolve_threads(threads)
        self._executor: ThreadPoolExecutor | None = None

    @property
    def threads(self) -> int:
        return self._threads

    def __enter__(self) -> ComputePool:
        if self._threads > 1:
            self._executor = ThreadPoolExecutor(max_workers=self._threads, thread_name_prefix="iris-compute")
            logger.debug(f"计算线程池已启动: {self._threads} 线程")
        return self

    def __exit__(self, *exc_info: object) -> None:
        if self._executor is not None:
            self._executor.shutdown(wait=True, cancel_futures=True)
            self._executor = None

    def map[T, R](self, fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
        """按输入顺序返回结果；单线程时直接在当前线程执行。"""
        if self._executor is None:
            return [fn(item) for item in items]
        futures = [self._executor.submit(contextvars.copy_context().run, fn, item) for item in items]
        return [future.result() for future in futures]


__all__ = [
    "ComputePool",
    "ThreadCountError",
    "resolve_threads",
]
