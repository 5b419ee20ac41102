"""计算线程池。"""

from .pool import ComputePool, ThreadCountError, resolve_threads

__all__ = [
    "ComputePool",
    "ThreadCountError",
    "resolve_threads",
]
