import typing as t
import sys
import logging

T = t.TypeVar("T")

def set_recursion_limit(limit):
    sys.setrecursionlimit(limit)

def get_recursion_limit():
    return sys.getrecursionlimit()

def enable_debug_mode():
    logger = logging.getLogger("WeiContainers")
    logger.setLevel(1)

    return logger

def first(items: 't.Iterable[T]', default: 't.Optional[T]' = None) -> 't.Optional[T]':
    for item in items:
        return item
    return default
