"""Enumeration caps and counters.

Every exhaustive procedure in the package goes through
:func:`gsys.config.enumerate_configs`, which consults :func:`max_enum` and
bumps the active :class:`Counter`.
"""
import os
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass

DEFAULT_MAX_ENUM = 1_000_000
DEFAULT_MAX_CARRIER = 16

_max_enum: ContextVar = ContextVar("gsys_max_enum", default=None)
_counter: ContextVar = ContextVar("gsys_counter", default=None)


def max_enum() -> int:
    value = _max_enum.get()
    if value is not None:
        return value
    env = os.environ.get("GSYS_MAX_ENUM")
    if env:
        return int(env)
    return DEFAULT_MAX_ENUM


@contextmanager
def enumeration_cap(n):
    token = _max_enum.set(n)
    try:
        yield
    finally:
        _max_enum.reset(token)


@dataclass
class Counter:
    configs_enumerated: int = 0


@contextmanager
def counting():
    counter = Counter()
    token = _counter.set(counter)
    try:
        yield counter
    finally:
        _counter.reset(token)


def bump(n=1):
    counter = _counter.get()
    if counter is not None:
        counter.configs_enumerated += n
