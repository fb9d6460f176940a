"""The ``.gsys`` specification language: parse, validate, run, print."""
from pathlib import Path

from .ast import Document
from .parser import parse, tokenize
from .printer import pretty_print
from .workspace import QueryResult, Workspace, run_query, validate


def load(path) -> Workspace:
    return validate(parse(Path(path).read_text(encoding="utf-8")))


__all__ = ["Document", "QueryResult", "Workspace", "load", "parse", "pretty_print",
           "run_query", "tokenize", "validate"]
