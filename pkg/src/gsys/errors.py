"""Exception hierarchy shared by every module.

All errors derive from :class:`GSysError`.  An optional source ``span``
(``(line, col, end_line, end_col)``, 1-based) is attached by the .gsys
language validator when an error can be traced to a document item.
"""


class GSysError(Exception):
    def __init__(self, message, span=None):
        super().__init__(message)
        self.message = message
        self.span = span

    def __str__(self):
        if self.span is None:
            return self.message
        line, col = self.span[0], self.span[1]
        return f"{line}:{col}: {self.message}"


# magma
class DuplicateElement(GSysError):
    pass


class MalformedTable(GSysError):
    pass


class BadParameter(GSysError):
    pass


# configurations
class UnknownVariable(GSysError):
    pass


class NoIdentity(GSysError):
    pass


class OverlapMismatch(GSysError):
    pass


class EnumerationCapExceeded(GSysError):
    pass


# systems
class UnboundVariable(GSysError):
    pass


class ArityMismatch(GSysError):
    pass


class DomainNotClosed(GSysError):
    def __init__(self, message, witness=None, span=None):
        super().__init__(message, span)
        self.witness = witness


class OutOfDomain(GSysError):
    pass


class VarSetMismatch(GSysError):
    pass


class MagmaMismatch(GSysError):
    pass


# coupling
class ClosureViolation(GSysError):
    def __init__(self, message, witness=None, span=None):
        super().__init__(message, span)
        self.witness = witness


class BadGluing(GSysError):
    pass


# reduce / classical
class SearchInfeasible(GSysError):
    pass


class EncodingTooLarge(GSysError):
    pass


# spec language
class ParseError(GSysError):
    def __init__(self, message, span=None, expected=()):
        super().__init__(message, span)
        self.expected = tuple(expected)


class UnknownName(GSysError):
    pass


class ValidationError(GSysError):
    pass


class QueryError(GSysError):
    """A module error raised while running a named query."""

    def __init__(self, query, cause):
        super().__init__(f"query {query!r}: {type(cause).__name__}: {cause.message}", cause.span)
        self.query = query
        self.cause = cause
