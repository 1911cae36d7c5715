"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class ZonotopalError(Exception):
    """Base class for every error raised by this package."""


class InputError(ZonotopalError, ValueError):
    """Malformed user input (graph files, polynomials, family names)."""


class GraphFormatError(InputError):
    pass


class PolyParseError(InputError):
    pass


class DegenerateSeriesError(InputError):
    """The linear coefficient vanishes, so the series has no inverse."""


class CapExceededError(ZonotopalError):
    """A size cap (edges or vertices) would be exceeded."""


class ConsistencyError(ZonotopalError):
    """An internal cross-check failed; results must not be trusted."""
