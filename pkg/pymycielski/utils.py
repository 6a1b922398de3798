from decimal import ROUND_DOWN, ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Any


class PyMycielskiError(Exception):
    """Base class for errors raised by pymycielski."""


class InvalidInstanceError(PyMycielskiError, ValueError):
    """Raise when family parameters are out of range."""


class InvalidArgumentError(PyMycielskiError, ValueError):
    """Raise when an operation receives an argument outside its domain."""


class UsageError(PyMycielskiError):
    """Raise when command-line arguments are malformed."""


class GraphNotConnectedError(PyMycielskiError):
    def __str__(self):
        return "graph not connected"


class _LineError(PyMycielskiError):
    def __init__(self, line: int, message: str):
        super().__init__(line, message)
        self.line = line
        self.message = message

    def __str__(self):
        return f"line {self.line}: {self.message}"


class EdgeListParseError(_LineError):
    """Raise when an edge list document is malformed."""


class ColouringParseError(_LineError):
    """Raise when a colouring document is malformed."""


class InvalidDistributionError(PyMycielskiError, ValueError):
    pass


class InvalidColouringError(PyMycielskiError, ValueError):
    pass


class InfeasibleError(PyMycielskiError):
    """Raise when no proper surjective colouring with the requested palette exists."""


class OracleLimitError(PyMycielskiError):
    def __init__(self, limit: int, n: int):
        super().__init__(limit, n)
        self.limit = limit
        self.n = n

    def __str__(self):
        return (
            f"oracle refuses graphs with more than {self.limit} vertices "
            f"(got {self.n})"
        )


class SolverLimitError(PyMycielskiError):
    """Raise when the node budget runs out before any colouring is found."""


class UnsupportedFamilyError(PyMycielskiError):
    pass


class ConsistencyError(PyMycielskiError):
    pass


def format_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def render_decimal(
    value: Fraction, digits: int, rounding: str = ROUND_HALF_EVEN
) -> str:
    """Render an exact rational as a fixed-point decimal string.

    Args:
        value (Fraction): Exact value.
        digits (int): Number of digits after the decimal point.
        rounding (str, optional): A :mod:`decimal` rounding mode. Defaults to
            round-half-even.

    Returns:
        str: e.g. ``"1.714286"``.
    """
    with localcontext() as ctx:
        ctx.prec = max(50, digits + 30)
        exact = Decimal(value.numerator) / Decimal(value.denominator)
        quantum = Decimal(1).scaleb(-digits)
        return str(exact.quantize(quantum, rounding=rounding))


def truncate_decimal(value: Fraction, digits: int) -> str:
    return render_decimal(value, digits, ROUND_DOWN)


def rational_to_dict(value: Fraction) -> dict[str, int]:
    return {"num": value.numerator, "den": value.denominator}


def parse_n_range(text: str) -> range:
    """Parse an inclusive ``LO..HI`` range. ``LO > HI`` yields an empty range."""
    lo, sep, hi = text.partition("..")
    if not sep:
        raise InvalidArgumentError(f"expected LO..HI, got {text!r}")
    try:
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise InvalidArgumentError(f"expected integers in LO..HI, got {text!r}")


def remove_null_items(d: dict[str, Any]) -> dict[str, Any]:
    return {k: v for k, v in d.items() if v is not None}
