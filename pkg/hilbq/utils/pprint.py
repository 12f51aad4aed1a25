"""Text rendering of series and Fock vectors, plus a pprint variant."""


__all__ = ["format_coefficient", "format_series", "format_vector",
    "PrettyPrinter", "pprint", "pformat"]


from ..series.zqseries import ZQSeries
from ..fock.fockvector import FockVector

from typing import ClassVar, List, Tuple
from fractions import Fraction
import pprint as _pprint


def format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else \
        f"{c.numerator}/{c.denominator}"


def _power(base: str, e: int) -> str:
    return base if e == 1 else f"{base}^{e}"


def _zname(i: int, nz: int) -> str:
    return "z" if nz == 1 else f"z{i + 1}"


def _join(terms: List[Tuple[Fraction, str]]) -> str:
    if not terms:
        return "0"
    out = []
    for i, (c, mono) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if mono:
            body = mono if a == 1 else f"{format_coefficient(a)}*{mono}"
        else:
            body = format_coefficient(a)
        if i == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


def format_series(s: ZQSeries) -> str:
    """Render s as a sum of monomials ordered by q-exponent, then z."""

    terms = []
    for (q, zs), c in sorted(s.items()):
        factors = [_power("q", q)] if q else []
        factors.extend(_power(_zname(i, s.nz), e)
            for i, e in enumerate(zs) if e)
        terms.append((c, "*".join(factors)))
    return f"{_join(terms)} + O(q^{s.qmax + 1})"


def format_vector(v: FockVector) -> str:
    """Render v with a_{-n}(b) factors acting on |0>."""

    terms = []
    for mono, c in sorted(v.items(), key=lambda kv: (len(kv[0]), kv[0])):
        ops = "".join(f"a_{{-{n}}}(b{b})" for n, b in mono)
        terms.append((c, f"{ops}|0>"))
    return _join(terms)


class PrettyPrinter(_pprint.PrettyPrinter):

    _dispatch: ClassVar[dict] = _pprint.PrettyPrinter._dispatch # type: ignore

    def _pprint_series(
        self, object, stream, indent, allowance, context, level
    ):

        name = type(object).__name__
        stream.write(name + "(")
        stream.write(format_series(object))
        stream.write(f", nz={object.nz})")

    def _pprint_vector(
        self, object, stream, indent, allowance, context, level
    ):

        name = type(object).__name__
        stream.write(name + "(")
        stream.write(format_vector(object))
        stream.write(")")

    _dispatch[ZQSeries.__repr__] = _pprint_series
    _dispatch[FockVector.__repr__] = _pprint_vector


def pprint(object, stream=None, indent=1, width=80, depth=None, *,
           compact=False):
    """Pretty-print a Python object to a stream [default is sys.stdout]."""

    printer = PrettyPrinter(
        stream=stream, indent=indent, width=width, depth=depth, compact=compact
    )
    printer.pprint(object)


def pformat(object, indent=1, width=80, depth=None, *, compact=False):
    """Format a Python object into a pretty-printed representation."""

    printer = PrettyPrinter(
        indent=indent, width=width, depth=depth, compact=compact
    )

    return printer.pformat(object)
