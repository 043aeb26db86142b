"""Sparse multivariate polynomials with exact rational coefficients.

Every polynomial lives in ``QQ[x1, ..., xn]`` ordered by graded reverse
lexicographic order with ``x1 > x2 > ... > xn``.  The element type is sympy's
sparse ``PolyElement`` (a dict from exponent tuples to nonzero rationals); this
module adds the ring bookkeeping, the text grammar and the handful of graded
utilities the rest of the package needs.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple, Union

import sympy
from sympy import QQ
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication,
    parse_expr,
    standard_transformations,
)
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyElement, PolyRing, ring

from .errors import RingMismatchError, UndefinedDegreeError

logger = logging.getLogger(__name__)

Poly = PolyElement
Monomial = Tuple[int, ...]
Rational = Union[int, Fraction]

_TRANSFORMATIONS = standard_transformations + (implicit_multiplication, convert_xor)


@lru_cache(maxsize=None)
def polynomial_ring(nvars: int) -> PolyRing:
    """Return the cached ring QQ[x1..xn] with degrevlex order."""
    if nvars < 1:
        raise ValueError(f"polynomial ring needs at least one variable, got {nvars}")
    names = ",".join(f"x{i}" for i in range(1, nvars + 1))
    R = ring(names, QQ, grevlex)[0]
    return R


def to_qq(c: Rational):
    """Convert an int/Fraction to a ground-domain element."""
    c = Fraction(c)
    return QQ(c.numerator, c.denominator)


def to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def variables(n: int) -> Tuple[Poly, ...]:
    return tuple(polynomial_ring(n).gens)


def constant(c: Rational, n: int) -> Poly:
    return polynomial_ring(n).ground_new(to_qq(c))


def _check_same_ring(p: Poly, q: Poly) -> None:
    if p.ring != q.ring:
        raise RingMismatchError(f"polynomials in {p.ring.ngens} and {q.ring.ngens} variables")


def add(p: Poly, q: Poly) -> Poly:
    _check_same_ring(p, q)
    return p + q


def mul(p: Poly, q: Poly) -> Poly:
    _check_same_ring(p, q)
    return p * q


def scale(p: Poly, c: Rational) -> Poly:
    return p * to_qq(c)


def degree(p: Poly) -> int:
    """Total degree; undefined for the zero polynomial."""
    if not p:
        raise UndefinedDegreeError("degree of the zero polynomial is undefined")
    return max(sum(m) for m in p.itermonoms())


def is_homogeneous(p: Poly) -> bool:
    return len({sum(m) for m in p.itermonoms()}) <= 1


def substitute(p: Poly, var: int, replacement: Poly) -> Poly:
    """Replace x_var (1-based) by ``replacement`` everywhere in ``p``."""
    _check_same_ring(p, replacement)
    if not 1 <= var <= p.ring.ngens:
        raise IndexError(f"variable index {var} out of range 1..{p.ring.ngens}")
    return p.compose(p.ring.gens[var - 1], replacement)


def linear_form(coeffs: Sequence[Rational], n: int = None) -> Poly:
    """Return sum_k coeffs[k] * x_{k+1}."""
    n = n or len(coeffs)
    R = polynomial_ring(n)
    monoms = {}
    for k, c in enumerate(coeffs):
        if c:
            exps = [0] * n
            exps[k] = 1
            monoms[tuple(exps)] = to_qq(c)
    return R.from_dict(monoms) if monoms else R.zero


def product(factors: Iterable[Poly], n: int) -> Poly:
    """Product of ``factors``; the empty product is the constant 1."""
    result = polynomial_ring(n).one
    for f in factors:
        result = mul(result, f)
    return result


def shift_variables(p: Poly, n_target: int, offset: int = 1) -> Poly:
    """Embed ``p`` into n_target variables via x_i -> x_{i+offset}."""
    if p.ring.ngens + offset > n_target:
        raise RingMismatchError(f"cannot shift {p.ring.ngens} variables by {offset} into {n_target}")
    pad = n_target - p.ring.ngens - offset
    R = polynomial_ring(n_target)
    return R.from_dict({(0,) * offset + m + (0,) * pad: c for m, c in p.iterterms()}) if p else R.zero


def terms(p: Poly) -> List[Tuple[Monomial, Fraction]]:
    """Terms in decreasing degrevlex order with Fraction coefficients."""
    return [(m, to_fraction(c)) for m, c in p.terms()]


def _format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def format_poly(p: Poly) -> str:
    """Print ``p`` in the text grammar, e.g. ``x1^2*x2 - 3/2*x3``."""
    if not p:
        return "0"
    out = []
    for idx, (m, c) in enumerate(terms(p)):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = _format_monomial(m)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if idx == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


def parse_poly(text: str, n: int) -> Poly:
    """Parse the text grammar into QQ[x1..xn].

    ``term = [sign] coeff ["*"] {var "^" exp}``; whitespace is ignored.
    """
    R = polynomial_ring(n)
    local = {f"x{i}": sympy.Symbol(f"x{i}") for i in range(1, n + 1)}
    try:
        expr = parse_expr(text, local_dict=local, transformations=_TRANSFORMATIONS)
        return R.from_expr(expr)
    except (SyntaxError, TypeError, ValueError, sympy.SympifyError) as e:
        raise ValueError(f"cannot parse polynomial {text!r} in {n} variables: {e}") from e


def random_poly(rng, n: int, max_degree: int = 3, max_terms: int = 4) -> Poly:
    """Random polynomial with small rational coefficients (``rng``: numpy Generator)."""
    R = polynomial_ring(n)
    monoms = {}
    for _ in range(int(rng.integers(0, max_terms + 1))):
        exps = [0] * n
        for _ in range(int(rng.integers(0, max_degree + 1))):
            exps[int(rng.integers(0, n))] += 1
        num = int(rng.integers(-4, 5))
        den = int(rng.integers(1, 4))
        if num:
            monoms[tuple(exps)] = monoms.get(tuple(exps), QQ(0)) + QQ(num, den)
    return R.from_dict({m: c for m, c in monoms.items() if c}) if monoms else R.zero
