"""Defining-ideal generators f_{i,h(i)} of the quotient presentations."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import GenericVariantError, UnsupportedTypeError
from .hessfn import HessFn, flag, require_valid, value_range
from .polyring import Poly, degree, polynomial_ring, product, scale
from .rootsystem import LieType, build_root_table, root_poly

logger = logging.getLogger(__name__)

CoeffMatrix = Sequence[Sequence[Fraction]]


@dataclass(frozen=True)
class GeneratorSet:
    type: LieType
    h: Optional[HessFn]
    gens: Tuple[Poly, ...]

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(degree(g) if g else 0 for g in self.gens)

    @property
    def n(self) -> int:
        return self.type.rank


def _x(n: int, k: int) -> Poly:
    return polynomial_ring(n).gens[k - 1]


def _type_a(n: int, i: int, j: int, weights: Optional[Sequence] = None) -> Poly:
    x = polynomial_ring(n).gens
    total = polynomial_ring(n).zero
    for k in range(1, i + 1):
        term = product((x[k - 1] - x[l - 1] for l in range(i + 1, j + 1)), n) * x[k - 1]
        total += term if weights is None else scale(term, weights[k - 1])
    return total


def _type_bc(t: LieType, i: int, j: int, weights: Optional[Sequence] = None) -> Poly:
    n = t.rank
    table = build_root_table(t)
    total = polynomial_ring(n).zero
    for k in range(1, i + 1):
        term = product((root_poly(table.root(k, l)) for l in range(i + 1, j + 1)), n) * _x(n, k)
        total += term if weights is None else scale(term, weights[k - 1])
    return total


def _type_d(n: int, i: int, v: int) -> Poly:
    x = polynomial_ring(n).gens

    def minus(k: int, lo: int, hi: int) -> Poly:
        return product((x[k - 1] - x[l - 1] for l in range(lo, hi + 1)), n)

    def plus(k: int, lo: int, hi: int) -> Poly:
        return product((x[k - 1] + x[l - 1] for l in range(lo, hi + 1)), n)

    if i == n:
        r = 2 * n - 1 - v
        sign = (-1) ** (n - r + 1)
        head = sum((minus(k, r + 1, n) for k in range(1, r + 1)), polynomial_ring(n).zero)
        return scale(head, sign) + scale(product(x[r:n], n), n)

    if v <= n - 2:
        return sum((minus(k, i + 1, v) * x[k - 1] for k in range(1, i + 1)), polynomial_ring(n).zero)
    if v == n - 1:
        head = sum((minus(k, i + 1, n - 1) * (x[k - 1] + x[n - 1]) for k in range(1, i + 1)), polynomial_ring(n).zero)
        return head + scale(product(x[i:n], n), (-1) ** (n - i) * n)
    j = v - n
    head = sum((minus(k, i + 1, n) * plus(k, n - j, n) for k in range(1, i + 1)), polynomial_ring(n).zero)
    tail = product(x[i:n - 1 - j], n) * product((x[l - 1] ** 2 for l in range(n - j, n + 1)), n)
    return head + scale(tail, (-1) ** (n - i + 1) * n)


def _type_g(i: int, j: int) -> Poly:
    x1, x2, x3 = polynomial_ring(3).gens
    if i == 1:
        table = build_root_table(LieType("G", 3))
        return product((root_poly(table.root(1, l)) for l in range(2, j + 1)), 3) * (-x2 + x3)
    if i == 2:
        return x3 if j == 2 else x1 ** 2 + x2 ** 2 + x3 ** 2
    return x1 + x2 + x3


def generator(t: LieType, i: int, j: int) -> Poly:
    """The single generator f_{i,j} of type ``t``."""
    if not 1 <= i <= t.rank or j not in value_range(t, i):
        raise IndexError(f"f_{{{i},{j}}} is not defined for {t}")
    if t.family == "A":
        return _type_a(t.rank, i, j)
    if t.family in ("B", "C"):
        return _type_bc(t, i, j)
    if t.family == "D":
        return _type_d(t.rank, i, j)
    if t.family == "G":
        return _type_g(i, j)
    raise UnsupportedTypeError(f"unsupported type {t}")


def generators(t: LieType, h: HessFn) -> GeneratorSet:
    require_valid(h)
    if h.type != t:
        raise UnsupportedTypeError(f"{h.label} is not a Hessenberg function of {t}")
    gens = tuple(generator(t, i, h(i)) for i in range(1, t.rank + 1))
    logger.debug("generators for %s: degrees %s", h, [degree(g) for g in gens])
    return GeneratorSet(t, h, gens)


def generators_generic(t: LieType, h: HessFn, coeffs: CoeffMatrix) -> GeneratorSet:
    """Flag-case generators with row-i weights ``coeffs[i-1][k-1]`` (types A and B)."""
    if t.family not in ("A", "B"):
        raise UnsupportedTypeError(f"generic-coefficient generators exist only for types A and B, not {t}")
    if h != flag(t):
        raise GenericVariantError(f"generic variant defined only for the flag case, got {h.label}")
    n = t.rank
    if len(coeffs) != n or any(len(row) != i for i, row in enumerate(coeffs, start=1)):
        raise GenericVariantError("coefficient matrix must have row i of length i")
    weights = [[Fraction(c) for c in row] for row in coeffs]
    if t.family == "A":
        gens = tuple(_type_a(n, i, n, weights[i - 1]) for i in range(1, n + 1))
    else:
        gens = tuple(_type_bc(t, i, 2 * n + 1 - i, weights[i - 1]) for i in range(1, n + 1))
    return GeneratorSet(t, h, gens)


def unit_coefficients(n: int) -> List[List[Fraction]]:
    return [[Fraction(1)] * i for i in range(1, n + 1)]


def random_generic_coefficients(t: LieType, rng) -> List[List[Fraction]]:
    """Nonzero rationals num/den with |num| <= 5 and den <= 4 (``rng``: numpy Generator)."""
    rows = []
    for i in range(1, t.rank + 1):
        nums = rng.integers(1, 6, size=i) * rng.choice([-1, 1], size=i)
        dens = rng.integers(1, 5, size=i)
        rows.append([Fraction(int(a), int(b)) for a, b in zip(nums, dens)])
    return rows

