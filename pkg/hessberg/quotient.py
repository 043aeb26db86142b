"""Artinian quotient rings QQ[x1..xn]/(f_1, ..., f_k) via Groebner bases."""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import lcm, prod
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy.polys.domains import QQ, ZZ
from sympy.polys.groebnertools import groebner
from sympy.polys.matrices import DomainMatrix

from .errors import NotArtinianError, RingMismatchError, RootConsistencyError
from .hessfn import HessFn, LowerIdeal, flag
from .idealgen import GeneratorSet, generators_generic, unit_coefficients
from .polyring import Monomial, Poly, degree, format_poly, polynomial_ring, random_poly, scale, to_fraction, to_qq
from .rootsystem import LieType, RootTable, height

logger = logging.getLogger(__name__)

Vector = List[Fraction]


@dataclass(frozen=True)
class QuotientRing:
    gens: Tuple[Poly, ...]
    gb: Tuple[Poly, ...]
    std_monomials: Tuple[Monomial, ...]
    hilbert: Tuple[int, ...]
    nvars: int
    label: str = ""
    generator_set: Optional[GeneratorSet] = field(default=None, compare=False)
    index: Dict[Monomial, int] = field(default_factory=dict, compare=False, repr=False)

    @property
    def ring(self):
        return polynomial_ring(self.nvars)

    @property
    def dim(self) -> int:
        return len(self.std_monomials)

    @property
    def top_degree(self) -> int:
        return len(self.hilbert) - 1

    @property
    def expected_dim(self) -> Optional[int]:
        """Complete-intersection dimension, when there are exactly n generators."""
        if len(self.gens) != self.nvars or not all(self.gens):
            return None
        return prod(degree(g) for g in self.gens)

    def monomial(self, m: Monomial) -> Poly:
        return self.ring.from_dict({m: self.ring.domain.one})


def _divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def build_quotient(gens: Union[GeneratorSet, Sequence[Poly]], label: str = "") -> QuotientRing:
    """Reduced Groebner basis, standard monomials and Hilbert function."""
    gen_set = gens if isinstance(gens, GeneratorSet) else None
    polys = tuple(gen_set.gens if gen_set else gens)
    if not polys:
        raise NotArtinianError("no generators")
    R = polys[0].ring
    for p in polys:
        if p.ring != R:
            raise RingMismatchError("generators live in different rings")
    if not label and gen_set is not None and gen_set.h is not None:
        label = gen_set.h.label

    nonzero = [p for p in polys if p]
    if not nonzero:
        raise NotArtinianError("all generators vanish")
    gb = tuple(groebner(nonzero, R, method="buchberger"))
    if any(g.LM == R.zero_monom for g in gb):
        raise NotArtinianError("the ideal is the whole ring")

    leading = [g.LM for g in gb]
    for v in range(R.ngens):
        if not any(m[v] > 0 and sum(m) == m[v] for m in leading):
            raise NotArtinianError(f"no pure power of x{v + 1} among leading monomials")

    layer = [R.zero_monom]
    std: List[Monomial] = []
    hilbert: List[int] = []
    while layer:
        layer.sort(key=R.order, reverse=True)
        std.extend(layer)
        hilbert.append(len(layer))
        nxt = set()
        for m in layer:
            for v in range(R.ngens):
                up = m[:v] + (m[v] + 1,) + m[v + 1:]
                if not any(_divides(lm, up) for lm in leading):
                    nxt.add(up)
        layer = list(nxt)

    qr = QuotientRing(
        gens=polys,
        gb=gb,
        std_monomials=tuple(std),
        hilbert=tuple(hilbert),
        nvars=R.ngens,
        label=label,
        generator_set=gen_set,
        index={m: k for k, m in enumerate(std)},
    )
    logger.debug("quotient %s: %d generators, gb size %d, dim %d", label, len(polys), len(gb), qr.dim)
    return qr


def normal_form(p: Poly, qr: QuotientRing) -> Poly:
    if p.ring != qr.ring:
        raise RingMismatchError(f"polynomial in {p.ring.ngens} variables, quotient in {qr.nvars}")
    return p.rem(list(qr.gb))


def coordinates(p: Poly, qr: QuotientRing) -> Vector:
    """Coefficients of NF(p) on the standard monomials."""
    vec = [Fraction(0)] * qr.dim
    for m, c in normal_form(p, qr).iterterms():
        vec[qr.index[m]] = to_fraction(c)
    return vec


def hilbert_series(qr: QuotientRing) -> List[int]:
    return list(qr.hilbert)


def series_product(degrees: Sequence[int]) -> List[int]:
    """Coefficients of prod_i (1 + t + ... + t^(d_i - 1))."""
    out = np.array([1], dtype=np.int64)
    for d in degrees:
        out = np.convolve(out, np.ones(d, dtype=np.int64))
    return [int(c) for c in out]


def product_formula_series(h: HessFn) -> List[int]:
    return series_product([v - i + 1 for i, v in enumerate(h.values, start=1)])


def _divide_one_minus(p: List[int], k: int) -> List[int]:
    q = list(p)
    for d in range(k, len(q)):
        q[d] += q[d - k]
    if any(q[len(p) - k:]):
        raise RootConsistencyError(f"series not divisible by 1 - t^{k}")
    return q[: len(p) - k]


def root_product_series(ideal: LowerIdeal, table: RootTable) -> List[int]:
    """prod over roots of (1 - t^(ht+1)) / (1 - t^ht), expanded exactly."""
    heights = [height(table.root(i, j), table) for i, j in ideal]
    num = np.array([1], dtype=np.int64)
    for ht in heights:
        factor = np.zeros(ht + 2, dtype=np.int64)
        factor[0], factor[ht + 1] = 1, -1
        num = np.convolve(num, factor)
    series = [int(c) for c in num]
    for ht in heights:
        series = _divide_one_minus(series, ht)
    return series


def is_palindromic(series: Sequence[int]) -> bool:
    return list(series) == list(reversed(series))


def exact_rank(columns: Sequence[Vector]) -> int:
    """Exact rank of a family of rational vectors (denominators cleared per vector)."""
    rows = {}
    width = 0
    for r, col in enumerate(columns):
        width = max(width, len(col))
        den = reduce(lcm, (Fraction(c).denominator for c in col), 1)
        entries = {k: ZZ(int(Fraction(c) * den)) for k, c in enumerate(col) if c}
        if entries:
            rows[r] = entries
    if not rows:
        return 0
    return DomainMatrix(rows, (len(columns), width), ZZ).rank()


def column_matrix(columns: Sequence[Vector]) -> DomainMatrix:
    """Exact QQ matrix whose k-th column is ``columns[k]``."""
    height = len(columns[0]) if columns else 0
    data = [[to_qq(col[r]) for col in columns] for r in range(height)]
    return DomainMatrix(data, (height, len(columns)), QQ)


def is_poincare_duality_algebra(qr: QuotientRing) -> bool:
    """Top degree is one-dimensional and every pairing R_k x R_{D-k} -> R_D has full rank."""
    top = qr.top_degree
    if qr.hilbert[top] != 1 or not is_palindromic(qr.hilbert):
        return False
    top_m = qr.std_monomials[-1]
    zero = qr.ring.domain.zero
    by_degree: Dict[int, List[Poly]] = {}
    for m in qr.std_monomials:
        by_degree.setdefault(sum(m), []).append(qr.monomial(m))
    for k in range(top // 2 + 1):
        rows = [[to_fraction(normal_form(a * b, qr).get(top_m, zero)) for b in by_degree[top - k]] for a in by_degree[k]]
        if exact_rank(rows) != len(rows):
            return False
    return True


def multiplication_matrix(source: QuotientRing, target: QuotientRing, multiplier: Poly) -> Tuple[List[Vector], bool]:
    """Columns of p -> NF_target(multiplier * p) on the standard monomials of ``source``.

    The flag reports whether every generator of ``source`` maps to zero, i.e. whether
    the map is well defined on residue classes.
    """
    if source.nvars != target.nvars:
        raise RingMismatchError("quotients over different polynomial rings")
    columns = [coordinates(multiplier * source.monomial(m), target) for m in source.std_monomials]
    well_defined = all(not normal_form(multiplier * g, target) for g in source.gens if g)
    return columns, well_defined


@dataclass(frozen=True)
class CofactorReport:
    n: int
    m0: int
    source_dim: int
    target_dim: int
    rank: int
    well_defined: bool

    @property
    def injective(self) -> bool:
        return self.well_defined and self.rank == self.source_dim


def cofactor_injectivity(n: int, m0: int, coeffs=None) -> CofactorReport:
    """Multiplication by the cofactor of x1 - x_{n-m0} in the type A flag relation f_{1,n}.

    Domain ``(g_2..g_n, x1 - x_{n-m0})``, codomain ``(g_2..g_n, f_{1,n})`` where
    ``g_i = f_{i,n}`` (optionally with generic coefficients ``coeffs``).
    """
    if not 0 <= m0 <= n - 2:
        raise ValueError(f"m0 must lie in 0..{n - 2}, got {m0}")
    t = LieType("A", n)
    weights = coeffs or unit_coefficients(n)
    gens = generators_generic(t, flag(t), weights).gens
    x = polynomial_ring(n).gens
    split = n - m0
    g_prime = x[0] - x[split - 1]
    g_second = x[0]
    for l in range(2, n + 1):
        if l != split:
            g_second *= x[0] - x[l - 1]
    g_second = scale(g_second, weights[0][0])

    target = build_quotient(gens, label=f"A{n - 1} flag")
    # (gens, g_prime) = (g_2..g_n, g_prime) because f_{1,n} = g_prime * g_second
    source = restriction_quotient(target, g_prime)
    columns, ok = multiplication_matrix(source, target, g_second)
    return CofactorReport(n, m0, source.dim, target.dim, exact_rank(columns), ok)


def restriction_quotient(qr: QuotientRing, linear: Poly) -> QuotientRing:
    """R/(linear) for an Artinian quotient R."""
    return build_quotient(qr.gens + (linear,), label=f"{qr.label} / ({format_poly(linear)})")


def check_normal_form(qr: QuotientRing, rng, samples: int) -> bool:
    """NF is linear and idempotent on ``samples`` random pairs, and kills every generator."""
    if any(normal_form(g, qr) for g in qr.gens):
        return False
    for _ in range(samples):
        p = random_poly(rng, qr.nvars)
        q = random_poly(rng, qr.nvars)
        a = Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4)))
        b = Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4)))
        nf_p = normal_form(p, qr)
        if normal_form(scale(p, a) + scale(q, b), qr) != scale(nf_p, a) + scale(normal_form(q, qr), b):
            return False
        if normal_form(nf_p, qr) != nf_p:
            return False
    return True
