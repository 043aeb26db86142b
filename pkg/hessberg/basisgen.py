"""Candidate additive bases: root products for A/B/C/G2, the v_m products for D."""
import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from .errors import InvalidPermutationError, ProcedureRangeError, UnsupportedTypeError
from .hessfn import HessFn, flag, require_valid
from .idealgen import generators_generic
from .polyring import Poly, polynomial_ring, product
from .quotient import QuotientRing, build_quotient, coordinates, exact_rank
from .rootsystem import LieType, build_root_table, root_poly

logger = logging.getLogger(__name__)

PROC1R = "proc1r"
PROC2R = "proc2r"
PROC3R = "proc3r"
PROC2N = "proc2n"
PROC3N = "proc3n"


@dataclass(frozen=True)
class BasisSpec:
    """Row i permutes the window {i+1, ..., h(i)}; ``perms[i-1][k]`` is w(i+1+k)."""

    h: HessFn
    perms: Tuple[Tuple[int, ...], ...]

    @classmethod
    def identity(cls, h: HessFn) -> "BasisSpec":
        return cls(h, tuple(tuple(range(i + 1, v + 1)) for i, v in enumerate(h.values, start=1)))

    def w(self, i: int, j: int) -> int:
        return self.perms[i - 1][j - i - 1]


@dataclass(frozen=True)
class DTrace:
    """ell^(1) -> ell^(2) -> ...; ``steps[r-1]`` labels ell^(r) -> ell^(r+1)."""

    sequence: Tuple[Tuple[int, ...], ...]
    steps: Tuple[str, ...]
    terminal: Optional[str] = None

    def label(self, r: int) -> Optional[str]:
        return self.steps[r - 1] if 1 <= r <= len(self.steps) else None


@dataclass
class BasisElement:
    m: Tuple[int, ...]
    poly: Poly
    coords: Optional[List[Fraction]] = None
    trace: Optional[DTrace] = field(default=None, repr=False)


@dataclass(frozen=True)
class BasisReport:
    count: int
    dim: int
    rank: int

    @property
    def is_basis(self) -> bool:
        return self.count == self.dim == self.rank


def _m_vectors(h: HessFn) -> Iterator[Tuple[int, ...]]:
    return itertools.product(*(range(v - i + 1) for i, v in enumerate(h.values, start=1)))


def _check_perms(spec: BasisSpec) -> None:
    h = spec.h
    if len(spec.perms) != h.n:
        raise InvalidPermutationError(f"need {h.n} permutations, got {len(spec.perms)}")
    for i, perm in enumerate(spec.perms, start=1):
        if sorted(perm) != list(range(i + 1, h(i) + 1)):
            raise InvalidPermutationError(f"row {i}: {perm} is not a permutation of {{{i + 1}..{h(i)}}}")


def basis_elements(spec: BasisSpec) -> List[BasisElement]:
    """prod_i alpha_{i,w(h(i))} ... alpha_{i,w(h(i)-m_i+1)} for every m (types A, B, C, G2)."""
    h = require_valid(spec.h)
    if h.type.family == "D":
        raise UnsupportedTypeError("type D bases come from basis_elements_D")
    _check_perms(spec)
    table = build_root_table(h.type)
    n = h.n
    roots = {(i, j): root_poly(table.root(i, j)) for i in range(1, n + 1) for j in range(i + 1, h(i) + 1)}
    out = []
    for m in _m_vectors(h):
        factors = (roots[(i, spec.w(i, j))] for i in range(1, n + 1) for j in range(h(i) - m[i - 1] + 1, h(i) + 1))
        out.append(BasisElement(m, product(factors, n)))
    return out


def random_perms(h: HessFn, rng) -> BasisSpec:
    """Uniformly random window permutations (``rng``: numpy Generator)."""
    return BasisSpec(h, tuple(tuple(int(v) for v in rng.permutation(range(i + 1, hv + 1))) for i, hv in enumerate(h.values, start=1)))


def _check_ell(ell: Sequence[int]) -> None:
    n = len(ell)
    if n < 2:
        raise ProcedureRangeError(f"procedure needs length >= 2, got {tuple(ell)}")
    for i, v in enumerate(ell[:-1], start=1):
        if not i <= v <= 2 * n - 1 - i:
            raise ProcedureRangeError(f"ell_{i} = {v} outside {i}..{2 * n - 1 - i}")
    if not n <= ell[-1] <= 2 * n - 1:
        raise ProcedureRangeError(f"ell_{n} = {ell[-1]} outside {n}..{2 * n - 1}")


@lru_cache(maxsize=None)
def _procedure(ell: Tuple[int, ...]) -> DTrace:
    sequence = [ell]
    steps: List[str] = []
    cur = ell
    while len(cur) > 1:
        n = len(cur)
        if cur[-1] < 2 * n - 1:
            steps.append(PROC1R if cur[0] <= n else PROC3R)
            cur = tuple(v - 1 for v in cur[1:])
        elif cur[0] <= n - 1:
            steps.append(PROC2R)
            cur = tuple(v - 1 for v in cur[1:-1]) + (cur[0] + n - 2,)
        else:
            return DTrace(tuple(sequence), tuple(steps), PROC2N if cur[0] == n else PROC3N)
        sequence.append(cur)
    return DTrace(tuple(sequence), tuple(steps))


def d_procedure(ell: Sequence[int]) -> DTrace:
    ell = tuple(int(v) for v in ell)
    _check_ell(ell)
    return _procedure(ell)


def _d_alpha(trace: DTrace, n: int, i: int, j: int) -> Poly:
    x = polynomial_ring(n).gens
    if i == n:
        r = 2 * n - j
        return x[r - 1] if trace.label(r) == PROC3R else x[r - 1] + x[n - 1]
    k = n - j + i
    if trace.label(i) == PROC2R and i < k:
        if trace.label(k) == PROC3R:
            return x[k - 1]
        if trace.label(k) == PROC1R:
            return x[i - 1] - x[k - 1]
    return root_poly(build_root_table(LieType("D", n)).root(i, j))


def d_alpha(ell: Sequence[int], i: int, j: int) -> Poly:
    """The possibly untwisted linear form alpha^(ell)_{i,j}."""
    trace = d_procedure(ell)
    n = len(ell)
    lo, hi = (n + 1, 2 * n - 1) if i == n else (i + 1, 2 * n - 1 - i)
    if not 1 <= i <= n or not lo <= j <= hi:
        raise ProcedureRangeError(f"no index ({i},{j}) for D{n}")
    return _d_alpha(trace, n, i, j)


def basis_elements_D(h: HessFn) -> List[BasisElement]:
    require_valid(h)
    if h.type.family != "D":
        raise UnsupportedTypeError(f"{h.type} is not of type D")
    n = h.n
    out = []
    for m in _m_vectors(h):
        trace = d_procedure(tuple(v - mi for v, mi in zip(h.values, m)))
        factors = (_d_alpha(trace, n, i, j) for i in range(1, n + 1) for j in range(h(i) - m[i - 1] + 1, h(i) + 1))
        out.append(BasisElement(m, product(factors, n), trace=trace))
    return out


def candidate_basis(h: HessFn, spec: Optional[BasisSpec] = None) -> List[BasisElement]:
    """Dispatch to the type-specific construction."""
    if h.type.family == "D":
        if spec is not None:
            raise UnsupportedTypeError("type D bases take no permutations")
        return basis_elements_D(h)
    return basis_elements(spec or BasisSpec.identity(h))


def verify_basis(qr: QuotientRing, elements: List[BasisElement]) -> BasisReport:
    """Fill in coordinates and compare count, dimension and exact rank."""
    for el in elements:
        el.coords = coordinates(el.poly, qr)
    report = BasisReport(len(elements), qr.dim, exact_rank([el.coords for el in elements]))
    logger.debug("basis check %s: %s", qr.label, report)
    return report


def flag_basis_elements(t: LieType, spec: Optional[BasisSpec] = None) -> List[BasisElement]:
    return basis_elements(spec or BasisSpec.identity(flag(t)))


def verify_generic_basis(t: LieType, coeffs, spec: Optional[BasisSpec] = None) -> BasisReport:
    """Flag-case products in the generic-coefficient ring; raises NotArtinianError if it is not Artinian."""
    qr = build_quotient(generators_generic(t, flag(t), coeffs), label=f"{t} generic")
    return verify_basis(qr, flag_basis_elements(t, spec))
