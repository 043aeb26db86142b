"""Poincare-dual classes of sub-Hessenberg varieties and Gysin maps."""
import hashlib
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from .basisgen import BasisSpec, candidate_basis
from .errors import InclusionError, PresentationInconsistencyError
from .hessfn import (
    HessFn,
    complex_dimension,
    covering_subfunctions,
    enumerate_sub,
    is_subfunction,
    require_valid,
    to_ideal,
)
from .idealgen import generators
from .polyring import Poly, degree, is_homogeneous, product
from .quotient import QuotientRing, build_quotient, column_matrix, coordinates, exact_rank, multiplication_matrix
from .rootsystem import RootTable, build_root_table, parabolic_weyl_order, root_poly

logger = logging.getLogger(__name__)


@dataclass
class DualClass:
    h: HessFn
    h_sub: HessFn
    scalar: Fraction
    product: Poly
    coords: Optional[List[Fraction]] = None

    @property
    def degree(self) -> int:
        return complex_dimension(self.h) - complex_dimension(self.h_sub)


@dataclass(frozen=True)
class IndependenceReport:
    count: int
    rank: int
    digests: Tuple[Tuple[str, str], ...] = field(default=(), compare=False)

    @property
    def independent(self) -> bool:
        return self.rank == self.count


@dataclass(frozen=True)
class ExtensionReport:
    checked: int
    failures: Tuple[str, ...] = ()
    syntactic: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class GysinReport:
    h_sub: HessFn
    h: HessFn
    source_dim: int
    rank: int
    well_defined: bool
    degree_shift_ok: bool

    @property
    def injective(self) -> bool:
        return self.rank == self.source_dim


def digest(vec: Sequence[Fraction]) -> str:
    """Short stable hash of a coordinate vector."""
    text = ",".join(f"{c.numerator}/{c.denominator}" for c in vec)
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:12]


@lru_cache(maxsize=256)
def quotient_for(h: HessFn) -> QuotientRing:
    """Cached presentation ring of ``h``."""
    return build_quotient(generators(h.type, h))


def _check_inclusion(h_sub: HessFn, h: HessFn) -> None:
    require_valid(h)
    require_valid(h_sub)
    if not is_subfunction(h_sub, h):
        raise InclusionError(f"{h_sub.label} is not contained in {h.label}")


def beta(h: HessFn, h_sub: HessFn, table: Optional[RootTable] = None) -> Poly:
    """Product of the roots in I \\ I'."""
    _check_inclusion(h_sub, h)
    table = table or build_root_table(h.type)
    return product((root_poly(table.root(i, j)) for i, j in to_ideal(h) - to_ideal(h_sub)), h.n)


def pdual_class(h: HessFn, h_sub: HessFn, table: Optional[RootTable] = None) -> DualClass:
    """(|W_I'| / |W_I|) * prod_{alpha in I \\ I'} alpha."""
    table = table or build_root_table(h.type)
    prod_poly = beta(h, h_sub, table)
    scalar = Fraction(parabolic_weyl_order(table, to_ideal(h_sub)), parabolic_weyl_order(table, to_ideal(h)))
    return DualClass(h, h_sub, scalar, prod_poly)


def dual_classes(h: HessFn) -> List[DualClass]:
    table = build_root_table(h.type)
    return [pdual_class(h, g, table) for g in enumerate_sub(h)]


def verify_duals_independent(h: HessFn, qr: Optional[QuotientRing] = None) -> IndependenceReport:
    """Rank of the dual products over every sub-function (scalars omitted)."""
    qr = qr or quotient_for(h)
    classes = dual_classes(h)
    for c in classes:
        c.coords = coordinates(c.product, qr)
    rank = exact_rank([c.coords for c in classes])
    digests = tuple((c.h_sub.label, digest(c.coords)) for c in classes)
    return IndependenceReport(len(classes), rank, digests)


def _proportional(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    """u = c * v for some nonzero rational c."""
    return any(u) and any(v) and exact_rank([u, v]) == 1


def verify_basis_extends_duals(h: HessFn, qr: Optional[QuotientRing] = None) -> ExtensionReport:
    """The basis element at m = h - h' is proportional to the dual class of h'."""
    qr = qr or quotient_for(h)
    spec = None if h.type.family == "D" else BasisSpec.identity(h)
    by_m = {el.m: el for el in candidate_basis(h, spec)}
    table = build_root_table(h.type)
    failures = []
    syntactic = 0
    subs = enumerate_sub(h)
    for g in subs:
        m = tuple(a - b for a, b in zip(h.values, g.values))
        el = by_m.get(m)
        dual = pdual_class(h, g, table)
        if el is None:
            failures.append(g.label)
            continue
        if el.poly == dual.product:
            syntactic += 1
        elif not _proportional(coordinates(el.poly, qr), coordinates(dual.product, qr)):
            failures.append(g.label)
    return ExtensionReport(len(subs), tuple(failures), syntactic)


def gysin_matrix(h_sub: HessFn, h: HessFn) -> Tuple[List[List[Fraction]], bool]:
    """Multiplication by beta from R/a(I') to R/a(I) on standard-monomial coordinates."""
    _check_inclusion(h_sub, h)
    return multiplication_matrix(quotient_for(h_sub), quotient_for(h), beta(h, h_sub))


def gysin_injective(h_sub: HessFn, h: HessFn) -> GysinReport:
    columns, well_defined = gysin_matrix(h_sub, h)
    if not well_defined:
        raise PresentationInconsistencyError(f"multiplication by beta from {h_sub.label} to {h.label} is not well defined")
    source, target = quotient_for(h_sub), quotient_for(h)
    b = beta(h, h_sub)
    shift = degree(b)
    shift_ok = is_homogeneous(b) and shift == complex_dimension(h) - complex_dimension(h_sub)
    for m, col in zip(source.std_monomials, columns):
        for c, tm in zip(col, target.std_monomials):
            if c and sum(tm) != sum(m) + shift:
                shift_ok = False
    report = GysinReport(h_sub, h, source.dim, exact_rank(columns), well_defined, shift_ok)
    logger.debug("gysin %s -> %s: rank %d of %d", h_sub, h, report.rank, report.source_dim)
    return report


def covering_gysin(h: HessFn) -> List[GysinReport]:
    return [gysin_injective(g, h) for g in covering_subfunctions(h)]


def composition_consistent(h_low: HessFn, h_mid: HessFn, h: HessFn) -> bool:
    """Gysin map of h_low -> h equals the composite through h_mid (beta factors multiply)."""
    direct, _ = gysin_matrix(h_low, h)
    first, _ = gysin_matrix(h_low, h_mid)
    second, _ = gysin_matrix(h_mid, h)
    return column_matrix(second).matmul(column_matrix(first)).to_list() == column_matrix(direct).to_list()
