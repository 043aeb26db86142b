"""Positive-root tables split into maximal chains, one chain per row.

Rows are indexed ``i = 1..n`` and columns ``j``; the chain of row ``i`` is
``alpha_{i,i+1}, ..., alpha_{i,i+e_i}`` with ``alpha_{i,i+1}`` simple and each
step adding one simple root.  Roots are integer linear forms in ``x1..xn``.
"""
import logging
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import factorial
from typing import Dict, Iterable, List, Optional, Tuple

from sympy import Matrix

from .errors import RootConsistencyError, UnsupportedTypeError
from .polyring import Poly, linear_form

logger = logging.getLogger(__name__)

FAMILIES = ("A", "B", "C", "D", "G")
NOT_REPRODUCED = ("E", "F")


@dataclass(frozen=True, order=True)
class LieType:
    """Family plus rank, where rank is the number of ambient variables n."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family in NOT_REPRODUCED:
            raise UnsupportedTypeError(
                f"unsupported type {self.family}: E6/E7/E8/F4 presentations are not reproduced"
            )
        if self.family not in FAMILIES:
            raise UnsupportedTypeError(f"unsupported type {self.family!r}")
        if self.rank < 1:
            raise UnsupportedTypeError(f"unsupported type: rank {self.rank} < 1")
        if self.family == "D" and self.rank < 2:
            raise UnsupportedTypeError("unsupported type: D needs rank >= 2")
        if self.family == "G" and self.rank != 3:
            raise UnsupportedTypeError("unsupported type: G2 uses exactly 3 variables")

    @property
    def label(self) -> str:
        """Cartan name, e.g. ``A4`` for 5 variables or ``G2``."""
        if self.family == "A":
            return f"A{self.rank - 1}"
        if self.family == "G":
            return "G2"
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, label: str) -> "LieType":
        label = label.strip().upper()
        if not label or not label[1:].isdigit():
            raise UnsupportedTypeError(f"unsupported type {label!r}")
        family, num = label[0], int(label[1:])
        if family == "A":
            return cls("A", num + 1)
        if family == "G":
            if num != 2:
                raise UnsupportedTypeError(f"unsupported type {label}")
            return cls("G", 3)
        return cls(family, num)

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class PositiveRoot:
    coeffs: Tuple[int, ...]
    row: int
    col: int

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def __str__(self) -> str:
        return f"alpha_{{{self.row},{self.col}}}"


@dataclass(frozen=True)
class RootTable:
    type: LieType
    chains: Tuple[Tuple[PositiveRoot, ...], ...]

    @property
    def n(self) -> int:
        return self.type.rank

    def chain(self, i: int) -> Tuple[PositiveRoot, ...]:
        if not 1 <= i <= len(self.chains):
            raise IndexError(f"row {i} out of range 1..{len(self.chains)}")
        return self.chains[i - 1]

    def chain_length(self, i: int) -> int:
        return len(self.chain(i))

    def root(self, i: int, j: int) -> PositiveRoot:
        chain = self.chain(i)
        if not i + 1 <= j <= i + len(chain):
            raise IndexError(f"no root alpha_{{{i},{j}}} in {self.type}")
        return chain[j - i - 1]

    def roots(self) -> List[PositiveRoot]:
        return [r for chain in self.chains for r in chain]

    @cached_property
    def _by_coeffs(self) -> Dict[Tuple[int, ...], PositiveRoot]:
        return {r.coeffs: r for r in self.roots()}

    def find(self, coeffs: Iterable[int]) -> Optional[PositiveRoot]:
        return self._by_coeffs.get(tuple(coeffs))

    def __contains__(self, root: PositiveRoot) -> bool:
        return self._by_coeffs.get(root.coeffs) == root


def chain_lengths(t: LieType) -> Tuple[int, ...]:
    n = t.rank
    if t.family == "A":
        return tuple(n - i for i in range(1, n + 1))
    if t.family in ("B", "C"):
        return tuple(2 * (n - i) + 1 for i in range(1, n + 1))
    if t.family == "D":
        return tuple(2 * (n - i) - 1 for i in range(1, n)) + (n - 1,)
    return (5, 1, 0)


def positive_root_count(t: LieType) -> int:
    n = t.rank
    return {"A": n * (n - 1) // 2, "B": n * n, "C": n * n, "D": n * (n - 1), "G": 6}[t.family]


_G2_ROOTS = {
    (1, 2): (1, -1, 0),
    (1, 3): (-1, 0, 1),
    (1, 4): (0, -1, 1),
    (1, 5): (1, -2, 1),
    (1, 6): (-1, -1, 2),
    (2, 3): (-2, 1, 1),
}


def _root_coeffs(t: LieType, i: int, j: int) -> Tuple[int, ...]:
    n = t.rank
    if t.family == "G":
        return _G2_ROOTS[(i, j)]
    c = [0] * n

    def put(k: int, v: int) -> None:
        c[k - 1] += v

    fam = t.family
    if fam == "D" and i == n:
        put(2 * n - j, 1)
        put(n, 1)
    elif j <= n:
        put(i, 1)
        put(j, -1)
    elif fam == "A":
        raise IndexError(f"no root alpha_{{{i},{j}}} in {t}")
    elif fam == "B":
        put(i, 1)
        if j >= n + 2:
            put(2 * n + 2 - j, 1)
    elif fam == "C":
        if j <= 2 * n - i:
            put(i, 1)
            put(2 * n + 1 - j, 1)
        else:
            put(i, 2)
    else:
        put(i, 1)
        put(2 * n - j, 1)
    return tuple(c)


@lru_cache(maxsize=None)
def build_root_table(t: LieType) -> RootTable:
    """The chain-decomposed positive roots of ``t``."""
    chains = []
    for i, e in enumerate(chain_lengths(t), start=1):
        chains.append(tuple(PositiveRoot(_root_coeffs(t, i, j), i, j) for j in range(i + 1, i + e + 1)))
    table = RootTable(t, tuple(chains))

    roots = table.roots()
    if len(roots) != positive_root_count(t) or len({r.coeffs for r in roots}) != len(roots):
        raise RootConsistencyError(f"{t}: chains do not partition the positive roots")
    logger.debug("built root table %s with %d roots", t, len(roots))
    return table


def root_poly(root: PositiveRoot) -> Poly:
    """The degree-1 polynomial of a root."""
    return linear_form(root.coeffs, root.n)


def simple_roots(table: RootTable) -> List[PositiveRoot]:
    return [chain[0] for chain in table.chains if chain]


def exponents(table: RootTable) -> Tuple[int, ...]:
    return tuple(len(chain) for chain in table.chains if chain)


@lru_cache(maxsize=None)
def _simple_coordinates(table: RootTable) -> Dict[Tuple[int, int], Tuple[int, ...]]:
    simple = simple_roots(table)
    S = Matrix([list(s.coeffs) for s in simple]).T
    out = {}
    for r in table.roots():
        try:
            sol, params = S.gauss_jordan_solve(Matrix(list(r.coeffs)))
        except ValueError as e:
            raise RootConsistencyError(f"{r} of {table.type} is not in the span of the simple roots") from e
        coords = [c for c in sol]
        if params.shape[0] or not all(c.is_integer and c >= 0 for c in coords):
            raise RootConsistencyError(f"{r} of {table.type} has simple-root coordinates {coords}")
        out[(r.row, r.col)] = tuple(int(c) for c in coords)
    return out


def simple_root_coordinates(root: PositiveRoot, table: RootTable) -> Tuple[int, ...]:
    try:
        return _simple_coordinates(table)[(root.row, root.col)]
    except KeyError:
        raise RootConsistencyError(f"{root} does not belong to {table.type}") from None


def height(root: PositiveRoot, table: RootTable) -> int:
    """Sum of the coefficients of ``root`` in the simple-root basis."""
    return sum(simple_root_coordinates(root, table))


def covering_ok(table: RootTable) -> bool:
    """Each chain starts at a simple root and every step adds a simple root."""
    simple = {s.coeffs for s in simple_roots(table)}
    for chain in table.chains:
        if chain and chain[0].coeffs not in simple:
            return False
        for prev, cur in zip(chain, chain[1:]):
            diff = tuple(a - b for a, b in zip(cur.coeffs, prev.coeffs))
            if diff not in simple:
                return False
    return True


def is_lower_ideal(table: RootTable, members: Iterable[Tuple[int, int]]) -> bool:
    """Closed under subtracting a simple root while staying positive."""
    members = set(members)
    simple = simple_roots(table)
    for i, j in members:
        try:
            alpha = table.root(i, j)
        except IndexError:
            return False
        for s in simple:
            beta = table.find(a - b for a, b in zip(alpha.coeffs, s.coeffs))
            if beta is not None and (beta.row, beta.col) not in members:
                return False
    return True


def _cartan_multiplicity(a: Tuple[int, ...], b: Tuple[int, ...]) -> int:
    ab = sum(x * y for x, y in zip(a, b))
    aa = sum(x * x for x in a)
    bb = sum(x * x for x in b)
    return int(Fraction(2 * ab, bb) * Fraction(2 * ab, aa))


def _component_order(size: int, edges: List[int], degrees: List[int]) -> int:
    if 3 in edges:
        return 12
    if 2 in edges:
        return 2 ** size * factorial(size)
    if any(d >= 3 for d in degrees):
        return 2 ** (size - 1) * factorial(size)
    return factorial(size + 1)


def parabolic_weyl_order(table: RootTable, ideal: Iterable[Tuple[int, int]]) -> int:
    """|W_I| for the simple roots contained in ``ideal``."""
    members = set(ideal)
    delta = [s for s in simple_roots(table) if (s.row, s.col) in members]
    adj: Dict[int, Dict[int, int]] = {k: {} for k in range(len(delta))}
    for a in range(len(delta)):
        for b in range(a + 1, len(delta)):
            m = _cartan_multiplicity(delta[a].coeffs, delta[b].coeffs)
            if m:
                adj[a][b] = adj[b][a] = m

    order = 1
    seen = set()
    for start in adj:
        if start in seen:
            continue
        comp, queue = [], deque([start])
        seen.add(start)
        while queue:
            v = queue.popleft()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        edges = [adj[v][w] for v in comp for w in adj[v] if v < w]
        order *= _component_order(len(comp), edges, [len(adj[v]) for v in comp])
    return order


def weyl_group_order(table: RootTable) -> int:
    return parabolic_weyl_order(table, ((r.row, r.col) for r in table.roots()))


def to_json(table: RootTable) -> dict:
    return {
        "type": table.type.family,
        "rank": table.n,
        "chains": [[{"i": r.row, "j": r.col, "coeffs": list(r.coeffs)} for r in chain] for chain in table.chains],
    }
