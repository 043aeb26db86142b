"""Hessenberg functions, their lower ideals, and enumeration."""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterator, List, Optional, Sequence, Tuple

from .errors import ArityError, InvalidHessenbergFunctionError, NotLowerIdealError
from .rootsystem import LieType, RootTable, build_root_table, chain_lengths, is_lower_ideal

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class HessFn:
    type: LieType
    values: Tuple[int, ...]

    @property
    def n(self) -> int:
        return self.type.rank

    def __call__(self, i: int) -> int:
        """h(i) for 1-based i."""
        return self.values[i - 1]

    @property
    def label(self) -> str:
        return f"{self.type.label}:{','.join(str(v) for v in self.values)}"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class LowerIdeal:
    """Chain indices (i, j) of the roots alpha_{i,j} in the ideal."""

    members: FrozenSet[Tuple[int, int]]

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, ij) -> bool:
        return ij in self.members

    def __le__(self, other: "LowerIdeal") -> bool:
        return self.members <= other.members

    def __sub__(self, other: "LowerIdeal") -> List[Tuple[int, int]]:
        return sorted(self.members - other.members)


@dataclass(frozen=True)
class ValidityReport:
    ok: bool
    violations: Tuple[str, ...] = ()


def value_range(t: LieType, i: int) -> range:
    """Admissible values of h(i) under condition (1) of the type."""
    n = t.rank
    if t.family == "A":
        return range(i, n + 1)
    if t.family in ("B", "C"):
        return range(i, 2 * n + 2 - i)
    if t.family == "D":
        return range(n, 2 * n) if i == n else range(i, 2 * n - i)
    return {1: range(1, 7), 2: range(2, 4), 3: range(3, 4)}[i]


def _violations(t: LieType, h: Sequence[int]) -> List[str]:
    """Violated conditions among those whose indices all lie in ``h`` (a prefix is allowed)."""
    n, fam, k = t.rank, t.family, len(h)
    bad = set()

    def v(i: int) -> int:
        return h[i - 1]

    for i in range(1, k + 1):
        if v(i) not in value_range(t, i):
            bad.add(1 if fam != "A" else 2)

    if fam == "A":
        if any(v(i) > v(i + 1) for i in range(1, k)):
            bad.add(1)
    elif fam in ("B", "C"):
        for i in range(1, k):
            top = 2 * n + 1 - i
            if v(i) != top and v(i) > v(i + 1):
                bad.add(2)
            if v(i) == top and v(i + 1) != 2 * n - i:
                bad.add(3)
    elif fam == "D":
        for i in range(1, min(k, n - 1)):
            top = 2 * n - 1 - i
            if v(i) != top and v(i) > v(i + 1):
                bad.add(3)
            if v(i) == top and v(i + 1) != 2 * n - 2 - i:
                bad.add(4)
        if k == n:
            for i in range(1, n - 1):
                if v(i) >= n + 1 and v(n) < 2 * n - i:
                    bad.add(5)
                if v(n) >= 2 * n - i and v(i) < n - 1:
                    bad.add(6)
    else:
        if k >= 2 and v(1) >= 3 and v(2) != 3:
            bad.add(2)
    return [f"{fam}({c})" for c in sorted(bad)]


def validate(h: HessFn) -> ValidityReport:
    if len(h.values) != h.n:
        raise ArityError(f"{h.type} needs {h.n} values, got {len(h.values)}")
    bad = _violations(h.type, h.values)
    return ValidityReport(not bad, tuple(bad))


def require_valid(h: HessFn) -> HessFn:
    report = validate(h)
    if not report.ok:
        raise InvalidHessenbergFunctionError(h.label, report.violations)
    return h


def make(t: LieType, values: Sequence[int]) -> HessFn:
    return require_valid(HessFn(t, tuple(int(v) for v in values)))


def parse_hessfn(text: str, check: bool = True) -> HessFn:
    """Parse ``D4:3,5,4,7``; with ``check`` the function must be valid."""
    try:
        label, vals = text.split(":", 1)
        values = tuple(int(v) for v in vals.replace(" ", "").split(","))
    except ValueError as e:
        raise ValueError(f"malformed Hessenberg function {text!r}; expected e.g. 'D4:3,5,4,7'") from e
    h = HessFn(LieType.parse(label), values)
    return require_valid(h) if check else h


def to_json(h: HessFn) -> dict:
    return {"type": h.type.family, "rank": h.n, "h": list(h.values)}


def from_json(data: dict) -> HessFn:
    return make(LieType(data["type"], int(data["rank"])), data["h"])


def minimal(t: LieType) -> HessFn:
    return HessFn(t, tuple(range(1, t.rank + 1)))


def flag(t: LieType) -> HessFn:
    """The full ideal Phi+ (flag variety)."""
    return HessFn(t, tuple(i + e for i, e in enumerate(chain_lengths(t), start=1)))


def peterson(t: LieType) -> HessFn:
    """The ideal of simple roots."""
    return HessFn(t, tuple(i + min(e, 1) for i, e in enumerate(chain_lengths(t), start=1)))


def to_ideal(h: HessFn) -> LowerIdeal:
    require_valid(h)
    return LowerIdeal(frozenset((i, j) for i in range(1, h.n + 1) for j in range(i + 1, h(i) + 1)))


def from_ideal(ideal: LowerIdeal, table: RootTable) -> HessFn:
    """h_I(i) = i + #(I in row i)."""
    values = []
    for i in range(1, table.n + 1):
        cols = sorted(j for (r, j) in ideal.members if r == i)
        if cols != list(range(i + 1, i + 1 + len(cols))) or len(cols) > table.chain_length(i):
            raise NotLowerIdealError(f"row {i} of the ideal is not a chain prefix: {cols}")
        values.append(i + len(cols))
    if any(not 1 <= i <= table.n for i, _ in ideal.members):
        raise NotLowerIdealError("ideal references rows outside the table")
    if not is_lower_ideal(table, ideal.members):
        raise NotLowerIdealError("set of roots is not downward closed")
    return HessFn(table.type, tuple(values))


def ideal_roots(h: HessFn, table: Optional[RootTable] = None):
    table = table or build_root_table(h.type)
    return [table.root(i, j) for i, j in to_ideal(h)]


def complex_dimension(h: HessFn) -> int:
    return sum(v - i for i, v in enumerate(h.values, start=1))


@lru_cache(maxsize=None)
def _enumerate(t: LieType) -> Tuple[HessFn, ...]:
    found: List[Tuple[int, ...]] = []

    def dfs(prefix: List[int]) -> None:
        if len(prefix) == t.rank:
            if not _violations(t, prefix):
                found.append(tuple(prefix))
            return
        for v in value_range(t, len(prefix) + 1):
            prefix.append(v)
            if not _violations(t, prefix):
                dfs(prefix)
            prefix.pop()

    dfs([])
    logger.debug("%s has %d Hessenberg functions", t, len(found))
    return tuple(HessFn(t, vals) for vals in sorted(found))


def enumerate_all(t: LieType) -> List[HessFn]:
    """All Hessenberg functions of ``t``, lexicographically sorted."""
    return list(_enumerate(t))


def is_subfunction(h_sub: HessFn, h: HessFn) -> bool:
    """Inclusion of the corresponding lower ideals."""
    return h_sub.type == h.type and to_ideal(h_sub) <= to_ideal(h)


def enumerate_sub(h: HessFn) -> List[HessFn]:
    require_valid(h)
    return [g for g in _enumerate(h.type) if is_subfunction(g, h)]


def covering_subfunctions(h: HessFn) -> List[HessFn]:
    """Sub-functions whose ideal misses exactly one root of I."""
    size = len(to_ideal(h))
    return [g for g in enumerate_sub(h) if len(to_ideal(g)) == size - 1]
