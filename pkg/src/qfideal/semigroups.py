"""Finite semigroups as validated Cayley tables, plus crisp subset predicates.

Elements are indices 0..n-1 throughout; labels exist only for presentation
and interchange.  All functions here are pure and all values immutable, so
they are safe to share between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence


class SemigroupError(ValueError):
    """Base class for table-validation failures."""


class NonSquareTable(SemigroupError):
    pass


class IndexOutOfRange(SemigroupError):
    pass


class NotAssociative(SemigroupError):
    """Carries one violating triple (i, j, k) as ``.triple``."""

    def __init__(self, triple: tuple[int, int, int]):
        self.triple = triple
        i, j, k = triple
        super().__init__(
            f"({i}*{j})*{k} != {i}*({j}*{k}); the table is not associative"
        )


class EmptySubset(ValueError):
    pass


class NotAnIdeal(ValueError):
    """Prime/semiprime queries are only defined on ideals."""


@dataclass(frozen=True)
class Semigroup:
    """An associativity-validated Cayley table over labelled elements.

    ``table[i][j]`` is the index of ``element i * element j``.  Construct via
    :func:`build_semigroup`, which enforces the invariants.
    """

    names: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.names)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def elements(self) -> range:
        return range(len(self.names))

    def index_of(self, label: str) -> int:
        try:
            return self.names.index(label)
        except ValueError:
            raise KeyError(f"no element labelled {label!r}") from None

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(self.names[v] for v in row) for row in self.table)
        return f"Semigroup({', '.join(self.names)} | {rows})"


@dataclass(frozen=True)
class ClassFlags:
    """Structural class membership, each decided by exhaustive witness search."""

    commutative: bool
    regular: bool
    left_regular: bool
    right_regular: bool
    intra_regular: bool
    archimedean: bool

    FLAG_NAMES = (
        "commutative",
        "regular",
        "left_regular",
        "right_regular",
        "intra_regular",
        "archimedean",
    )

    def satisfies(self, mask: Iterable[str]) -> bool:
        """True when every named flag is set."""
        return all(getattr(self, name) for name in mask)


@dataclass(frozen=True)
class CrispSubset:
    """A subset of one semigroup's carrier, stored as a frozenset of indices."""

    owner: Semigroup
    members: frozenset[int]

    def __post_init__(self):
        if not all(0 <= m < self.owner.order for m in self.members):
            raise IndexOutOfRange("subset members must index the owner's carrier")

    def __contains__(self, index: int) -> bool:
        return index in self.members

    def __len__(self) -> int:
        return len(self.members)

    def labels(self) -> list[str]:
        return [self.owner.names[i] for i in sorted(self.members)]


class CrispKind(str, Enum):
    SUBSEMIGROUP = "subsemigroup"
    INTERIOR_IDEAL = "interior_ideal"
    LEFT_IDEAL = "left_ideal"
    RIGHT_IDEAL = "right_ideal"
    IDEAL = "ideal"
    COMPLETELY_PRIME = "completely_prime"
    COMPLETELY_SEMIPRIME = "completely_semiprime"


def build_semigroup(names: Sequence[str], table: Sequence[Sequence[int]]) -> Semigroup:
    """Validate a Cayley table and return the semigroup it defines.

    Raises NonSquareTable, IndexOutOfRange, or NotAssociative (with one
    violating triple) when the input is not a semigroup.
    """
    n = len(names)
    if n == 0:
        raise NonSquareTable("a semigroup needs a non-empty carrier")
    if len(set(names)) != n:
        raise ValueError("element labels must be distinct")
    if len(table) != n or any(len(row) != n for row in table):
        raise NonSquareTable(f"expected a {n}x{n} table")
    tab = tuple(tuple(int(v) for v in row) for row in table)
    for row in tab:
        for v in row:
            if not 0 <= v < n:
                raise IndexOutOfRange(f"table entry {v} outside [0, {n})")
    bad = find_nonassociative_triple(tab)
    if bad is not None:
        raise NotAssociative(bad)
    return Semigroup(tuple(names), tab)


def find_nonassociative_triple(
    table: Sequence[Sequence[int]],
) -> tuple[int, int, int] | None:
    """First triple (i, j, k) with (i*j)*k != i*(j*k), or None."""
    n = len(table)
    rng = range(n)
    for i in rng:
        ti = table[i]
        for j in rng:
            tij = table[ti[j]]
            tj = table[j]
            for k in rng:
                if tij[k] != ti[tj[k]]:
                    return (i, j, k)
    return None


def element_power(s: Semigroup, x: int, n: int) -> int:
    """x**n under the semigroup product (n >= 1)."""
    if n < 1:
        raise ValueError("powers start at 1 in a semigroup")
    acc = x
    for _ in range(n - 1):
        acc = s.table[acc][x]
    return acc


def sbs(s: Semigroup, b: int) -> frozenset[int]:
    """The two-sided orbit {u*b*v : u, v in S}, with no adjoined identity."""
    tab = s.table
    rng = s.elements()
    return frozenset(tab[tab[u][b]][v] for u in rng for v in rng)


def classify(s: Semigroup) -> ClassFlags:
    """Decide the six structural class flags by brute-force witness search.

    The archimedean search only needs powers a^1..a^n: the power sequence of
    an order-n element attains at most n distinct values before cycling.
    """
    tab = s.table
    rng = s.elements()

    commutative = all(tab[i][j] == tab[j][i] for i in rng for j in rng)
    regular = all(any(tab[tab[a][x]][a] == a for x in rng) for a in rng)
    left_regular = all(any(tab[x][tab[a][a]] == a for x in rng) for a in rng)
    right_regular = all(any(tab[tab[a][a]][x] == a for x in rng) for a in rng)
    intra_regular = all(
        any(tab[tab[x][tab[a][a]]][y] == a for x in rng for y in rng) for a in rng
    )

    orbits = [sbs(s, b) for b in rng]
    archimedean = True
    for a in rng:
        powers = set()
        p = a
        for _ in rng:
            powers.add(p)
            p = tab[p][a]
        if not all(powers & orbit for orbit in orbits):
            archimedean = False
            break

    return ClassFlags(
        commutative=commutative,
        regular=regular,
        left_regular=left_regular,
        right_regular=right_regular,
        intra_regular=intra_regular,
        archimedean=archimedean,
    )


def _products(s: Semigroup, left: Iterable[int], right: Iterable[int]) -> set[int]:
    return {s.table[i][j] for i in left for j in right}


def crisp_condition(s: Semigroup, members: frozenset[int], kind: CrispKind) -> bool:
    """The raw set-inclusion condition of ``kind``, with no emptiness/ideal guards.

    For the prime kinds this is only the implication clause; callers wanting
    full definitional semantics should use crisp_predicate or crisp_holds.
    """
    tab = s.table
    rng = s.elements()
    carrier = frozenset(rng)
    if kind is CrispKind.SUBSEMIGROUP:
        return _products(s, members, members) <= members
    if kind is CrispKind.INTERIOR_IDEAL:
        return (
            _products(s, members, members) <= members
            and _products(s, _products(s, carrier, members), carrier) <= members
        )
    if kind is CrispKind.LEFT_IDEAL:
        return _products(s, carrier, members) <= members
    if kind is CrispKind.RIGHT_IDEAL:
        return _products(s, members, carrier) <= members
    if kind is CrispKind.IDEAL:
        return (
            _products(s, carrier, members) <= members
            and _products(s, members, carrier) <= members
        )
    if kind is CrispKind.COMPLETELY_PRIME:
        return all(
            tab[x][y] not in members or x in members or y in members
            for x in rng
            for y in rng
        )
    if kind is CrispKind.COMPLETELY_SEMIPRIME:
        return all(tab[x][x] not in members or x in members for x in rng)
    raise ValueError(f"unknown kind {kind!r}")


_PRIME_KINDS = (CrispKind.COMPLETELY_PRIME, CrispKind.COMPLETELY_SEMIPRIME)


def crisp_predicate(s: Semigroup, subset: CrispSubset, kind: CrispKind) -> bool:
    """Decide a crisp predicate, enforcing the definitional preconditions.

    Every kind requires a non-empty subset; the prime and semiprime kinds are
    only defined on ideals and raise NotAnIdeal otherwise.
    """
    if subset.owner != s:
        raise ValueError("subset belongs to a different semigroup")
    if not subset.members:
        raise EmptySubset(f"{kind.value} is only defined on non-empty subsets")
    if kind in _PRIME_KINDS:
        if not crisp_condition(s, subset.members, CrispKind.IDEAL):
            raise NotAnIdeal(f"{kind.value} is only defined on ideals")
    return crisp_condition(s, subset.members, kind)


def crisp_holds(s: Semigroup, members: frozenset[int], kind: CrispKind) -> bool:
    """Non-raising variant: empty subsets and non-ideal prime queries are False."""
    if not members:
        return False
    if kind in _PRIME_KINDS and not crisp_condition(s, members, CrispKind.IDEAL):
        return False
    return crisp_condition(s, members, kind)


def all_subsets(s: Semigroup, *, nonempty: bool = True) -> Iterator[frozenset[int]]:
    """Subsets of the carrier in increasing bitmask order."""
    n = s.order
    start = 1 if nonempty else 0
    for mask in range(start, 1 << n):
        yield frozenset(i for i in range(n) if mask >> i & 1)


def all_crisp_of_kind(s: Semigroup, kind: CrispKind) -> list[frozenset[int]]:
    """All non-empty subsets satisfying ``kind``, in bitmask order."""
    return [a for a in all_subsets(s) if crisp_holds(s, a, kind)]
