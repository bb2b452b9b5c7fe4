"""Exhaustive generation of small semigroups and isomorphism-class corpora.

The enumerator backtracks over table cells with incremental associativity
pruning; isomorphism dedup goes through canonical forms (lexicographically
least table over all carrier permutations).  Anti-isomorphism is deliberately
not quotiented: left- and right-sided claims need mirror tables to both
appear in a corpus.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Iterator, Sequence

from .semigroups import ClassFlags, Semigroup, classify

#: Orders above this are refused unless the caller raises the ceiling
#: explicitly (or via QFIDEAL_MAX_ORDER in the CLI).
DEFAULT_ORDER_CEILING = 4

#: Default labels for generated carriers.
ALPHABET = "abcdefghij"


class OrderTooLarge(ValueError):
    pass


Table = tuple[tuple[int, ...], ...]


def _check_ceiling(n: int, ceiling: int | None) -> None:
    limit = DEFAULT_ORDER_CEILING if ceiling is None else ceiling
    if n < 1:
        raise ValueError("order must be positive")
    if n > limit:
        raise OrderTooLarge(
            f"order {n} exceeds the enumeration ceiling {limit}; "
            "raise the ceiling explicitly to opt in"
        )


def row_major_cells(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(n)]


def column_major_cells(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(n) for i in range(n)]


def enumerate_tables(
    n: int,
    *,
    ceiling: int | None = None,
    cell_order: Callable[[int], list[tuple[int, int]]] = row_major_cells,
) -> Iterator[Table]:
    """Yield every associative n x n table, in the chosen fill order.

    Cells are assigned one at a time; after each assignment every triple whose
    four lookups are now defined is re-checked, so dead branches are cut as
    early as possible.
    """
    _check_ceiling(n, ceiling)
    cells = cell_order(n)
    rng = range(n)
    table = [[-1] * n for _ in range(n)]

    def consistent(i: int, j: int) -> bool:
        # Only triples that involve the fresh cell (i, j) can newly fail.
        for a in rng:
            for b in rng:
                ab = table[a][b]
                if ab < 0:
                    continue
                for c in rng:
                    bc = table[b][c]
                    if bc < 0:
                        continue
                    if (a, b) != (i, j) and (b, c) != (i, j) \
                            and (ab, c) != (i, j) and (a, bc) != (i, j):
                        continue
                    left = table[ab][c]
                    right = table[a][bc]
                    if left >= 0 and right >= 0 and left != right:
                        return False
        return True

    def fill(pos: int) -> Iterator[Table]:
        if pos == len(cells):
            yield tuple(tuple(row) for row in table)
            return
        i, j = cells[pos]
        for v in rng:
            table[i][j] = v
            if consistent(i, j):
                yield from fill(pos + 1)
        table[i][j] = -1

    yield from fill(0)


def default_names(n: int) -> tuple[str, ...]:
    return tuple(ALPHABET[:n])


def enumerate_labeled(n: int, *, ceiling: int | None = None) -> Iterator[Semigroup]:
    """All labelled semigroups on n elements, with default labels."""
    names = default_names(n)
    for table in enumerate_tables(n, ceiling=ceiling):
        yield Semigroup(names, table)


def apply_permutation(table: Table, perm: Sequence[int]) -> Table:
    """Relabel a table: element i becomes perm[i]."""
    n = len(table)
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(
        tuple(perm[table[inv[i]][inv[j]]] for j in range(n)) for i in range(n)
    )


def canonicalize(s: Semigroup) -> Table:
    """Lexicographically least table over all carrier permutations.

    Two semigroups are isomorphic iff their canonical tables are equal.
    The result is cached on the (immutable) semigroup.
    """
    got = s.__dict__.get("_canonical")
    if got is None:
        n = s.order
        got = min(apply_permutation(s.table, perm) for perm in permutations(range(n)))
        object.__setattr__(s, "_canonical", got)
    return got


def automorphism_count(s: Semigroup) -> int:
    """Number of permutations fixing the table (used for counting checks)."""
    n = s.order
    return sum(1 for perm in permutations(range(n)) if apply_permutation(s.table, perm) == s.table)


@dataclass(frozen=True)
class Corpus:
    """An ordered, validated universe of semigroups for claim verification."""

    max_order: int
    dedup: str  # "labeled" or "up_to_iso"
    filter: tuple[str, ...] | None
    items: tuple[Semigroup, ...]

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[Semigroup]:
        return iter(self.items)


def build_corpus(
    max_order: int,
    dedup: str = "up_to_iso",
    flag_filter: Sequence[str] | None = None,
    *,
    min_order: int = 1,
    ceiling: int | None = None,
) -> Corpus:
    """Corpus of all semigroups with min_order <= order <= max_order.

    Ordering is deterministic: by order, then lexicographically by (canonical)
    table, so repeated builds are byte-identical.
    """
    if dedup not in ("labeled", "up_to_iso"):
        raise ValueError("dedup must be 'labeled' or 'up_to_iso'")
    if flag_filter:
        unknown = set(flag_filter) - set(ClassFlags.FLAG_NAMES)
        if unknown:
            raise ValueError(f"unknown class flags: {sorted(unknown)}")
    items: list[Semigroup] = []
    for n in range(min_order, max_order + 1):
        tables: list[Table]
        if dedup == "up_to_iso":
            tables = sorted({canonicalize(s) for s in enumerate_labeled(n, ceiling=ceiling)})
        else:
            tables = sorted(s.table for s in enumerate_labeled(n, ceiling=ceiling))
        names = default_names(n)
        for table in tables:
            s = Semigroup(names, table)
            if flag_filter and not classify(s).satisfies(flag_filter):
                continue
            items.append(s)
    return Corpus(
        max_order=max_order,
        dedup=dedup,
        filter=tuple(flag_filter) if flag_filter else None,
        items=tuple(items),
    )
