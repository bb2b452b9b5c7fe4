"""Q-fuzzy subsets with exact rational grades, and the fuzzy ideal predicates.

A Q-fuzzy subset assigns every (element, q) pair a grade in [0, 1].  Grades
are fractions.Fraction throughout, never floats: every predicate below is an
exact >=/=/max/min statement, and float ties would manufacture spurious
counterexamples.

The inequality conditions are implemented once, over any grade matrix whose
entries support total ordering (`rows_*` functions).  The public predicates
feed them Fraction matrices; bulk verification feeds them order-isomorphic
integer rank matrices for speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .semigroups import CrispSubset, NotAnIdeal, Semigroup

Grade = Fraction
GRADE_ZERO = Fraction(0)
GRADE_ONE = Fraction(1)


class GradeOutOfRange(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


class EmptyFuzzySubset(ValueError):
    """The all-zero map is the empty Q-fuzzy subset; ideal predicates reject it."""


class MixedOwners(ValueError):
    pass


def parse_grade(text: str | int | Fraction) -> Grade:
    """Parse "p/q" or a finite decimal string into an exact grade in [0, 1]."""
    if isinstance(text, bool):
        raise GradeOutOfRange(f"not a grade: {text!r}")
    if isinstance(text, float):
        raise GradeOutOfRange(
            f"refusing float grade {text!r}; pass a string or Fraction for exactness"
        )
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise GradeOutOfRange(f"not a grade: {text!r}") from exc
    return check_grade(value)


def check_grade(value: Fraction) -> Grade:
    if not GRADE_ZERO <= value <= GRADE_ONE:
        raise GradeOutOfRange(f"grade {value} outside [0, 1]")
    return value


def format_grade(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)


class QFuzzyKind(str, Enum):
    SUBSEMIGROUP = "q_subsemigroup"
    INTERIOR_IDEAL = "q_interior_ideal"
    LEFT_IDEAL = "q_left_ideal"
    RIGHT_IDEAL = "q_right_ideal"
    IDEAL = "q_ideal"
    COMPLETELY_PRIME = "q_completely_prime"
    COMPLETELY_SEMIPRIME = "q_completely_semiprime"


@dataclass(frozen=True)
class QFuzzySubset:
    """Grade matrix over S x Q bound to one semigroup.

    ``grades[x][k]`` is the grade of (element x, qset[k]).  Construct via
    :func:`build_qfuzzy`; direct construction skips validation.
    """

    owner: Semigroup
    qset: tuple[str, ...]
    grades: tuple[tuple[Grade, ...], ...]

    def grade(self, x: int, k: int = 0) -> Grade:
        return self.grades[x][k]

    def is_empty(self) -> bool:
        return all(g == 0 for row in self.grades for g in row)

    def with_grades(self, grades: Iterable[Iterable[Grade]]) -> "QFuzzySubset":
        return QFuzzySubset(self.owner, self.qset, tuple(tuple(row) for row in grades))


def build_qfuzzy(
    owner: Semigroup,
    qset: Sequence[str],
    grades: Sequence[Sequence[Grade | str | int]],
) -> QFuzzySubset:
    """Validate dimensions and grade range, returning the fuzzy subset."""
    if len(qset) == 0:
        raise ValueError("Q must be non-empty")
    if len(set(qset)) != len(qset):
        raise ValueError("Q labels must be distinct")
    if len(grades) != owner.order or any(len(row) != len(qset) for row in grades):
        raise DimensionMismatch(
            f"expected a {owner.order}x{len(qset)} grade matrix"
        )
    matrix = tuple(
        tuple(g if isinstance(g, Fraction) else parse_grade(g) for g in row)
        for row in grades
    )
    for row in matrix:
        for g in row:
            check_grade(g)
    return QFuzzySubset(owner, tuple(qset), matrix)


def constant_qfuzzy(owner: Semigroup, qset: Sequence[str], value: Grade) -> QFuzzySubset:
    row = (check_grade(value),) * len(qset)
    return QFuzzySubset(owner, tuple(qset), (row,) * owner.order)


# ---------------------------------------------------------------------------
# Kind conditions over a bare grade matrix (any totally ordered grade type).

Rows = Sequence[Sequence]


def rows_subsemigroup(table, rows: Rows) -> bool:
    nq = range(len(rows[0]))
    for x, rx in enumerate(rows):
        for y, ry in enumerate(rows):
            rxy = rows[table[x][y]]
            if any(rxy[k] < min(rx[k], ry[k]) for k in nq):
                return False
    return True


def rows_interior_ideal(table, rows: Rows) -> bool:
    if not rows_subsemigroup(table, rows):
        return False
    n = len(rows)
    nq = range(len(rows[0]))
    for a, ra in enumerate(rows):
        for x in range(n):
            xa = table[x][a]
            for y in range(n):
                rxay = rows[table[xa][y]]
                if any(rxay[k] < ra[k] for k in nq):
                    return False
    return True


def rows_left_ideal(table, rows: Rows) -> bool:
    nq = range(len(rows[0]))
    for x in range(len(rows)):
        tx = table[x]
        for y, ry in enumerate(rows):
            rxy = rows[tx[y]]
            if any(rxy[k] < ry[k] for k in nq):
                return False
    return True


def rows_right_ideal(table, rows: Rows) -> bool:
    nq = range(len(rows[0]))
    for x, rx in enumerate(rows):
        tx = table[x]
        for y in range(len(rows)):
            rxy = rows[tx[y]]
            if any(rxy[k] < rx[k] for k in nq):
                return False
    return True


def rows_ideal(table, rows: Rows) -> bool:
    return rows_left_ideal(table, rows) and rows_right_ideal(table, rows)


def rows_completely_prime(table, rows: Rows) -> bool:
    # Equality with max; combined with ideal-ness this is Def-level primeness.
    nq = range(len(rows[0]))
    for x, rx in enumerate(rows):
        tx = table[x]
        for y, ry in enumerate(rows):
            rxy = rows[tx[y]]
            if any(rxy[k] != max(rx[k], ry[k]) for k in nq):
                return False
    return True


def rows_semiprime(table, rows: Rows) -> bool:
    nq = range(len(rows[0]))
    for x, rx in enumerate(rows):
        rxx = rows[table[x][x]]
        if any(rx[k] < rxx[k] for k in nq):
            return False
    return True


_ROWS_CONDITION = {
    QFuzzyKind.SUBSEMIGROUP: rows_subsemigroup,
    QFuzzyKind.INTERIOR_IDEAL: rows_interior_ideal,
    QFuzzyKind.LEFT_IDEAL: rows_left_ideal,
    QFuzzyKind.RIGHT_IDEAL: rows_right_ideal,
    QFuzzyKind.IDEAL: rows_ideal,
    QFuzzyKind.COMPLETELY_PRIME: rows_completely_prime,
    QFuzzyKind.COMPLETELY_SEMIPRIME: rows_semiprime,
}

_PRIME_QKINDS = (QFuzzyKind.COMPLETELY_PRIME, QFuzzyKind.COMPLETELY_SEMIPRIME)


def rows_kind_condition(table, rows: Rows, kind: QFuzzyKind) -> bool:
    """The bare inequality condition of ``kind`` (no non-emptiness, no ideal chain)."""
    return _ROWS_CONDITION[kind](table, rows)


def rows_holds(table, rows: Rows, kind: QFuzzyKind, *, nonempty: bool) -> bool:
    """Full definitional semantics, non-raising."""
    if not nonempty:
        return False
    if kind in _PRIME_QKINDS and not rows_ideal(table, rows):
        return False
    return _ROWS_CONDITION[kind](table, rows)


# ---------------------------------------------------------------------------
# Public predicates and constructions over QFuzzySubset.


def q_predicate(mu: QFuzzySubset, kind: QFuzzyKind) -> bool:
    """Decide a Q-fuzzy predicate, enforcing the definitional preconditions.

    All kinds are defined on non-empty Q-fuzzy subsets (the all-zero map
    raises EmptyFuzzySubset); prime and semiprime kinds additionally require
    a Q-fuzzy ideal and raise NotAnIdeal otherwise.
    """
    if mu.is_empty():
        raise EmptyFuzzySubset(f"{kind.value} is only defined on non-empty fuzzy subsets")
    if kind in _PRIME_QKINDS and not rows_ideal(mu.owner.table, mu.grades):
        raise NotAnIdeal(f"{kind.value} is only defined on Q-fuzzy ideals")
    return rows_kind_condition(mu.owner.table, mu.grades, kind)


def q_holds(mu: QFuzzySubset, kind: QFuzzyKind) -> bool:
    """Non-raising variant: the empty subset and non-ideal prime queries are False."""
    return rows_holds(mu.owner.table, mu.grades, kind, nonempty=not mu.is_empty())


def level_set(mu: QFuzzySubset, t: Grade) -> CrispSubset:
    """Elements whose grade is at least t for every q."""
    members = frozenset(
        x for x, row in enumerate(mu.grades) if all(g >= t for g in row)
    )
    return CrispSubset(mu.owner, members)


def image(mu: QFuzzySubset) -> set[Grade]:
    """Distinct grades attained over S x Q."""
    return {g for row in mu.grades for g in row}


def support(mu: QFuzzySubset) -> CrispSubset:
    """Elements whose grade is positive for every q."""
    members = frozenset(
        x for x, row in enumerate(mu.grades) if all(g > 0 for g in row)
    )
    return CrispSubset(mu.owner, members)


def characteristic(owner: Semigroup, subset: CrispSubset, qset: Sequence[str]) -> QFuzzySubset:
    """Indicator fuzzy subset of subset x Q: grade 1 on it, 0 elsewhere."""
    if subset.owner != owner:
        raise MixedOwners("subset belongs to a different semigroup")
    ones = (GRADE_ONE,) * len(qset)
    zeros = (GRADE_ZERO,) * len(qset)
    rows = tuple(ones if x in subset.members else zeros for x in owner.elements())
    return QFuzzySubset(owner, tuple(qset), rows)


def _check_compatible(first: QFuzzySubset, other: QFuzzySubset) -> None:
    if first.owner != other.owner or first.qset != other.qset:
        raise MixedOwners("fuzzy subsets live over different semigroups or Q sets")


def intersect(family: Sequence[QFuzzySubset]) -> QFuzzySubset:
    """Pointwise minimum of a non-empty family over one semigroup and Q."""
    if not family:
        raise ValueError("intersect needs a non-empty family")
    head = family[0]
    for other in family[1:]:
        _check_compatible(head, other)
    rows = tuple(
        tuple(min(mu.grades[x][k] for mu in family) for k in range(len(head.qset)))
        for x in head.owner.elements()
    )
    return head.with_grades(rows)


def includes(mu: QFuzzySubset, nu: QFuzzySubset) -> bool:
    """True iff mu(x,q) <= nu(x,q) everywhere (mu is contained in nu)."""
    _check_compatible(mu, nu)
    return all(
        mu.grades[x][k] <= nu.grades[x][k]
        for x in mu.owner.elements()
        for k in range(len(mu.qset))
    )


def strictly_includes(mu: QFuzzySubset, nu: QFuzzySubset) -> bool:
    """Containment with at least one strict inequality."""
    return includes(mu, nu) and mu.grades != nu.grades


def is_constant(mu: QFuzzySubset) -> bool:
    """True when the grade profile does not depend on the element.

    This is the constancy every relevant claim actually establishes: for each
    q the grade is the same at every element (profiles may differ across q).
    """
    first = mu.grades[0]
    return all(row == first for row in mu.grades)
