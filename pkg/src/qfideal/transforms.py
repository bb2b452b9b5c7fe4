"""Operators on Q-fuzzy subsets: extensions and the affine grade maps.

The extension of mu by x re-reads the grade matrix through left translation
by x: the result grades y at mu(x*y, q).  The affine maps send every grade g
to beta*g + alpha, with beta in [0, 1] and alpha bounded by 1 - sup(mu) so
results stay inside [0, 1].
"""

from __future__ import annotations

from fractions import Fraction

from .qfuzzy import GRADE_ONE, GRADE_ZERO, Grade, QFuzzySubset, check_grade
from .semigroups import CrispSubset, Semigroup


class ElementOutOfRange(ValueError):
    pass


class AlphaOutOfRange(ValueError):
    pass


class BetaOutOfRange(ValueError):
    pass


def _check_element(owner: Semigroup, x: int) -> None:
    if not 0 <= x < owner.order:
        raise ElementOutOfRange(f"element index {x} outside [0, {owner.order})")


def extension(mu: QFuzzySubset, x: int) -> QFuzzySubset:
    """The fuzzy subset y |-> mu(x*y, q), over the same semigroup and Q."""
    _check_element(mu.owner, x)
    row_of = mu.owner.table[x]
    return mu.with_grades(mu.grades[row_of[y]] for y in mu.owner.elements())


def extension_by_word(mu: QFuzzySubset, word: list[int]) -> QFuzzySubset:
    """Extension by a product of elements, via the composition identity.

    Extending by y then by x equals extending by y*x, so a word reduces to
    the single element it multiplies out to.
    """
    if not word:
        raise ValueError("word must contain at least one element")
    acc = word[0]
    for x in word[1:]:
        acc = mu.owner.table[acc][x]
    return extension(mu, acc)


def crisp_extension(s: Semigroup, subset: CrispSubset, x: int) -> CrispSubset:
    """{y : x*y in A}.  The q component of the source definition never
    constrains q, so the result lives in the carrier alone."""
    if subset.owner != s:
        raise ValueError("subset belongs to a different semigroup")
    _check_element(s, x)
    row_of = s.table[x]
    return CrispSubset(s, frozenset(y for y in s.elements() if row_of[y] in subset.members))


def sup_grade(mu: QFuzzySubset) -> Grade:
    """Maximum attained grade over S x Q (the finite sup)."""
    return max(g for row in mu.grades for g in row)


def _check_alpha(mu: QFuzzySubset, alpha: Grade) -> None:
    limit = GRADE_ONE - sup_grade(mu)
    if not GRADE_ZERO <= alpha <= limit:
        raise AlphaOutOfRange(
            f"alpha must lie in [0, {limit}] = [0, 1 - sup(mu)]; got {alpha}"
        )


def _check_beta(beta: Grade) -> None:
    if not GRADE_ZERO <= beta <= GRADE_ONE:
        raise BetaOutOfRange(f"beta must lie in [0, 1]; got {beta}")


def _affine(mu: QFuzzySubset, beta: Fraction, alpha: Fraction) -> QFuzzySubset:
    rows = tuple(
        tuple(check_grade(beta * g + alpha) for g in row) for row in mu.grades
    )
    return mu.with_grades(rows)


def translation(mu: QFuzzySubset, alpha: Grade) -> QFuzzySubset:
    """Shift every grade up by alpha (alpha <= 1 - sup(mu))."""
    _check_alpha(mu, alpha)
    return _affine(mu, GRADE_ONE, alpha)


def multiplication(mu: QFuzzySubset, beta: Grade) -> QFuzzySubset:
    """Scale every grade by beta in [0, 1]."""
    _check_beta(beta)
    return _affine(mu, beta, GRADE_ZERO)


def magnified_translation(mu: QFuzzySubset, beta: Grade, alpha: Grade) -> QFuzzySubset:
    """Scale by beta then shift by alpha; beta=1 or alpha=0 recover the others."""
    _check_beta(beta)
    _check_alpha(mu, alpha)
    return _affine(mu, beta, alpha)


def valid_alphas(mu: QFuzzySubset) -> tuple[Grade, Grade]:
    """The endpoints (0, 1 - sup(mu)) of the admissible alpha interval."""
    return GRADE_ZERO, GRADE_ONE - sup_grade(mu)
