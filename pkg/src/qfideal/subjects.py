"""Deterministic generation of fuzzy test subjects over a semigroup.

Subjects are drawn from a finite grade pool.  When the full assignment space
is no larger than the sampling budget the generator switches to exhaustive
enumeration (mixed-radix decoding of the index); otherwise draws are seeded
per (canonical table, q size, seed, index), so corpora and samples reproduce
bit-for-bit across runs and machines.

Uniform draws rarely satisfy hypotheses like "completely prime fuzzy ideal",
so the pool is fronted with structured subjects: constants, characteristic
functions of crisp ideals, and two-step staircases over nested ideal pairs.

This module also houses the per-semigroup evaluation context: subjects are
rank-compressed (grades replaced by their order index among the distinct
grades present) so the bulk predicate loops compare machine ints while
staying exactly faithful to the rational grades they came from.
"""

from __future__ import annotations

import hashlib
import random
from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .enumeration import canonicalize
from .qfuzzy import (
    Grade,
    QFuzzyKind,
    QFuzzySubset,
    constant_qfuzzy,
    characteristic,
    rows_holds,
)
from .semigroups import (
    ClassFlags,
    CrispKind,
    CrispSubset,
    Semigroup,
    all_crisp_of_kind,
    classify,
)
from .transforms import magnified_translation

DEFAULT_GRADE_POOL = (
    Fraction(0),
    Fraction(1, 4),
    Fraction(1, 2),
    Fraction(3, 4),
    Fraction(1),
)


@dataclass(frozen=True)
class SampleConfig:
    """Knobs for subject generation; the defaults match the verification CLI."""

    seed: int = 42
    samples_per_semigroup: int = 200
    grade_pool: tuple[Grade, ...] = DEFAULT_GRADE_POOL
    q_sizes: tuple[int, ...] = (1, 2)

    def __post_init__(self):
        if self.samples_per_semigroup < 1:
            raise ValueError("samples_per_semigroup must be at least 1")
        if not self.grade_pool:
            raise ValueError("grade_pool must be non-empty")
        if any(not 0 <= g <= 1 for g in self.grade_pool):
            raise ValueError("grade_pool entries must lie in [0, 1]")
        if not self.q_sizes or any(q < 1 for q in self.q_sizes):
            raise ValueError("q_sizes must be positive")

    def sorted_pool(self) -> tuple[Grade, ...]:
        return tuple(sorted(set(self.grade_pool)))


def default_qset(q_size: int) -> tuple[str, ...]:
    return tuple(f"q{i + 1}" for i in range(q_size))


def exhaustive_subject_count(s: Semigroup, q_size: int, config: SampleConfig) -> int | None:
    """Size of the full assignment space when it fits the budget, else None."""
    pool = config.sorted_pool()
    total = len(pool) ** (s.order * q_size)
    return total if total <= config.samples_per_semigroup else None


def _child_seed(seed: int, canon, q_size: int, index: int) -> int:
    material = f"{seed}|{canon}|{q_size}|{index}".encode()
    return int.from_bytes(hashlib.sha256(material).digest()[:8], "big")


def sample_qfuzzy(s: Semigroup, q_size: int, config: SampleConfig, index: int) -> QFuzzySubset:
    """The index-th subject: exhaustive decode when the space is small,
    a seeded pool draw otherwise.  Deterministic in (canonical table,
    q_size, seed, index)."""
    pool = config.sorted_pool()
    qset = default_qset(q_size)
    cells = s.order * q_size
    total = len(pool) ** cells
    if total <= config.samples_per_semigroup:
        code = index % total
        flat = []
        for _ in range(cells):
            code, digit = divmod(code, len(pool))
            flat.append(pool[digit])
    else:
        rng = random.Random(_child_seed(config.seed, canonicalize(s), q_size, index))
        flat = [pool[rng.randrange(len(pool))] for _ in range(cells)]
    rows = tuple(
        tuple(flat[x * q_size + k] for k in range(q_size)) for x in range(s.order)
    )
    return QFuzzySubset(s, qset, rows)


def structured_subjects(s: Semigroup, q_size: int, config: SampleConfig) -> list[QFuzzySubset]:
    """Constants, ideal indicators, and nested-ideal staircases."""
    pool = config.sorted_pool()
    qset = default_qset(q_size)
    out = [constant_qfuzzy(s, qset, g) for g in pool]
    ideals = all_crisp_of_kind(s, CrispKind.IDEAL)
    for members in ideals:
        out.append(characteristic(s, CrispSubset(s, members), qset))
    hi, mid, lo = pool[-1], pool[len(pool) // 2], pool[0]
    for inner in ideals:
        for outer in ideals:
            if inner < outer:
                rows = tuple(
                    (hi if x in inner else mid if x in outer else lo,) * q_size
                    for x in range(s.order)
                )
                out.append(QFuzzySubset(s, qset, rows))
    return out


def subject_pool(s: Semigroup, q_size: int, config: SampleConfig) -> list[QFuzzySubset]:
    """The deduplicated subject list: structured first, then the exhaustive
    or sampled pool draws, in a stable order."""
    count = exhaustive_subject_count(s, q_size, config)
    draws = count if count is not None else config.samples_per_semigroup
    subjects = structured_subjects(s, q_size, config)
    subjects.extend(sample_qfuzzy(s, q_size, config, i) for i in range(draws))
    seen: set[tuple] = set()
    unique = []
    for mu in subjects:
        if mu.grades not in seen:
            seen.add(mu.grades)
            unique.append(mu)
    return unique


# ---------------------------------------------------------------------------
# Rank compression and the per-semigroup evaluation context.


@dataclass(frozen=True)
class Ranked:
    """A grade matrix with grades replaced by ranks into ``vals``.

    ``vals`` is the sorted tuple of distinct grades present; comparisons,
    max/min, and level thresholds on ranks agree exactly with the rationals.
    """

    vals: tuple[Grade, ...]
    rows: tuple[tuple[int, ...], ...]

    def nonempty(self) -> bool:
        return self.vals[max(max(row) for row in self.rows)] > 0

    def extend(self, table, x: int) -> "Ranked":
        return Ranked(self.vals, tuple(self.rows[table[x][y]] for y in range(len(self.rows))))

    def level_members(self, t: Grade) -> frozenset[int]:
        threshold = bisect_left(self.vals, t)
        return frozenset(
            y for y, row in enumerate(self.rows) if min(row) >= threshold
        )

    def holds(self, table, kind: QFuzzyKind) -> bool:
        return rows_holds(table, self.rows, kind, nonempty=self.nonempty())


def rank_subject(mu: QFuzzySubset) -> Ranked:
    vals = tuple(sorted({g for row in mu.grades for g in row}))
    index = {g: i for i, g in enumerate(vals)}
    rows = tuple(tuple(index[g] for g in row) for row in mu.grades)
    return Ranked(vals, rows)


def instance_memo(mu: QFuzzySubset) -> dict:
    # Derived data is attached to the subject itself: the same objects flow
    # through millions of instances, and hashing their grade matrices on
    # every cache probe costs more than the predicates being cached.
    memo = mu.__dict__.get("_memo")
    if memo is None:
        memo = {}
        object.__setattr__(mu, "_memo", memo)
    return memo


def ranked_of(mu: QFuzzySubset) -> Ranked:
    memo = instance_memo(mu)
    got = memo.get("ranked")
    if got is None:
        got = rank_subject(mu)
        memo["ranked"] = got
    return got


def holds_of(mu: QFuzzySubset, kind: QFuzzyKind) -> bool:
    memo = instance_memo(mu)
    got = memo.get(kind)
    if got is None:
        got = ranked_of(mu).holds(mu.owner.table, kind)
        memo[kind] = got
    return got


def ext_of(mu: QFuzzySubset, x: int) -> Ranked:
    memo = instance_memo(mu)
    got = memo.get(x)
    if got is None:
        got = ranked_of(mu).extend(mu.owner.table, x)
        memo[x] = got
    return got


def affine_of(mu: QFuzzySubset, beta: Grade, alpha: Grade) -> QFuzzySubset:
    memo = instance_memo(mu)
    key = ("affine", beta.numerator, beta.denominator, alpha.numerator, alpha.denominator)
    got = memo.get(key)
    if got is None:
        got = magnified_translation(mu, beta, alpha)
        memo[key] = got
    return got


class Ctx:
    """Caches shared by every claim checker while sweeping one semigroup."""

    def __init__(self, s: Semigroup, config: SampleConfig):
        self.s = s
        self.config = config
        self.flags: ClassFlags = classify(s)
        self.canon = canonicalize(s)
        self._subjects: dict[int, list[QFuzzySubset]] = {}
        self._crisp_of_kind: dict[CrispKind, list[frozenset[int]]] = {}
        #: scratch cache for checker-private memoization
        self.memo: dict = {}

    def subjects(self, q_size: int) -> list[QFuzzySubset]:
        if q_size not in self._subjects:
            self._subjects[q_size] = subject_pool(self.s, q_size, self.config)
        return self._subjects[q_size]

    def all_subjects(self) -> Iterator[QFuzzySubset]:
        for q_size in self.config.q_sizes:
            yield from self.subjects(q_size)

    def ranked(self, mu: QFuzzySubset) -> Ranked:
        return ranked_of(mu)

    def holds(self, mu: QFuzzySubset, kind: QFuzzyKind) -> bool:
        return holds_of(mu, kind)

    def affine(self, mu: QFuzzySubset, beta: Grade, alpha: Grade) -> QFuzzySubset:
        return affine_of(mu, beta, alpha)

    def ext(self, mu: QFuzzySubset, x: int) -> Ranked:
        return ext_of(mu, x)

    def crisp_of_kind(self, kind: CrispKind) -> list[frozenset[int]]:
        if kind not in self._crisp_of_kind:
            self._crisp_of_kind[kind] = all_crisp_of_kind(self.s, kind)
        return self._crisp_of_kind[kind]


def transform_grid(mu: QFuzzySubset) -> list[tuple[Grade, Grade]]:
    """The deterministic (beta, alpha) sweep: endpoint and midpoint betas
    crossed with the admissible alpha endpoints and midpoint for mu."""
    top = Fraction(1) - max(g for row in mu.grades for g in row)
    alphas = []
    for a in (Fraction(0), top / 2, top):
        if a not in alphas:
            alphas.append(a)
    betas = (Fraction(0), Fraction(1, 2), Fraction(1))
    return [(b, a) for b in betas for a in alphas]


def grid_of(mu: QFuzzySubset) -> tuple[tuple[Grade, Grade, str, str], ...]:
    """transform_grid plus preformatted parameter strings, memoized."""
    memo = instance_memo(mu)
    got = memo.get("grid")
    if got is None:
        def fmt(v):
            return f"{v.numerator}/{v.denominator}" if v.denominator != 1 else str(v.numerator)

        got = tuple((b, a, fmt(b), fmt(a)) for b, a in transform_grid(mu))
        memo["grid"] = got
    return got
