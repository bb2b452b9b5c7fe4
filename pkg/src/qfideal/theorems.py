"""Executable catalog of verifiable claims about fuzzy ideals and extensions.

Each claim is split into an instance generator (the deterministic sweep over
subjects and parameters for one semigroup) and an evaluator that decides one
instance from scratch.  Evaluators are self-contained in (semigroup, subjects,
parameters), so recorded counterexamples replay without the original corpus.
Generators may also emit plain integers: batches of instances whose hypotheses
fail, counted without individual evaluation (the hypothesis predicate is
shared between generator and evaluator, so the accounting cannot drift).

Two hypothesis readings are tracked per instance:

* ``hyp``    - the claim's hypotheses as literally stated;
* ``strict`` - a possibly narrower reading under which the claim is provable
               (equal to ``hyp`` for most claims).

The harness charges a violation only when the strict reading fails; instances
that fail only the literal reading are reported as anomalies, with the gap
explained.  The gaps this machinery absorbs are quantifier artifacts (level
sets quantify over all of Q at once, which misbehaves for |Q| >= 2), the
non-emptiness convention (an all-zero subject satisfies every inequality but
is not a fuzzy ideal by definition), and hypothesis statements that omit a
needed side condition (the interior-ideal rescaling claim).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator, Sequence, Union

from .qfuzzy import (
    QFuzzyKind,
    QFuzzySubset,
    characteristic,
    format_grade,
    intersect,
    parse_grade,
    rows_kind_condition,
)
from .semigroups import (
    CrispKind,
    CrispSubset,
    Semigroup,
    crisp_holds,
    element_power,
)
from .subjects import Ctx, grid_of, instance_memo, ranked_of, transform_grid
from .transforms import (
    crisp_extension,
    extension,
    magnified_translation,
    multiplication,
    translation,
)


class TheoremId(str, Enum):
    T3_1 = "T3_1"
    T3_2 = "T3_2"
    P4_2 = "P4_2"
    R4_1 = "R4_1"
    P4_4i = "P4_4i"
    P4_4ii = "P4_4ii"
    P4_4iii = "P4_4iii"
    P4_6 = "P4_6"
    P4_7 = "P4_7"
    R4_2 = "R4_2"
    P4_8 = "P4_8"
    P4_9 = "P4_9"
    C4_10 = "C4_10"
    P4_11 = "P4_11"
    C4_12 = "C4_12"
    R4_3 = "R4_3"
    C4_13 = "C4_13"
    T4_14 = "T4_14"
    T4_15 = "T4_15"
    T4_16 = "T4_16"
    T4_17 = "T4_17"
    T4_18 = "T4_18"
    T4_19 = "T4_19"
    T4_20 = "T4_20"
    T4_21 = "T4_21"
    T4_22 = "T4_22"
    R4_4 = "R4_4"


@dataclass(frozen=True)
class Outcome:
    """Result of evaluating one instance."""

    hyp: bool
    strict: bool
    concl: bool | None = None
    failed: str | None = None
    anomalies: tuple[str, ...] = ()
    observations: tuple[str, ...] = ()


_MISS = Outcome(False, False)

Instance = tuple[tuple[QFuzzySubset, ...], dict]
GenItem = Union[Instance, int]
GenFn = Callable[[Ctx, "str | None"], Iterator[GenItem]]
EvalFn = Callable[[Ctx, tuple[QFuzzySubset, ...], dict, "str | None"], Outcome]


@dataclass(frozen=True)
class Claim:
    tid: TheoremId
    summary: str
    droppable: frozenset[str]
    gen: GenFn
    evaluate: EvalFn
    notes: tuple[str, ...] = ()


CLAIMS: dict[TheoremId, Claim] = {}


def _register(tid, summary, droppable=(), notes=()):
    def wrap(pair):
        gen, evaluate = pair
        CLAIMS[tid] = Claim(tid, summary, frozenset(droppable), gen, evaluate, tuple(notes))
        return pair

    return wrap


# ---------------------------------------------------------------------------
# Shared pieces.

_T3_KINDS: list[tuple[CrispKind, QFuzzyKind]] = [
    (CrispKind.LEFT_IDEAL, QFuzzyKind.LEFT_IDEAL),
    (CrispKind.RIGHT_IDEAL, QFuzzyKind.RIGHT_IDEAL),
    (CrispKind.IDEAL, QFuzzyKind.IDEAL),
    (CrispKind.COMPLETELY_PRIME, QFuzzyKind.COMPLETELY_PRIME),
    (CrispKind.COMPLETELY_SEMIPRIME, QFuzzyKind.COMPLETELY_SEMIPRIME),
]

#: Conclusion bundles: the defining inequality conditions of each compound
#: conclusion, checked bare (emptiness is handled via anomalies).
_IDEAL_BUNDLE = (QFuzzyKind.IDEAL,)
_RIGHT_BUNDLE = (QFuzzyKind.RIGHT_IDEAL,)
_PRIME_BUNDLE = (QFuzzyKind.IDEAL, QFuzzyKind.COMPLETELY_PRIME)
_SEMIPRIME_BUNDLE = (QFuzzyKind.IDEAL, QFuzzyKind.COMPLETELY_SEMIPRIME)
_SEMIPRIME_RIGHT_BUNDLE = (QFuzzyKind.RIGHT_IDEAL, QFuzzyKind.COMPLETELY_SEMIPRIME)
_INTERIOR_BUNDLE = (QFuzzyKind.INTERIOR_IDEAL,)

_KIND_PHRASE = {
    QFuzzyKind.SUBSEMIGROUP: "subsemigroup inequality",
    QFuzzyKind.INTERIOR_IDEAL: "interior-ideal inequality",
    QFuzzyKind.LEFT_IDEAL: "left-ideal inequality",
    QFuzzyKind.RIGHT_IDEAL: "right-ideal inequality",
    QFuzzyKind.IDEAL: "two-sided ideal inequality",
    QFuzzyKind.COMPLETELY_PRIME: "max-equality (completely prime)",
    QFuzzyKind.COMPLETELY_SEMIPRIME: "square-monotonicity (completely semiprime)",
}

EMPTY_SUBJECT = "empty_conclusion_subject"
EMPTY_LEVEL_SET = "empty_level_set"
Q_ARTIFACT = "q_quantifier_artifact"
LITERAL_ONLY = "literal_hypothesis_failure"

#: parameter grade strings repeat across millions of instances
_pg = lru_cache(maxsize=None)(parse_grade)

HypFn = Callable[[Ctx, QFuzzySubset, "str | None"], bool]


def _rows_bundle(table, rows, bundle) -> bool:
    return all(rows_kind_condition(table, rows, k) for k in bundle)


def _describe_kind_failure(mu: QFuzzySubset, kind: QFuzzyKind) -> str | None:
    """Locate one concrete witness of a failed kind condition, for reports."""
    s = mu.owner
    names, qset, g = s.names, mu.qset, mu.grades
    tab = s.table
    rng = range(s.order)
    nq = range(len(qset))
    if kind is not QFuzzyKind.COMPLETELY_SEMIPRIME:
        for x in rng:
            for y in rng:
                xy = tab[x][y]
                for k in nq:
                    got, q = g[xy][k], qset[k]
                    prod = f"{names[x]}*{names[y]}={names[xy]}"
                    if kind is QFuzzyKind.SUBSEMIGROUP and got < min(g[x][k], g[y][k]):
                        return (f"{_KIND_PHRASE[kind]} fails at ({prod}, {q}): "
                                f"{format_grade(got)} < min({format_grade(g[x][k])}, {format_grade(g[y][k])})")
                    if kind in (QFuzzyKind.LEFT_IDEAL, QFuzzyKind.IDEAL) and got < g[y][k]:
                        return (f"left-ideal inequality fails at ({prod}, {q}): "
                                f"{format_grade(got)} < {format_grade(g[y][k])}")
                    if kind in (QFuzzyKind.RIGHT_IDEAL, QFuzzyKind.IDEAL) and got < g[x][k]:
                        return (f"right-ideal inequality fails at ({prod}, {q}): "
                                f"{format_grade(got)} < {format_grade(g[x][k])}")
                    if kind is QFuzzyKind.COMPLETELY_PRIME and got != max(g[x][k], g[y][k]):
                        return (f"{_KIND_PHRASE[kind]} fails at ({prod}, {q}): "
                                f"{format_grade(got)} != max({format_grade(g[x][k])}, {format_grade(g[y][k])})")
    if kind is QFuzzyKind.INTERIOR_IDEAL:
        sub = _describe_kind_failure(
            QFuzzySubset(s, qset, g), QFuzzyKind.SUBSEMIGROUP)
        if sub:
            return sub
        for x in rng:
            for a in rng:
                xa = tab[x][a]
                for y in rng:
                    xay = tab[xa][y]
                    for k in nq:
                        if g[xay][k] < g[a][k]:
                            return (f"interior-ideal inequality fails at "
                                    f"({names[x]}*{names[a]}*{names[y]}={names[xay]}, {qset[k]}): "
                                    f"{format_grade(g[xay][k])} < {format_grade(g[a][k])}")
    if kind is QFuzzyKind.COMPLETELY_SEMIPRIME:
        for x in rng:
            xx = tab[x][x]
            for k in nq:
                if g[x][k] < g[xx][k]:
                    return (f"{_KIND_PHRASE[kind]} fails at ({names[x]}, {qset[k]}): "
                            f"{format_grade(g[x][k])} < {format_grade(g[xx][k])} "
                            f"= grade({names[x]}*{names[x]}={names[xx]})")
    return None


def _describe_bundle_failure(mu: QFuzzySubset, bundle, prefix: str) -> str:
    for kind in bundle:
        msg = _describe_kind_failure(mu, kind)
        if msg:
            return f"{prefix}: {msg}"
    return f"{prefix}: conclusion fails"


def _labels(s: Semigroup, members) -> list[str]:
    return [s.names[i] for i in sorted(members)]


def _members(s: Semigroup, labels: Sequence[str]) -> frozenset[int]:
    return frozenset(s.index_of(x) for x in labels)


def _is_constant_rows(rows) -> bool:
    return all(row == rows[0] for row in rows)


def _nonempty(ctx: Ctx, mu: QFuzzySubset, drop, label: str) -> bool:
    del drop, label
    return ctx.ranked(mu).nonempty()


def _hyp_kind(kind: QFuzzyKind, label: str) -> HypFn:
    def hyp_fn(ctx, mu, drop):
        if drop == label:
            return ctx.ranked(mu).nonempty()
        return ctx.holds(mu, kind)

    return hyp_fn


def _and_commutative(hyp_fn: HypFn) -> HypFn:
    def wrapped(ctx, mu, drop):
        commut = ctx.flags.commutative or drop == "commutative"
        return commut and hyp_fn(ctx, mu, drop)

    return wrapped


def _and_flag(flag_name: str, hyp_fn: HypFn) -> HypFn:
    def wrapped(ctx, mu, drop):
        flag = getattr(ctx.flags, flag_name) or drop == flag_name
        return flag and hyp_fn(ctx, mu, drop)

    return wrapped


def _ext_bundle_outcome(ctx: Ctx, mu, x: int, bundle, hyp: bool, strict: bool,
                        beta=None, alpha=None) -> Outcome:
    """Conclusion 'the (transformed) extension satisfies ``bundle``'."""
    if not hyp:
        return _MISS
    if beta is None:
        nu = mu
        what = f"extension by {ctx.s.names[x]}"
    else:
        nu = ctx.affine(mu, beta, alpha)
        what = (f"extension by {ctx.s.names[x]} of the rescaled subject "
                f"(beta={format_grade(beta)}, alpha={format_grade(alpha)})")
    ranked = ctx.ext(nu, x)
    concl = _rows_bundle(ctx.s.table, ranked.rows, bundle)
    anomalies: tuple[str, ...] = ()
    if not ranked.nonempty():
        anomalies = (EMPTY_SUBJECT,)
    failed = None
    if not concl:
        failed = _describe_bundle_failure(extension(nu, x), bundle, what)
        if not strict:
            anomalies = anomalies + (LITERAL_ONLY,)
    return Outcome(hyp, strict, concl, failed, anomalies)


# ---------------------------------------------------------------------------
# Crisp/fuzzy correspondence for indicator subsets.


def _gen_t3_1(ctx: Ctx, drop) -> Iterator[GenItem]:
    for q_size in ctx.config.q_sizes:
        qset = tuple(f"q{i + 1}" for i in range(q_size))
        for mask in range(1, 1 << ctx.s.order):
            members = frozenset(i for i in range(ctx.s.order) if mask >> i & 1)
            chi = characteristic(ctx.s, CrispSubset(ctx.s, members), qset)
            for ckind, _ in _T3_KINDS:
                yield (chi,), {"A": _labels(ctx.s, members), "kind": ckind.value}


def _eval_t3_1(ctx: Ctx, subjects, params, drop) -> Outcome:
    chi = subjects[0]
    members = _members(ctx.s, params["A"])
    ckind = CrispKind(params["kind"])
    qkind = next(q for c, q in _T3_KINDS if c is ckind)
    crisp_side = crisp_holds(ctx.s, members, ckind)
    fuzzy_side = ctx.holds(chi, qkind)
    concl = crisp_side == fuzzy_side
    failed = None
    if not concl:
        failed = (f"indicator correspondence breaks for A={{{', '.join(params['A'])}}}, "
                  f"kind={ckind.value}: crisp={crisp_side}, fuzzy={fuzzy_side}")
    return Outcome(True, True, concl, failed)


_register(
    TheoremId.T3_1,
    "a non-empty crisp subset has a property exactly when its indicator "
    "fuzzy subset has the corresponding fuzzy property",
)((_gen_t3_1, _eval_t3_1))


def _gen_t3_2(ctx: Ctx, drop) -> Iterator[GenItem]:
    for mu in ctx.all_subjects():
        for ckind, _ in _T3_KINDS:
            yield (mu,), {"kind": ckind.value}


def _level_cuts(ctx: Ctx, mu: QFuzzySubset) -> list[tuple[Fraction, frozenset[int]]]:
    """(t, members) for every attained t, memoized per subject."""
    memo = instance_memo(mu)
    got = memo.get("cuts")
    if got is None:
        ranked = ranked_of(mu)
        got = [
            (t, frozenset(y for y, row in enumerate(ranked.rows) if min(row) >= i))
            for i, t in enumerate(ranked.vals)
        ]
        memo["cuts"] = got
    return got


def _crisp_holds_cached(ctx: Ctx, members: frozenset[int], ckind: CrispKind) -> bool:
    key = ("crisp", members, ckind)
    got = ctx.memo.get(key)
    if got is None:
        got = crisp_holds(ctx.s, members, ckind)
        ctx.memo[key] = got
    return got


def _eval_t3_2(ctx: Ctx, subjects, params, drop) -> Outcome:
    mu = subjects[0]
    ckind = CrispKind(params["kind"])
    qkind = next(q for c, q in _T3_KINDS if c is ckind)
    hyp = ctx.ranked(mu).nonempty()
    if drop == "non_empty":
        hyp = True
    # The claim is provable only for |Q| = 1: level sets quantify over all
    # of Q at once, and that quantifier does not commute with max-equalities
    # or with per-q grade profiles when |Q| >= 2.
    strict = hyp and len(mu.qset) == 1
    if not hyp:
        return _MISS
    lhs = ctx.holds(mu, qkind)
    anomalies: list[str] = []
    rhs = True
    bad_t = None
    for t, members in _level_cuts(ctx, mu):
        if not members:
            anomalies.append(EMPTY_LEVEL_SET)
            continue
        if not _crisp_holds_cached(ctx, members, ckind):
            rhs = False
            bad_t = t
    concl = lhs == rhs
    failed = None
    if not concl:
        if lhs:
            failed = (f"fuzzy {qkind.value} holds but level set at "
                      f"t={format_grade(bad_t)} is not a crisp {ckind.value}")
        else:
            failed = (f"every non-empty level set is a crisp {ckind.value} "
                      f"but the fuzzy {qkind.value} fails")
        if len(mu.qset) >= 2:
            anomalies.append(Q_ARTIFACT)
    return Outcome(hyp, strict, concl, failed, tuple(anomalies))


_register(
    TheoremId.T3_2,
    "a fuzzy subset has an ideal property exactly when all its attained "
    "level sets have the crisp property (provable form: |Q| = 1)",
    droppable=("non_empty",),
)((_gen_t3_2, _eval_t3_2))


# ---------------------------------------------------------------------------
# Extension claims over (subject, element) sweeps.


def _gen_mu_x(hyp_fn: HypFn) -> GenFn:
    def gen(ctx: Ctx, drop) -> Iterator[GenItem]:
        n = ctx.s.order
        for mu in ctx.all_subjects():
            if not hyp_fn(ctx, mu, drop):
                yield n
                continue
            for x in range(n):
                yield (mu,), {"x": ctx.s.names[x]}

    return gen


_HYP_P4_2 = _and_commutative(_hyp_kind(QFuzzyKind.IDEAL, "ideal"))


def _eval_p4_2(ctx: Ctx, subjects, params, drop) -> Outcome:
    mu = subjects[0]
    hyp = _HYP_P4_2(ctx, mu, drop)
    return _ext_bundle_outcome(ctx, mu, ctx.s.index_of(params["x"]), _IDEAL_BUNDLE, hyp, hyp)


_register(
    TheoremId.P4_2,
    "over a commutative semigroup, every extension of a fuzzy ideal is a fuzzy ideal",
    droppable=("commutative", "ideal"),
)((_gen_mu_x(_HYP_P4_2), _eval_p4_2))


_HYP_R4_1 = _hyp_kind(QFuzzyKind.RIGHT_IDEAL, "right_ideal")


def _eval_r4_1(ctx: Ctx, subjects, params, drop) -> Outcome:
    mu = subjects[0]
    hyp = _HYP_R4_1(ctx, mu, drop)
    return _ext_bundle_outcome(ctx, mu, ctx.s.index_of(params["x"]), _RIGHT_BUNDLE, hyp, hyp)


_register(
    TheoremId.R4_1,
    "extensions of fuzzy right ideals stay fuzzy right ideals with no "
    "commutativity assumption",
    droppable=("right_ideal",),
)((_gen_mu_x(_HYP_R4_1), _eval_r4_1))


_HYP_IDEAL = _hyp_kind(QFuzzyKind.IDEAL, "ideal")


def _eval_p4_4i(ctx: Ctx, subjects, params, drop) -> Outcome:
    mu = subjects[0]
    x = ctx.s.index_of(params["x"])
    hyp = _HYP_IDEAL(ctx, mu, drop)
    if not hyp:
        return _MISS
    ranked = ctx.ranked(mu)
    ext_rows = ctx.ext(mu, x).rows
    concl = all(
        ext_rows[y][k] >= ranked.rows[y][k]
        for y in range(ctx.s.order)
        for k in range(len(mu.qset))
    )
    failed = None
    if not concl:
        y, k = next(
            (y, k)
            for y in range(ctx.s.order)
            for k in range(len(mu.qset))
            if ext_rows[y][k] < ranked.rows[y][k]
        )
        failed = (f"containment in the extension by {params['x']} fails at "
                  f"({ctx.s.names[y]}, {mu.qset[k]}): "
                  f"{format_grade(mu.grades[ctx.s.table[x][y]][k])} < {format_grade(mu.grades[y][k])}")
    return Outcome(hyp, hyp, concl, failed)


_register(
    TheoremId.P4_4i,
    "a fuzzy ideal is contained in each of its extensions",
    droppable=("ideal",),
)((_gen_mu_x(_HYP_IDEAL), _eval_p4_4i))


def _gen_p4_4ii(ctx: Ctx, drop) -> Iterator[GenItem]:
    n = ctx.s.order
    for mu in ctx.all_subjects():
        if not _HYP_IDEAL(ctx, mu, drop):
            yield n * n
            continue
        for x in range(n):
            for power in range(1, n + 1):
                yield (mu,), {"x": ctx.s.names[x], "n": power}


def _eval_p4_4ii(ctx: Ctx, subjects, params, drop) -> Outcome:
    mu = subjects[0]
    x = ctx.s.index_of(params["x"])
    power = params["n"]
    hyp = _HYP_IDEAL(ctx, mu, drop)
    if not hyp:
        return _MISS
    lo = ctx.ext(mu, element_power(ctx.s, x, power)).rows
    hi = ctx.ext(mu, element_power(ctx.s, x, power + 1)).rows
    concl = all(
        hi[y][k] >= lo[y][k]
        for y in range(ctx.s.order)
        for k in range(len(mu.qset))
    )
    failed = None
    if not concl:
        failed = (f"extension by {params['x']}^{power} is not contained in the "
                  f"extension by {params['x']}^{power + 1}")
    return Outcome(hyp, hyp, concl, failed)


_register(
    TheoremId.P4_4ii,
    "for a fuzzy ideal, extensions by successive powers of an element form "
    "an increasing chain",
    droppable=("ideal",),
)((_gen_p4_4ii, _eval_p4_4ii))


def _hyp_p4_4iii_for(x: int) -> HypFn:
    def hyp_fn(ctx, mu, drop):
        ideal_ok = _HYP_IDEAL(ctx, mu, drop)
        positive = all(g > 0 for g in mu.grades[x]) or drop == "positive_at_x"
        return ideal_ok and positive

    return hyp_fn


def _gen_p4_4iii(ctx: Ctx, drop) -> Iterator[GenItem]:
    n = ctx.s.order
    for mu in ctx.all_subjects():
        if not _HYP_IDEAL(ctx, mu, drop):
            yield n
            continue
        for x in range(n):
            yield (mu,), {"x": ctx.s.names[x]}


def _eval_p4_4iii(ctx: Ctx, subjects, params, drop) -> Outcome:
    mu = subjects[0]
    x = ctx.s.index_of(params["x"])
    hyp = _hyp_p4_4iii_for(x)(ctx, mu, drop)
    if not hyp:
        return _MISS
    row_of = ctx.s.table[x]
    concl = all(
        all(g > 0 for g in mu.grades[row_of[y]]) for y in range(ctx.s.order)
    )
    failed = None
    if not concl:
        y = next(
            y for y in range(ctx.s.order)
            if not all(g > 0 for g in mu.grades[row_of[y]])
        )
        failed = (f"support of the extension by {params['x']} misses "
                  f"{ctx.s.names[y]} although the subject is positive at {params['x']}")
    return Outcome(hyp, hyp, concl, failed)


_register(
    TheoremId.P4_4iii,
    "if a fuzzy ideal is positive at x (for every q), the extension by x has "
    "full support",
    droppable=("ideal", "positive_at_x"),
)((_gen_p4_4iii, _eval_p4_4iii))


def _gen_p4_6(ctx: Ctx, drop) -> Iterator[GenItem]:
    for q_size in ctx.config.q_sizes:
        qset = tuple(f"q{i + 1}" for i in range(q_size))
        for mask in range(1, 1 << ctx.s.order):
            members = frozenset(i for i in range(ctx.s.order) if mask >> i & 1)
            chi = characteristic(ctx.s, CrispSubset(ctx.s, members), qset)
            for x in range(ctx.s.order):
                yield (chi,), {"A": _labels(ctx.s, members), "x": ctx.s.names[x]}


def _eval_p4_6(ctx: Ctx, subjects, params, drop) -> Outcome:
    chi = subjects[0]
    members = _members(ctx.s, params["A"])
    x = ctx.s.index_of(params["x"])
    hyp = bool(members)
    if not hyp:
        return _MISS
    lhs = extension(chi, x)
    shifted = crisp_extension(ctx.s, CrispSubset(ctx.s, members), x)
    rhs = characteristic(ctx.s, shifted, chi.qset)
    concl = lhs.grades == rhs.grades
    failed = None
    if not concl:
        failed = (f"extension of the indicator of A={{{', '.join(params['A'])}}} by "
                  f"{params['x']} differs from the indicator of the shifted subset")
    return Outcome(hyp, hyp, concl, failed)


_register(
    TheoremId.P4_6,
    "extending an indicator fuzzy subset equals the indicator of the crisp "
    "extension",
)((_gen_p4_6, _eval_p4_6))


_HYP_P4_7 = _and_commutative(_hyp_kind(QFuzzyKind.COMPLETELY_PRIME, "completely_prime"))


def _eval_p4_7(ctx: Ctx, subjects, params, drop) -> Outcome:
    mu = subjects[0]
    hyp = _HYP_P4_7(ctx, mu, drop)
    return _ext_bundle_outcome(ctx, mu, ctx.s.index_of(params["x"]), _PRIME_BUNDLE, hyp, hyp)


_register(
    TheoremId.P4_7,
    "over a commutative semigroup, extensions of completely prime fuzzy "
    "ideals stay completely prime",
    droppable=("commutative", "completely_prime"),
)((_gen_mu_x(_HYP_P4_7), _eval_p4_7))


_HYP_PRIME = _hyp_kind(QFuzzyKind.COMPLETELY_PRIME, "completely_prime")


def _eval_r4_2(ctx: Ctx, subjects, params, drop) -> Outcome:
    mu = subjects[0]
    x = ctx.s.index_of(params["x"])
    hyp = _HYP_PRIME(ctx, mu, drop)
    if not hyp:
        return _MISS
    one = ctx.ext(mu, x).rows
    two = ctx.ext(mu, element_power(ctx.s, x, 2)).rows
    concl = one == two
    failed = None
    if not concl:
        failed = (f"extension by {params['x']} differs from the extension by "
                  f"{params['x']}^2 for a completely prime subject")
    return Outcome(hyp, hyp, concl, failed)


_register(
    TheoremId.R4_2,
    "for a completely prime fuzzy ideal, extending by x and by x^2 coincide",
    droppable=("completely_prime",),
)((_gen_mu_x(_HYP_PRIME), _eval_r4_2))


def _gen_p4_8(ctx: Ctx, drop) -> Iterator[GenItem]:
    zero_one = (Fraction(0), Fraction(1))
    for mu in ctx.all_subjects():
        ts = sorted(set(ctx.ranked(mu).vals) | set(zero_one))
        for x in range(ctx.s.order):
            for t in ts:
                yield (mu,), {"x": ctx.s.names[x], "t": format_grade(t)}


def _eval_p4_8(ctx: Ctx, subjects, params, drop) -> Outcome:
    mu = subjects[0]
    x = ctx.s.index_of(params["x"])
    t = _pg(params["t"])
    level = ctx.ranked(mu).level_members(t)
    row_of = ctx.s.table[x]
    lhs = frozenset(y for y in ctx.s.elements() if row_of[y] in level)
    rhs = ctx.ext(mu, x).level_members(t)
    concl = lhs == rhs
    failed = None
    if not concl:
        failed = (f"crisp-extension of the level set at t={params['t']} by "
                  f"{params['x']} is {{{', '.join(_labels(ctx.s, lhs))}}} but the "
                  f"level set of the extension is {{{', '.join(_labels(ctx.s, rhs))}}}")
    return Outcome(True, True, concl, failed)


_register(
    TheoremId.P4_8,
    "taking level sets commutes with extension, for arbitrary fuzzy subsets "
    "and thresholds",
)((_gen_p4_8, _eval_p4_8))


def _gen_mu(ctx: Ctx, drop) -> Iterator[GenItem]:
    for mu in ctx.all_subjects():
        yield (mu,), {}


def _eval_p4_9(ctx: Ctx, subjects, params, drop) -> Outcome:
    mu = subjects[0]
    ranked = ctx.ranked(mu)
    fixed = all(
        ctx.ext(mu, x).rows == ranked.rows for x in range(ctx.s.order)
    )
    commut = ctx.flags.commutative or drop == "commutative"
    hyp = commut and fixed
    if not hyp:
        return _MISS
    concl = _is_constant_rows(ranked.rows)
    failed = None
    if not concl:
        failed = ("subject is fixed by every extension yet its grade profile "
                  "varies across elements")
    return Outcome(hyp, hyp, concl, failed)


_register(
    TheoremId.P4_9,
    "over a commutative semigroup, a fuzzy subset fixed by every extension "
    "has an element-independent grade profile",
    droppable=("commutative",),
)((_gen_mu, _eval_p4_9))


def _eval_c4_10(ctx: Ctx, subjects, params, drop) -> Outcome:
    mu = subjects[0]
    ranked = ctx.ranked(mu)
    prime_ok = ctx.holds(mu, QFuzzyKind.COMPLETELY_PRIME)
    nonconst = not _is_constant_rows(ranked.rows)
    if drop == "non_constant":
        nonconst = True
    commut = ctx.flags.commutative or drop == "commutative"
    hyp = commut and prime_ok and nonconst
    if not hyp:
        return _MISS
    table = ctx.s.table
    concl = False
    for x in range(ctx.s.order):
        ext_rows = ctx.ext(mu, x).rows
        grows = all(
            ext_rows[y][k] >= ranked.rows[y][k]
            for y in range(ctx.s.order)
            for k in range(len(mu.qset))
        )
        if grows and ext_rows != ranked.rows and _rows_bundle(table, ext_rows, _PRIME_BUNDLE):
            concl = True
            break
    failed = None
    if not concl:
        failed = ("no element gives a strictly larger completely prime "
                  "extension, so the subject would be maximal")
    return Outcome(hyp, hyp, concl, failed)


_register(
    TheoremId.C4_10,
    "a non-constant completely prime fuzzy ideal of a commutative semigroup "
    "is strictly below one of its extensions, which is again completely prime",
    droppable=("commutative", "non_constant"),
)((_gen_mu, _eval_c4_10))


_HYP_P4_11 = _and_commutative(
    _hyp_kind(QFuzzyKind.COMPLETELY_SEMIPRIME, "completely_semiprime"))


def _eval_p4_11(ctx: Ctx, subjects, params, drop) -> Outcome:
    mu = subjects[0]
    hyp = _HYP_P4_11(ctx, mu, drop)
    return _ext_bundle_outcome(ctx, mu, ctx.s.index_of(params["x"]), _SEMIPRIME_BUNDLE, hyp, hyp)


_register(
    TheoremId.P4_11,
    "over a commutative semigroup, extensions of completely semiprime fuzzy "
    "ideals stay completely semiprime",
    droppable=("commutative", "completely_semiprime"),
)((_gen_mu_x(_HYP_P4_11), _eval_p4_11))


# ---------------------------------------------------------------------------
# Intersection claims.


def _gen_families(with_x: bool) -> GenFn:
    def gen(ctx: Ctx, drop) -> Iterator[GenItem]:
        reps = ctx.s.order if with_x else 1
        for q_size in ctx.config.q_sizes:
            qualifying = [
                mu for mu in ctx.subjects(q_size)
                if ctx.holds(mu, QFuzzyKind.COMPLETELY_SEMIPRIME)
            ]
            for size in (2, 3):
                for family in combinations(qualifying, size):
                    if with_x:
                        for x in range(ctx.s.order):
                            yield tuple(family), {"x": ctx.s.names[x]}
                    else:
                        yield tuple(family), {}

    return gen


def _family_meet(ctx: Ctx, family) -> QFuzzySubset:
    # Families are tuples of the stable per-semigroup subject objects, so
    # identity keys are safe and avoid rehashing grade matrices.
    key = ("meet",) + tuple(id(mu) for mu in family)
    got = ctx.memo.get(key)
    if got is None:
        got = intersect(list(family))
        ctx.memo[key] = got
    return got


def _family_hyp(ctx: Ctx, family, drop) -> tuple[bool, QFuzzySubset]:
    ok = all(ctx.holds(mu, QFuzzyKind.COMPLETELY_SEMIPRIME) for mu in family)
    lam = _family_meet(ctx, family)
    nonempty = ctx.ranked(lam).nonempty()
    if drop == "non_empty_intersection":
        nonempty = True
    return ok and nonempty, lam


def _eval_c4_12(ctx: Ctx, subjects, params, drop) -> Outcome:
    x = ctx.s.index_of(params["x"])
    fam_ok, lam = _family_hyp(ctx, subjects, drop)
    commut = ctx.flags.commutative or drop == "commutative"
    hyp = commut and fam_ok
    if not hyp:
        return _MISS
    key = ("c412", id(lam), x)
    cached = ctx.memo.get(key)
    if cached is None:
        ext = ctx.ext(lam, x)
        concl = _rows_bundle(ctx.s.table, ext.rows, _SEMIPRIME_BUNDLE)
        cached = (concl, ext.nonempty())
        ctx.memo[key] = cached
    concl, ext_nonempty = cached
    anomalies = () if ext_nonempty else (EMPTY_SUBJECT,)
    failed = None
    if not concl:
        failed = _describe_bundle_failure(
            extension(lam, x), _SEMIPRIME_BUNDLE,
            f"extension by {params['x']} of the family intersection")
    return Outcome(hyp, hyp, concl, failed, anomalies)


_register(
    TheoremId.C4_12,
    "over a commutative semigroup, extensions of a non-empty intersection of "
    "completely semiprime fuzzy ideals stay completely semiprime",
    droppable=("commutative", "non_empty_intersection"),
)((_gen_families(True), _eval_c4_12))


def _eval_r4_3(ctx: Ctx, subjects, params, drop) -> Outcome:
    fam_ok, lam = _family_hyp(ctx, subjects, drop)
    hyp = fam_ok
    if not hyp:
        return _MISS
    key = ("r43", id(lam))
    concl = ctx.memo.get(key)
    if concl is None:
        concl = _rows_bundle(ctx.s.table, ctx.ranked(lam).rows, _SEMIPRIME_BUNDLE)
        ctx.memo[key] = concl
    failed = None
    if not concl:
        failed = _describe_bundle_failure(lam, _SEMIPRIME_BUNDLE, "the family intersection")
    return Outcome(hyp, hyp, concl, failed)


_register(
    TheoremId.R4_3,
    "a non-empty intersection of completely semiprime fuzzy ideals is a "
    "completely semiprime fuzzy ideal, on any semigroup",
    droppable=("non_empty_intersection",),
)((_gen_families(False), _eval_r4_3))


def _gen_c4_13(ctx: Ctx, drop) -> Iterator[GenItem]:
    crisp = ctx.crisp_of_kind(CrispKind.COMPLETELY_SEMIPRIME)
    for q_size in ctx.config.q_sizes:
        qset = tuple(f"q{i + 1}" for i in range(q_size))
        for size in (2, 3):
            for family in combinations(crisp, size):
                meet = frozenset.intersection(*family)
                chi = characteristic(ctx.s, CrispSubset(ctx.s, meet), qset)
                for x in range(ctx.s.order):
                    yield (chi,), {
                        "family": [_labels(ctx.s, f) for f in family],
                        "x": ctx.s.names[x],
                    }


def _eval_c4_13(ctx: Ctx, subjects, params, drop) -> Outcome:
    chi = subjects[0]
    x = ctx.s.index_of(params["x"])
    family = [_members(ctx.s, labels) for labels in params["family"]]
    fam_ok = all(
        _crisp_holds_cached(ctx, f, CrispKind.COMPLETELY_SEMIPRIME) for f in family
    )
    meet = frozenset.intersection(*family)
    commut = ctx.flags.commutative or drop == "commutative"
    hyp = commut and fam_ok and bool(meet)
    if not hyp:
        return _MISS
    ext_rows = ctx.ext(chi, x).rows
    concl = _rows_bundle(ctx.s.table, ext_rows, _SEMIPRIME_BUNDLE)
    failed = None
    if not concl:
        failed = _describe_bundle_failure(
            extension(chi, x), _SEMIPRIME_BUNDLE,
            f"extension by {params['x']} of the indicator of the intersection")
    return Outcome(hyp, hyp, concl, failed)


_register(
    TheoremId.C4_13,
    "over a commutative semigroup, the indicator of a non-empty intersection "
    "of crisp completely semiprime ideals extends to a completely semiprime "
    "fuzzy ideal",
    droppable=("commutative",),
    notes=("the source states this for a richer product structure; it is "
           "checked here for plain commutative semigroups",),
)((_gen_c4_13, _eval_c4_13))


# ---------------------------------------------------------------------------
# Rescaled-extension claims (the beta/alpha sweep).


def _gen_grid(hyp_fn: HypFn) -> GenFn:
    def gen(ctx: Ctx, drop) -> Iterator[GenItem]:
        n = ctx.s.order
        names = ctx.s.names
        for mu in ctx.all_subjects():
            grid = grid_of(mu)
            if not hyp_fn(ctx, mu, drop):
                yield n * len(grid)
                continue
            for x in range(n):
                name = names[x]
                for _, _, beta_str, alpha_str in grid:
                    yield (mu,), {"x": name, "beta": beta_str, "alpha": alpha_str}

    return gen


def _grid_eval(bundle, hyp_fn: HypFn, strict_fn=None) -> EvalFn:
    def evaluate(ctx: Ctx, subjects, params, drop) -> Outcome:
        mu = subjects[0]
        x = ctx.s.index_of(params["x"])
        beta = _pg(params["beta"])
        alpha = _pg(params["alpha"])
        hyp = hyp_fn(ctx, mu, drop)
        strict = strict_fn(ctx, mu, drop, hyp) if strict_fn else hyp
        return _ext_bundle_outcome(ctx, mu, x, bundle, hyp, strict, beta, alpha)

    return evaluate


def _grid_claim(tid, summary, bundle, hyp_fn, droppable, strict_fn=None, notes=()):
    _register(tid, summary, droppable=droppable, notes=notes)(
        (_gen_grid(hyp_fn), _grid_eval(bundle, hyp_fn, strict_fn))
    )


_grid_claim(
    TheoremId.T4_14,
    "rescaled extensions of completely prime fuzzy ideals stay completely "
    "prime (stated for any semigroup; also tracked under commutativity)",
    _PRIME_BUNDLE,
    _hyp_kind(QFuzzyKind.COMPLETELY_PRIME, "completely_prime"),
    droppable=("completely_prime",),
    strict_fn=lambda ctx, mu, drop, hyp: hyp and ctx.flags.commutative,
)

_grid_claim(
    TheoremId.T4_15,
    "rescaled extensions of fuzzy right ideals stay fuzzy right ideals",
    _RIGHT_BUNDLE,
    _hyp_kind(QFuzzyKind.RIGHT_IDEAL, "right_ideal"),
    droppable=("right_ideal",),
)

_grid_claim(
    TheoremId.T4_16,
    "over a commutative semigroup, rescaled extensions of fuzzy ideals stay "
    "fuzzy ideals",
    _IDEAL_BUNDLE,
    _and_commutative(_hyp_kind(QFuzzyKind.IDEAL, "ideal")),
    droppable=("commutative", "ideal"),
)

_grid_claim(
    TheoremId.T4_17,
    "over a commutative semigroup, rescaled extensions of completely "
    "semiprime fuzzy ideals stay completely semiprime",
    _SEMIPRIME_BUNDLE,
    _and_commutative(
        _hyp_kind(QFuzzyKind.COMPLETELY_SEMIPRIME, "completely_semiprime")),
    droppable=("commutative", "completely_semiprime"),
)


def _t4_18_strict(ctx: Ctx, mu, drop, hyp) -> bool:
    # The literal interior-ideal hypothesis is too weak: on semigroups with a
    # three-step product chain, an interior ideal can grade a pair product
    # above a triple product and the extension loses the subsemigroup
    # inequality.  The claim is provable when the subject is a two-sided
    # ideal (which is interior over a commutative semigroup).
    return hyp and ctx.holds(mu, QFuzzyKind.IDEAL)


_grid_claim(
    TheoremId.T4_18,
    "over a commutative semigroup, rescaled extensions of fuzzy interior "
    "ideals stay interior ideals (provable form: two-sided ideal subjects)",
    _INTERIOR_BUNDLE,
    _and_commutative(_hyp_kind(QFuzzyKind.INTERIOR_IDEAL, "interior_ideal")),
    droppable=("commutative", "interior_ideal"),
    strict_fn=_t4_18_strict,
)

_grid_claim(
    TheoremId.T4_19,
    "over a regular commutative semigroup, rescaled extensions of fuzzy "
    "ideals are completely semiprime",
    _SEMIPRIME_BUNDLE,
    _and_commutative(_and_flag("regular", _hyp_kind(QFuzzyKind.IDEAL, "ideal"))),
    droppable=("regular", "commutative", "ideal"),
)

_grid_claim(
    TheoremId.T4_20,
    "over a right regular semigroup, rescaled extensions of fuzzy right "
    "ideals are completely semiprime right ideals",
    _SEMIPRIME_RIGHT_BUNDLE,
    _and_flag("right_regular", _hyp_kind(QFuzzyKind.RIGHT_IDEAL, "right_ideal")),
    droppable=("right_regular", "right_ideal"),
)

_grid_claim(
    TheoremId.T4_21,
    "over an intra-regular commutative semigroup, rescaled extensions of "
    "fuzzy ideals are completely semiprime",
    _SEMIPRIME_BUNDLE,
    _and_commutative(_and_flag("intra_regular", _hyp_kind(QFuzzyKind.IDEAL, "ideal"))),
    droppable=("intra_regular", "commutative", "ideal"),
)

_HYP_T4_22 = _and_flag(
    "archimedean",
    _and_commutative(
        _hyp_kind(QFuzzyKind.COMPLETELY_SEMIPRIME, "completely_semiprime")),
)


def _eval_t4_22(ctx: Ctx, subjects, params, drop) -> Outcome:
    mu = subjects[0]
    x = ctx.s.index_of(params["x"])
    beta = _pg(params["beta"])
    alpha = _pg(params["alpha"])
    hyp = _HYP_T4_22(ctx, mu, drop)
    if not hyp:
        return _MISS
    nu = ctx.affine(mu, beta, alpha)
    ext_rows = ctx.ext(nu, x).rows
    concl = _is_constant_rows(ext_rows)
    failed = None
    if not concl:
        failed = (f"extension by {params['x']} of the rescaled subject "
                  f"(beta={params['beta']}, alpha={params['alpha']}) is not constant")
    observation = (
        "subject_constant" if _is_constant_rows(ctx.ranked(mu).rows) else "subject_nonconstant"
    )
    return Outcome(hyp, hyp, concl, failed, observations=(observation,))


_register(
    TheoremId.T4_22,
    "over an archimedean commutative semigroup, every rescaled extension of "
    "a completely semiprime fuzzy ideal is constant (the subject itself is "
    "observed to be constant too)",
    droppable=("archimedean", "commutative", "completely_semiprime"),
)((_gen_grid(_HYP_T4_22), _eval_t4_22))


def _gen_r4_4(ctx: Ctx, drop) -> Iterator[GenItem]:
    for mu in ctx.all_subjects():
        for _, _, beta_str, alpha_str in grid_of(mu):
            yield (mu,), {"beta": beta_str, "alpha": alpha_str}


def _eval_r4_4(ctx: Ctx, subjects, params, drop) -> Outcome:
    mu = subjects[0]
    beta = _pg(params["beta"])
    alpha = _pg(params["alpha"])
    memo = instance_memo(mu)
    shift_key = ("r44t", alpha.numerator, alpha.denominator)
    shift_ok = memo.get(shift_key)
    if shift_ok is None:
        shift_ok = (
            magnified_translation(mu, Fraction(1), alpha).grades
            == translation(mu, alpha).grades
        )
        memo[shift_key] = shift_ok
    scale_key = ("r44m", beta.numerator, beta.denominator)
    scale_ok = memo.get(scale_key)
    if scale_ok is None:
        scale_ok = (
            magnified_translation(mu, beta, Fraction(0)).grades
            == multiplication(mu, beta).grades
        )
        memo[scale_key] = scale_ok
    concl = shift_ok and scale_ok
    failed = None
    if not concl:
        failed = (f"rescaling with beta=1 or alpha=0 does not reduce to the "
                  f"one-parameter transforms at beta={params['beta']}, alpha={params['alpha']}")
    return Outcome(True, True, concl, failed)


_register(
    TheoremId.R4_4,
    "the two-parameter rescaling degenerates to the shift at beta = 1 and to "
    "the scaling at alpha = 0",
)((_gen_r4_4, _eval_r4_4))


ALL_THEOREMS: tuple[TheoremId, ...] = tuple(TheoremId)
