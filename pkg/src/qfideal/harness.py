"""Drives claim verification over corpora and assembles replayable reports.

For every claim the driver sweeps each corpus semigroup's instance space,
tallies hypothesis hits, and collects violations and anomalies.  Violations
carry self-contained witnesses: before a witness is admitted it is rebuilt
from its own serialized payload and re-evaluated, and the run aborts if the
failure does not reproduce.  Anomalies are aggregated per (kind, semigroup)
with one exemplar each, so reports stay small on large sweeps.

Everything is deterministic in (corpus, config): subject generation is seeded
per canonical table, instance sweeps are ordered, and reports serialize with
sorted keys, so identical runs produce byte-identical report files.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from .enumeration import Corpus
from .semigroups import Semigroup
from .serialization import fuzzy_from_dict, fuzzy_to_dict, semigroup_from_dict, semigroup_to_dict
from .subjects import Ctx, SampleConfig, sample_qfuzzy, subject_pool
from .theorems import CLAIMS, Outcome, TheoremId

__all__ = [
    "Counterexample",
    "AnomalyRecord",
    "CheckReport",
    "UnknownHypothesisLabel",
    "check_theorem",
    "verify_all",
    "search_counterexample",
    "replay_counterexample",
    "report_to_dict",
    "reports_to_doc",
    "sample_qfuzzy",
    "subject_pool",
    "SampleConfig",
]


class UnknownHypothesisLabel(ValueError):
    pass


class WitnessReplayError(RuntimeError):
    """A recorded counterexample failed to reproduce; the harness is unsound."""


@dataclass(frozen=True)
class Counterexample:
    semigroup: dict
    fuzzy_subjects: tuple[dict, ...]
    parameters: dict
    failed_condition: str

    def to_dict(self) -> dict[str, Any]:
        return {
            "semigroup": self.semigroup,
            "fuzzy_subjects": list(self.fuzzy_subjects),
            "parameters": self.parameters,
            "failed_condition": self.failed_condition,
        }


@dataclass
class AnomalyRecord:
    kind: str
    semigroup: dict
    count: int
    exemplar: dict

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "semigroup": self.semigroup,
            "count": self.count,
            "exemplar": self.exemplar,
        }


@dataclass
class CheckReport:
    theorem: str
    instances_checked: int
    hypothesis_hits: int
    violations: list[Counterexample]
    anomalies: list[AnomalyRecord]
    notes: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def report_to_dict(report: CheckReport) -> dict[str, Any]:
    return {
        "theorem": report.theorem,
        "instances_checked": report.instances_checked,
        "hypothesis_hits": report.hypothesis_hits,
        "violations": [v.to_dict() for v in report.violations],
        "anomalies": [a.to_dict() for a in report.anomalies],
        "notes": report.notes,
    }


def reports_to_doc(reports: Sequence[CheckReport]) -> list[dict[str, Any]]:
    return [report_to_dict(r) for r in reports]


def replay_counterexample(
    tid: TheoremId,
    witness: Counterexample,
    config: SampleConfig,
    drop: str | None = None,
) -> Outcome:
    """Rebuild a witness from its own payload and re-evaluate the claim."""
    s = semigroup_from_dict(witness.semigroup)
    subjects = tuple(fuzzy_from_dict(s, doc) for doc in witness.fuzzy_subjects)
    ctx = Ctx(s, config)
    return CLAIMS[tid].evaluate(ctx, subjects, dict(witness.parameters), drop)


class _Tally:
    """Accumulates one theorem's results across the corpus."""

    def __init__(self, tid: TheoremId):
        self.tid = tid
        self.instances = 0
        self.hits = 0
        self.violations: list[Counterexample] = []
        self.anomalies: dict[tuple[str, int], AnomalyRecord] = {}
        self.observations: dict[str, int] = {}

    def add_anomaly(self, kind: str, s_index: int, s: Semigroup, exemplar: dict) -> None:
        key = (kind, s_index)
        record = self.anomalies.get(key)
        if record is None:
            self.anomalies[key] = AnomalyRecord(
                kind=kind, semigroup=semigroup_to_dict(s), count=1, exemplar=exemplar
            )
        else:
            record.count += 1

    def report(self, notes: Iterable[str]) -> CheckReport:
        all_notes = list(notes)
        for name in sorted(self.observations):
            all_notes.append(
                f"observation {name}: {self.observations[name]} of {self.hits} hypothesis hits"
            )
        ordered = [self.anomalies[k] for k in sorted(self.anomalies)]
        return CheckReport(
            theorem=self.tid.value,
            instances_checked=self.instances,
            hypothesis_hits=self.hits,
            violations=self.violations,
            anomalies=ordered,
            notes=all_notes,
        )


def _witness(s: Semigroup, subjects, params, failed: str) -> Counterexample:
    return Counterexample(
        semigroup=semigroup_to_dict(s),
        fuzzy_subjects=tuple(fuzzy_to_dict(mu) for mu in subjects),
        parameters=dict(params),
        failed_condition=failed or "conclusion fails",
    )


def _run(
    theorem_ids: Sequence[TheoremId],
    corpus: Corpus | Sequence[Semigroup],
    config: SampleConfig,
    drop: str | None,
) -> list[CheckReport]:
    tallies = {tid: _Tally(tid) for tid in theorem_ids}
    items = list(corpus)
    for s_index, s in enumerate(items):
        ctx = Ctx(s, config)
        for tid in theorem_ids:
            claim = CLAIMS[tid]
            tally = tallies[tid]
            hits_here = 0
            for item in claim.gen(ctx, drop):
                if isinstance(item, int):
                    # batch of instances whose hypotheses fail
                    tally.instances += item
                    continue
                subjects, params = item
                outcome = claim.evaluate(ctx, subjects, params, drop)
                tally.instances += 1
                if outcome.hyp:
                    tally.hits += 1
                    hits_here += 1
                for kind in outcome.anomalies:
                    exemplar = dict(params)
                    if outcome.failed:
                        exemplar["detail"] = outcome.failed
                    tally.add_anomaly(kind, s_index, s, exemplar)
                for name in outcome.observations:
                    tally.observations[name] = tally.observations.get(name, 0) + 1
                if outcome.strict and outcome.concl is False:
                    witness = _witness(s, subjects, params, outcome.failed)
                    replayed = replay_counterexample(tid, witness, config, drop)
                    if not (replayed.strict and replayed.concl is False):
                        raise WitnessReplayError(
                            f"{tid.value}: witness does not reproduce standalone: "
                            f"{witness.failed_condition}"
                        )
                    tally.violations.append(witness)
            if hits_here == 0:
                tally.add_anomaly("hypothesis_never_satisfied", s_index, s, {})
    return [tallies[tid].report(CLAIMS[tid].notes) for tid in theorem_ids]


def check_theorem(
    tid: TheoremId,
    corpus: Corpus | Sequence[Semigroup],
    config: SampleConfig | None = None,
) -> CheckReport:
    """Verify one claim over a corpus."""
    config = config or SampleConfig()
    return _run([TheoremId(tid)], corpus, config, None)[0]


def verify_all(
    corpus: Corpus | Sequence[Semigroup],
    config: SampleConfig | None = None,
) -> list[CheckReport]:
    """Verify the whole claim catalog; reports come back in catalog order."""
    config = config or SampleConfig()
    return _run(list(TheoremId), corpus, config, None)


def search_counterexample(
    tid: TheoremId,
    corpus: Corpus | Sequence[Semigroup],
    config: SampleConfig | None = None,
    drop_hypothesis: str | None = None,
) -> CheckReport:
    """Re-run one claim with a named hypothesis no longer enforced.

    Violations are the point here: they show the dropped hypothesis matters.
    With no drop label this coincides with check_theorem.
    """
    tid = TheoremId(tid)
    config = config or SampleConfig()
    drop = drop_hypothesis or None
    if drop is not None and drop not in CLAIMS[tid].droppable:
        raise UnknownHypothesisLabel(
            f"{tid.value} has no hypothesis {drop!r}; droppable: "
            f"{sorted(CLAIMS[tid].droppable) or 'none'}"
        )
    return _run([tid], corpus, config, drop)[0]
