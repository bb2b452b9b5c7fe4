"""JSON interchange for semigroups, fuzzy subsets, and corpora.

Tables are written with element labels (not indices) and grades as exact
strings ("7/10"; "0.7" parses to the same value), so files are lossless and
diff-friendly.  Loading re-validates everything, so emit-then-load always
reproduces an identical in-memory value.
"""

from __future__ import annotations

import json
from typing import Any

from .enumeration import Corpus
from .qfuzzy import QFuzzySubset, build_qfuzzy, format_grade
from .semigroups import Semigroup, build_semigroup


class LoadError(ValueError):
    """Malformed input document (wraps the underlying validation failure)."""


def semigroup_to_dict(s: Semigroup) -> dict[str, Any]:
    return {
        "elements": list(s.names),
        "table": [[s.names[v] for v in row] for row in s.table],
    }


def semigroup_from_dict(doc: Any) -> Semigroup:
    if not isinstance(doc, dict) or "elements" not in doc or "table" not in doc:
        raise LoadError("semigroup document needs 'elements' and 'table'")
    names = doc["elements"]
    if not isinstance(names, list) or not all(isinstance(x, str) for x in names):
        raise LoadError("'elements' must be a list of labels")
    index = {label: i for i, label in enumerate(names)}
    if len(index) != len(names):
        raise LoadError("element labels must be distinct")
    table = doc["table"]
    if not isinstance(table, list) or any(not isinstance(row, list) for row in table):
        raise LoadError("'table' must be a list of rows")
    try:
        resolved = [[index[label] for label in row] for row in table]
    except KeyError as exc:
        raise LoadError(f"table entry {exc.args[0]!r} is not an element label") from exc
    try:
        return build_semigroup(names, resolved)
    except ValueError as exc:
        raise LoadError(str(exc)) from exc


def fuzzy_to_dict(mu: QFuzzySubset) -> dict[str, Any]:
    names = mu.owner.names
    return {
        "q": list(mu.qset),
        "grades": {
            names[x]: {
                q: format_grade(mu.grades[x][k]) for k, q in enumerate(mu.qset)
            }
            for x in mu.owner.elements()
        },
    }


def fuzzy_from_dict(owner: Semigroup, doc: Any) -> QFuzzySubset:
    if not isinstance(doc, dict) or "q" not in doc or "grades" not in doc:
        raise LoadError("fuzzy document needs 'q' and 'grades'")
    qset = doc["q"]
    if not isinstance(qset, list) or not all(isinstance(q, str) for q in qset):
        raise LoadError("'q' must be a list of labels")
    grades = doc["grades"]
    if not isinstance(grades, dict):
        raise LoadError("'grades' must map element labels to per-q grades")
    rows = []
    for label in owner.names:
        if label not in grades:
            raise LoadError(f"missing grades for element {label!r}")
        per_q = grades[label]
        if not isinstance(per_q, dict):
            raise LoadError(f"grades for {label!r} must map q labels to grade strings")
        row = []
        for q in qset:
            if q not in per_q:
                raise LoadError(f"missing grade for ({label!r}, {q!r})")
            row.append(per_q[q])
        rows.append(row)
    extra = set(grades) - set(owner.names)
    if extra:
        raise LoadError(f"grades given for unknown elements: {sorted(extra)}")
    try:
        return build_qfuzzy(owner, qset, rows)
    except ValueError as exc:
        raise LoadError(str(exc)) from exc


def corpus_to_list(corpus: Corpus) -> list[dict[str, Any]]:
    return [semigroup_to_dict(s) for s in corpus]


def corpus_from_list(doc: Any) -> list[Semigroup]:
    if not isinstance(doc, list):
        raise LoadError("a corpus document is a JSON array of semigroup objects")
    return [semigroup_from_dict(item) for item in doc]


def dumps(doc: Any) -> str:
    """Canonical serialization: sorted keys, fixed separators, trailing newline."""
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def load_json_file(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise LoadError(f"{path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise LoadError(f"{path}: line {exc.lineno}: {exc.msg}") from exc


def load_semigroup_file(path: str) -> Semigroup:
    try:
        return semigroup_from_dict(load_json_file(path))
    except LoadError as exc:
        raise LoadError(f"{path}: {exc}" if not str(exc).startswith(path) else str(exc)) from exc


def load_fuzzy_file(owner: Semigroup, path: str) -> QFuzzySubset:
    try:
        return fuzzy_from_dict(owner, load_json_file(path))
    except LoadError as exc:
        raise LoadError(f"{path}: {exc}" if not str(exc).startswith(path) else str(exc)) from exc


def load_corpus_file(path: str) -> list[Semigroup]:
    try:
        return corpus_from_list(load_json_file(path))
    except LoadError as exc:
        raise LoadError(f"{path}: {exc}" if not str(exc).startswith(path) else str(exc)) from exc
