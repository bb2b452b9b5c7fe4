"""Finite semigroups, Q-fuzzy ideals, their extensions, and claim verification."""

from .semigroups import (
    ClassFlags,
    CrispKind,
    CrispSubset,
    EmptySubset,
    IndexOutOfRange,
    NonSquareTable,
    NotAnIdeal,
    NotAssociative,
    Semigroup,
    build_semigroup,
    classify,
    crisp_holds,
    crisp_predicate,
    element_power,
)
from .enumeration import (
    Corpus,
    OrderTooLarge,
    build_corpus,
    canonicalize,
    enumerate_labeled,
)
from .qfuzzy import (
    DimensionMismatch,
    EmptyFuzzySubset,
    Grade,
    GradeOutOfRange,
    MixedOwners,
    QFuzzyKind,
    QFuzzySubset,
    build_qfuzzy,
    characteristic,
    image,
    includes,
    intersect,
    is_constant,
    level_set,
    parse_grade,
    q_holds,
    q_predicate,
    strictly_includes,
    support,
)
from .transforms import (
    AlphaOutOfRange,
    BetaOutOfRange,
    ElementOutOfRange,
    crisp_extension,
    extension,
    magnified_translation,
    multiplication,
    sup_grade,
    translation,
)
from .subjects import SampleConfig, sample_qfuzzy, subject_pool
from .theorems import TheoremId
from .harness import (
    CheckReport,
    Counterexample,
    UnknownHypothesisLabel,
    check_theorem,
    replay_counterexample,
    search_counterexample,
    verify_all,
)

__version__ = "0.1.0"
