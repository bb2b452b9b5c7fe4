import json
from fractions import Fraction

import pytest

from qfideal import build_qfuzzy, build_semigroup
from qfideal.enumeration import build_corpus
from qfideal.subjects import SampleConfig

POOL_3 = (Fraction(0), Fraction(1, 2), Fraction(1))


@pytest.fixture
def left_zero():
    """Three-element semigroup with x*y = x."""
    return build_semigroup(["a", "b", "c"], [[0, 0, 0], [1, 1, 1], [2, 2, 2]])


@pytest.fixture
def mu_left_zero(left_zero):
    return build_qfuzzy(left_zero, ["p"], [["4/5"], ["7/10"], ["3/5"]])


@pytest.fixture
def cyclic3():
    """Cyclic group of order three, labelled 1, ω, ω²."""
    return build_semigroup(["1", "ω", "ω²"], [[0, 1, 2], [1, 2, 0], [2, 0, 1]])


@pytest.fixture
def mu_cyclic3(cyclic3):
    return build_qfuzzy(cyclic3, ["p"], [["0.3"], ["0.1"], ["0.5"]])


@pytest.fixture
def min_semilattice():
    """Two-element meet-semilattice: x*y = min(x, y)."""
    return build_semigroup(["0", "1"], [[0, 0], [0, 1]])


@pytest.fixture
def chain3():
    """Three-element meet chain under min."""
    return build_semigroup(["0", "1", "2"], [[0, 0, 0], [0, 1, 1], [0, 1, 2]])


@pytest.fixture
def flat3():
    """Meet-semilattice with bottom 0 and incomparable a, b."""
    return build_semigroup(["0", "a", "b"], [[0, 0, 0], [0, 1, 0], [0, 0, 2]])


@pytest.fixture
def power_chain4():
    """Nilpotent chain g, g^2, g^3, g^4 = 0 with products clipped at 0."""
    def mul(i, j):
        return min(i + j + 2, 4) - 1

    table = [[mul(i, j) for j in range(4)] for i in range(4)]
    return build_semigroup(["g", "g2", "g3", "z"], table)


@pytest.fixture(scope="session")
def corpus3_iso():
    return build_corpus(3, "up_to_iso")


@pytest.fixture(scope="session")
def corpus3_labeled():
    return build_corpus(3, "labeled")


@pytest.fixture(scope="session")
def corpus4_iso():
    return build_corpus(4, "up_to_iso")


@pytest.fixture(scope="session")
def config_exhaustive3():
    """Exhaustive three-grade pool over single-q subjects."""
    return SampleConfig(
        seed=42, samples_per_semigroup=200, grade_pool=POOL_3, q_sizes=(1,)
    )


def write_json(path, doc):
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


@pytest.fixture
def ex_files(tmp_path):
    """The worked-example semigroups and fuzzy subsets as JSON files."""
    files = {}
    files["left_zero"] = write_json(
        tmp_path / "ex21.json",
        {"elements": ["a", "b", "c"],
         "table": [["a", "a", "a"], ["b", "b", "b"], ["c", "c", "c"]]},
    )
    files["mu_left_zero"] = write_json(
        tmp_path / "mu21.json",
        {"q": ["p"], "grades": {"a": {"p": "0.8"}, "b": {"p": "0.7"}, "c": {"p": "0.6"}}},
    )
    files["cyclic3"] = write_json(
        tmp_path / "ex41.json",
        {"elements": ["1", "ω", "ω²"],
         "table": [["1", "ω", "ω²"], ["ω", "ω²", "1"], ["ω²", "1", "ω"]]},
    )
    files["mu_cyclic3"] = write_json(
        tmp_path / "mu41.json",
        {"q": ["p"], "grades": {"1": {"p": "0.3"}, "ω": {"p": "0.1"}, "ω²": {"p": "0.5"}}},
    )
    files["trivial"] = write_json(
        tmp_path / "trivial.json", {"elements": ["e"], "table": [["e"]]}
    )
    files["dir"] = str(tmp_path)
    return files
