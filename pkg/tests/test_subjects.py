from fractions import Fraction

import pytest

from qfideal.qfuzzy import QFuzzyKind, q_holds
from qfideal.subjects import (
    SampleConfig,
    exhaustive_subject_count,
    sample_qfuzzy,
    structured_subjects,
    subject_pool,
    transform_grid,
)
from qfideal.semigroups import build_semigroup

F = Fraction


class TestSampleConfig:
    def test_defaults(self):
        config = SampleConfig()
        assert config.seed == 42
        assert config.samples_per_semigroup == 200
        assert config.grade_pool == (F(0), F(1, 4), F(1, 2), F(3, 4), F(1))
        assert config.q_sizes == (1, 2)

    def test_validation(self):
        with pytest.raises(ValueError):
            SampleConfig(samples_per_semigroup=0)
        with pytest.raises(ValueError):
            SampleConfig(grade_pool=())
        with pytest.raises(ValueError):
            SampleConfig(grade_pool=(F(2),))
        with pytest.raises(ValueError):
            SampleConfig(q_sizes=(0,))


class TestSampler:
    def test_deterministic(self, cyclic3):
        config = SampleConfig()
        a = sample_qfuzzy(cyclic3, 2, config, 17)
        b = sample_qfuzzy(cyclic3, 2, config, 17)
        assert a.grades == b.grades

    def test_seed_matters(self, cyclic3):
        config = SampleConfig()
        other = SampleConfig(seed=43)
        draws = [
            sample_qfuzzy(cyclic3, 2, config, i).grades for i in range(12)
        ]
        redraws = [
            sample_qfuzzy(cyclic3, 2, other, i).grades for i in range(12)
        ]
        assert draws != redraws

    def test_exhaustive_counts(self):
        s1 = build_semigroup(["e"], [[0]])
        config = SampleConfig(grade_pool=(F(0), F(1)), q_sizes=(1,))
        assert exhaustive_subject_count(s1, 1, config) == 2
        subjects = {sample_qfuzzy(s1, 1, config, i).grades for i in range(2)}
        assert len(subjects) == 2

        s2 = build_semigroup(["a", "b"], [[0, 0], [0, 1]])
        config = SampleConfig(grade_pool=(F(0), F(1, 2), F(1)), q_sizes=(1,))
        assert exhaustive_subject_count(s2, 1, config) == 9
        subjects = {sample_qfuzzy(s2, 1, config, i).grades for i in range(9)}
        assert len(subjects) == 9

    def test_large_space_switches_to_sampling(self, cyclic3):
        config = SampleConfig(samples_per_semigroup=10)
        assert exhaustive_subject_count(cyclic3, 2, config) is None

    def test_pool_membership(self, cyclic3):
        config = SampleConfig(samples_per_semigroup=30)
        pool = set(config.grade_pool)
        for i in range(30):
            mu = sample_qfuzzy(cyclic3, 2, config, i)
            assert {g for row in mu.grades for g in row} <= pool


class TestSubjectPool:
    def test_structured_contains_ideal_indicators(self, min_semilattice):
        config = SampleConfig(q_sizes=(1,))
        structured = structured_subjects(min_semilattice, 1, config)
        indicator = ((F(1),), (F(0),))  # the bottom ideal {0}
        assert indicator in [mu.grades for mu in structured]
        assert any(q_holds(mu, QFuzzyKind.IDEAL) for mu in structured)

    def test_pool_is_deduplicated_and_deterministic(self, cyclic3):
        config = SampleConfig(samples_per_semigroup=50)
        pool_a = [mu.grades for mu in subject_pool(cyclic3, 1, config)]
        pool_b = [mu.grades for mu in subject_pool(cyclic3, 1, config)]
        assert pool_a == pool_b
        assert len(pool_a) == len(set(pool_a))

    def test_exhaustive_pool_covers_everything(self):
        s2 = build_semigroup(["a", "b"], [[0, 0], [0, 1]])
        config = SampleConfig(grade_pool=(F(0), F(1, 2), F(1)), q_sizes=(1,))
        pool = subject_pool(s2, 1, config)
        assert len({mu.grades for mu in pool}) == 9


class TestTransformGrid:
    def test_endpoints_present(self, mu_left_zero):
        grid = transform_grid(mu_left_zero)
        betas = {b for b, _ in grid}
        alphas = {a for _, a in grid}
        assert betas == {F(0), F(1, 2), F(1)}
        assert alphas == {F(0), F(1, 10), F(1, 5)}  # sup = 4/5

    def test_saturated_subject_collapses_alphas(self, left_zero):
        from qfideal.qfuzzy import constant_qfuzzy

        grid = transform_grid(constant_qfuzzy(left_zero, ("p",), F(1)))
        assert {a for _, a in grid} == {F(0)}
