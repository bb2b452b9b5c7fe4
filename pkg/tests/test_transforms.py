from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from qfideal.enumeration import build_corpus
from qfideal.qfuzzy import (
    QFuzzySubset,
    build_qfuzzy,
    characteristic,
    constant_qfuzzy,
    image,
    level_set,
    support,
)
from qfideal.semigroups import CrispSubset
from qfideal.transforms import (
    AlphaOutOfRange,
    BetaOutOfRange,
    ElementOutOfRange,
    crisp_extension,
    extension,
    extension_by_word,
    magnified_translation,
    multiplication,
    sup_grade,
    translation,
    valid_alphas,
)

F = Fraction


class TestExtension:
    def test_cyclic_example(self, mu_cyclic3):
        ext = extension(mu_cyclic3, 1)
        assert ext.grades == ((F(1, 10),), (F(1, 2),), (F(3, 10),))

    def test_extension_by_identity_fixes(self, mu_cyclic3):
        assert extension(mu_cyclic3, 0).grades == mu_cyclic3.grades

    def test_left_zero_extension_is_constant(self, mu_left_zero):
        for x in range(3):
            ext = extension(mu_left_zero, x)
            assert all(row == mu_left_zero.grades[x] for row in ext.grades)

    def test_out_of_range(self, mu_cyclic3):
        with pytest.raises(ElementOutOfRange):
            extension(mu_cyclic3, 7)

    def test_composition_identity(self, corpus3_iso):
        # extending by x then y reads through the product y*x
        pool = (F(0), F(1, 2), F(1))
        for s in list(corpus3_iso)[::4]:
            mu = build_qfuzzy(
                s, ["p"], [[pool[i % 3]] for i in range(s.order)]
            )
            for x in range(s.order):
                for y in range(s.order):
                    two_step = extension(extension(mu, y), x)
                    direct = extension(mu, s.mul(y, x))
                    assert two_step.grades == direct.grades

    def test_extension_by_word(self, mu_cyclic3, cyclic3):
        word = [1, 1]  # ω * ω = ω²
        assert extension_by_word(mu_cyclic3, word).grades == extension(
            mu_cyclic3, 2
        ).grades


class TestCrispExtension:
    def test_whole_and_empty(self, cyclic3):
        whole = CrispSubset(cyclic3, frozenset({0, 1, 2}))
        empty = CrispSubset(cyclic3, frozenset())
        assert crisp_extension(cyclic3, whole, 1).members == frozenset({0, 1, 2})
        assert crisp_extension(cyclic3, empty, 1).members == frozenset()

    def test_group_shift(self, cyclic3):
        target = CrispSubset(cyclic3, frozenset({2}))
        assert crisp_extension(cyclic3, target, 1).members == frozenset({1})


class TestAffineMaps:
    def test_sup_grade(self, mu_left_zero, left_zero):
        assert sup_grade(mu_left_zero) == F(4, 5)
        assert sup_grade(constant_qfuzzy(left_zero, ("p",), F(0))) == F(0)

    def test_magnified_example(self, mu_left_zero):
        out = magnified_translation(mu_left_zero, F(1, 2), F(1, 10))
        assert out.grades == ((F(1, 2),), (F(9, 20),), (F(2, 5),))

    def test_degenerate_parameters(self, mu_left_zero):
        assert magnified_translation(mu_left_zero, F(1), F(1, 10)).grades == translation(
            mu_left_zero, F(1, 10)
        ).grades
        assert magnified_translation(mu_left_zero, F(1, 2), F(0)).grades == multiplication(
            mu_left_zero, F(1, 2)
        ).grades

    def test_zero_scaling_empties(self, mu_left_zero):
        out = magnified_translation(mu_left_zero, F(0), F(0))
        assert out.is_empty()

    def test_alpha_range_enforced(self, mu_left_zero):
        lo, hi = valid_alphas(mu_left_zero)
        assert (lo, hi) == (F(0), F(1, 5))
        translation(mu_left_zero, hi)
        with pytest.raises(AlphaOutOfRange):
            translation(mu_left_zero, hi + F(1, 100))

    def test_beta_range_enforced(self, mu_left_zero):
        with pytest.raises(BetaOutOfRange):
            multiplication(mu_left_zero, F(3, 2))

    def test_positive_shift_gives_full_support(self, mu_cyclic3):
        out = magnified_translation(mu_cyclic3, F(1, 2), F(1, 4))
        assert support(out).members == frozenset(range(3))


grade_values = st.sampled_from([F(0), F(1, 4), F(1, 3), F(1, 2), F(2, 3), F(1)])


class TestAffineOrderExactness:
    @settings(max_examples=200, deadline=None)
    @given(grade_values, grade_values, grade_values, grade_values)
    def test_monotone_map_commutes_with_max_min(self, a, b, beta, alpha):
        # exact rational arithmetic keeps affine maps order-preserving
        fa, fb = beta * a + alpha, beta * b + alpha
        assert max(fa, fb) == beta * max(a, b) + alpha
        assert min(fa, fb) == beta * min(a, b) + alpha


class TestLevelExtensionInterplay:
    def test_levels_commute_with_extension(self, corpus3_iso):
        # both sides computed through public operations
        pool = (F(0), F(1, 2), F(1))
        for s in list(corpus3_iso)[::6]:
            for combo in product(pool, repeat=s.order):
                mu = QFuzzySubset(s, ("p",), tuple((g,) for g in combo))
                for x in range(s.order):
                    for t in image(mu) | {F(0), F(1)}:
                        via_crisp = crisp_extension(s, level_set(mu, t), x)
                        via_fuzzy = level_set(extension(mu, x), t)
                        assert via_crisp.members == via_fuzzy.members

    def test_indicator_extension_identity(self, corpus3_iso):
        for s in list(corpus3_iso)[::6]:
            for mask in range(1, 1 << s.order):
                members = frozenset(i for i in range(s.order) if mask >> i & 1)
                chi = characteristic(s, CrispSubset(s, members), ("p",))
                for x in range(s.order):
                    lhs = extension(chi, x)
                    rhs = characteristic(
                        s, crisp_extension(s, CrispSubset(s, members), x), ("p",)
                    )
                    assert lhs.grades == rhs.grades
