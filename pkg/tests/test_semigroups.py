from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qfideal.enumeration import apply_permutation, build_corpus
from qfideal.semigroups import (
    ClassFlags,
    CrispKind,
    CrispSubset,
    EmptySubset,
    IndexOutOfRange,
    NonSquareTable,
    NotAnIdeal,
    NotAssociative,
    Semigroup,
    all_subsets,
    build_semigroup,
    classify,
    crisp_holds,
    crisp_predicate,
    element_power,
    sbs,
)

from oracles import oracle_crisp, oracle_is_associative


class TestBuildSemigroup:
    def test_left_zero_table_is_valid(self, left_zero):
        assert left_zero.order == 3
        assert left_zero.mul(1, 0) == 1

    def test_trivial_semigroup(self):
        s = build_semigroup(["e"], [[0]])
        assert s.order == 1

    def test_non_square_table(self):
        with pytest.raises(NonSquareTable):
            build_semigroup(["a", "b"], [[0, 1]])

    def test_out_of_range_entry(self):
        with pytest.raises(IndexOutOfRange):
            build_semigroup(["a", "b"], [[0, 2], [0, 0]])

    def test_non_associative_reports_triple(self):
        # all 8 triples of [[0,1],[0,0]] brute-forced: (1,1,1) fails
        table = [[0, 1], [0, 0]]
        assert not oracle_is_associative(table)
        with pytest.raises(NotAssociative) as exc:
            build_semigroup(["a", "b"], table)
        i, j, k = exc.value.triple
        assert table[table[i][j]][k] != table[i][table[j][k]]

    def test_duplicate_labels_rejected(self):
        with pytest.raises(ValueError):
            build_semigroup(["a", "a"], [[0, 0], [0, 0]])

    def test_index_of_unknown_label(self, left_zero):
        with pytest.raises(KeyError):
            left_zero.index_of("zz")


class TestClassify:
    def test_left_zero_flags(self, left_zero):
        flags = classify(left_zero)
        assert flags == ClassFlags(
            commutative=False,
            regular=True,
            left_regular=True,
            right_regular=True,
            intra_regular=True,
            archimedean=True,
        )

    def test_cyclic_group_all_flags(self, cyclic3):
        flags = classify(cyclic3)
        assert all(getattr(flags, name) for name in ClassFlags.FLAG_NAMES)
        # in a group every two-sided orbit is the whole carrier
        assert all(sbs(cyclic3, b) == frozenset(range(3)) for b in range(3))

    def test_min_semilattice_not_archimedean(self, min_semilattice):
        flags = classify(min_semilattice)
        assert flags.commutative and flags.regular
        assert not flags.archimedean
        assert sbs(min_semilattice, 0) == frozenset({0})
        assert element_power(min_semilattice, 1, 5) == 1

    def test_trivial_all_flags(self):
        flags = classify(build_semigroup(["e"], [[0]]))
        assert all(getattr(flags, name) for name in ClassFlags.FLAG_NAMES)


class TestCrispPredicates:
    def test_whole_carrier_is_ideal(self, left_zero):
        whole = CrispSubset(left_zero, frozenset({0, 1, 2}))
        assert crisp_predicate(left_zero, whole, CrispKind.IDEAL)

    def test_left_zero_singleton_sides(self, left_zero):
        a_only = CrispSubset(left_zero, frozenset({0}))
        # b*a = b escapes, but a*s = a stays
        assert not crisp_predicate(left_zero, a_only, CrispKind.LEFT_IDEAL)
        assert crisp_predicate(left_zero, a_only, CrispKind.RIGHT_IDEAL)

    def test_semilattice_bottom_is_completely_prime(self, min_semilattice):
        bottom = CrispSubset(min_semilattice, frozenset({0}))
        assert crisp_predicate(min_semilattice, bottom, CrispKind.COMPLETELY_PRIME)

    def test_empty_subset_rejected(self, left_zero):
        with pytest.raises(EmptySubset):
            crisp_predicate(left_zero, CrispSubset(left_zero, frozenset()), CrispKind.IDEAL)

    def test_prime_query_on_non_ideal_rejected(self, left_zero):
        a_only = CrispSubset(left_zero, frozenset({0}))
        with pytest.raises(NotAnIdeal):
            crisp_predicate(left_zero, a_only, CrispKind.COMPLETELY_PRIME)

    def test_subset_outside_carrier_rejected(self, left_zero):
        with pytest.raises(IndexOutOfRange):
            CrispSubset(left_zero, frozenset({5}))

    def test_against_oracle_over_order3_corpus(self, corpus3_iso):
        kinds = [k.value for k in CrispKind]
        for s in corpus3_iso:
            for members in all_subsets(s):
                for kind in kinds:
                    assert crisp_holds(s, members, CrispKind(kind)) == oracle_crisp(
                        s.table, set(members), kind
                    ), (s, sorted(members), kind)


class TestCrispInvariants:
    def test_ideal_iff_left_and_right(self, corpus3_iso):
        for s in corpus3_iso:
            for members in all_subsets(s):
                both = crisp_holds(s, members, CrispKind.LEFT_IDEAL) and crisp_holds(
                    s, members, CrispKind.RIGHT_IDEAL
                )
                assert crisp_holds(s, members, CrispKind.IDEAL) == both

    def test_completely_prime_implies_semiprime(self, corpus3_iso):
        for s in corpus3_iso:
            for members in all_subsets(s):
                if crisp_holds(s, members, CrispKind.COMPLETELY_PRIME):
                    assert crisp_holds(s, members, CrispKind.COMPLETELY_SEMIPRIME)


@st.composite
def semigroup_and_permutation(draw):
    corpus = build_corpus(3, "up_to_iso")
    s = draw(st.sampled_from(corpus.items))
    perm = draw(st.permutations(range(s.order)))
    return s, tuple(perm)


class TestPermutationEquivariance:
    @settings(max_examples=60, deadline=None)
    @given(semigroup_and_permutation())
    def test_classify_is_relabelling_invariant(self, case):
        s, perm = case
        relabelled = Semigroup(s.names, apply_permutation(s.table, perm))
        assert classify(relabelled) == classify(s)
