import math

import pytest

from qfideal.enumeration import (
    OrderTooLarge,
    apply_permutation,
    automorphism_count,
    build_corpus,
    canonicalize,
    column_major_cells,
    enumerate_labeled,
    enumerate_tables,
)
from qfideal.semigroups import build_semigroup, classify, find_nonassociative_triple

from oracles import oracle_labeled_count

# Counts below were frozen from the brute-force oracle (n <= 3) and from the
# backtracking enumerator cross-checked under two cell orders (n = 4).
LABELED_COUNTS = {1: 1, 2: 8, 3: 113, 4: 3492}
ISO_COUNTS = {1: 1, 2: 5, 3: 24, 4: 188}


class TestEnumerateLabeled:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_matches_brute_force_oracle(self, n):
        assert sum(1 for _ in enumerate_tables(n)) == oracle_labeled_count(n) == LABELED_COUNTS[n]

    def test_every_item_is_associative(self):
        for s in enumerate_labeled(3):
            assert find_nonassociative_triple(s.table) is None

    def test_cell_orders_agree_at_order_4(self):
        row_major = set(enumerate_tables(4))
        col_major = set(enumerate_tables(4, cell_order=column_major_cells))
        assert row_major == col_major
        assert len(row_major) == LABELED_COUNTS[4]

    def test_ceiling(self):
        with pytest.raises(OrderTooLarge):
            list(enumerate_tables(5))
        # opt-in ceiling admits order 5; just probe the first table
        assert next(enumerate_tables(5, ceiling=5)) is not None

    def test_bad_order(self):
        with pytest.raises(ValueError):
            list(enumerate_tables(0))


class TestCanonicalize:
    def test_trivial_is_fixed(self):
        s = build_semigroup(["e"], [[0]])
        assert canonicalize(s) == ((0,),)

    def test_left_zero_is_permutation_invariant(self, left_zero):
        assert canonicalize(left_zero) == left_zero.table

    def test_relabelled_groups_share_canonical_form(self, cyclic3):
        shuffled = apply_permutation(cyclic3.table, (2, 0, 1))
        other = build_semigroup(["x", "y", "z"], shuffled)
        assert canonicalize(other) == canonicalize(cyclic3)
        assert shuffled != cyclic3.table

    def test_counts_by_class(self):
        for n, expected in ISO_COUNTS.items():
            if n == 4:
                continue
            classes = {canonicalize(s) for s in enumerate_labeled(n)}
            assert len(classes) == expected

    def test_labeled_count_equals_orbit_sum(self):
        # for each iso class, its labelled orbit has n!/|Aut| members
        n = 3
        per_class = {}
        for s in enumerate_labeled(n):
            per_class.setdefault(canonicalize(s), s)
        total = sum(
            math.factorial(n) // automorphism_count(rep)
            for rep in per_class.values()
        )
        assert total == LABELED_COUNTS[n]


class TestBuildCorpus:
    def test_iso_corpus_order3_slice(self, corpus3_iso):
        # 113 labelled order-3 tables collapse to 24 classes; together with
        # the smaller orders the corpus holds 30 semigroups
        assert sum(1 for s in corpus3_iso if s.order == 3) == 24
        assert len(corpus3_iso) == 30

    def test_commutative_filter(self):
        only3 = build_corpus(3, "up_to_iso", ["commutative"], min_order=3)
        assert len(only3) == 12
        assert all(classify(s).commutative for s in only3)
        cumulative = build_corpus(3, "up_to_iso", ["commutative"])
        assert len(cumulative) == 16

    def test_labeled_order1(self):
        corpus = build_corpus(1, "labeled")
        assert len(corpus) == 1
        assert corpus.items[0].table == ((0,),)

    def test_deterministic_ordering(self, corpus3_iso):
        again = build_corpus(3, "up_to_iso")
        assert [s.table for s in again] == [s.table for s in corpus3_iso]
        orders = [s.order for s in corpus3_iso]
        assert orders == sorted(orders)

    def test_unknown_flag_rejected(self):
        with pytest.raises(ValueError):
            build_corpus(2, "up_to_iso", ["sparkly"])

    def test_classify_commutes_with_canonicalization(self):
        for s in enumerate_labeled(3):
            canon = build_semigroup(s.names, canonicalize(s))
            assert classify(canon) == classify(s)
