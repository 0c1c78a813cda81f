from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clevershopper import (
    TooManyBooks,
    brute_force_min_cost,
    evaluate_assignment,
    make_instance,
    random_instance,
    subset_dp_min_cost,
)


class TestSubsetDp:
    def test_five_books(self, five_books):
        result = subset_dp_min_cost(five_books)
        assert result.total_cost == 34
        assert evaluate_assignment(five_books, result.assignment) == result

    def test_one_book_picks_better_discounted_shop(self):
        # 5-1=4 at the first shop vs 6-3=3 at the second
        inst = make_instance(1, [(1, 5), (3, 6)], [(0, 0, 5), (0, 1, 6)])
        assert subset_dp_min_cost(inst).total_cost == 3

    def test_zero_threshold_shop_discount_counts_unconditionally(self):
        # shop 1 gives 2 off any spend, even a spend of zero there
        inst = make_instance(1, [(0, 9), (2, 0)], [(0, 0, 5), (0, 1, 9)])
        result = subset_dp_min_cost(inst)
        assert result.total_cost == 3  # buy at shop 0 for 5, still save 2
        assert result.assignment.choice == (0,)

    def test_all_books_one_shop(self):
        inst = make_instance(3, [(4, 10)], [(b, 0, 4) for b in range(3)])
        assert subset_dp_min_cost(inst).total_cost == 8

    def test_book_cap(self):
        inst = make_instance(3, [(0, 1)], [(b, 0, 1) for b in range(3)])
        with pytest.raises(TooManyBooks):
            subset_dp_min_cost(inst, max_books=2)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 100_000))
    def test_matches_oracle(self, seed):
        inst = random_instance(6, 4, max_price=10, seed=seed)
        want = brute_force_min_cost(inst)
        got = subset_dp_min_cost(inst)
        assert got.total_cost == want.total_cost
        assert evaluate_assignment(inst, got.assignment) == got

    def test_matches_oracle_with_zero_thresholds(self):
        from clevershopper import DiscountModel

        model = DiscountModel(max_discount=5, min_threshold=0, max_threshold=12)
        for seed in range(40):
            inst = random_instance(5, 4, max_price=7, discount_model=model, seed=seed)
            assert (
                subset_dp_min_cost(inst).total_cost
                == brute_force_min_cost(inst).total_cost
            )
