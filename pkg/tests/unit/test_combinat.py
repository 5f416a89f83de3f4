# Copyright 2026 The polydisc-bounds Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest  # type: ignore
from hypothesis import given  # type: ignore
from hypothesis import strategies as st  # type: ignore

from polydisc import combinat
from polydisc import common


def test_degree():
    assert combinat.degree((2, 0, 3)) == 5
    assert combinat.degree(()) == 0


class Test_binomial(object):
    def test_inside(self):
        assert combinat.binomial(5, 2) == 10
        assert combinat.binomial(4, 0) == 1

    @pytest.mark.parametrize("n,k", [(3, 4), (3, -1), (-1, 0)])
    def test_outside(self, n, k):
        assert combinat.binomial(n, k) == 0


class Test_counts(object):
    def test_monomial_count(self):
        assert combinat.monomial_count(2, 2) == 3
        assert combinat.monomial_count(3, 3) == 10
        assert combinat.monomial_count(1, 7) == 1

    def test_remainder_count(self):
        # (2, 0) and (0, 2).
        assert combinat.remainder_count(2, 2) == 2
        assert combinat.remainder_count(3, 1) == 0

    def test_remainder_count_as_printed(self):
        assert combinat.remainder_count_as_printed(2, 2) == 10 - 1
        assert combinat.remainder_count_as_printed(2, 2) > combinat.remainder_count(
            2, 2
        )

    def test_large_counts_are_exact(self):
        assert combinat.monomial_count(10**6, 5) == math.comb(10**6 + 4, 5)


class Test_enum_multi_indices(object):
    def test_order(self):
        assert combinat.enum_multi_indices(2, 2) == [(2, 0), (1, 1), (0, 2)]

    def test_degree_zero(self):
        assert combinat.enum_multi_indices(3, 0) == [(0, 0, 0)]

    def test_one_variable(self):
        assert combinat.enum_multi_indices(1, 4) == [(4,)]

    @given(st.integers(1, 5), st.integers(0, 5))
    def test_complete_and_distinct(self, n, m):
        indices = combinat.enum_multi_indices(n, m)
        assert len(indices) == combinat.monomial_count(n, m)
        assert len(set(indices)) == len(indices)
        assert all(len(alpha) == n and sum(alpha) == m for alpha in indices)
        assert indices == sorted(indices, reverse=True)

    def test_cap(self):
        with pytest.raises(common.CapacityError) as exc_info:
            combinat.enum_multi_indices(10, 10, cap=100)

        assert exc_info.value.cap == 100

    def test_invalid(self):
        with pytest.raises(ValueError):
            combinat.enum_multi_indices(0, 2)


class Test_enum_tetrahedral(object):
    def test_order(self):
        assert combinat.enum_tetrahedral(3, 2) == [(1, 1, 0), (1, 0, 1), (0, 1, 1)]

    def test_empty_when_degree_too_large(self):
        assert combinat.enum_tetrahedral(2, 3) == []

    def test_matches_filter(self):
        expected = [
            alpha
            for alpha in combinat.enum_multi_indices(5, 3)
            if combinat.is_tetrahedral(alpha)
        ]
        assert combinat.enum_tetrahedral(5, 3) == expected

    def test_cap(self):
        with pytest.raises(common.CapacityError):
            combinat.enum_tetrahedral(30, 15, cap=10)


class Test_words(object):
    def test_enum_words(self):
        words = combinat.enum_words(2, 2)
        assert words == [(1, 1), (1, 2), (2, 1), (2, 2)]

    def test_enum_words_cap(self):
        with pytest.raises(common.CapacityError):
            combinat.enum_words(10, 10, cap=1000)

    def test_word_count(self):
        assert combinat.word_count((2, 1)) == 3
        assert combinat.word_count((1, 1, 1)) == 6
        assert combinat.word_count((0, 0)) == 1

    def test_word_count_huge(self):
        assert combinat.word_count((1,) * 30) == math.factorial(30)

    @given(st.integers(1, 4), st.integers(0, 5))
    def test_word_counts_sum_to_all_words(self, n, m):
        total = sum(
            combinat.word_count(alpha) for alpha in combinat.enum_multi_indices(n, m)
        )
        assert total == n**m

    def test_word_profile(self):
        assert combinat.word_profile((1, 3, 1), 3) == (2, 0, 1)

    def test_word_profile_bad_letter(self):
        with pytest.raises(ValueError):
            combinat.word_profile((1, 4), 3)

    def test_canonical_word(self):
        assert combinat.canonical_word((2, 0, 1)) == (1, 1, 3)

    @given(st.lists(st.integers(0, 3), min_size=1, max_size=5))
    def test_canonical_word_inverts_profile(self, alpha):
        alpha = tuple(alpha)
        word = combinat.canonical_word(alpha)
        assert combinat.word_profile(word, len(alpha)) == alpha

    def test_is_tetrahedral_word(self):
        assert combinat.is_tetrahedral_word((1, 3, 2))
        assert not combinat.is_tetrahedral_word((1, 3, 1))


class Test_primes(object):
    def test_primes_upto(self):
        assert combinat.primes_upto(20) == [2, 3, 5, 7, 11, 13, 17, 19]

    def test_primes_upto_real_bound(self):
        assert combinat.primes_upto(7.9) == [2, 3, 5, 7]

    def test_primes_upto_small(self):
        assert combinat.primes_upto(1.5) == []

    @pytest.mark.parametrize(
        "x,expected", [(1, 0), (2, 1), (10, 4), (100, 25), (10**6, 78498)]
    )
    def test_prime_count(self, x, expected):
        assert combinat.prime_count(x) == expected


@pytest.mark.parametrize(
    "k,expected",
    [(1, 1), (2, -1), (3, -1), (4, 0), (6, 1), (12, 0), (30, -1), (49, 0)],
)
def test_mobius(k, expected):
    assert combinat.mobius(k) == expected


def test_mobius_invalid():
    with pytest.raises(ValueError):
        combinat.mobius(0)
