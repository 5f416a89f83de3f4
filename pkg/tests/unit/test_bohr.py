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

from unittest import mock
import pytest  # type: ignore

from polydisc import bohr
from polydisc import common
from polydisc import polyring


class Test_bohr_majorant(object):
    def test_general(self):
        poly = polyring.GeneralPoly.from_terms(
            2, {(0, 0): 1.0, (1, 0): 1.0, (1, 1): -2.0}
        )
        assert bohr.bohr_majorant(poly, 0.5) == 2.0

    def test_homogeneous(self):
        poly = polyring.HomPoly(2, 2, {(2, 0): 3.0, (1, 1): 4j})
        assert bohr.bohr_majorant(poly, 0.5) == 7.0 * 0.25

    def test_zero_radius(self):
        poly = polyring.GeneralPoly.from_terms(1, {(0,): 0.5, (3,): 1.0})
        assert bohr.bohr_majorant(poly, 0.0) == 0.5

    def test_negative_radius(self):
        with pytest.raises(ValueError):
            bohr.bohr_majorant(polyring.HomPoly(1, 1, {(1,): 1.0}), -0.1)


class Test_wiener_margin(object):
    def test_affine(self):
        poly = polyring.GeneralPoly.from_terms(1, {(0,): 0.5, (1,): 0.5})
        margins = bohr.wiener_margin(poly, sup_hi=1.0)
        assert [m for m, _ in margins] == [1]
        assert 0.25 <= margins[0][1] <= 0.25 + 1e-3

    def test_computes_sup(self):
        poly = polyring.GeneralPoly.from_terms(2, {(1, 0): 0.5, (0, 2): 0.25})
        margins = dict(bohr.wiener_margin(poly))
        assert set(margins) == {1, 2}
        assert margins[1] >= 0.5
        assert margins[2] >= 0.75

    def test_not_normalized(self):
        poly = polyring.HomPoly(1, 1, {(1,): 2.0})
        with pytest.raises(common.NormalizationError) as exc_info:
            bohr.wiener_margin(poly)

        assert exc_info.value.value > 1.0

    def test_sup_hi_checked(self):
        poly = polyring.HomPoly(1, 1, {(1,): 0.5})
        with pytest.raises(common.NormalizationError):
            bohr.wiener_margin(poly, sup_hi=1.5)


class Test_degree_bound(object):
    def test_linear(self):
        assert bohr.log_degree_bound(1, 10) == 0.0
        assert 1.0 <= bohr.degree_bound(1, 10) <= 1.0 + 1e-15

    def test_two_two(self):
        bound = bohr.degree_bound(2, 2)
        assert math.sqrt(3) <= bound <= math.sqrt(3) * (1 + 1e-14)

    @pytest.mark.parametrize("m,n", [(3, 2), (4, 40), (6, 10**4)])
    def test_below_each_candidate(self, m, n):
        bound = bohr.degree_bound(m, n)
        lemma = (2 * math.e) ** m * max(1.0, n / m) ** (m / 2)
        trivial = math.sqrt(math.comb(n + m - 1, m))
        assert bound <= min(lemma, trivial) * (1 + 1e-12)

    def test_split_never_smaller(self):
        for m in (2, 3, 5):
            for n in (10, 10**3, 10**5):
                assert bohr.log_degree_bound(m, n, "split") >= bohr.log_degree_bound(
                    m, n, "min"
                )

    def test_overflow(self):
        assert bohr.degree_bound(400, 10**8) == math.inf

    def test_unknown_strategy(self):
        with pytest.raises(ValueError):
            bohr.log_degree_bound(2, 5, "bogus")

    def test_invalid_degree(self):
        with pytest.raises(ValueError):
            bohr.log_degree_bound(0, 5)


class Test_series_value(object):
    def test_zero(self):
        assert bohr.series_value(0.0, 10) == (0.0, 0, 0.0)

    def test_divergent_radius(self):
        value, terms, tail = bohr.series_value(1.0, 10)
        assert value == math.inf
        assert tail == math.inf
        assert terms == 0

    def test_growth_tail_needs_small_radius(self):
        assert bohr._growth_tail(0.2, 10, 50) == math.inf
        assert bohr._growth_tail(0.05, 10, 50) < 1e-9

    @pytest.mark.parametrize("r", [0.18, 0.19, 0.3])
    def test_trivial_tail_small_dimension(self, r):
        n = 2
        value, terms, tail = bohr.series_value(r, n)
        assert 0.0 <= tail <= common.TAIL_TOLERANCE
        partial = sum(r**m * bohr.degree_bound(m, n) for m in range(1, terms + 1))
        assert partial * (1 - 1e-12) <= value <= partial + tail + 1e-12

    def test_trivial_tail_bounds_series(self):
        r, n, M = 0.4, 3, 30
        tail = bohr._trivial_tail(math.log(r), n, M)
        direct = sum(
            r**m * math.sqrt(math.comb(n + m - 1, m)) for m in range(M + 1, 2000)
        )
        assert direct <= tail

    def test_trivial_tail_large_dimension(self):
        assert bohr._trivial_tail(math.log(0.1), 10**6, 5) == math.inf

    def test_small_radius(self):
        r, n = 0.01, 10
        value, terms, tail = bohr.series_value(r, n)
        assert terms >= 1
        assert 0.0 <= tail <= common.TAIL_TOLERANCE
        partial = sum(r**m * bohr.degree_bound(m, n) for m in range(1, terms + 1))
        assert partial * (1 - 1e-12) <= value <= partial + tail + 1e-12

    def test_increasing(self):
        values = [bohr.series_value(r, 50)[0] for r in (0.01, 0.02, 0.05, 0.1)]
        assert all(a < b for a, b in zip(values, values[1:]))

    def test_gives_up(self):
        value, _, tail = bohr.series_value(0.15, 100, give_up_above=0.5)
        assert value == math.inf
        assert tail == math.inf

    def test_negative(self):
        with pytest.raises(ValueError):
            bohr.series_value(-1.0, 10)


class Test_bohr_lower(object):
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7, 8, 9, 100, 10**4])
    def test_bracket(self, n):
        report = bohr.bohr_lower(n, tol=1e-6)
        assert 0 < report.r_lower <= report.r_upper
        assert report.r_upper == 2.0 * math.sqrt(math.log(n) / n)
        assert bohr.series_value(report.r_lower, n)[0] <= 0.5
        assert bohr.series_value(report.r_lower * 1.01, n)[0] > 0.5
        assert report.tail_bound <= common.TAIL_TOLERANCE
        assert report.terms_used >= 1

    def test_uncertified_tail_counts_above(self):
        error = common.NotConvergedError(0.3, "Series tail did not fall below", 1e-9)
        with mock.patch.object(bohr, "series_value", side_effect=error):
            assert bohr._series(0.3, 2, "min") == math.inf

    def test_b_estimate(self):
        n = 1000
        report = bohr.bohr_lower(n)
        assert report.b_estimate == report.r_lower * math.sqrt(n / math.log(n))

    def test_split_strategy(self):
        report = bohr.bohr_lower(10**3, strategy="split")
        assert report.strategy == "split"
        assert report.r_lower <= bohr.bohr_lower(10**3).r_lower * (1 + 1e-6)

    def test_record(self):
        record = bohr.bohr_lower(10).as_record()
        assert sorted(record) == [
            "b_estimate",
            "n",
            "r_lower",
            "r_upper",
            "strategy",
            "tail_bound",
            "terms_used",
        ]

    @pytest.mark.parametrize("n,tol", [(1, 1e-6), (10, 0.0)])
    def test_invalid(self, n, tol):
        with pytest.raises(ValueError):
            bohr.bohr_lower(n, tol=tol)


class Test_calculus_inequality_check(object):
    @pytest.mark.parametrize("m", [1, 2, 5, 10, 40])
    def test_holds(self, m):
        for n in (2, 3, int(math.exp(m)), 10**6):
            assert bohr.calculus_inequality_check(n, m)

    def test_invalid(self):
        with pytest.raises(ValueError):
            bohr.calculus_inequality_check(0, 2)


def test_asymptotic_target():
    assert 0.32 < bohr.asymptotic_target() < 0.321


def test_boas_khavinson_bracket():
    lower, upper = bohr.boas_khavinson_bracket(100)
    assert lower == 0.1 / 3.0
    assert upper == 2.0 * math.sqrt(math.log(100) / 100)
    with pytest.raises(ValueError):
        bohr.boas_khavinson_bracket(1)


class Test_mobius(object):
    def test_margin_vanishes(self):
        margin, truncation = bohr.mobius_margin(0.5)
        assert abs(margin) <= 1e-6
        assert 0.0 < truncation <= 1e-12

    def test_majorant_at_one_third(self):
        for a in (0.0, 0.3, 0.5, 0.9):
            assert bohr.mobius_majorant(a, 1.0 / 3.0) <= 1.0

    def test_majorant_beyond_one_third(self):
        assert bohr.mobius_majorant(0.95, 0.35) > 1.0
