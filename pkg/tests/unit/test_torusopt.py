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

import logging
import math

import numpy as np
import pytest  # type: ignore
from hypothesis import given  # type: ignore
from hypothesis import settings  # type: ignore
from hypothesis import strategies as st  # type: ignore

from polydisc import _helpers
from polydisc import common
from polydisc import polyring
from polydisc import torusopt


class TestTorusPoint(object):
    def test_reduces_phases(self):
        point = torusopt.TorusPoint((-math.pi / 2, 5 * math.pi))
        assert point.n == 2
        np.testing.assert_allclose(point.as_array(), [1.5 * math.pi, math.pi])

    def test_as_complex(self):
        point = torusopt.TorusPoint((0.0, math.pi / 2))
        np.testing.assert_allclose(point.as_complex(), [1.0, 1j], atol=1e-15)


class Test_grid_lower_bound(object):
    def test_anchored_at_zero(self):
        poly = polyring.HomPoly(2, 1, {(1, 0): 1, (0, 1): 1})
        value, point = torusopt.grid_lower_bound(poly, 8)
        assert abs(value - 2.0) < 1e-14
        assert point.phases == (0.0, 0.0)

    @pytest.mark.parametrize("n,m,N", [(1, 5, 32), (2, 3, 16), (3, 2, 8)])
    def test_fft_matches_direct(self, n, m, N):
        poly = _random_poly(n, m, seed=n * 10 + m)
        offset = [0.01 * (j + 1) for j in range(n)]
        fft_value, _ = torusopt.grid_lower_bound(poly, N, offset=offset, method="fft")
        direct_value, _ = torusopt.grid_lower_bound(
            poly, N, offset=offset, method="direct"
        )
        assert abs(fft_value - direct_value) < 1e-12 * polyring.l1_coeff_norm(poly)

    def test_ties_prefer_first_index(self):
        poly = polyring.HomPoly(1, 2, {(2,): 1})
        value, point = torusopt.grid_lower_bound(poly, 16)
        assert abs(value - 1.0) < 1e-14
        assert point.phases == (0.0,)

    def test_exponents_wrap_around(self):
        # On a 4-point grid z**5 and z agree.
        poly = polyring.GeneralPoly.from_terms(1, {(5,): 1, (1,): -1})
        value, _ = torusopt.grid_lower_bound(poly, 4, method="fft")
        assert value < 1e-14

    def test_point_attains_value(self):
        poly = _random_poly(2, 3, seed=4)
        value, point = torusopt.grid_lower_bound(poly, 32)
        assert abs(abs(poly.evaluate(point.as_complex())) - value) < 1e-12

    def test_zero_polynomial(self):
        value, point = torusopt.grid_lower_bound(polyring.HomPoly.zero(2, 3), 4)
        assert value == 0.0
        assert point.n == 2

    def test_budget(self):
        poly = _random_poly(3, 2, seed=0)
        with pytest.raises(common.BudgetError) as exc_info:
            torusopt.grid_lower_bound(poly, 64, budget=1000)

        assert exc_info.value.cap == 1000

    def test_invalid(self):
        poly = _random_poly(1, 2, seed=0)
        with pytest.raises(ValueError):
            torusopt.grid_lower_bound(poly, 0)
        with pytest.raises(ValueError):
            torusopt.grid_lower_bound(poly, 4, method="bogus")


class Test_grid_enclosure(object):
    @pytest.mark.parametrize("n,m,doublings", [(1, 6, 3), (2, 4, 2), (3, 2, 1)])
    def test_doubling_never_loosens(self, n, m, doublings):
        poly = _random_poly(n, m, seed=300 + n)
        total_degree = sum(poly.variable_degrees())
        N = 2 ** math.ceil(math.log2(math.pi * total_degree + 1))
        previous = torusopt.grid_enclosure(poly, N)
        for _ in range(doublings):
            N *= 2
            current = torusopt.grid_enclosure(poly, N)
            assert current.lo >= previous.lo * (1.0 - 1e-12)
            assert current.hi <= previous.hi * (1.0 + 1e-12)
            previous = current

    def test_contains_sup(self):
        poly = _random_poly(2, 3, seed=12)
        enclosure = torusopt.grid_enclosure(poly, 64)
        reference = torusopt.sup_norm(poly, rel_err=1e-6)
        assert enclosure.lo <= reference.hi
        assert reference.lo <= enclosure.hi
        assert enclosure.method == "grid N=64"

    def test_coarse_grid_falls_back_to_l1(self):
        poly = _random_poly(2, 3, seed=12)
        enclosure = torusopt.grid_enclosure(poly, 2)
        assert enclosure.hi == polyring.l1_coeff_norm(poly)

    def test_zero_polynomial(self):
        enclosure = torusopt.grid_enclosure(polyring.HomPoly.zero(2, 3), 8)
        assert (enclosure.lo, enclosure.hi) == (0.0, 0.0)


class Test_local_refine(object):
    def test_climbs_to_maximum(self):
        # |1 + z| is largest at z = 1.
        poly = polyring.GeneralPoly.from_terms(1, {(0,): 1, (1,): 1})
        refined = torusopt.local_refine(poly, torusopt.TorusPoint((0.7,)))
        assert abs(poly.evaluate(refined.as_complex())) > 2.0 - 1e-9

    def test_matches_dense_scan(self):
        # |1 + 0.9z - 0.5z**2|**2 = 2.06 + 0.9 cos t - cos 2t peaks at cos t = 0.225.
        poly = polyring.GeneralPoly.from_terms(1, {(0,): 1, (1,): 0.9, (2,): -0.5})
        refined = torusopt.local_refine(poly, torusopt.TorusPoint((2.0,)))
        theta = 2.0 * math.pi * np.arange(10**6) / 10**6
        z = np.exp(1j * theta)
        scan = float(np.max(np.abs(1.0 + 0.9 * z - 0.5 * z**2)))
        assert abs(abs(poly.evaluate(refined.as_complex())) - scan) < 1e-6
        assert abs(refined.phases[0] - math.acos(0.225)) < 1e-4

    @given(st.integers(0, 2**32), st.floats(0.0, 6.28))
    @settings(max_examples=25, deadline=None)
    def test_never_descends(self, seed, phase):
        poly = _random_poly(2, 3, seed)
        start = torusopt.TorusPoint((phase, 1.0))
        refined = torusopt.local_refine(poly, start)
        before = abs(poly.evaluate(start.as_complex()))
        after = abs(poly.evaluate(refined.as_complex()))
        assert after >= before - 1e-12

    def test_zero_polynomial(self):
        start = torusopt.TorusPoint((1.0,))
        assert torusopt.local_refine(polyring.HomPoly.zero(1, 2), start) is start


class Test_sup_norm(object):
    def test_zero(self):
        enclosure = torusopt.sup_norm(polyring.HomPoly.zero(2, 2))
        assert (enclosure.lo, enclosure.hi) == (0.0, 0.0)
        assert enclosure.method == "zero polynomial"

    def test_constant(self):
        poly = polyring.GeneralPoly.from_terms(2, {(0, 0): 3 - 4j})
        enclosure = torusopt.sup_norm(poly)
        assert (enclosure.lo, enclosure.hi) == (5.0, 5.0)

    def test_monomial(self):
        poly = polyring.HomPoly(3, 4, {(2, 1, 1): -2j})
        enclosure = torusopt.sup_norm(poly)
        assert enclosure.hi == 2.0
        assert enclosure.lo > 2.0 * (1.0 - 1e-12)

    def test_all_ones(self):
        poly = polyring.HomPoly(2, 2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
        enclosure = torusopt.sup_norm(poly)
        assert 3.0 in enclosure
        assert enclosure.relative_width <= 1e-3

    def test_known_maximum(self):
        # |z**2 - z| = |z - 1| on the circle, largest (2) at z = -1.
        poly = polyring.GeneralPoly.from_terms(1, {(2,): 1, (1,): -1})
        enclosure = torusopt.sup_norm(poly, rel_err=1e-6)
        assert 2.0 in enclosure
        assert enclosure.relative_width <= 1e-6

    def test_cancelling_polynomial(self):
        # z1**2 - z2**2 has sup 2 although the grid at zero gives 0.
        poly = polyring.HomPoly(2, 2, {(2, 0): 1, (0, 2): -1})
        enclosure = torusopt.sup_norm(poly)
        assert 2.0 in enclosure
        assert not enclosure.budget_exceeded

    @pytest.mark.parametrize("n,m", [(1, 6), (2, 4), (3, 3)])
    def test_contains_refined_scan(self, n, m):
        poly = _random_poly(n, m, seed=100 + n)
        enclosure = torusopt.sup_norm(poly)
        value, point = torusopt.grid_lower_bound(poly, {1: 4096, 2: 256, 3: 32}[n])
        candidates = [torusopt.local_refine(poly, point)]
        candidates += torusopt.near_maximizers(poly, count=16)
        oracle = max(
            [value] + [abs(poly.evaluate(p.as_complex())) for p in candidates]
        )
        assert oracle <= enclosure.hi * (1.0 + 1e-12)
        assert enclosure.lo <= oracle * (1.0 + 1e-6)
        assert enclosure.hi <= polyring.l1_coeff_norm(poly)

    def test_rotation_invariant(self):
        poly = _random_poly(2, 3, seed=8)
        first = torusopt.sup_norm(poly, rel_err=1e-4)
        second = torusopt.sup_norm(poly.rotated([0.4, -1.1]), rel_err=1e-4)
        assert first.lo <= second.hi and second.lo <= first.hi

    def test_small_budget_is_still_sound(self, caplog):
        poly = _random_poly(2, 5, seed=3)
        with caplog.at_level(logging.INFO, logger="polydisc.torusopt"):
            enclosure = torusopt.sup_norm(poly, rel_err=1e-9, budget=512)

        assert enclosure.budget_exceeded
        assert "budget" in caplog.text
        reference = torusopt.sup_norm(poly, rel_err=1e-6)
        assert enclosure.lo <= reference.hi and reference.lo <= enclosure.hi

    def test_deterministic(self):
        poly = _random_poly(2, 4, seed=12)
        first = torusopt.sup_norm(poly, seed=5, threads=1)
        second = torusopt.sup_norm(poly, seed=5, threads=4)
        assert first == second

    def test_invalid(self):
        with pytest.raises(ValueError):
            torusopt.sup_norm(_random_poly(1, 1, seed=0), rel_err=0.0)


class Test_near_maximizers(object):
    def test_count_and_order(self):
        poly = _random_poly(2, 3, seed=6)
        points = torusopt.near_maximizers(poly, count=4)
        assert len(points) == 4
        enclosure = torusopt.sup_norm(poly, rel_err=1e-6)
        best = abs(poly.evaluate(points[0].as_complex()))
        assert best <= enclosure.hi

    def test_zero_polynomial(self):
        points = torusopt.near_maximizers(polyring.HomPoly.zero(2, 1))
        assert points == [torusopt.TorusPoint((0.0, 0.0))]


def _random_poly(n, m, seed):
    return polyring.random_hom_poly(n, m, _helpers.make_generator(seed, 0))
