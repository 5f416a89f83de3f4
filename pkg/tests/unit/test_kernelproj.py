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

from polydisc import _helpers
from polydisc import common
from polydisc import kernelproj
from polydisc import polyring
from polydisc import torusopt


class Test_kernel_spec(object):
    def test_primes(self):
        spec = kernelproj.kernel_spec(10)
        assert spec.primes == (2, 3, 5, 7)
        assert spec.dimension == 4

    def test_degree_one(self):
        spec = kernelproj.kernel_spec(1)
        assert spec.primes == ()
        assert spec.c_m == 1

    def test_modulus(self):
        spec = kernelproj.kernel_spec(3)
        expected = (math.pi / 2) * (math.pi / 3) / math.sin(math.pi / 3)
        assert abs(abs(spec.c_m) - expected) < 1e-14

    def test_modulus_increases_towards_kappa(self):
        moduli = [abs(kernelproj.kernel_spec(m).c_m) for m in range(1, 100)]
        assert all(a <= b for a, b in zip(moduli, moduli[1:]))
        assert moduli[-1] < kernelproj.kappa(1e-6).hi

    def test_invalid(self):
        with pytest.raises(ValueError):
            kernelproj.kernel_spec(-1)


class Test_r_eval(object):
    def test_origin(self):
        spec = kernelproj.kernel_spec(5)
        assert kernelproj.r_eval(spec, [0.0, 0.0, 0.0]) == spec.c_m

    def test_modulus_is_constant(self):
        spec = kernelproj.kernel_spec(7)
        value = kernelproj.r_eval(spec, [0.3, 0.9, 0.1, 0.5])
        assert abs(abs(value) - abs(spec.c_m)) < 1e-14

    def test_matches_vectorized(self):
        spec = kernelproj.kernel_spec(6)
        t = np.array([[0.1, 0.2, 0.3], [1.0, 0.0, 0.5]])
        values = kernelproj._r_values(spec, t)
        for row, value in zip(t, values):
            assert abs(kernelproj.r_eval(spec, row) - value) < 1e-14

    def test_wrong_length(self):
        with pytest.raises(common.DimensionError) as exc_info:
            kernelproj.r_eval(kernelproj.kernel_spec(3), [0.5])

        assert exc_info.value.expected == 2

    def test_outside_cube(self):
        with pytest.raises(ValueError):
            kernelproj.r_eval(kernelproj.kernel_spec(2), [1.5])


class Test_moment(object):
    @pytest.mark.parametrize("m", range(2, 31))
    def test_exact_values(self, m):
        assert kernelproj.moment(m, 1) == 1
        for k in range(2, m + 1):
            assert kernelproj.moment(m, k) == 0

    def test_beyond_degree(self):
        # Primes up to 4 are 2 and 3; 5 is coprime to both.
        value = kernelproj.moment(4, 5)
        expected = 1.0
        for p in (2, 3):
            sinc_k = math.sin(math.pi * 5 / p) / (math.pi * 5 / p)
            sinc_1 = math.sin(math.pi / p) / (math.pi / p)
            expected *= sinc_k / sinc_1**5
        assert abs(value - expected) < 1e-14

    def test_normalization_raised_to_power(self):
        value = kernelproj.moment(3, 5)
        assert value.imag == 0.0
        assert -0.522 < value.real < -0.519

    def test_matches_quadrature(self):
        spec = kernelproj.kernel_spec(3)
        grid = (np.arange(400) + 0.5) / 400
        t = np.stack(np.meshgrid(grid, grid, indexing="ij"), axis=-1)
        values = kernelproj._r_values(spec, t)
        for k in (1, 2, 3, 5):
            assert abs(np.mean(values**k) - kernelproj.moment(3, k)) < 1e-4

    def test_invalid(self):
        with pytest.raises(ValueError):
            kernelproj.moment(1, 1)
        with pytest.raises(ValueError):
            kernelproj.moment(3, 0)


class Test_kappa(object):
    @pytest.mark.parametrize("tol", [1e-2, 1e-3, 1e-4])
    def test_termwise(self, tol):
        enclosure = kernelproj.kappa(tol, method="termwise")
        assert enclosure.width <= tol
        assert enclosure.lo < 2.210 and 2.209 <= enclosure.hi

    def test_reads_two_point_two_zero_nine(self):
        enclosure = kernelproj.kappa(1e-3)
        assert enclosure.lo < 2.210 and 2.209 <= enclosure.hi

    def test_tight_nests(self):
        coarse = kernelproj.kappa(1e-3)
        fine = kernelproj.kappa(1e-6)
        assert fine.width <= 1e-6
        assert coarse.lo <= fine.lo and fine.hi <= coarse.hi

    def test_prime_zeta(self):
        enclosure = kernelproj.kappa(1e-9, method="prime_zeta")
        assert enclosure.width <= 1e-9
        reference = kernelproj.kappa(1e-6)
        assert reference.lo <= enclosure.lo and enclosure.hi <= reference.hi

    def test_methods_agree(self):
        termwise = kernelproj.kappa(1e-4, method="termwise")
        zeta = kernelproj.kappa(1e-4, method="prime_zeta")
        assert termwise.lo <= zeta.hi and zeta.lo <= termwise.hi

    def test_auto_switches(self, caplog):
        kernelproj.kappa.cache_clear()
        with caplog.at_level(logging.INFO, logger="polydisc.kernelproj"):
            enclosure = kernelproj.kappa(1e-9)

        assert enclosure.method.startswith("prime zeta")
        assert "prime zeta" in caplog.text

    def test_termwise_cap(self):
        with pytest.raises(common.BudgetError) as exc_info:
            kernelproj.kappa(1e-9, method="termwise")

        assert exc_info.value.cap == common.PRIME_CAP

    @pytest.mark.parametrize("tol", [0.0, -1.0, math.inf, math.nan])
    def test_invalid_tol(self, tol):
        with pytest.raises(ValueError):
            kernelproj.kappa(tol)

    def test_invalid_method(self):
        with pytest.raises(ValueError):
            kernelproj.kappa(1e-3, method="bogus")


class Test_project_tetra_mc(object):
    def test_linear_is_exact(self):
        poly = polyring.HomPoly(2, 1, {(1, 0): 2, (0, 1): 1j})
        z = [0.5, 1j]
        estimate, stderr = kernelproj.project_tetra_mc(poly, z, 200)
        assert abs(estimate - poly.evaluate(z)) < 1e-14
        assert stderr < 1e-14

    def test_kills_squares(self):
        poly = polyring.HomPoly(2, 2, {(2, 0): 1.0, (1, 1): 1.0})
        z = [1.0, 1.0]
        check = kernelproj.project_tetra_exact_check(poly, z, 20000, seed=1)
        assert check.exact == 1.0
        assert check.z_score <= 5.0

    def test_matches_split(self):
        generator = _helpers.make_generator(11, 0)
        poly = polyring.random_hom_poly(3, 3, generator)
        z = polyring.random_torus_point(3, generator)
        check = kernelproj.project_tetra_exact_check(poly, z, 50000, seed=2)
        tetrahedral, _ = polyring.tetra_split(poly)
        assert check.exact == tetrahedral.evaluate(z)
        assert abs(check.estimate - check.exact) <= 5.0 * check.stderr + 1e-12

    def test_deterministic_across_threads(self):
        poly = polyring.random_hom_poly(2, 3, _helpers.make_generator(3, 0))
        z = [0.3, -0.8j]
        first = kernelproj.project_tetra_mc(poly, z, 40000, seed=4, threads=1)
        second = kernelproj.project_tetra_mc(poly, z, 40000, seed=4, threads=3)
        assert first == second

    def test_too_few_samples(self):
        poly = polyring.HomPoly(1, 1, {(1,): 1})
        with pytest.raises(ValueError):
            kernelproj.project_tetra_mc(poly, [1.0], 10)

    def test_wrong_point(self):
        poly = polyring.HomPoly(2, 1, {(1, 0): 1})
        with pytest.raises(common.DimensionError):
            kernelproj.project_tetra_mc(poly, [1.0], 100)

    def test_stderr_scaling(self):
        poly = polyring.random_hom_poly(2, 3, _helpers.make_generator(5, 0))
        z = [1.0, 1j]
        ratios = []
        for trial in range(20):
            _, coarse = kernelproj.project_tetra_mc(poly, z, 10**4, seed=trial)
            _, fine = kernelproj.project_tetra_mc(poly, z, 4 * 10**4, seed=100 + trial)
            ratios.append(fine / coarse)
        assert 0.4 <= sum(ratios) / len(ratios) <= 0.6


class Test_tetrahedral_norm_bound(object):
    @pytest.mark.parametrize("n,m", [(2, 2), (3, 2), (3, 3), (2, 4), (3, 4)])
    def test_projection_is_bounded(self, n, m):
        kappa_hi = kernelproj.kappa(1e-6).hi
        for seed in range(3):
            generator = _helpers.make_generator(seed, n * 10 + m)
            poly = polyring.random_hom_poly(n, m, generator)
            tetrahedral, _ = polyring.tetra_split(poly)
            projected = torusopt.sup_norm(tetrahedral).lo
            original = torusopt.sup_norm(poly).hi
            assert projected <= kappa_hi**m * original * (1.0 + 1e-9)
