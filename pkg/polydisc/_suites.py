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

"""Verification suites run by ``polydisc verify``.

Every suite draws its random instances from ``(seed, trial)`` streams, so a
suite run is reproducible, and returns a :class:`SuiteResult` counting the
individual checks and the failed ones.
"""

import dataclasses
import itertools
import logging
import math

import numpy as np

from polydisc import _helpers
from polydisc import bohr
from polydisc import combinat
from polydisc import common
from polydisc import kernelproj
from polydisc import polarize
from polydisc import polyring
from polydisc import rademacher
from polydisc import sidon_bounds
from polydisc import torusopt


_IDENTITY_TOL = 1e-12
# Dense oracle grid size per axis, by variable count.
_SCAN_POINTS = {1: 2**17, 2: 512, 3: 64}
_LOGGER = logging.getLogger(__name__)


@dataclasses.dataclass
class SuiteResult(object):
    """Outcome of one suite.

    Attributes:
        suite (str): Suite name.
        checks (int): Number of checks run.
        failures (List[str]): Description of every failed check.
    """

    suite: str
    checks: int = 0
    failures: list = dataclasses.field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def check(self, condition, description):
        """Record one check; ``description`` is kept when it fails."""
        self.checks += 1
        if not condition:
            self.failures.append(description)
            _LOGGER.warning("%s: failed %s", self.suite, description)

    def as_record(self):
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": self.checks,
            "failures": len(self.failures),
        }


def _close(a, b, tol=_IDENTITY_TOL):
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def _generator(seed, suite_index, trial):
    return _helpers.make_generator(seed, (suite_index << 32) | trial)


def suite_combinat(seed, budget):
    result = SuiteResult("combinat")
    for n, m in itertools.product(range(1, 7), range(0, 7)):
        indices = combinat.enum_multi_indices(n, m)
        total = sum(combinat.word_count(alpha) for alpha in indices)
        result.check(total == n**m, "sum of word counts for n={} m={}".format(n, m))
        result.check(
            len(set(indices)) == len(indices) == combinat.monomial_count(n, m)
            and all(sum(alpha) == m for alpha in indices),
            "enumeration for n={} m={}".format(n, m),
        )
        tetrahedral = [alpha for alpha in indices if combinat.is_tetrahedral(alpha)]
        result.check(
            len(tetrahedral) == combinat.binomial(n, m),
            "tetrahedral count for n={} m={}".format(n, m),
        )
    for x, expected in ((10, 4), (2, 1), (1, 0), (100, 25)):
        result.check(combinat.prime_count(x) == expected, "prime count at {}".format(x))
    return result


def suite_polar(seed, budget):
    result = SuiteResult("polar")
    for trial in range(20):
        generator = _generator(seed, 1, trial)
        poly = polyring.random_hom_poly(3, 3, generator)
        z = polyring.random_torus_point(3, generator)
        points = [_disc_point(generator, 3) for _ in range(3)]
        result.check(
            _close(polarize.polarize_eval(poly, [z, z, z]), poly.evaluate(z)),
            "diagonal restriction, trial {}".format(trial),
        )
        reference = polarize.polarize_eval(poly, points)
        for order in itertools.permutations(points):
            result.check(
                _close(polarize.polarize_eval(poly, list(order)), reference),
                "symmetry, trial {}".format(trial),
            )
        basis = np.eye(3)
        for alpha in combinat.enum_multi_indices(3, 3):
            beta = combinat.canonical_word(alpha)
            result.check(
                _close(
                    polarize.form_coefficient(poly, beta),
                    polarize.polarize_eval(poly, [basis[b - 1] for b in beta]),
                ),
                "form coefficient {}, trial {}".format(beta, trial),
            )
        result.check(
            _close(polarize.form_l1_norm(poly), polyring.l1_coeff_norm(poly)),
            "form l1 norm, trial {}".format(trial),
        )

    for trial in range(20):
        generator = _generator(seed, 2, trial)
        n = int(generator.integers(1, 4))
        m = int(generator.integers(1, 5))
        poly = polyring.random_hom_poly(n, m, generator)
        parts = polarize.partitions(m)
        parts = parts[int(generator.integers(0, len(parts)))]
        points = [_disc_point(generator, n) for _ in parts]
        value = polarize.polarize_eval(poly, polarize.repeated_points(points, parts))
        hi = torusopt.sup_norm(poly, **budget.sup_norm_kwargs()).hi
        bound = polarize.harris_constant(m, parts) * hi * (1.0 + 1e-9)
        result.check(abs(value) <= bound, "Harris inequality, trial {}".format(trial))
    return result


def _disc_point(generator, n):
    radius = np.sqrt(generator.uniform(0.0, 1.0, n))
    return radius * np.exp(1j * generator.uniform(0.0, 2.0 * math.pi, n))


def suite_kernel(seed, budget):
    result = SuiteResult("kernel")
    coarse = kernelproj.kappa(1e-3)
    result.check(
        coarse.width <= 1e-3 and coarse.lo < 2.210 and 2.209 <= coarse.hi,
        "kappa at tol 1e-3 reads 2.209...",
    )
    fine = kernelproj.kappa(1e-6)
    result.check(
        fine.width <= 1e-6 and coarse.lo <= fine.lo and fine.hi <= coarse.hi,
        "kappa at tol 1e-6 nests",
    )
    for m in range(2, 31):
        result.check(kernelproj.moment(m, 1) == 1, "first moment m={}".format(m))
        result.check(
            all(kernelproj.moment(m, k) == 0 for k in range(2, m + 1)),
            "vanishing moments m={}".format(m),
        )
    previous = 0.0
    for m in list(range(1, 200)) + [10**4]:
        modulus = abs(kernelproj.kernel_spec(m).c_m)
        result.check(
            previous <= modulus * (1.0 + 1e-12) and modulus <= fine.hi,
            "|c_m| monotone and below kappa at m={}".format(m),
        )
        previous = modulus
    passed = 0
    for trial in range(10):
        generator = _generator(seed, 3, trial)
        n = int(generator.integers(1, 4))
        m = int(generator.integers(1, 5))
        poly = polyring.random_hom_poly(n, m, generator)
        z = polyring.random_torus_point(n, generator)
        check = kernelproj.project_tetra_exact_check(
            poly, z, 10**4, seed=seed + trial, threads=budget.threads
        )
        passed += check.z_score <= 4.0
    result.check(passed >= 9, "Monte Carlo projection within 4 standard errors")
    return result


def suite_chaos(seed, budget):
    result = SuiteResult("chaos")
    example = rademacher.ChaosVector(3, 2, {(1, 2): 1, (1, 3): 1, (2, 3): 1})
    result.check(
        _close(rademacher.chaos_abs_mean(example), 1.5), "E|X| of the triangle chaos"
    )
    within = 0
    for trial in range(100):
        generator = _generator(seed, 4, trial)
        n = int(generator.integers(1, 13))
        m = int(generator.integers(1, min(n, 4) + 1))
        chaos = rademacher.random_chaos(n, m, generator)
        check = rademacher.hyper_check(chaos, threads=budget.threads)
        result.check(
            1.0 - 1e-12 <= check.ratio and check.holds,
            "1 <= ratio <= e**m, trial {}".format(trial),
        )
        if trial < 10:
            exact = rademacher.chaos_abs_mean(chaos)
            mean, stderr = rademacher.chaos_abs_mean(
                chaos, mode="monte_carlo", samples=4000, seed=seed + trial
            )
            within += abs(mean - exact) <= 4.0 * stderr + 1e-12
    result.check(within >= 9, "Monte Carlo E|X| within 4 standard errors")
    return result


def suite_sidon(seed, budget):
    result = SuiteResult("sidon")
    search_budget = common.Budget(
        grid_evaluations=min(budget.grid_evaluations, 2**20),
        enumeration=budget.enumeration,
        restarts=2,
        threads=budget.threads,
    )
    for m, n in itertools.product((1, 2), (2, 3, 4)):
        _, ratio = sidon_bounds.lower_search(m, n, budget=search_budget, seed=seed)
        result.check(
            1.0 - 1e-12 <= ratio <= sidon_bounds.upper_best(m, n) * (1.0 + 1e-9),
            "sandwich at m={} n={}".format(m, n),
        )
    for n in range(2, 9):
        result.check(sidon_bounds.upper_best(1, n) == 1.0, "S(1, {}) = 1".format(n))
    for m in (1, 2, 3):
        values = [sidon_bounds.upper_best(m, n) for n in range(2, 30)]
        result.check(
            all(a <= b for a, b in zip(values, values[1:])),
            "upper_best nondecreasing in n for m={}".format(m),
        )
        for n in range(m * m + 1, 30):
            if m > 1:
                result.check(
                    sidon_bounds.upper_best(m, n) <= sidon_bounds.theorem1_shape(m, n),
                    "explicit constant shape at m={} n={}".format(m, n),
                )
    result.check(
        sidon_bounds.first_nontrivial_n(2) is not None,
        "lemma bound beats the trivial bound for some n",
    )
    return result


def suite_bohr(seed, budget):
    result = SuiteResult("bohr")
    for n in (2, 10**2, 10**3, 10**4):
        report = bohr.bohr_lower(n, tol=1e-6)
        result.check(report.r_lower <= report.r_upper, "r_lower <= r_upper at n={}".format(n))
        result.check(report.tail_bound <= common.TAIL_TOLERANCE, "tail at n={}".format(n))
        below = bohr.series_value(report.r_lower, n)[0]
        above = bohr.series_value(report.r_lower * (1.0 + 1e-5), n)[0]
        result.check(below <= 0.5 < above, "bisection bracket at n={}".format(n))
    result.check(bohr.mobius_majorant(0.95, 0.35) > 1.001, "Mobius witness above 1.001")
    margin, _ = bohr.mobius_margin(0.5)
    result.check(abs(margin) <= 1e-6, "Mobius margin vanishes")
    for n, m in itertools.product((2, 10, 100, 10**4, 10**6), range(1, 61)):
        result.check(
            bohr.calculus_inequality_check(n, m),
            "(log n)**m <= n m! at n={} m={}".format(n, m),
        )
    for trial in range(100):
        generator = _generator(seed, 6, trial)
        poly = _random_general(generator, 1, int(generator.integers(1, 7)))
        normalized, sup_hi = _normalize(poly, budget)
        result.check(
            bohr.bohr_majorant(normalized, 1.0 / 3.0) <= 1.0 + 1e-9,
            "majorant at radius 1/3, trial {}".format(trial),
        )
    for trial in range(20):
        generator = _generator(seed, 7, trial)
        n = int(generator.integers(1, 3))
        poly = _random_general(generator, n, int(generator.integers(1, 5)))
        normalized, sup_hi = _normalize(poly, budget)
        margins = bohr.wiener_margin(normalized, sup_hi=sup_hi, **budget.sup_norm_kwargs())
        result.check(
            all(margin >= -1e-9 for _, margin in margins),
            "Wiener margins, trial {}".format(trial),
        )
    return result


def _random_general(generator, n, degree):
    parts = [polyring.random_hom_poly(n, m, generator) for m in range(degree + 1)]
    return polyring.GeneralPoly(n, parts)


def _normalize(poly, budget):
    """Divide by a rounded up certified sup norm; returns the bound one."""
    hi = torusopt.sup_norm(poly, **budget.sup_norm_kwargs()).hi
    return poly.scaled(1.0 / _helpers.round_up(hi, ulps=8)), 1.0


def suite_supnorm(seed, budget):
    result = SuiteResult("supnorm")
    for trial in range(10):
        generator = _generator(seed, 8, trial)
        n = int(generator.integers(1, 4))
        m = int(generator.integers(1, 6))
        poly = polyring.random_hom_poly(n, m, generator)
        enclosure = torusopt.sup_norm(poly, **budget.sup_norm_kwargs())
        oracle = _dense_scan(poly, _SCAN_POINTS[n])
        result.check(
            enclosure.lo * (1.0 - 1e-6) <= oracle <= enclosure.hi * (1.0 + 1e-12),
            "dense scan inside the enclosure, trial {}".format(trial),
        )
        result.check(
            enclosure.hi <= polyring.l1_coeff_norm(poly),
            "enclosure within the l1 norm, trial {}".format(trial),
        )
    return result


def _dense_scan(poly, points_per_axis):
    """Dense grid maximum, polished by ascent from the best grid points."""
    value, point = torusopt.grid_lower_bound(
        poly, points_per_axis, budget=points_per_axis**poly.n
    )
    candidates = [torusopt.local_refine(poly, point)]
    candidates += torusopt.near_maximizers(poly, count=16)
    return max([value] + [abs(poly.evaluate(p.as_complex())) for p in candidates])


def suite_determinism(seed, budget):
    from polydisc import cli

    result = SuiteResult("determinism")
    for argv in (
        ["bounds", "--m", "1..3", "--n", "2..6", "--format", "csv"],
        ["project", "--m", "3", "--n", "3", "--samples", "2000", "--seed", str(seed)],
        ["chaos", "--m", "2", "--n", "6", "--samples", "3", "--seed", str(seed)],
    ):
        first = cli.run(cli.parse_config(argv))[1]
        second = cli.run(cli.parse_config(argv))[1]
        result.check(
            _helpers.report_digest(first) == _helpers.report_digest(second),
            "identical digests for {}".format(argv[0]),
        )
    return result


SUITES = {
    "combinat": suite_combinat,
    "polar": suite_polar,
    "kernel": suite_kernel,
    "chaos": suite_chaos,
    "sidon": suite_sidon,
    "bohr": suite_bohr,
    "supnorm": suite_supnorm,
    "determinism": suite_determinism,
}
"""Mapping[str, Callable]: Suites by name, in the order ``all`` runs them."""


def run_suites(name, seed=common.DEFAULT_SEED, budget=None):
    """Run one suite, or every suite for ``name == "all"``.

    Returns:
        List[SuiteResult]: One result per suite run.
    """
    budget = budget or common.Budget()
    names = list(SUITES) if name == "all" else [name]
    results = []
    for suite in names:
        _LOGGER.info("running suite %s", suite)
        results.append(SUITES[suite](seed, budget))
    return results
