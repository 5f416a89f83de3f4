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

"""Bounds for the Sidon constant ``S(m, n)`` of homogeneous polynomials.

``S(m, n)`` is the smallest ``C`` with ``sum |c_alpha| <= C * sup |P|`` for
every ``m``-homogeneous ``P`` in ``n`` variables. Upper bounds come from
explicit formulas evaluated in interval arithmetic and rounded up; lower
bounds come from witnesses whose ratio is certified against the upper end
of a sup-norm enclosure.
"""

import dataclasses
import logging
import math

import numpy as np

from polydisc import _helpers
from polydisc import combinat
from polydisc import common
from polydisc import kernelproj
from polydisc import polyring
from polydisc import torusopt


_BAD_DEGREES = "Expected m >= 1 and n >= 1, got m={!r}, n={!r}."
_PRECISION = 80
# Phase values tried per coefficient during relaxation.
_PHASE_STEPS = 64
_RELAX_PASSES = 2
_SPARSE_SUPPORT_CAP = 64
_LOGGER = logging.getLogger(__name__)


def kappa_upper():
    """float: Upper end of the certified ``kappa`` enclosure used in bounds."""
    return kernelproj.kappa(common.KAPPA_UPPER_TOL).hi


def _check_degrees(m, n):
    if m < 1 or n < 1:
        raise ValueError(_BAD_DEGREES.format(m, n))


def upper_trivial(m, n):
    """``sqrt(C(n + m - 1, m))``, rounded up.

    Args:
        m (int): Degree, at least one.
        n (int): Number of variables, at least one.

    Returns:
        float: The bound.
    """
    _check_degrees(m, n)
    with _helpers.interval_precision(_PRECISION) as ctx:
        return _helpers.interval_upper(
            ctx.sqrt(ctx.mpf(combinat.monomial_count(n, m)))
        )


def main_applicable(m, n):
    """Whether the remainder and tetrahedral estimates apply: ``n > m**2 > 1``."""
    return n > m * m > 1 and m < n


def remainder_bound(m, n):
    """``sqrt(2 m e n**(m-1) / (m-1)!)``, rounded up.

    Bounds the contribution of the monomials with an exponent above one.
    """
    _check_degrees(m, n)
    with _helpers.interval_precision(_PRECISION) as ctx:
        value = ctx.sqrt(
            2 * m * ctx.exp(1) * ctx.mpf(n) ** (m - 1) / math.factorial(m - 1)
        )
        return _helpers.interval_upper(value)


def tetrahedral_bound(m, n):
    """``(e kappa)**m sqrt(C(n - 1, m - 1))``, rounded up.

    Bounds the contribution of the tetrahedral part, with ``kappa`` taken at
    the upper end of its enclosure.
    """
    _check_degrees(m, n)
    with _helpers.interval_precision(_PRECISION) as ctx:
        value = (ctx.exp(1) * ctx.mpf(kappa_upper())) ** m * ctx.sqrt(
            ctx.mpf(combinat.binomial(n - 1, m - 1))
        )
        return _helpers.interval_upper(value)


def upper_main(m, n):
    """The remainder plus tetrahedral bound when it applies.

    Args:
        m (int): Degree.
        n (int): Number of variables.

    Returns:
        Optional[float]: The bound rounded up, or ``None`` unless
        ``n > m**2 > 1``.
    """
    if not main_applicable(m, n):
        return None
    return _helpers.round_up(remainder_bound(m, n) + tetrahedral_bound(m, n))


def upper_best(m, n):
    """Smallest applicable upper bound for ``S(m, n)``.

    Returns:
        float: ``1.0`` for ``m = 1``, else the minimum of
        :func:`upper_trivial` and :func:`upper_main` when it applies.
    """
    _check_degrees(m, n)
    if m == 1:
        return 1.0
    best = upper_trivial(m, n)
    main = upper_main(m, n)
    if main is not None:
        best = min(best, main)
    return best


def old_bound_shape(m, n):
    """``n**((m-1)/2)``: the shape of the older bound, constant omitted.

    Shown in reports for context only.
    """
    _check_degrees(m, n)
    return float(n) ** ((m - 1) / 2.0)


def theorem1_constant():
    """float: ``e * kappa + 2``, rounded up."""
    with _helpers.interval_precision(_PRECISION) as ctx:
        return _helpers.interval_upper(ctx.exp(1) * ctx.mpf(kappa_upper()) + 2)


def theorem1_shape(m, n):
    """``C**m sqrt(n**(m-1) / (m-1)!)`` with ``C = e kappa + 2``.

    The value is rounded down, so checking ``upper_best <= theorem1_shape``
    is conservative.
    """
    _check_degrees(m, n)
    with _helpers.interval_precision(_PRECISION) as ctx:
        value = ctx.mpf(theorem1_constant()) ** m * ctx.sqrt(
            ctx.mpf(n) ** (m - 1) / math.factorial(m - 1)
        )
        return _helpers.interval_endpoints(value)[0]


def first_nontrivial_n(m, n_max=10**8, points_per_decade=16):
    """Smallest ``n`` on a log grid where :func:`upper_main` beats the trivial bound.

    Args:
        m (int): Degree, at least two.
        n_max (int): Largest ``n`` scanned.
        points_per_decade (int): Grid density.

    Returns:
        Optional[int]: The first grid value, or ``None`` if there is none.
    """
    n = m * m + 1
    step = 10.0 ** (1.0 / points_per_decade)
    while n <= n_max:
        main = upper_main(m, n)
        if main is not None and main < upper_trivial(m, n):
            return n
        n = max(n + 1, int(math.ceil(n * step)))
    return None


def certified_ratio(poly, rel_err=1e-3, **sup_norm_kwargs):
    """``l1_coeff_norm(P) / sup_norm(P).hi``: a certified lower bound for ``S``.

    Args:
        poly (~polydisc.polyring.HomPoly): A nonzero witness.
        rel_err (float): Target width of the sup-norm enclosure.
        sup_norm_kwargs: Passed to :func:`~polydisc.torusopt.sup_norm`.

    Returns:
        float: The ratio.

    Raises:
        ~polydisc.common.DegenerateError: If ``poly`` is zero.
    """
    if poly.is_zero():
        raise common.DegenerateError(poly, "The zero polynomial has no Sidon ratio")
    enclosure = torusopt.sup_norm(poly, rel_err=rel_err, **sup_norm_kwargs)
    return polyring.l1_coeff_norm(poly) / enclosure.hi


def lower_search(m, n, budget=None, seed=common.DEFAULT_SEED, rel_err=1e-3):
    """Search for a witness with a large certified Sidon ratio.

    The candidates are the all-ones polynomial on the full support, a single
    monomial, and one random unimodular polynomial per restart whose
    support is full, tetrahedral or a random sparse subset (in turn). Each
    random candidate has its coefficient phases relaxed against its current
    near-maximizers before it is scored by :func:`certified_ratio`.

    Args:
        m (int): Degree.
        n (int): Number of variables.
        budget (Optional[~polydisc.common.Budget]): Caps; the restart count
            is ``budget.restarts``.
        seed (int): Base seed; restart ``k`` draws from stream ``k``.
        rel_err (float): Target width of each sup-norm enclosure.

    Returns:
        Tuple[~polydisc.polyring.HomPoly, float]: The best witness and its
        certified ratio. Ties go to the lexicographically smallest
        serialization.

    Raises:
        ~polydisc.common.CapacityError: If the full support exceeds the
            enumeration cap.
        ~polydisc.common.DegenerateError: If every candidate is zero.
    """
    _check_degrees(m, n)
    budget = budget or common.Budget()
    full = combinat.enum_multi_indices(n, m, cap=budget.enumeration)
    candidates = [
        polyring.HomPoly(n, m, {alpha: 1.0 for alpha in full}),
        polyring.HomPoly(n, m, {full[0]: 1.0}),
    ]
    for restart in range(budget.restarts):
        generator = _helpers.make_generator(seed, restart)
        support = _draw_support(generator, restart % 3, full, n, m)
        phases = generator.uniform(0.0, 2.0 * math.pi, len(support))
        poly = polyring.HomPoly(n, m, zip(support, np.exp(1j * phases)))
        candidates.append(_relax_phases(poly))

    def score(poly):
        if poly.is_zero():
            return 0.0
        return certified_ratio(
            poly,
            rel_err=rel_err,
            budget=budget.grid_evaluations,
            restarts=budget.restarts,
            seed=seed,
        )

    ratios = _helpers.ordered_map(score, candidates, budget.threads)
    best, best_ratio, best_serialized = None, 0.0, None
    for poly, ratio in zip(candidates, ratios):
        serialized = polyring.write_poly(poly)
        if ratio > best_ratio or (
            ratio == best_ratio and best is not None and serialized < best_serialized
        ):
            best, best_ratio, best_serialized = poly, ratio, serialized
    if best is None:
        raise common.DegenerateError(candidates, "Every candidate has zero norm")
    _LOGGER.info("lower_search m=%d n=%d: certified ratio %.17g", m, n, best_ratio)
    return best, best_ratio


def _draw_support(generator, kind, full, n, m):
    if kind == 1 and m <= n:
        return combinat.enum_tetrahedral(n, m)
    if kind == 2:
        size = min(len(full), _SPARSE_SUPPORT_CAP)
        size = int(generator.integers(1, size + 1))
        chosen = np.sort(generator.choice(len(full), size=size, replace=False))
        return [full[i] for i in chosen]
    return list(full)


def _relax_phases(poly):
    """Coordinate-wise phase relaxation against near-maximizers.

    Each coefficient in turn gets the phase, out of a fixed set of
    ``_PHASE_STEPS`` values, that minimizes the largest modulus over the
    current near-maximizers; moduli of coefficients are kept.
    """
    exponents = poly.exponents
    coefficients = np.array(poly.coefficients)
    angles = np.exp(2j * math.pi * np.arange(_PHASE_STEPS) / _PHASE_STEPS)
    for _ in range(_RELAX_PASSES):
        current = polyring.HomPoly(poly.n, poly.m, zip(map(tuple, exponents), coefficients))
        points = np.array([p.phases for p in torusopt.near_maximizers(current)])
        monomials = np.exp(1j * (points @ exponents.T))
        values = monomials @ coefficients
        for t in range(len(coefficients)):
            rest = values - monomials[:, t] * coefficients[t]
            trial = rest[:, None] + abs(coefficients[t]) * monomials[:, t, None] * angles[None, :]
            choice = int(np.argmin(np.max(np.abs(trial), axis=0)))
            coefficients[t] = abs(coefficients[t]) * angles[choice]
            values = rest + monomials[:, t] * coefficients[t]
    return polyring.HomPoly(poly.n, poly.m, zip(map(tuple, exponents), coefficients))


@dataclasses.dataclass(frozen=True)
class SidonBoundReport(object):
    """Upper and lower bounds for one ``S(m, n)``.

    Attributes:
        m (int): Degree.
        n (int): Number of variables.
        upper_trivial (float): :func:`upper_trivial`.
        upper_main (Optional[float]): :func:`upper_main`, ``None`` when it
            does not apply.
        upper_best (float): :func:`upper_best`.
        applicable (Mapping[str, bool]): Which formulas' preconditions hold.
        old_bound_shape (float): :func:`old_bound_shape`, for context.
        lower_certified (Optional[float]): Certified ratio of the witness.
        witness (Optional[~polydisc.polyring.HomPoly]): The witness.
    """

    m: int
    n: int
    upper_trivial: float
    upper_main: object
    upper_best: float
    applicable: dict
    old_bound_shape: float
    lower_certified: object = None
    witness: object = None

    @property
    def sandwich_holds(self):
        """bool: ``lower_certified <= upper_best`` (true without a witness)."""
        if self.lower_certified is None:
            return True
        return self.lower_certified <= self.upper_best * (1.0 + 1e-9)

    def as_record(self):
        """Dict[str, object]: JSON-ready fields, witness serialized."""
        witness = None
        if self.witness is not None:
            witness = polyring.poly_record(self.witness)
        return {
            "m": self.m,
            "n": self.n,
            "lower": self.lower_certified,
            "upper_trivial": self.upper_trivial,
            "upper_main": self.upper_main,
            "upper_best": self.upper_best,
            "applicable": dict(self.applicable),
            "old_bound_shape": self.old_bound_shape,
            "witness": witness,
        }


def sidon_report(m, n, lower=None):
    """Collect every bound for ``S(m, n)``.

    Args:
        m (int): Degree.
        n (int): Number of variables.
        lower (Optional[Tuple[~polydisc.polyring.HomPoly, float]]): A
            :func:`lower_search` result to include.

    Returns:
        SidonBoundReport: The report.
    """
    witness, ratio = lower if lower is not None else (None, None)
    return SidonBoundReport(
        m=m,
        n=n,
        upper_trivial=upper_trivial(m, n),
        upper_main=upper_main(m, n),
        upper_best=upper_best(m, n),
        applicable={
            "trivial": True,
            "main": main_applicable(m, n),
            "linear": m == 1,
        },
        old_bound_shape=old_bound_shape(m, n),
        lower_certified=ratio,
        witness=witness,
    )
