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

"""Certified sup norms of polynomials on the polydisc.

By the maximum principle in each variable, ``sup |P|`` over the closed
polydisc is attained on the torus ``z_j = exp(i theta_j)``. With
``d_j`` the degree of ``P`` in ``z_j``, every directional derivative of
``theta -> P(exp(i theta))`` along ``u`` is bounded by
``sum_j d_j |u_j| * ||P||`` (Bernstein's inequality for functions of
exponential type). Two certificates follow:

* first order, on a grid of step ``delta``:
  ``||P|| <= grid_max / (1 - (delta / 2) * sum_j d_j)``;
* second order, on a box of half-width ``h`` around ``c`` for
  ``g = |P|**2`` and any ``G >= ||g||``:
  ``g <= g(c) + h * sum_j |dg/dtheta_j(c)| + (h * sum_j d_j)**2 * G / 2``.

:func:`sup_norm` refines grids with the first certificate and, when that
cannot reach the requested width within budget, finishes with a
branch-and-bound over boxes using the second.
"""

import dataclasses
import logging
import math

import numpy as np

from polydisc import _helpers
from polydisc import common
from polydisc import polyring


_TWO_PI = 2.0 * math.pi
_EPS = float(np.finfo(float).eps)
# Rows per vectorized chunk times number of terms.
_CHUNK_ENTRIES = 2**20
# Largest starting grid of the box search.
_BOX_START_CAP = 2**21
# Grid values this close to the maximum count as ties.
_TIE_TOLERANCE = 1e-14
_LOGGER = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class TorusPoint(object):
    """A point ``(exp(i theta_1), ..., exp(i theta_n))`` of the torus.

    Attributes:
        phases (Tuple[float, ...]): The phases, reduced to ``[0, 2 pi)``.
    """

    phases: tuple

    def __post_init__(self):
        reduced = tuple(float(theta) % _TWO_PI for theta in self.phases)
        object.__setattr__(self, "phases", reduced)

    @property
    def n(self):
        """int: Number of coordinates."""
        return len(self.phases)

    def as_array(self):
        """numpy.ndarray: The phases as a float vector."""
        return np.array(self.phases, dtype=float)

    def as_complex(self):
        """numpy.ndarray: The complex point ``exp(i theta)``."""
        return np.exp(1j * self.as_array())


def grid_lower_bound(
    poly,
    N,
    budget=common.GRID_BUDGET,
    offset=None,
    method="auto",
    fft_cap=common.FFT_TENSOR_CAP,
):
    """Largest modulus on the grid ``theta_j = offset_j + 2 pi k / N``.

    Args:
        poly (Union[~polydisc.polyring.HomPoly, ~polydisc.polyring.GeneralPoly]):
            The polynomial.
        N (int): Grid points per axis.
        budget (int): Largest admissible number of grid points ``N**n``.
        offset (Optional[Sequence[float]]): Phase offset per axis. Defaults
            to zero (grid anchored at ``theta = 0``).
        method (str): ``"fft"``, ``"direct"`` or ``"auto"``. ``"auto"`` uses
            the FFT when the dense tensor has at most ``fft_cap`` entries.
        fft_cap (int): Largest dense tensor for ``"auto"``.

    Returns:
        Tuple[float, TorusPoint]: The grid maximum (a lower bound for the
        sup norm) and the first grid point, in row-major order, attaining it
        up to rounding.

    Raises:
        ValueError: If ``N < 1`` or ``method`` is unknown.
        ~polydisc.common.BudgetError: If ``N**n`` exceeds ``budget``.
    """
    if N < 1:
        raise ValueError("Grid size must be at least 1, got {}".format(N))
    n = poly.n
    if N**n > budget:
        raise common.BudgetError(
            budget, "Grid of", N**n, "points exceeds the evaluation budget", budget
        )
    offset = np.zeros(n) if offset is None else np.asarray(offset, dtype=float)
    if poly.is_zero():
        return 0.0, TorusPoint(tuple(offset))

    moduli = np.abs(_grid_values(poly, N, offset, method, fft_cap))
    peak = float(np.max(moduli))
    flat = int(np.argmax(moduli >= peak * (1.0 - _TIE_TOLERANCE)))
    index = np.array(np.unravel_index(flat, moduli.shape), dtype=float)
    return peak, TorusPoint(tuple(offset + _TWO_PI * index / N))


def grid_enclosure(poly, N, offset=None, method="auto", budget=common.GRID_BUDGET):
    """Certified enclosure of ``sup |P|`` from a single grid.

    With ``D = sum_j d_j`` the upper end is
    ``(grid_max + slack) / (1 - pi D / N)`` when ``pi D / N < 1`` and the
    l1 norm otherwise. Both ends are clipped to ``[0, l1_coeff_norm(P)]``.

    Returns:
        ~polydisc.polyring.Enclosure: The enclosure, method ``"grid N=<N>"``.
    """
    if poly.is_zero():
        return polyring.Enclosure(0.0, 0.0, "zero polynomial")
    l1 = polyring.l1_coeff_norm(poly)
    value, _ = grid_lower_bound(poly, N, budget=budget, offset=offset, method=method)
    slack = _value_slack(poly, l1)
    lo = min(l1, max(0.0, _helpers.round_down(value - slack)))
    hi = min(l1, _grid_upper(value, N, sum(poly.variable_degrees()), slack))
    return polyring.Enclosure(lo, max(lo, hi), "grid N={}".format(N))


def _value_slack(poly, l1):
    """Floating error of one evaluation of ``P`` on the torus."""
    return 4.0 * _EPS * l1 * (len(poly) + 8)


def _grid_upper(value, N, total_degree, slack):
    factor = 1.0 - (math.pi / N) * total_degree
    if factor <= 0.0:
        return math.inf
    return _helpers.round_up((value + slack) / factor, ulps=2)


def _grid_values(poly, N, offset, method, fft_cap):
    n = poly.n
    if method == "auto":
        method = "fft" if N**n <= fft_cap else "direct"
    if method == "fft":
        # exp(i alpha.theta) only depends on alpha mod N on this grid.
        tensor = np.zeros((N,) * n, dtype=complex)
        shifted = poly.coefficients * np.exp(1j * (poly.exponents @ offset))
        np.add.at(tensor, tuple((poly.exponents % N).T), shifted)
        return np.fft.ifftn(tensor) * float(N**n)
    if method == "direct":
        values = np.empty(N**n, dtype=complex)
        chunk = max(1, _CHUNK_ENTRIES // max(1, len(poly)))
        for start in range(0, N**n, chunk):
            flat = np.arange(start, min(start + chunk, N**n))
            index = np.stack(np.unravel_index(flat, (N,) * n), axis=1)
            values[start : start + flat.size] = poly.evaluate_torus(
                offset + _TWO_PI * index / N
            )
        return values.reshape((N,) * n)
    raise ValueError("Unknown grid method {!r}".format(method))


def _values_and_gradients(poly, thetas):
    """``g = |P|**2`` and its phase gradient at each row of ``thetas``."""
    exponents = poly.exponents
    weighted = np.exp(1j * (thetas @ exponents.T)) * poly.coefficients
    values = weighted.sum(axis=1)
    derivatives = 1j * (weighted @ exponents)
    g = values.real**2 + values.imag**2
    gradient = 2.0 * (np.conj(values)[:, None] * derivatives).real
    return g, gradient


def local_refine(
    poly,
    start,
    iters=common.MAX_ASCENT_ITERATIONS,
    initial_step=None,
    min_step=common.MIN_ASCENT_STEP,
):
    """Gradient ascent of ``g(theta) = |P(exp(i theta))|**2``.

    Each iteration tries a step along the (max-norm normalized) analytic
    gradient, doubling the step after an ascent and halving it otherwise.

    Args:
        poly (Union[~polydisc.polyring.HomPoly, ~polydisc.polyring.GeneralPoly]):
            The polynomial.
        start (TorusPoint): Starting phases.
        iters (int): Iteration cap.
        initial_step (Optional[float]): First trial step; defaults to
            ``0.5 / max(1, sum_j d_j)``.
        min_step (float): Stop once the step falls below this.

    Returns:
        TorusPoint: A point with ``g(out) >= g(start)``; the best iterate
        when the cap is hit.
    """
    if poly.is_zero():
        return start
    theta = start.as_array()
    if initial_step is None:
        initial_step = 0.5 / max(1, sum(poly.variable_degrees()))
    step = initial_step
    g, gradient = _values_and_gradients(poly, theta[None, :])
    g, gradient = float(g[0]), gradient[0]

    for _ in range(iters):
        scale = float(np.max(np.abs(gradient)))
        if scale == 0.0 or step < min_step:
            break
        trial = theta + step * gradient / scale
        trial_g, trial_gradient = _values_and_gradients(poly, trial[None, :])
        if trial_g[0] > g:
            theta, g, gradient = trial, float(trial_g[0]), trial_gradient[0]
            step = min(2.0 * step, math.pi)
        else:
            step *= 0.5

    return TorusPoint(tuple(theta))


def sup_norm(
    poly,
    rel_err=1e-3,
    budget=common.GRID_BUDGET,
    restarts=common.DEFAULT_RESTARTS,
    seed=common.DEFAULT_SEED,
    threads=1,
):
    """Certified enclosure of ``sup |P|`` over the closed polydisc.

    Args:
        poly (Union[~polydisc.polyring.HomPoly, ~polydisc.polyring.GeneralPoly]):
            The polynomial.
        rel_err (float): Target relative width ``(hi - lo) / lo``.
        budget (int): Total number of torus evaluations allowed.
        restarts (int): Randomly offset grids per refinement pass.
        seed (int): Base seed of the grid offsets.
        threads (int): Worker cap; results do not depend on it.

    Returns:
        ~polydisc.polyring.Enclosure: ``[lo, hi]`` intersected with
        ``[0, l1_coeff_norm(P)]``. ``budget_exceeded`` is set when the
        target width was not reached.

    Raises:
        ValueError: If ``rel_err <= 0``.
    """
    if not rel_err > 0:
        raise ValueError("rel_err must be positive, got {}".format(rel_err))
    return _SupNormSearch(poly, rel_err, budget, restarts, seed, threads).run()


class _SupNormSearch(object):
    """State of one :func:`sup_norm` call."""

    def __init__(self, poly, rel_err, budget, restarts, seed, threads):
        self._poly = poly
        self._rel_err = rel_err
        self._budget = budget
        self._restarts = max(1, restarts)
        self._seed = seed
        self._threads = threads
        self._used = 0
        self._l1 = polyring.l1_coeff_norm(poly)
        self._total_degree = sum(poly.variable_degrees())
        self._value_slack = _value_slack(poly, self._l1)
        self._lo = 0.0
        self._hi = self._l1
        self._best_point = TorusPoint((0.0,) * poly.n)
        self._method = "l1"

    def run(self):
        poly = self._poly
        if poly.is_zero():
            return polyring.Enclosure(0.0, 0.0, "zero polynomial")
        if self._total_degree == 0:
            value = abs(poly.coefficients[0])
            return polyring.Enclosure(value, value, "constant")

        self._raise_lo(self._best_point)
        self._grid_passes()
        if not self._converged():
            self._box_search()

        lo = min(self._lo, self._hi)
        hit = not self._converged()
        if hit:
            _LOGGER.info(
                "sup_norm stopped on its budget of %d evaluations at "
                "relative width %.3g",
                self._budget,
                (self._hi - lo) / lo if lo > 0 else math.inf,
            )
        return polyring.Enclosure(lo, self._hi, self._method, budget_exceeded=hit)

    def _converged(self):
        return self._hi - self._lo <= self._rel_err * self._lo

    def _remaining(self):
        return self._budget - self._used

    def _raise_lo(self, point):
        refined = local_refine(self._poly, point)
        value = abs(self._poly.evaluate_torus(refined.as_array())[0])
        lo = max(0.0, _helpers.round_down(value - self._value_slack))
        if lo > self._lo:
            self._lo = lo
            self._best_point = refined

    def _lower_hi(self, hi, method):
        hi = _helpers.round_up(hi, ulps=2)
        if hi < self._hi:
            self._hi = hi
            self._method = method

    def _grid_passes(self):
        """Doubling grids with the first order certificate."""
        n = self._poly.n
        allowance = self._budget // 2
        # Smallest power of two with (pi / N) * D <= 1/2.
        N = 2 ** max(1, math.ceil(math.log2(_TWO_PI * self._total_degree)))
        while True:
            restarts = min(self._restarts, (allowance - self._used) // N**n)
            if restarts < 1:
                return
            offsets = [np.zeros(n)] + [
                _helpers.make_generator(self._seed, k).uniform(0.0, _TWO_PI / N, n)
                for k in range(1, restarts)
            ]
            results = _helpers.ordered_map(
                lambda offset: grid_lower_bound(
                    self._poly, N, budget=N**n, offset=offset
                ),
                offsets,
                self._threads,
            )
            self._used += restarts * N**n
            for value, _ in results:
                self._lower_hi(
                    _grid_upper(value, N, self._total_degree, self._value_slack),
                    "grid N={}".format(N),
                )
            for _, point in results:
                self._raise_lo(point)
            _LOGGER.debug("grid N=%d: [%r, %r]", N, self._lo, self._hi)
            if self._converged():
                return
            N *= 2

    def _box_search(self):
        """Branch and bound over boxes with the second order certificate."""
        poly = self._poly
        n = poly.n
        D = float(self._total_degree)
        g_slack = 2.0 * self._l1 * self._value_slack + self._value_slack**2

        start_cap = min(_BOX_START_CAP, self._remaining())
        N = 2 ** max(1, math.ceil(math.log2(math.pi * D)))
        while N > 1 and N**n > start_cap:
            N //= 2
        if N**n > start_cap:
            return
        half_width = math.pi / N
        index = np.stack(
            np.unravel_index(np.arange(N**n), (N,) * n), axis=1
        ).astype(float)
        centers = (2.0 * index + 1.0) * half_width
        corners = np.array(
            [[(bit >> j) & 1 for j in range(n)] for bit in range(2**n)], dtype=float
        )
        children = (2.0 * corners - 1.0) * 0.5

        pruned_max = 0.0
        level = 0
        while centers.shape[0]:
            if centers.shape[0] > self._remaining():
                break
            g, g_up = self._bound_boxes(centers, half_width, D, g_slack)
            self._used += centers.shape[0]
            best = int(np.argmax(g))
            self._raise_lo(TorusPoint(tuple(centers[best])))

            threshold = (self._lo * (1.0 + self._rel_err)) ** 2
            keep = g_up > threshold
            if np.any(~keep):
                pruned_max = max(pruned_max, float(np.max(g_up[~keep])))
            live_max = float(np.max(g_up[keep])) if np.any(keep) else 0.0
            self._lower_hi(math.sqrt(max(pruned_max, live_max)), "boxes")
            _LOGGER.debug(
                "box level %d: %d live boxes, [%r, %r]",
                level,
                int(np.count_nonzero(keep)),
                self._lo,
                self._hi,
            )
            if self._converged():
                return

            live = centers[keep]
            centers = (live[:, None, :] + half_width * children[None, :, :]).reshape(
                -1, n
            )
            half_width *= 0.5
            level += 1

    def _bound_boxes(self, centers, half_width, D, g_slack):
        poly = self._poly
        G = self._hi**2
        chunk = max(1, _CHUNK_ENTRIES // max(1, len(poly)))
        blocks = [
            centers[start : start + chunk]
            for start in range(0, centers.shape[0], chunk)
        ]

        def bound_block(block):
            g, gradient = _values_and_gradients(poly, block)
            g_up = (
                g
                + half_width * np.abs(gradient).sum(axis=1)
                + 0.5 * (half_width * D) ** 2 * G
                + g_slack
            )
            return g, g_up

        results = _helpers.ordered_map(bound_block, blocks, self._threads)
        return (
            np.concatenate([g for g, _ in results]),
            np.concatenate([g_up for _, g_up in results]),
        )


def near_maximizers(poly, count=8, grid_cap=2**14):
    """Refined local maximizers of ``|P|`` seeded from a coarse grid.

    Args:
        poly (Union[~polydisc.polyring.HomPoly, ~polydisc.polyring.GeneralPoly]):
            The polynomial.
        count (int): Number of grid points to refine.
        grid_cap (int): Largest grid ``N**n`` to scan.

    Returns:
        List[TorusPoint]: The refined points, best grid value first.
    """
    n = poly.n
    if poly.is_zero():
        return [TorusPoint((0.0,) * n)]
    total_degree = max(1, sum(poly.variable_degrees()))
    N = 2 ** max(1, math.ceil(math.log2(_TWO_PI * total_degree)))
    while N > 1 and N**n > grid_cap:
        N //= 2
    moduli = np.abs(
        _grid_values(poly, N, np.zeros(n), "auto", common.FFT_TENSOR_CAP)
    ).ravel()
    top = np.argsort(-moduli, kind="stable")[:count]
    index = np.stack(np.unravel_index(top, (N,) * n), axis=1)
    return [
        local_refine(poly, TorusPoint(tuple(_TWO_PI * row / N))) for row in index
    ]
