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

"""Kernels that project a homogeneous polynomial onto its tetrahedral part.

With ``p_1 < ... < p_k`` the primes up to ``m``, the kernel

    ``r_m(t) = c_m * exp(2 pi i (t_1 / p_1 + ... + t_k / p_k))``,  ``t in [0, 1]**k``

has first moment one and vanishing moments of orders ``2..m``. Averaging
``P(z_1 r_m(t^1), ..., z_n r_m(t^n))`` over independent ``t^j`` therefore
keeps exactly the monomials with all exponents at most one. The modulus
``|c_m| = prod_k 1 / sinc(pi / p_k)`` increases to the constant

    ``kappa = prod_p 1 / sinc(pi / p) = 2.2092...``

over all primes, which :func:`kappa` encloses rigorously.
"""

import dataclasses
import functools
import logging
import math

import mpmath
import numpy as np

from polydisc import _helpers
from polydisc import combinat
from polydisc import common
from polydisc import polyring


_BAD_TOL = "Tolerance must be positive and finite, got {!r}."
_UNKNOWN_METHOD = "Unknown kappa method {!r}; expected 'auto', 'termwise' or 'prime_zeta'."
# Primes up to here are handled in interval arithmetic by the termwise method.
_INTERVAL_PRIME_LIMIT = 1000
# kappa < 2.21 sizes the prime bound before the enclosure is known.
_KAPPA_ESTIMATE = 2.21
_EPS = float(np.finfo(float).eps)
_ZETA2 = math.pi**2 / 6.0
_ZETA4 = math.pi**4 / 90.0
_ZETA6 = math.pi**6 / 945.0
_MC_BLOCK = 2**14
_LOGGER = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class KernelSpec(object):
    """The kernel ``r_m``.

    Attributes:
        m (int): Degree it projects.
        primes (Tuple[int, ...]): The primes up to ``m``.
        c_m (complex): The normalizing constant.
    """

    m: int
    primes: tuple
    c_m: complex

    @property
    def dimension(self):
        """int: Number of coordinates of ``t``."""
        return len(self.primes)


@functools.lru_cache(maxsize=256)
def kernel_spec(m):
    """Build the kernel for degree ``m``.

    ``c_m`` is the inverse of ``prod_p (p / (2 pi i)) (exp(2 pi i / p) - 1)``,
    i.e. ``prod_p exp(-i pi / p) / sinc(pi / p)``.

    Args:
        m (int): Degree, at least zero.

    Returns:
        KernelSpec: The kernel.
    """
    if m < 0:
        raise ValueError("Kernel degree must be non-negative, got {}".format(m))
    primes = tuple(combinat.primes_upto(m))
    log_modulus = math.fsum(-math.log(_sinc(math.pi / p)) for p in primes)
    phase = -math.pi * math.fsum(1.0 / p for p in primes)
    c_m = math.exp(log_modulus) * complex(math.cos(phase), math.sin(phase))
    return KernelSpec(m=m, primes=primes, c_m=c_m)


def _sinc(x):
    return math.sin(x) / x


def r_eval(spec, t):
    """Evaluate ``r_m`` at one point of the unit cube.

    Args:
        spec (KernelSpec): The kernel.
        t (Sequence[float]): Point with ``spec.dimension`` entries in ``[0, 1]``.

    Returns:
        complex: ``c_m * exp(2 pi i sum_k t_k / p_k)``.

    Raises:
        ~polydisc.common.DimensionError: If ``t`` has the wrong length.
        ValueError: If an entry lies outside ``[0, 1]``.
    """
    t = [float(t_k) for t_k in t]
    if len(t) != spec.dimension:
        raise common.DimensionError(
            spec.dimension, "Kernel point has length", len(t)
        )
    if any(not 0.0 <= t_k <= 1.0 for t_k in t):
        raise ValueError("Kernel point {} leaves the unit cube".format(tuple(t)))
    angle = 2.0 * math.pi * math.fsum(t_k / p for t_k, p in zip(t, spec.primes))
    return spec.c_m * complex(math.cos(angle), math.sin(angle))


def _r_values(spec, t):
    """Vectorized :func:`r_eval` over the last axis of ``t``."""
    if not spec.primes:
        return np.full(t.shape[:-1], spec.c_m, dtype=complex)
    angle = 2.0 * math.pi * (t @ (1.0 / np.array(spec.primes, dtype=float)))
    return spec.c_m * np.exp(1j * angle)


def moment(m, k):
    """Closed form of ``integral r_m**k`` over the unit cube.

    Each prime contributes ``(p / (2 pi i k)) (exp(2 pi i k / p) - 1)``,
    which vanishes exactly when ``p`` divides ``k``. Combined with
    ``c_m**k`` the phases cancel and the moment is
    ``prod_p sinc(pi k / p) / sinc(pi / p)**k``.

    Args:
        m (int): Degree, at least two.
        k (int): Power, at least one.

    Returns:
        complex: The moment; exactly ``1`` for ``k = 1`` and exactly ``0``
        for ``2 <= k <= m``.
    """
    if m < 2 or k < 1:
        raise ValueError("moment needs m >= 2 and k >= 1, got m={}, k={}".format(m, k))
    if k == 1:
        return complex(1.0)
    primes = kernel_spec(m).primes
    if any(k % p == 0 for p in primes):
        return complex(0.0)
    value = 1.0
    for p in primes:
        value *= _sinc(math.pi * k / p) / _sinc(math.pi / p) ** k
    return complex(value)


@functools.lru_cache(maxsize=64)
def kappa(tol, method="auto"):
    """Certified enclosure of ``kappa = prod_p 1 / sinc(pi / p)``.

    ``log kappa = sum_p -log sinc(pi / p)``. Primes up to a bound ``P`` are
    summed explicitly; the tail over ``p > P`` is bounded by one of:

    * ``termwise``: ``0 <= -log sinc x <= x**2 / 6 / (1 - x**2 / pi**2)``
      together with ``sum_{p > P} p**-2 <= 1 / P``. ``P`` grows like
      ``1 / tol``.
    * ``prime_zeta``: ``-log sinc(pi / p) = sum_k zeta(2k) / k * p**(-2k)``;
      the ``k = 1`` tail is ``zeta(2) * (P(2) - sum_{p <= P} p**-2)`` with the
      prime zeta value ``P(2) = sum_k mu(k) / k * log zeta(2k)``, and the
      remaining terms add at most ``0.25 / P**3``. ``P`` grows like
      ``tol**(-1/3)``.

    Args:
        tol (float): Largest width of the returned interval.
        method (str): ``"termwise"``, ``"prime_zeta"`` or ``"auto"``, which
            picks ``"termwise"`` while its prime bound fits
            :data:`~polydisc.common.PRIME_CAP`.

    Returns:
        ~polydisc.polyring.Enclosure: Outward rounded ``[lo, hi]`` with
        ``hi - lo <= tol``.

    Raises:
        ValueError: If ``tol`` is not positive or ``method`` is unknown.
        ~polydisc.common.BudgetError: If ``termwise`` needs primes beyond
            the cap.
    """
    if not (tol > 0 and math.isfinite(tol)):
        raise ValueError(_BAD_TOL.format(tol))
    if method not in ("auto", "termwise", "prime_zeta"):
        raise ValueError(_UNKNOWN_METHOD.format(method))

    if method == "auto":
        fits = _termwise_bound(tol) <= common.PRIME_CAP
        method = "termwise" if fits else "prime_zeta"
        if not fits:
            _LOGGER.info("kappa tol=%g: using the prime zeta tail", tol)

    if method == "termwise":
        return _kappa_termwise(tol)
    return _kappa_prime_zeta(tol)


def _termwise_bound(tol):
    # width ~ kappa * zeta(2) / P, with a few percent to spare.
    return max(10, math.ceil(1.05 * _KAPPA_ESTIMATE * _ZETA2 / tol))


def _kappa_termwise(tol):
    bound = _termwise_bound(tol)
    while True:
        if bound > common.PRIME_CAP:
            raise common.BudgetError(
                common.PRIME_CAP,
                "kappa to tolerance",
                tol,
                "needs primes up to",
                bound,
            )
        enclosure = _termwise_enclosure(bound)
        if enclosure.width <= tol:
            return enclosure
        bound *= 2


def _termwise_enclosure(bound):
    primes = np.array(combinat.primes_upto(bound), dtype=np.int64)
    small = primes[primes <= _INTERVAL_PRIME_LIMIT]
    large = primes[primes > _INTERVAL_PRIME_LIMIT]

    with _helpers.interval_precision(80) as ctx:
        log_kappa = _interval_log_sinc_sum(ctx, small)
        log_kappa += _float_log_sinc_sum(ctx, large)
        tail = (ctx.pi**2 / 6) / (1 - ctx.mpf(1) / bound**2) / bound
        log_kappa += ctx.mpf([0, 1]) * tail
        lo, hi = _helpers.interval_endpoints(ctx.exp(log_kappa))

    return polyring.Enclosure(lo, hi, "termwise primes<={}".format(bound))


def _interval_log_sinc_sum(ctx, primes):
    total = ctx.mpf(0)
    for p in primes:
        x = ctx.pi / int(p)
        total += -ctx.ln(ctx.sin(x) / x)
    return total


def _float_log_sinc_sum(ctx, primes):
    """Enclose ``sum -log sinc(pi / p)`` over large primes in floats.

    Uses ``u (zeta(2) + u zeta(4) / 2 + u**2 zeta(6) / 3)`` with ``u = p**-2``;
    the dropped series terms add at most ``0.26 u**4`` per prime.
    """
    if primes.size == 0:
        return ctx.mpf(0)
    u = 1.0 / primes.astype(float) ** 2
    total = math.fsum(u * (_ZETA2 + u * (_ZETA4 / 2.0 + u * _ZETA6 / 3.0)))
    smallest = float(primes[0])
    truncation = 0.26 / (7.0 * (smallest - 1.0) ** 7)
    rounding = 16.0 * _EPS * total
    return ctx.mpf([total - rounding, total + rounding + truncation])


def _kappa_prime_zeta(tol):
    bound = max(100, math.ceil((4.0 * _KAPPA_ESTIMATE * 0.25 / tol) ** (1.0 / 3.0)))
    digits = max(20.0, -math.log10(tol) + 10.0)
    bits = int(math.ceil(digits * math.log2(10))) + 16
    terms = int(math.ceil(digits * math.log(10) / math.log(4))) + 4

    while True:
        primes = combinat.primes_upto(bound)
        with _helpers.interval_precision(bits) as ctx:
            log_kappa = _interval_log_sinc_sum(ctx, primes)
            partial = ctx.mpf(0)
            for p in primes:
                partial += ctx.mpf(1) / p**2
            prime_zeta = _prime_zeta_two(ctx, terms)
            log_kappa += (ctx.pi**2 / 6) * (prime_zeta - partial)
            log_kappa += ctx.mpf([0, 1]) * ctx.mpf(0.25) / ctx.mpf(bound) ** 3
            lo, hi = _helpers.interval_endpoints(ctx.exp(log_kappa))
        enclosure = polyring.Enclosure(lo, hi, "prime zeta primes<={}".format(bound))
        if enclosure.width <= tol:
            return enclosure
        if bound > common.PRIME_CAP:
            raise common.BudgetError(
                common.PRIME_CAP, "kappa to tolerance", tol, "is out of reach"
            )
        bound *= 2
        bits += 32


def _prime_zeta_two(ctx, terms):
    """Enclose ``sum_p p**-2`` by Mobius inversion of ``log zeta``.

    Truncating after ``K`` terms leaves at most ``(2 / 3) 4**-K``.
    """
    total = ctx.mpf(0)
    for k in range(1, terms + 1):
        mu = combinat.mobius(k)
        if mu:
            total += ctx.mpf(mu) / k * ctx.ln(_zeta_even(ctx, k))
    remainder = ctx.mpf(2) / 3 / ctx.mpf(4) ** terms
    return total + ctx.mpf([-1, 1]) * remainder


def _zeta_even(ctx, k):
    """``zeta(2k) = |B_2k| (2 pi)**2k / (2 (2k)!)``."""
    numerator, denominator = mpmath.bernfrac(2 * k)
    return (
        ctx.mpf(abs(int(numerator)))
        * (2 * ctx.pi) ** (2 * k)
        / (ctx.mpf(int(denominator)) * 2 * math.factorial(2 * k))
    )


def project_tetra_mc(poly, z, samples, seed=common.DEFAULT_SEED, threads=1):
    """Monte Carlo estimate of the tetrahedral part ``T(P)(z)``.

    Averages ``P(z_1 r_m(t^1), ..., z_n r_m(t^n))`` over independent uniform
    ``t^j``. Samples are drawn in blocks, each from its own counter-based
    stream, and block statistics are merged in block order.

    Args:
        poly (~polydisc.polyring.HomPoly): The polynomial ``P``.
        z (Sequence[complex]): Evaluation point.
        samples (int): Number of samples, at least 100.
        seed (int): Base seed.
        threads (int): Worker cap over blocks.

    Returns:
        Tuple[complex, float]: The estimate and its standard error.
    """
    if samples < 100:
        raise ValueError("project_tetra_mc needs at least 100 samples, got {}".format(samples))
    point = np.array(polyring._check_point(z, poly.n), dtype=complex)
    spec = kernel_spec(poly.m)
    starts = range(0, samples, _MC_BLOCK)

    def block_stats(start):
        size = min(_MC_BLOCK, samples - start)
        generator = _helpers.make_generator(seed, start // _MC_BLOCK)
        t = generator.random((size, poly.n, spec.dimension))
        values = poly.evaluate_many(point * _r_values(spec, t))
        mean = _helpers.fsum_complex(values) / size
        spread = math.fsum(np.abs(values - mean) ** 2)
        return size, mean, spread

    count, mean, spread = 0, 0j, 0.0
    for size, block_mean, block_spread in _helpers.ordered_map(
        block_stats, starts, threads
    ):
        total = count + size
        delta = block_mean - mean
        mean += delta * size / total
        spread += block_spread + abs(delta) ** 2 * count * size / total
        count = total

    stderr = math.sqrt(spread / (count - 1) / count)
    return mean, stderr


@dataclasses.dataclass(frozen=True)
class ProjectionCheck(object):
    """A Monte Carlo projection compared with the exact tetrahedral part.

    Attributes:
        estimate (complex): Monte Carlo mean.
        stderr (float): Its standard error.
        exact (complex): ``T(P)(z)`` from :func:`~polydisc.polyring.tetra_split`.
        z_score (float): ``|estimate - exact| / stderr``.
    """

    estimate: complex
    stderr: float
    exact: complex
    z_score: float


def project_tetra_exact_check(poly, z, samples, seed=common.DEFAULT_SEED, threads=1):
    """Run :func:`project_tetra_mc` against the exact split.

    Returns:
        ProjectionCheck: The comparison.
    """
    estimate, stderr = project_tetra_mc(poly, z, samples, seed=seed, threads=threads)
    tetrahedral, _ = polyring.tetra_split(poly)
    exact = tetrahedral.evaluate(z)
    error = abs(estimate - exact)
    if stderr > 0:
        z_score = error / stderr
    else:
        z_score = 0.0 if error <= 1e-12 * max(1.0, abs(exact)) else math.inf
    return ProjectionCheck(estimate, stderr, exact, z_score)
