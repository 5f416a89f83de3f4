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

"""Computable lower bounds for the Bohr radius of the polydisc.

The Bohr radius ``K_n`` is the largest ``r`` such that
``sum |c_alpha z**alpha| <= sup |Q|`` on ``r D**n`` for every ``Q``. If
``sup |Q| <= 1`` then every homogeneous part satisfies
``sup |P_m| <= 1 - |P_0|**2``; with ``sum |c_alpha| r**|alpha| <= sup |P_m| U(m, n) r**m``
for any upper bound ``U(m, n)`` of the Sidon constant, the majorant stays
below one whenever

    ``F(r) = sum_{m >= 1} r**m U(m, n) <= 1 / 2``,

because ``|c_0| + (1 - |c_0|**2) / 2 <= 1``. :func:`bohr_lower` bisects for
the largest such ``r``.
"""

import dataclasses
import functools
import logging
import math

from polydisc import _helpers
from polydisc import combinat
from polydisc import common
from polydisc import polyring
from polydisc import sidon_bounds
from polydisc import torusopt


_PRECISION = 80
_THRESHOLD = 0.5
_MAX_SERIES_TERMS = 100000
_MAX_BISECTIONS = 200
_STRATEGIES = ("min", "split")
_LOG_FLOAT_MAX = 700.0
_TRIVIAL_SLACK = 1e-12
_LOGGER = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class BohrReport(object):
    """Result of :func:`bohr_lower`.

    Attributes:
        n (int): Dimension.
        r_lower (float): Certified lower bound for ``K_n``.
        r_upper (float): ``2 sqrt(log n / n)``, a known upper bound.
        b_estimate (float): ``r_lower * sqrt(n / log n)``.
        terms_used (int): Series terms summed explicitly at ``r_lower``.
        tail_bound (float): Bound on the remaining series tail.
        strategy (str): How ``U(m, n)`` was selected.
    """

    n: int
    r_lower: float
    r_upper: float
    b_estimate: float
    terms_used: int
    tail_bound: float
    strategy: str = "min"

    def as_record(self):
        return dataclasses.asdict(self)


def bohr_majorant(poly, r):
    """``sum_m r**m l1_coeff_norm(P_m)``: the majorant's sup over ``r D**n``.

    Args:
        poly (Union[~polydisc.polyring.GeneralPoly, ~polydisc.polyring.HomPoly]):
            The polynomial ``Q``.
        r (float): Radius, at least zero.

    Returns:
        float: The value.
    """
    if r < 0:
        raise ValueError("Radius must be non-negative, got {}".format(r))
    return math.fsum(
        r**m * polyring.l1_coeff_norm(part)
        for m, part in polyring.homogeneous_parts(poly)
    )


def wiener_margin(poly, sup_hi=None, **sup_norm_kwargs):
    """Margins ``(1 - |P_0|**2) - sup |P_m|`` for every part of degree ``m > 0``.

    Each margin uses the lower end of the sup-norm enclosure of ``P_m``, so
    a negative margin beyond rounding would contradict the bound.

    Args:
        poly (Union[~polydisc.polyring.GeneralPoly, ~polydisc.polyring.HomPoly]):
            A polynomial with ``sup |Q| <= 1``.
        sup_hi (Optional[float]): A certified upper bound for ``sup |Q|``
            known to the caller; computed with
            :func:`~polydisc.torusopt.sup_norm` when omitted.
        sup_norm_kwargs: Passed to :func:`~polydisc.torusopt.sup_norm`.

    Returns:
        List[Tuple[int, float]]: ``(m, margin)`` by increasing ``m``.

    Raises:
        ~polydisc.common.NormalizationError: If the certified sup norm of
            ``Q`` exceeds one.
    """
    if sup_hi is None:
        sup_hi = torusopt.sup_norm(poly, **sup_norm_kwargs).hi
    if sup_hi > 1.0:
        raise common.NormalizationError(
            sup_hi, "Certified sup norm", sup_hi, "exceeds one"
        )
    constant = abs(polyring.as_general(poly).constant_term)
    slack = 1.0 - constant**2
    margins = []
    for m, part in polyring.homogeneous_parts(poly):
        if m == 0:
            continue
        lo = torusopt.sup_norm(part, **sup_norm_kwargs).lo
        margins.append((m, slack - lo))
    return margins


def _check_strategy(strategy):
    if strategy not in _STRATEGIES:
        raise ValueError(
            "Unknown strategy {!r}; expected one of {}".format(strategy, _STRATEGIES)
        )


def split_degree(n):
    """float: ``log n / (2 + 2 log kappa)``; below it ``"split"`` uses the lemma bound."""
    return math.log(n) / (2.0 + 2.0 * math.log(sidon_bounds.kappa_upper()))


@functools.lru_cache(maxsize=65536)
def log_degree_bound(m, n, strategy="min"):
    """``log U(m, n)``, rounded up.

    Args:
        m (int): Degree, at least one.
        n (int): Dimension, at least two.
        strategy (str): ``"min"`` takes every applicable bound; ``"split"``
            uses the lemma bound only for ``m < log n / (2 + 2 log kappa)``.

    Returns:
        float: The logarithm of the bound.
    """
    _check_strategy(strategy)
    if m < 1 or n < 1:
        raise ValueError("Expected m >= 1 and n >= 1, got m={}, n={}".format(m, n))
    if m == 1:
        return 0.0
    candidates = []
    with _helpers.interval_precision(_PRECISION) as ctx:
        count = combinat.monomial_count(n, m)
        candidates.append(ctx.ln(ctx.mpf(count)) / 2)
        growth = ctx.mpf(n) / m if n > m else ctx.mpf(1)
        candidates.append(m * ctx.ln(2 * ctx.exp(1)) + ctx.mpf(m) / 2 * ctx.ln(growth))
        uppers = [_helpers.interval_upper(value) for value in candidates]
    use_main = strategy == "min" or m < split_degree(n)
    if use_main:
        main = sidon_bounds.upper_main(m, n)
        if main is not None:
            uppers.append(_helpers.round_up(math.log(main), ulps=2))
    return min(uppers)


def degree_bound(m, n, strategy="min"):
    """The per-degree Sidon bound ``U(m, n)``.

    ``U(1, n) = 1``; otherwise the minimum of the trivial bound, the lemma
    bound when it applies (and the strategy allows it) and
    ``(2e)**m max(1, n / m)**(m / 2)``.

    Returns:
        float: The bound rounded up (``inf`` past the float range).
    """
    log_value = log_degree_bound(m, n, strategy)
    try:
        return _helpers.round_up(math.exp(log_value), ulps=2)
    except OverflowError:
        return math.inf


def series_value(
    r, n, strategy="min", tail_tol=common.TAIL_TOLERANCE, give_up_above=math.inf
):
    """Upper bound for ``F(r) = sum_{m >= 1} r**m U(m, n)``.

    Terms are summed until a certified bound on the tail is at most
    ``tail_tol``. Two tail bounds are computed after every term and the
    smaller one is used:

    * ``U(m, n) <= (2e)**m max(1, n / m)**(m / 2)`` gives the geometric
      series ``q**(M+1) / (1 - q)`` with
      ``q = 2e r max(1, sqrt(n / (M + 1)))``; it needs ``2 e r < 1``.
    * The trivial bound ``U(m, n) <= sqrt(C(n + m - 1, m)) <= (m + 1)**a``
      with ``a = (n - 1) / 2`` gives a series with term ratio at most
      ``r ((M + 3) / (M + 2))**a`` past ``M + 1``; it needs only ``r < 1``.

    Args:
        r (float): Radius, at least zero.
        n (int): Dimension.
        strategy (str): Passed to :func:`log_degree_bound`.
        tail_tol (float): Largest accepted tail.
        give_up_above (float): Stop with ``inf`` once the partial sum
            exceeds this.

    Returns:
        Tuple[float, int, float]: ``(value, terms_used, tail_bound)``. The
        value is ``inf`` when ``r >= 1`` or the partial sum passed
        ``give_up_above``.

    Raises:
        ~polydisc.common.NotConvergedError: If neither tail bound reaches
            ``tail_tol`` within the term cap.
    """
    if r < 0:
        raise ValueError("Radius must be non-negative, got {}".format(r))
    if r == 0:
        return 0.0, 0, 0.0
    if r >= 1.0:
        return math.inf, 0, math.inf
    log_r = math.log(r)
    terms = []
    partial = 0.0
    for M in range(1, _MAX_SERIES_TERMS + 1):
        exponent = M * log_r + log_degree_bound(M, n, strategy)
        if exponent > _LOG_FLOAT_MAX:
            return math.inf, M, math.inf
        terms.append(_helpers.round_up(math.exp(exponent), ulps=4))
        partial += terms[-1]
        if partial > give_up_above:
            return math.inf, M, math.inf
        tail = min(_growth_tail(r, n, M), _trivial_tail(log_r, n, M))
        if tail <= tail_tol:
            value = _helpers.round_up(math.fsum(terms) + tail, ulps=2)
            return value, M, tail
    raise common.NotConvergedError(r, "Series tail did not fall below", tail_tol)


def _growth_tail(r, n, M):
    q = 2.0 * math.e * r * max(1.0, math.sqrt(n / (M + 1.0)))
    if q >= 1.0:
        return math.inf
    return _helpers.round_up(math.exp((M + 1) * math.log(q)) / (1.0 - q), ulps=4)


def _trivial_tail(log_r, n, M):
    a = (n - 1) / 2.0
    log_q = log_r + a * math.log1p(1.0 / (M + 2.0))
    if log_q >= 0.0:
        return math.inf
    growth, decay = a * math.log(M + 2.0), (M + 1) * log_r
    log_tail = growth + decay - math.log(-math.expm1(log_q))
    if log_tail > _LOG_FLOAT_MAX:
        return math.inf
    # Absorbs rounding of the logarithms and of the trivial bound itself.
    log_tail += _TRIVIAL_SLACK * (1.0 + abs(growth) + abs(decay))
    return _helpers.round_up(math.exp(log_tail), ulps=4)


def bohr_lower(n, tol=1e-6, strategy="min"):
    """Bisect for the largest ``r`` with ``F(r) <= 1/2``.

    Args:
        n (int): Dimension, at least two.
        tol (float): Relative width of the final bracket.
        strategy (str): ``"min"`` or ``"split"``.

    Returns:
        BohrReport: The report; ``r_lower`` satisfies ``F(r_lower) <= 1/2``
        and ``F(r_lower * (1 + tol)) > 1/2``.

    Raises:
        ~polydisc.common.NotConvergedError: If no bracket can be formed or
            bisection does not reach ``tol``.
    """
    if n < 2:
        raise ValueError("bohr_lower needs n >= 2, got {}".format(n))
    if not tol > 0:
        raise ValueError("tol must be positive, got {}".format(tol))
    _check_strategy(strategy)

    r_upper = 2.0 * math.sqrt(math.log(n) / n)
    lo, hi = 0.0, r_upper
    # F(r) >= r, so hi = 1 always brackets.
    while _series(hi, n, strategy) <= _THRESHOLD:
        if hi >= 1.0:
            raise common.NotConvergedError(hi, "Could not bracket the threshold")
        hi = min(1.0, 2.0 * hi)

    for _ in range(_MAX_BISECTIONS):
        if lo > 0 and hi - lo <= tol * lo:
            break
        mid = 0.5 * (lo + hi)
        if _series(mid, n, strategy) <= _THRESHOLD:
            lo = mid
        else:
            hi = mid
    else:
        raise common.NotConvergedError(lo, "Bisection did not reach", tol)

    _, terms_used, tail = series_value(lo, n, strategy)
    report = BohrReport(
        n=n,
        r_lower=lo,
        r_upper=r_upper,
        b_estimate=lo * math.sqrt(n / math.log(n)),
        terms_used=terms_used,
        tail_bound=tail,
        strategy=strategy,
    )
    _LOGGER.debug("bohr_lower n=%d: %r", n, report)
    return report


def _series(r, n, strategy):
    try:
        return series_value(r, n, strategy, give_up_above=_THRESHOLD)[0]
    except common.NotConvergedError:
        # An uncertified tail counts as above the threshold.
        return math.inf


def calculus_inequality_check(n, m):
    """Whether ``(log n)**m <= n * m!``, decided with outward rounding.

    Returns:
        bool: ``True`` when the upper end of ``(log n)**m`` is at most the
        lower end of ``n * m!``.
    """
    if n < 1 or m < 1:
        raise ValueError("Expected n >= 1 and m >= 1, got n={}, m={}".format(n, m))
    with _helpers.interval_precision(_PRECISION) as ctx:
        lhs = _helpers.interval_upper(ctx.ln(ctx.mpf(n)) ** m)
        rhs = _helpers.interval_endpoints(ctx.mpf(n * math.factorial(m)))[0]
    return lhs <= rhs


def asymptotic_target():
    """float: ``1 / sqrt(2e (1 + log kappa))``, the limit suggested for ``b(n)``."""
    with _helpers.interval_precision(_PRECISION) as ctx:
        value = 1 / ctx.sqrt(
            2 * ctx.exp(1) * (1 + ctx.ln(ctx.mpf(sidon_bounds.kappa_upper())))
        )
        return _helpers.interval_endpoints(value)[0]


def boas_khavinson_bracket(n):
    """The classical bracket ``(sqrt(1 / n) / 3, 2 sqrt(log n / n))`` for ``K_n``."""
    if n < 2:
        raise ValueError("Bracket needs n >= 2, got {}".format(n))
    return math.sqrt(1.0 / n) / 3.0, 2.0 * math.sqrt(math.log(n) / n)


def _mobius_degree(a, degree, target=1e-12):
    while polyring.mobius_truncation_bound(a, 1.0, degree) > target:
        degree *= 2
    return degree


def mobius_margin(a, degree=common.MOBIUS_TRUNCATION_DEGREE):
    """Wiener margin at ``m = 1`` of the disc automorphism ``(a - z) / (1 - a z)``.

    The Taylor polynomial is truncated at ``degree`` (raised until the
    truncation bound on the circle is below ``1e-12``) and divided by
    ``1 + t`` with ``t`` that bound, which certifies ``sup <= 1``. The
    untruncated map has margin exactly zero.

    Returns:
        Tuple[float, float]: The margin and ``t``.
    """
    degree = _mobius_degree(a, degree)
    truncation = polyring.mobius_truncation_bound(a, 1.0, degree)
    normalized = polyring.mobius_polynomial(a, degree).scaled(1.0 / (1.0 + truncation))
    margins = dict(wiener_margin(normalized, sup_hi=1.0))
    return margins.get(1, 1.0 - abs(normalized.constant_term) ** 2), truncation


def mobius_majorant(a, r, degree=common.MOBIUS_TRUNCATION_DEGREE):
    """Majorant at radius ``r`` of the normalized truncated automorphism.

    The truncated polynomial is divided by ``1 + t`` (``t`` the truncation
    bound on the circle), so its sup norm is at most one and a value above
    one shows ``K_1 < r``.

    Returns:
        float: The majorant, rounded down.
    """
    truncation = polyring.mobius_truncation_bound(a, 1.0, degree)
    value = bohr_majorant(polyring.mobius_polynomial(a, degree), r)
    return _helpers.round_down(value / (1.0 + truncation), ulps=4)
