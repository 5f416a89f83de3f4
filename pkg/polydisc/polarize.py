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

"""The symmetric multilinear form attached to a homogeneous polynomial.

For ``P`` homogeneous of degree ``m`` there is exactly one symmetric
``m``-linear form ``B`` with ``B(z, ..., z) = P(z)``. It is never stored
as a tensor: values come from the polarization formula and coefficients
from ``b_beta = c_alpha / h(beta)``.
"""

import fractions
import math

import numpy as np

from polydisc import _helpers
from polydisc import combinat
from polydisc import common


# Sign patterns evaluated per vectorized block.
_SIGN_BLOCK = 2**12


class SymForm(object):
    """The symmetric form ``B`` of a homogeneous polynomial.

    Args:
        source (~polydisc.polyring.HomPoly): The polynomial ``P``.
    """

    def __init__(self, source):
        self._source = source

    @property
    def source(self):
        """~polydisc.polyring.HomPoly: The defining polynomial."""
        return self._source

    @property
    def m(self):
        """int: Number of arguments."""
        return self._source.m

    def __call__(self, *points, **kwargs):
        """Evaluate ``B(points[0], ..., points[m-1])``."""
        return polarize_eval(self._source, points, **kwargs)

    def coefficient(self, beta):
        """The coefficient ``b_beta`` of an index word."""
        return form_coefficient(self._source, beta)

    def l1_norm(self):
        """float: Sum of ``|b_beta|`` over all words."""
        return form_l1_norm(self._source)


def polarize_eval(poly, points, threads=1):
    """Evaluate the symmetric form by the polarization formula.

    ``B(z1, ..., zm) = 1 / (2**m m!) * sum_eps eps_1 ... eps_m P(sum eps_i z_i)``
    over all sign vectors. The summand is even in ``eps``, so only
    ``eps_1 = +1`` is enumerated and the sum is doubled.

    Args:
        poly (~polydisc.polyring.HomPoly): The polynomial ``P`` of degree ``m``.
        points (Sequence[Sequence[complex]]): Exactly ``m`` points of length
            ``n``.
        threads (int): Worker cap over sign blocks.

    Returns:
        complex: The value of ``B``.

    Raises:
        ~polydisc.common.ArityError: If ``len(points) != m``.
        ~polydisc.common.BudgetError: If ``m`` exceeds
            :data:`~polydisc.common.MAX_POLARIZATION_DEGREE`.
        ~polydisc.common.DimensionError: If a point has the wrong length.
    """
    m = poly.m
    if len(points) != m:
        raise common.ArityError(
            m, "Polarization of degree", m, "called with", len(points), "points"
        )
    if m > common.MAX_POLARIZATION_DEGREE:
        raise common.BudgetError(
            common.MAX_POLARIZATION_DEGREE,
            "Polarization sum of 2**{} terms exceeds the cap".format(m),
        )
    if m == 0:
        return poly.coefficient((0,) * poly.n)

    matrix = np.array([_check_length(z, poly.n) for z in points], dtype=complex)
    patterns = 2 ** (m - 1)
    starts = range(0, patterns, _SIGN_BLOCK)

    def block_sum(start):
        codes = np.arange(start, min(start + _SIGN_BLOCK, patterns))
        # bit i of the code is the sign of point i + 1; point 0 keeps +1.
        bits = (codes[:, None] >> np.arange(m - 1)[None, :]) & 1
        signs = 1.0 - 2.0 * bits
        sums = matrix[0] + signs @ matrix[1:]
        weights = np.prod(signs, axis=1)
        return _helpers.fsum_complex(weights * poly.evaluate_many(sums))

    total = _helpers.fsum_complex(_helpers.ordered_map(block_sum, starts, threads))
    return total / (2.0 ** (m - 1) * math.factorial(m))


def repeated_points(points, parts):
    """Argument list with ``points[k]`` repeated ``parts[k]`` times.

    Args:
        points (Sequence[Sequence[complex]]): Distinct points.
        parts (Sequence[int]): Multiplicities.

    Returns:
        List[Sequence[complex]]: The expanded argument list.
    """
    if len(points) != len(parts):
        raise common.PartitionError(
            parts, "Got", len(points), "points for", len(parts), "parts"
        )
    expanded = []
    for point, count in zip(points, parts):
        expanded.extend([point] * count)
    return expanded


def form_coefficient(poly, beta):
    """The coefficient ``b_beta = B(e_{beta_1}, ..., e_{beta_m})``.

    Args:
        poly (~polydisc.polyring.HomPoly): The polynomial.
        beta (Sequence[int]): Index word of length ``m`` over ``1..n``.

    Returns:
        complex: ``c_alpha / h(beta)`` for the profile ``alpha`` of ``beta``.

    Raises:
        ~polydisc.common.ArityError: If ``len(beta) != m``.
    """
    if len(beta) != poly.m:
        raise common.ArityError(
            poly.m, "Word", tuple(beta), "does not have length", poly.m
        )
    alpha = combinat.word_profile(beta, poly.n)
    return poly.coefficient(alpha) / combinat.word_count(alpha)


def form_l1_norm(poly):
    """Sum of ``|b_beta|`` over all ``n**m`` index words.

    Each profile ``alpha`` is realized by ``h`` words sharing the coefficient
    ``c_alpha / h``, so the sum is taken over the stored terms only.

    Args:
        poly (~polydisc.polyring.HomPoly): The polynomial.

    Returns:
        float: The norm; equal to the coefficient l1 norm of ``P``.
    """
    values = []
    for alpha, coefficient in poly.items():
        count = combinat.word_count(alpha)
        values.append(count * abs(coefficient / count))
    return math.fsum(values)


def harris_constant(m, parts):
    """Constant of the inequality for ``B`` at repeated arguments.

    ``(m_1! ... m_k! / (m_1**m_1 ... m_k**m_k)) * m**m / m!``, computed
    exactly and converted once.

    Args:
        m (int): Degree.
        parts (Sequence[int]): Positive multiplicities summing to ``m``.

    Returns:
        float: The constant.

    Raises:
        ~polydisc.common.PartitionError: If a part is not positive or the
            parts do not sum to ``m``.
    """
    parts = tuple(parts)
    if not parts or any(p < 1 for p in parts) or sum(parts) != m:
        raise common.PartitionError(parts, "Parts", parts, "do not partition", m)
    constant = fractions.Fraction(m**m, math.factorial(m))
    for part in parts:
        constant *= fractions.Fraction(math.factorial(part), part**part)
    return float(constant)


def partitions(m):
    """All partitions of ``m`` as nonincreasing tuples, largest first."""
    if m == 0:
        return [()]
    result = []
    _extend_partitions(result, (), m, m)
    return result


def _extend_partitions(result, prefix, remaining, largest):
    if remaining == 0:
        result.append(prefix)
        return
    for part in range(min(remaining, largest), 0, -1):
        _extend_partitions(result, prefix + (part,), remaining - part, part)


def _check_length(z, n):
    z = list(z)
    if len(z) != n:
        raise common.DimensionError(n, "Point has length", len(z), "expected", n)
    return z
