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

"""Homogeneous Rademacher chaos.

A chaos of order ``m`` in ``n`` signs is
``X = sum x_{i_1 ... i_m} eps_{i_1} ... eps_{i_m}`` over increasing index
tuples, with independent fair signs ``eps_i``. Distinct sign monomials are
orthonormal, so ``E|X|**2`` is the squared coefficient norm; ``E|X|`` is
obtained by enumerating all ``2**n`` sign patterns.

Sign pattern ``s`` sets ``eps_j = -1`` exactly when bit ``j - 1`` of ``s``
is set.
"""

import collections
import collections.abc
import itertools
import logging
import math

import numpy as np

from polydisc import _helpers
from polydisc import common


# Entries of one low-bits sign matrix times the number of terms.
_BLOCK_ENTRIES = 2**20
# Gray code segments enumerated independently.
_SEGMENTS = 16
_MC_ENTRIES = 2**22
_LOGGER = logging.getLogger(__name__)

HyperCheck = collections.namedtuple("HyperCheck", ["ratio", "bound", "holds"])
"""The hypercontractive comparison ``sqrt(E|X|**2) <= e**m E|X|``.

Attributes:
    ratio (float): ``sqrt(E|X|**2) / E|X|``.
    bound (float): ``e**m``.
    holds (bool): ``ratio <= bound``.
"""


class ChaosVector(object):
    """Coefficients of a homogeneous Rademacher chaos.

    Args:
        n (int): Number of signs.
        m (int): Order.
        coeffs (Union[Mapping, Iterable[Tuple]]): Map from strictly
            increasing 1-based index tuples of length ``m`` to complex
            coefficients. Zero coefficients are dropped.

    Raises:
        ValueError: If a tuple is not strictly increasing within ``1..n`` or
            has the wrong length.
    """

    def __init__(self, n, m, coeffs=()):
        if n < 1 or m < 0 or m > n:
            raise ValueError(
                "Chaos needs 0 <= m <= n and n >= 1, got n={}, m={}".format(n, m)
            )
        if isinstance(coeffs, collections.abc.Mapping):
            coeffs = coeffs.items()
        merged = {}
        for index, value in coeffs:
            index = tuple(int(i) for i in index)
            if (
                len(index) != m
                or any(a >= b for a, b in zip(index, index[1:]))
                or (index and (index[0] < 1 or index[-1] > n))
            ):
                raise ValueError(
                    "Index tuple {} is not strictly increasing in 1..{} "
                    "with length {}".format(index, n, m)
                )
            merged[index] = merged.get(index, 0j) + complex(value)
        self._n = n
        self._m = m
        self._coeffs = tuple(sorted((i, c) for i, c in merged.items() if c != 0))

    @classmethod
    def from_tetrahedral(cls, poly):
        """The chaos with the coefficients of a tetrahedral polynomial.

        Args:
            poly (~polydisc.polyring.HomPoly): A tetrahedral polynomial.

        Returns:
            ChaosVector: ``sum c_alpha prod_{alpha_j = 1} eps_j``.

        Raises:
            ValueError: If ``poly`` has an exponent above one.
        """
        if not poly.is_tetrahedral():
            raise ValueError("Polynomial is not tetrahedral")
        return cls(
            poly.n,
            poly.m,
            [
                (tuple(j + 1 for j, a in enumerate(alpha) if a), c)
                for alpha, c in poly.items()
            ],
        )

    @property
    def n(self):
        """int: Number of signs."""
        return self._n

    @property
    def m(self):
        """int: Order."""
        return self._m

    @property
    def coeffs(self):
        """Dict[Tuple[int, ...], complex]: A copy of the coefficient map."""
        return dict(self._coeffs)

    def items(self):
        return list(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def is_zero(self):
        return not self._coeffs

    def scaled(self, factor):
        """The chaos ``factor * X``."""
        return ChaosVector(
            self._n, self._m, [(i, factor * c) for i, c in self._coeffs]
        )

    def __eq__(self, other):
        if not isinstance(other, ChaosVector):
            return NotImplemented
        return (self._n, self._m, self._coeffs) == (other._n, other._m, other._coeffs)

    def __hash__(self):
        return hash((self._n, self._m, self._coeffs))

    def __repr__(self):
        return "ChaosVector(n={}, m={}, coeffs={!r})".format(
            self._n, self._m, dict(self._coeffs)
        )

    def _masks(self):
        masks = []
        for index, _ in self._coeffs:
            mask = 0
            for i in index:
                mask |= 1 << (i - 1)
            masks.append(mask)
        return np.array(masks, dtype=np.int64)

    def _values(self):
        return np.array([c for _, c in self._coeffs], dtype=complex)


def chaos_l2(chaos):
    """``sqrt(E|X|**2) = sqrt(sum |x|**2)``."""
    return math.sqrt(math.fsum(abs(c) ** 2 for _, c in chaos.items()))


def _parity_signs(masks, pattern, bits):
    """``(-1)**popcount(masks & pattern)`` for every mask."""
    common_bits = masks & pattern
    parity = np.zeros(masks.shape, dtype=np.int64)
    for bit in range(bits):
        parity ^= (common_bits >> bit) & 1
    return 1.0 - 2.0 * parity


def _gray_blocks(chaos, threads=1):
    """Values of ``X`` over all sign patterns, grouped in blocks.

    The ``L`` low signs are tabulated once as a ``(2**L, T)`` sign matrix;
    the high signs run through Gray code order, where each step flips one
    sign and so only the terms containing it.

    Returns:
        List[Tuple[int, numpy.ndarray]]: ``(first_pattern, values)`` pairs
        covering patterns ``first_pattern .. first_pattern + 2**L - 1``.
    """
    n = chaos.n
    masks = chaos._masks()
    x = chaos._values()
    low_bits = n
    while low_bits > 0 and 2**low_bits * max(1, len(x)) > _BLOCK_ENTRIES:
        low_bits -= 1
    high_bits = n - low_bits
    low_masks = masks & (2**low_bits - 1)
    high_masks = masks >> low_bits
    low_signs = np.stack(
        [_parity_signs(low_masks, s, low_bits) for s in range(2**low_bits)]
    )
    touched = [np.flatnonzero((high_masks >> b) & 1) for b in range(high_bits)]

    patterns = 2**high_bits
    segment = max(1, -(-patterns // _SEGMENTS))

    def run_segment(start):
        stop = min(start + segment, patterns)
        gray = start ^ (start >> 1)
        signs = _parity_signs(high_masks, gray, high_bits)
        blocks = []
        for step in range(start, stop):
            if step > start:
                flipped = (step & -step).bit_length() - 1
                signs[touched[flipped]] *= -1.0
                gray ^= 1 << flipped
            blocks.append((gray << low_bits, low_signs @ (x * signs)))
        return blocks

    results = _helpers.ordered_map(
        run_segment, range(0, patterns, segment), threads
    )
    return [block for blocks in results for block in blocks]


def chaos_values(chaos, threads=1):
    """``X`` at every sign pattern, indexed by pattern.

    Args:
        chaos (ChaosVector): The chaos.
        threads (int): Worker cap.

    Returns:
        numpy.ndarray: ``2**n`` complex values.

    Raises:
        ~polydisc.common.BudgetError: If ``n`` exceeds
            :data:`~polydisc.common.MAX_EXACT_CHAOS_VARIABLES`.
    """
    _check_exact(chaos)
    values = np.zeros(2**chaos.n, dtype=complex)
    if chaos.is_zero():
        return values
    for first, block in _gray_blocks(chaos, threads):
        values[first : first + block.size] = block
    return values


def chaos_abs_mean(chaos, mode="exact", samples=None, seed=common.DEFAULT_SEED, threads=1):
    """``E|X|`` by exhaustive enumeration or Monte Carlo.

    Args:
        chaos (ChaosVector): The chaos.
        mode (str): ``"exact"`` or ``"monte_carlo"``.
        samples (Optional[int]): Number of sign draws for ``"monte_carlo"``.
        seed (int): Base seed for ``"monte_carlo"``.
        threads (int): Worker cap.

    Returns:
        Union[float, Tuple[float, float]]: The exact mean, or the Monte Carlo
        mean with its standard error.

    Raises:
        ~polydisc.common.BudgetError: For exact mode with ``n`` above
            :data:`~polydisc.common.MAX_EXACT_CHAOS_VARIABLES`.
        ValueError: If ``mode`` is unknown or ``samples`` is missing.
    """
    if mode == "exact":
        _check_exact(chaos)
        if chaos.is_zero():
            return 0.0
        sums = [
            math.fsum(np.abs(block)) for _, block in _gray_blocks(chaos, threads)
        ]
        return math.fsum(sums) / 2**chaos.n
    if mode == "monte_carlo":
        if samples is None or samples < 2:
            raise ValueError("Monte Carlo mode needs samples >= 2")
        return _abs_mean_mc(chaos, samples, seed, threads)
    raise ValueError("Unknown mode {!r}".format(mode))


def _check_exact(chaos):
    if chaos.n > common.MAX_EXACT_CHAOS_VARIABLES:
        raise common.BudgetError(
            common.MAX_EXACT_CHAOS_VARIABLES,
            "Exact enumeration of 2**{} sign patterns exceeds the cap".format(chaos.n),
        )


def _abs_mean_mc(chaos, samples, seed, threads):
    if chaos.is_zero():
        return 0.0, 0.0
    indices = np.array([index for index, _ in chaos.items()], dtype=np.int64) - 1
    x = chaos._values()
    block = max(1, _MC_ENTRIES // (len(x) * max(1, chaos.m)))
    starts = range(0, samples, block)

    def block_stats(start):
        size = min(block, samples - start)
        generator = _helpers.make_generator(seed, start // block)
        eps = 1.0 - 2.0 * generator.integers(0, 2, size=(size, chaos.n))
        monomials = np.prod(eps[:, indices], axis=2)
        values = np.abs(monomials @ x)
        mean = math.fsum(values) / size
        return size, mean, math.fsum((values - mean) ** 2)

    count, mean, spread = 0, 0.0, 0.0
    for size, block_mean, block_spread in _helpers.ordered_map(
        block_stats, starts, threads
    ):
        total = count + size
        delta = block_mean - mean
        mean += delta * size / total
        spread += block_spread + delta**2 * count * size / total
        count = total
    stderr = math.sqrt(spread / (count - 1) / count)
    _LOGGER.debug(
        "chaos_abs_mean: %d samples over %d blocks, mean %r, stderr %r",
        count,
        len(starts),
        mean,
        stderr,
    )
    return mean, stderr


def hyper_check(chaos, threads=1):
    """Compare ``sqrt(E|X|**2)`` with ``e**m E|X|`` exactly.

    Args:
        chaos (ChaosVector): A nonzero chaos with at most
            :data:`~polydisc.common.MAX_EXACT_CHAOS_VARIABLES` signs.
        threads (int): Worker cap.

    Returns:
        HyperCheck: The ratio, the bound ``e**m`` and whether it holds.

    Raises:
        ~polydisc.common.DegenerateError: If ``X = 0``.
    """
    if chaos.is_zero():
        raise common.DegenerateError(chaos, "The ratio is undefined for X = 0")
    ratio = chaos_l2(chaos) / chaos_abs_mean(chaos, threads=threads)
    bound = math.exp(chaos.m)
    return HyperCheck(ratio, bound, ratio <= bound)


def random_chaos(n, m, generator, max_terms=64):
    """A chaos with random support and Gaussian coefficients.

    Args:
        n (int): Number of signs.
        m (int): Order, ``1 <= m <= n``.
        generator (numpy.random.Generator): Source of randomness.
        max_terms (int): Largest support drawn.

    Returns:
        ChaosVector: A nonzero chaos.
    """
    indices = list(itertools.combinations(range(1, n + 1), m))
    size = int(generator.integers(1, min(len(indices), max_terms) + 1))
    chosen = np.sort(generator.choice(len(indices), size=size, replace=False))
    values = generator.standard_normal(size) + 1j * generator.standard_normal(size)
    return ChaosVector(n, m, [(indices[i], v) for i, v in zip(chosen, values)])
