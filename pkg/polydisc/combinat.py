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

"""Multi-indices, index words, exact counts and primes.

A *multi-index* ``alpha`` is a tuple of ``n`` non-negative exponents; its
degree is ``sum(alpha)``. An *index word* ``beta`` is a tuple of ``m``
letters in ``1..n``; its exponent profile counts how often each letter
occurs. Both are plain tuples so they hash, compare and sort natively.

Multi-indices are listed in lexicographic order with the first exponent
most significant, e.g. ``(2, 0), (1, 1), (0, 2)`` for ``n = m = 2``.
"""

import itertools
import math

import numpy as np

from polydisc import common


_NEGATIVE_ARGS = "Expected n >= 1 and m >= 0, got n={} and m={}."
_BAD_LETTER = "Letter {} of word {} is outside 1..{}."


def degree(alpha):
    """Total degree ``|alpha|`` of a multi-index."""
    return sum(alpha)


def binomial(n, k):
    """Exact binomial coefficient, zero outside ``0 <= k <= n``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def monomial_count(n, m):
    """Number of monomials of degree ``m`` in ``n`` variables."""
    return binomial(n + m - 1, m)


def remainder_count(n, m):
    """Number of degree ``m`` monomials with some exponent above one."""
    return monomial_count(n, m) - binomial(n, m)


def remainder_count_as_printed(n, m):
    """The remainder count with ``C(n+m+1, m)`` in place of ``C(n+m-1, m)``.

    Kept next to :func:`remainder_count` so reports can show both values.
    """
    return binomial(n + m + 1, m) - binomial(n, m)


def is_tetrahedral(alpha):
    """Whether every exponent of ``alpha`` is at most one."""
    return all(a <= 1 for a in alpha)


def enum_multi_indices(n, m, cap=common.ENUMERATION_CAP):
    """All multi-indices of degree ``m`` in ``n`` variables.

    Args:
        n (int): Number of variables, at least one.
        m (int): Degree, at least zero.
        cap (int): Largest list that may be built.

    Returns:
        List[Tuple[int, ...]]: The ``C(n+m-1, m)`` multi-indices in
        lexicographic order.

    Raises:
        ValueError: If ``n < 1`` or ``m < 0``.
        ~polydisc.common.CapacityError: If the list would exceed ``cap``.
    """
    if n < 1 or m < 0:
        raise ValueError(_NEGATIVE_ARGS.format(n, m))
    count = monomial_count(n, m)
    if count > cap:
        raise common.CapacityError(
            cap, "Enumeration of", count, "multi-indices exceeds the cap", cap
        )

    result = []
    _extend_indices(result, (), n, m)
    return result


def _extend_indices(result, prefix, remaining_vars, remaining_degree):
    if remaining_vars == 1:
        result.append(prefix + (remaining_degree,))
        return
    for first in range(remaining_degree, -1, -1):
        _extend_indices(
            result, prefix + (first,), remaining_vars - 1, remaining_degree - first
        )


def enum_tetrahedral(n, m, cap=common.ENUMERATION_CAP):
    """All tetrahedral multi-indices of degree ``m``, lexicographic order.

    Raises:
        ~polydisc.common.CapacityError: If ``C(n, m)`` exceeds ``cap``.
    """
    if n < 1 or m < 0:
        raise ValueError(_NEGATIVE_ARGS.format(n, m))
    count = binomial(n, m)
    if count > cap:
        raise common.CapacityError(
            cap, "Enumeration of", count, "tetrahedral indices exceeds the cap", cap
        )
    # combinations come out with the smallest positions first, which is
    # exactly lexicographic order of the 0/1 vectors read high to low.
    result = []
    for support in itertools.combinations(range(n), m):
        alpha = [0] * n
        for position in support:
            alpha[position] = 1
        result.append(tuple(alpha))
    return result


def enum_words(n, m, cap=common.ENUMERATION_CAP):
    """All ``n**m`` index words of length ``m`` over ``1..n``.

    Raises:
        ~polydisc.common.CapacityError: If ``n**m`` exceeds ``cap``.
    """
    if n < 1 or m < 0:
        raise ValueError(_NEGATIVE_ARGS.format(n, m))
    if n**m > cap:
        raise common.CapacityError(cap, "Enumeration of", n**m, "words exceeds", cap)
    return list(itertools.product(range(1, n + 1), repeat=m))


def word_count(alpha):
    """Number of distinct words realizing the exponent profile ``alpha``.

    This is the multinomial coefficient ``m! / prod(alpha_j!)``. Python
    integers are unbounded, so the result is always exact.

    Args:
        alpha (Sequence[int]): Exponent profile.

    Returns:
        int: The multinomial coefficient.
    """
    count = math.factorial(sum(alpha))
    for a in alpha:
        count //= math.factorial(a)
    return count


def word_profile(beta, n):
    """Exponent profile of an index word.

    Args:
        beta (Sequence[int]): Letters in ``1..n``.
        n (int): Number of variables.

    Returns:
        Tuple[int, ...]: ``alpha`` with ``alpha[j-1]`` occurrences of ``j``.

    Raises:
        ValueError: If a letter is outside ``1..n``.
    """
    alpha = [0] * n
    for letter in beta:
        if not 1 <= letter <= n:
            raise ValueError(_BAD_LETTER.format(letter, tuple(beta), n))
        alpha[letter - 1] += 1
    return tuple(alpha)


def canonical_word(alpha):
    """The nondecreasing index word whose profile is ``alpha``."""
    word = []
    for position, exponent in enumerate(alpha, start=1):
        word.extend([position] * exponent)
    return tuple(word)


def is_tetrahedral_word(beta):
    """Whether the letters of ``beta`` are pairwise distinct."""
    return len(set(beta)) == len(beta)


def _sieve(limit):
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p :: p] = False
    return np.flatnonzero(is_prime)


def primes_upto(x):
    """All primes ``p <= x`` in increasing order.

    Args:
        x (float): Real bound; an empty list is returned for ``x < 2``.

    Returns:
        List[int]: The primes.
    """
    if x < 2:
        return []
    return [int(p) for p in _sieve(int(math.floor(x)))]


def prime_count(x):
    """The prime counting function: number of primes ``p <= x``."""
    if x < 2:
        return 0
    return int(_sieve(int(math.floor(x))).size)


def mobius(k):
    """The Mobius function of a positive integer."""
    if k < 1:
        raise ValueError("mobius is defined for positive integers, got {}".format(k))
    result = 1
    p = 2
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            result = -result
        p += 1
    if k > 1:
        result = -result
    return result
