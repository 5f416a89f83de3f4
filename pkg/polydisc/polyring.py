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

"""Sparse polynomials on the polydisc and their file format.

:class:`HomPoly` holds a homogeneous polynomial as a canonical sparse map
from multi-indices to complex coefficients; :class:`GeneralPoly` holds a
polynomial of mixed degree as its homogeneous parts. Both are immutable
and iterate their terms in a fixed order, so every sum over terms is
reproducible.

The file format is UTF-8 JSON::

    {"n": 2, "terms": [{"alpha": [1, 1], "re": 1.0, "im": 0.0}]}
"""

import collections.abc
import dataclasses
import json
import math

import numpy as np

from polydisc import _helpers
from polydisc import combinat
from polydisc import common


_TOP_LEVEL_FIELDS = frozenset(("n", "terms"))
_TERM_FIELDS = frozenset(("alpha", "re", "im"))
_BAD_DEGREE = "Multi-index {} has degree {}, expected {}."
_BAD_VARIABLES = "Expected n >= 1 variables and degree m >= 0, got n={!r}, m={!r}."


@dataclasses.dataclass(frozen=True)
class Enclosure(object):
    """A certified real interval ``[lo, hi]``.

    Attributes:
        lo (float): Certified lower endpoint.
        hi (float): Certified upper endpoint.
        method (str): How the endpoints were certified.
        budget_exceeded (bool): Whether the producing search stopped on its
            budget before reaching the requested width. The interval is
            still valid.
    """

    lo: float
    hi: float
    method: str
    budget_exceeded: bool = False

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError("Enclosure endpoints must be finite", self.lo, self.hi)
        if self.lo > self.hi:
            raise ValueError("Enclosure requires lo <= hi", self.lo, self.hi)

    @property
    def width(self):
        """float: ``hi - lo``."""
        return self.hi - self.lo

    @property
    def relative_width(self):
        """float: ``(hi - lo) / lo``; infinite when ``lo`` is zero and ``hi`` is not."""
        if self.lo > 0:
            return self.width / self.lo
        return 0.0 if self.hi == 0 else math.inf

    @property
    def midpoint(self):
        """float: ``(lo + hi) / 2``."""
        return 0.5 * (self.lo + self.hi)

    def __contains__(self, value):
        return self.lo <= value <= self.hi


class _SparsePoly(object):
    """Shared storage: a sorted tuple of ``(alpha, coefficient)`` pairs."""

    def __init__(self, n, terms):
        self._n = n
        self._terms = terms
        self._exponents = None
        self._coefficients = None

    @property
    def n(self):
        """int: Number of variables."""
        return self._n

    @property
    def terms(self):
        """Dict[Tuple[int, ...], complex]: A copy of the coefficient map."""
        return dict(self._terms)

    def items(self):
        """List[Tuple[Tuple[int, ...], complex]]: Terms in canonical order."""
        return list(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_zero(self):
        """bool: Whether every coefficient vanishes."""
        return not self._terms

    @property
    def exponents(self):
        """numpy.ndarray: ``(len(self), n)`` integer exponent matrix."""
        if self._exponents is None:
            exponents = np.array(
                [alpha for alpha, _ in self._terms], dtype=np.int64
            ).reshape(len(self._terms), self._n)
            exponents.setflags(write=False)
            self._exponents = exponents
        return self._exponents

    @property
    def coefficients(self):
        """numpy.ndarray: Coefficients aligned with :attr:`exponents`."""
        if self._coefficients is None:
            coefficients = np.array(
                [coefficient for _, coefficient in self._terms], dtype=complex
            )
            coefficients.setflags(write=False)
            self._coefficients = coefficients
        return self._coefficients

    def variable_degrees(self):
        """Tuple[int, ...]: Largest exponent of each variable."""
        if not self._terms:
            return (0,) * self._n
        return tuple(int(d) for d in self.exponents.max(axis=0))

    def coefficient(self, alpha):
        """The coefficient of ``z**alpha`` (zero when absent)."""
        return dict(self._terms).get(tuple(alpha), 0j)

    def evaluate(self, z):
        """Evaluate at one point by direct sparse summation.

        Args:
            z (Sequence[complex]): Point of length ``n``.

        Returns:
            complex: The value, summed in canonical term order.

        Raises:
            ~polydisc.common.DimensionError: If ``len(z) != n``.
        """
        z = _check_point(z, self._n)
        values = []
        for alpha, coefficient in self._terms:
            value = coefficient
            for z_j, a_j in zip(z, alpha):
                if a_j:
                    value *= z_j**a_j
            values.append(value)
        return _helpers.fsum_complex(values)

    def evaluate_many(self, points):
        """Evaluate at many points at once.

        Args:
            points (numpy.ndarray): ``(K, n)`` complex array.

        Returns:
            numpy.ndarray: ``(K,)`` complex values.
        """
        points = np.asarray(points, dtype=complex)
        if points.ndim != 2 or points.shape[1] != self._n:
            raise common.DimensionError(
                self._n, "Points must have shape (K, n)", points.shape
            )
        if not self._terms:
            return np.zeros(points.shape[0], dtype=complex)
        monomials = np.prod(
            points[:, None, :] ** self.exponents[None, :, :], axis=2
        )
        return monomials @ self.coefficients

    def evaluate_torus(self, thetas):
        """Evaluate at ``z = exp(i * theta)`` for each row of ``thetas``.

        Args:
            thetas (numpy.ndarray): ``(K, n)`` real phases.

        Returns:
            numpy.ndarray: ``(K,)`` complex values.
        """
        thetas = np.asarray(thetas, dtype=float)
        if thetas.ndim == 1:
            thetas = thetas[None, :]
        if thetas.shape[1] != self._n:
            raise common.DimensionError(
                self._n, "Phases must have shape (K, n)", thetas.shape
            )
        if not self._terms:
            return np.zeros(thetas.shape[0], dtype=complex)
        return np.exp(1j * (thetas @ self.exponents.T)) @ self.coefficients


class HomPoly(_SparsePoly):
    """A homogeneous polynomial ``sum c_alpha z**alpha`` of degree ``m``.

    Zero coefficients are dropped on construction, so the zero polynomial
    has an empty term map and equality is equality of term maps.

    Args:
        n (int): Number of variables, at least one.
        m (int): Degree, at least zero.
        terms (Union[Mapping, Iterable[Tuple]]): Multi-index to coefficient
            map, or ``(alpha, coefficient)`` pairs (repeated indices add up).

    Raises:
        ValueError: If ``n``, ``m`` or a multi-index degree is invalid.
        ~polydisc.common.DimensionError: If a multi-index has the wrong length.
    """

    def __init__(self, n, m, terms=()):
        if not _is_int(n) or not _is_int(m) or n < 1 or m < 0:
            raise ValueError(_BAD_VARIABLES.format(n, m))
        merged = _merge_terms(n, terms)
        for alpha in merged:
            if sum(alpha) != m:
                raise ValueError(_BAD_DEGREE.format(alpha, sum(alpha), m))
        ordered = tuple(
            (alpha, merged[alpha])
            for alpha in sorted(merged, reverse=True)
            if merged[alpha] != 0
        )
        super(HomPoly, self).__init__(n, ordered)
        self._m = m

    @property
    def m(self):
        """int: The degree."""
        return self._m

    def __eq__(self, other):
        if not isinstance(other, HomPoly):
            return NotImplemented
        return (self._n, self._m, self._terms) == (other._n, other._m, other._terms)

    def __hash__(self):
        return hash((self._n, self._m, self._terms))

    def __repr__(self):
        return "HomPoly(n={}, m={}, terms={!r})".format(
            self._n, self._m, dict(self._terms)
        )

    def is_tetrahedral(self):
        """bool: Whether every term is multilinear."""
        return all(combinat.is_tetrahedral(alpha) for alpha, _ in self._terms)

    def scaled(self, factor):
        """The polynomial ``factor * P``."""
        return HomPoly(self._n, self._m, {a: factor * c for a, c in self._terms})

    def rotated(self, phases):
        """The polynomial ``P(exp(i phi_1) z_1, ..., exp(i phi_n) z_n)``."""
        phases = [float(phi) for phi in phases]
        if len(phases) != self._n:
            raise common.DimensionError(self._n, "Expected one phase per variable")
        return HomPoly(
            self._n,
            self._m,
            {
                alpha: c * complex(np.exp(1j * np.dot(alpha, phases)))
                for alpha, c in self._terms
            },
        )

    @classmethod
    def zero(cls, n, m):
        """The zero polynomial of degree ``m`` in ``n`` variables."""
        return cls(n, m, {})


class GeneralPoly(_SparsePoly):
    """A polynomial stored as its homogeneous parts.

    Args:
        n (int): Number of variables.
        parts (Union[Mapping[int, HomPoly], Iterable[HomPoly]]): The parts;
            zero parts are dropped.

    Raises:
        ValueError: If two parts share a degree or a part has the wrong
            variable count or degree key.
    """

    def __init__(self, n, parts=()):
        if not _is_int(n) or n < 1:
            raise ValueError(_BAD_VARIABLES.format(n, 0))
        if isinstance(parts, collections.abc.Mapping):
            pairs = list(parts.items())
        else:
            pairs = [(part.m, part) for part in parts]
        by_degree = {}
        for m, part in pairs:
            if part.n != n or part.m != m:
                raise ValueError(
                    "Part of degree {} in {} variables stored at degree {}".format(
                        part.m, part.n, m
                    )
                )
            if m in by_degree:
                raise ValueError("Duplicate homogeneous part of degree", m)
            if not part.is_zero():
                by_degree[m] = part
        self._parts = tuple(sorted(by_degree.items()))
        terms = tuple(item for _, part in self._parts for item in part.items())
        super(GeneralPoly, self).__init__(n, terms)

    @classmethod
    def from_terms(cls, n, terms):
        """Group a mixed-degree term map into homogeneous parts.

        Args:
            n (int): Number of variables.
            terms (Union[Mapping, Iterable[Tuple]]): Multi-index to
                coefficient map of any degrees.

        Returns:
            GeneralPoly: The polynomial.
        """
        if not _is_int(n) or n < 1:
            raise ValueError(_BAD_VARIABLES.format(n, 0))
        grouped = {}
        for alpha, coefficient in _merge_terms(n, terms).items():
            grouped.setdefault(sum(alpha), {})[alpha] = coefficient
        return cls(n, {m: HomPoly(n, m, part) for m, part in grouped.items()})

    @property
    def degree(self):
        """int: The largest degree present (``-1`` for the zero polynomial)."""
        if not self._parts:
            return -1
        return self._parts[-1][0]

    @property
    def constant_term(self):
        """complex: ``P_0``."""
        for m, part in self._parts:
            if m == 0:
                return part.coefficient((0,) * self._n)
        return 0j

    def part(self, m):
        """The homogeneous part of degree ``m`` (zero when absent)."""
        return dict(self._parts).get(m, HomPoly.zero(self._n, m))

    def homogeneous_parts(self):
        """List[Tuple[int, HomPoly]]: Nonzero parts by increasing degree."""
        return list(self._parts)

    def scaled(self, factor):
        """The polynomial ``factor * Q``."""
        return GeneralPoly(self._n, [part.scaled(factor) for _, part in self._parts])

    def __eq__(self, other):
        if not isinstance(other, GeneralPoly):
            return NotImplemented
        return (self._n, self._parts) == (other._n, other._parts)

    def __hash__(self):
        return hash((self._n, self._parts))

    def __repr__(self):
        return "GeneralPoly(n={}, terms={!r})".format(self._n, dict(self._terms))


def l1_coeff_norm(poly):
    """Sum of coefficient moduli, accumulated with compensated summation.

    Args:
        poly (Union[HomPoly, GeneralPoly]): The polynomial.

    Returns:
        float: ``sum(|c_alpha|)``.
    """
    return math.fsum(abs(c) for _, c in poly.items())


def evaluate(poly, z):
    """Direct sparse evaluation ``sum c_alpha z**alpha``.

    Args:
        poly (Union[HomPoly, GeneralPoly]): The polynomial.
        z (Sequence[complex]): A point of length ``n``.

    Returns:
        complex: The value.
    """
    return poly.evaluate(z)


def tetra_split(poly):
    """Split a homogeneous polynomial into tetrahedral part and remainder.

    Args:
        poly (HomPoly): The polynomial ``P``.

    Returns:
        Tuple[HomPoly, HomPoly]: ``(T, R)`` where ``T`` keeps the terms with
        every exponent at most one and ``R = P - T``.
    """
    tetrahedral = {}
    remainder = {}
    for alpha, coefficient in poly.items():
        if combinat.is_tetrahedral(alpha):
            tetrahedral[alpha] = coefficient
        else:
            remainder[alpha] = coefficient
    return (
        HomPoly(poly.n, poly.m, tetrahedral),
        HomPoly(poly.n, poly.m, remainder),
    )


def homogeneous_parts(poly):
    """Expansion of a polynomial in homogeneous parts.

    Args:
        poly (Union[GeneralPoly, HomPoly]): The polynomial ``Q``.

    Returns:
        List[Tuple[int, HomPoly]]: Nonzero parts by increasing degree; the
        degree zero part holds the constant term.
    """
    if isinstance(poly, HomPoly):
        return [] if poly.is_zero() else [(poly.m, poly)]
    return poly.homogeneous_parts()


def as_general(poly):
    """View a :class:`HomPoly` as a single-part :class:`GeneralPoly`."""
    if isinstance(poly, GeneralPoly):
        return poly
    return GeneralPoly(poly.n, [poly])


def poly_record(poly):
    """The JSON object of the file format as plain Python data.

    Args:
        poly (Union[GeneralPoly, HomPoly]): The polynomial.

    Returns:
        Dict[str, object]: ``{"n": ..., "terms": [...]}`` with terms by
        increasing degree, then in canonical order.
    """
    terms = []
    for _, part in homogeneous_parts(poly):
        for alpha, coefficient in part.items():
            terms.append(
                {
                    "alpha": list(alpha),
                    "re": float(coefficient.real),
                    "im": float(coefficient.imag),
                }
            )
    return {"n": poly.n, "terms": terms}


def write_poly(poly):
    """Serialize a polynomial to the JSON file format.

    Args:
        poly (Union[GeneralPoly, HomPoly]): The polynomial.

    Returns:
        bytes: Compact UTF-8 JSON of :func:`poly_record`.
    """
    return json.dumps(
        poly_record(poly), separators=(",", ":"), allow_nan=False
    ).encode("utf-8")


def read_poly(data):
    """Parse the JSON file format.

    Args:
        data (Union[bytes, str]): The file contents.

    Returns:
        GeneralPoly: The polynomial.

    Raises:
        ~polydisc.common.ParseError: If ``data`` is not valid UTF-8 JSON.
        ~polydisc.common.SchemaError: If a field is missing, unknown or of
            the wrong type.
        ~polydisc.common.DimensionError: If a multi-index length differs
            from ``n``.
    """
    if isinstance(data, (bytes, bytearray)):
        try:
            data = bytes(data).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise common.ParseError((1, exc.start + 1), "Input is not UTF-8", str(exc))
    try:
        payload = json.loads(data)
    except json.JSONDecodeError as exc:
        raise common.ParseError((exc.lineno, exc.colno), exc.msg)

    if not isinstance(payload, dict):
        raise common.SchemaError("$", "Top level must be an object")
    _check_fields("$", payload, _TOP_LEVEL_FIELDS)
    n = payload["n"]
    if not _is_int(n) or n < 1:
        raise common.SchemaError("n", "Expected an integer >= 1, got", n)
    raw_terms = payload["terms"]
    if not isinstance(raw_terms, list):
        raise common.SchemaError("terms", "Expected a list")

    terms = {}
    for index, raw in enumerate(raw_terms):
        where = "terms[{}]".format(index)
        if not isinstance(raw, dict):
            raise common.SchemaError(where, "Expected an object")
        _check_fields(where, raw, _TERM_FIELDS)
        alpha = raw["alpha"]
        if not isinstance(alpha, list) or not all(
            _is_int(a) and a >= 0 for a in alpha
        ):
            raise common.SchemaError(
                where + ".alpha", "Expected a list of integers >= 0, got", alpha
            )
        if len(alpha) != n:
            raise common.DimensionError(
                n, where + ".alpha has length", len(alpha), "expected", n
            )
        alpha = tuple(alpha)
        if alpha in terms:
            raise common.SchemaError(where + ".alpha", "Duplicate multi-index", alpha)
        parts = []
        for key in ("re", "im"):
            value = raw[key]
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise common.SchemaError(where + "." + key, "Expected a number", value)
            if not math.isfinite(value):
                raise common.SchemaError(where + "." + key, "Expected a finite number")
            parts.append(float(value))
        terms[alpha] = complex(parts[0], parts[1])

    return GeneralPoly.from_terms(n, terms)


def read_hom_poly(data, m=None):
    """Parse the JSON file format, requiring a single common degree.

    Args:
        data (Union[bytes, str]): The file contents.
        m (Optional[int]): The required degree. When omitted it is read off
            the terms (zero for an empty term list).

    Returns:
        HomPoly: The polynomial.

    Raises:
        ~polydisc.common.SchemaError: If terms of several degrees (or of a
            degree other than ``m``) are present.
    """
    general = read_poly(data)
    degrees = [degree for degree, _ in general.homogeneous_parts()]
    if len(degrees) > 1:
        raise common.SchemaError("terms", "Mixed degrees in a homogeneous file", degrees)
    if m is None:
        m = degrees[0] if degrees else 0
    if degrees and degrees[0] != m:
        raise common.SchemaError("terms", "Expected degree", m, "found", degrees[0])
    return general.part(m)


def mobius_polynomial(a, degree=common.MOBIUS_TRUNCATION_DEGREE):
    """Taylor polynomial of the disc automorphism ``(a - z) / (1 - a z)``.

    The expansion is ``a - (1 - a**2) * sum_{k>=1} a**(k-1) z**k``.

    Args:
        a (float): Parameter in ``[0, 1)``.
        degree (int): Truncation degree ``D``.

    Returns:
        GeneralPoly: The one-variable polynomial of degree ``D``.
    """
    if not 0 <= a < 1:
        raise ValueError("Mobius parameter must lie in [0, 1), got {}".format(a))
    terms = {(0,): complex(a)}
    for k in range(1, degree + 1):
        terms[(k,)] = complex(-(1.0 - a * a) * a ** (k - 1))
    return GeneralPoly.from_terms(1, terms)


def mobius_truncation_bound(a, r, degree=common.MOBIUS_TRUNCATION_DEGREE):
    """Bound on the dropped tail ``(1 - a**2) a**D / (1 - a r)``.

    It dominates both the sup-norm change on the unit circle (``r = 1``)
    and the change of the majorant at radius ``r <= 1``.
    """
    return _helpers.round_up((1.0 - a * a) * a**degree / (1.0 - a * r), ulps=4)


def _is_int(value):
    return isinstance(value, (int, np.integer)) and not isinstance(value, bool)


def _merge_terms(n, terms):
    if isinstance(terms, collections.abc.Mapping):
        pairs = terms.items()
    else:
        pairs = terms
    merged = {}
    for alpha, coefficient in pairs:
        alpha = tuple(int(a) for a in alpha)
        if len(alpha) != n:
            raise common.DimensionError(
                n, "Multi-index", alpha, "has length", len(alpha), "expected", n
            )
        if any(a < 0 for a in alpha):
            raise ValueError("Negative exponent in multi-index", alpha)
        merged[alpha] = merged.get(alpha, 0j) + complex(coefficient)
    return merged


def _check_point(z, n):
    z = [complex(z_j) for z_j in z]
    if len(z) != n:
        raise common.DimensionError(n, "Point has length", len(z), "expected", n)
    return z


def _check_fields(where, mapping, expected):
    unknown = sorted(set(mapping) - expected)
    if unknown:
        prefix = "" if where == "$" else where + "."
        raise common.SchemaError(prefix + unknown[0], "Unknown field")
    for name in sorted(expected):
        if name not in mapping:
            prefix = "" if where == "$" else where + "."
            raise common.SchemaError(prefix + name, "Missing field")


def random_hom_poly(n, m, generator, max_terms=None):
    """A homogeneous polynomial with random support and Gaussian coefficients.

    Args:
        n (int): Number of variables.
        m (int): Degree.
        generator (numpy.random.Generator): Source of randomness.
        max_terms (Optional[int]): Largest support drawn; defaults to all
            ``C(n + m - 1, m)`` monomials.

    Returns:
        HomPoly: A nonzero polynomial.
    """
    full = combinat.enum_multi_indices(n, m)
    limit = len(full) if max_terms is None else min(max_terms, len(full))
    size = int(generator.integers(1, limit + 1))
    chosen = np.sort(generator.choice(len(full), size=size, replace=False))
    values = generator.standard_normal(size) + 1j * generator.standard_normal(size)
    return HomPoly(n, m, [(full[i], v) for i, v in zip(chosen, values)])


def random_torus_point(n, generator):
    """numpy.ndarray: ``exp(i theta)`` for uniform phases ``theta``."""
    return np.exp(1j * generator.uniform(0.0, 2.0 * math.pi, n))
