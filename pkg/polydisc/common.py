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

"""Common utilities for polydisc bounds.

Includes custom exception types, default caps and shared configuration.
"""

_NON_POSITIVE_MSG = "Budget field ``{}`` must be a positive integer, got {!r}."

ENUMERATION_CAP = 10**7
"""int: Largest number of multi-indices (or words) enumerated explicitly.

Beyond this, callers must fall back to the counting formulas in
:mod:`polydisc.combinat`.
"""

GRID_BUDGET = 2**24
"""int: Total number of torus grid evaluations allowed per sup-norm call."""

FFT_TENSOR_CAP = 2**22
"""int: Largest dense coefficient tensor handed to the FFT grid evaluator.

Grids with more points than this are evaluated by direct sparse summation.
"""

DEFAULT_RESTARTS = 8
"""int: Number of randomly offset grids used by sup-norm searches."""

MAX_ASCENT_ITERATIONS = 200
"""int: Iteration cap of the local phase ascent."""

MIN_ASCENT_STEP = 1e-12
"""float: The local phase ascent stops once its step falls below this."""

MAX_POLARIZATION_DEGREE = 24
"""int: Largest degree for which the exact ``2**m`` polarization sum is run."""

MAX_EXACT_CHAOS_VARIABLES = 24
"""int: Largest variable count for exact Rademacher sign enumeration."""

PRIME_CAP = 10**7
"""int: Largest prime bound used for the termwise kappa enclosure."""

KAPPA_UPPER_TOL = 1e-9
"""float: Width of the kappa enclosure whose upper end enters bound formulas."""

TAIL_TOLERANCE = 1e-9
"""float: Largest certified series tail accepted by the Bohr radius search."""

MOBIUS_TRUNCATION_DEGREE = 200
"""int: Degree at which Mobius disc automorphisms are truncated."""

DEFAULT_SEED = 0
"""int: Seed used by randomized commands when none is given."""


class CapacityError(Exception):
    """Error class for enumerations that exceed the configured cap.

    Args:
        cap (int): The cap that would have been exceeded.
        args (tuple): The positional arguments typically passed to an
            exception class.
    """

    def __init__(self, cap, *args):
        super(CapacityError, self).__init__(*args)
        self.cap = cap
        """int: The enumeration cap that was hit."""


class BudgetError(Exception):
    """Error class for computations that exceed an evaluation budget.

    Args:
        cap (int): The budget that would have been exceeded.
        args (tuple): The positional arguments typically passed to an
            exception class.
    """

    def __init__(self, cap, *args):
        super(BudgetError, self).__init__(*args)
        self.cap = cap
        """int: The budget that was hit."""


class ParseError(Exception):
    """Error class for polynomial files that are not valid JSON.

    Args:
        position (Tuple[int, int]): The (line, column) of the failure.
        args (tuple): The positional arguments typically passed to an
            exception class.
    """

    def __init__(self, position, *args):
        super(ParseError, self).__init__(*args)
        self.position = position
        """Tuple[int, int]: Line and column where parsing failed."""


class SchemaError(Exception):
    """Error class for polynomial files that violate the schema.

    Args:
        field (str): Path of the offending field, e.g. ``terms[3].alpha``.
        args (tuple): The positional arguments typically passed to an
            exception class.
    """

    def __init__(self, field, *args):
        super(SchemaError, self).__init__(*args)
        self.field = field
        """str: Path of the offending field."""


class DimensionError(Exception):
    """Error class for vectors or exponents of the wrong length.

    Args:
        expected (int): The expected length.
        args (tuple): The positional arguments typically passed to an
            exception class.
    """

    def __init__(self, expected, *args):
        super(DimensionError, self).__init__(*args)
        self.expected = expected
        """int: The expected length."""


class ArityError(Exception):
    """Error class for a polarization called with the wrong number of points.

    Args:
        expected (int): The degree of the polynomial being polarized.
        args (tuple): The positional arguments typically passed to an
            exception class.
    """

    def __init__(self, expected, *args):
        super(ArityError, self).__init__(*args)
        self.expected = expected
        """int: Number of points the form expects."""


class PartitionError(Exception):
    """Error class for Harris partitions that do not sum to the degree.

    Args:
        parts (Sequence[int]): The rejected partition.
        args (tuple): The positional arguments typically passed to an
            exception class.
    """

    def __init__(self, parts, *args):
        super(PartitionError, self).__init__(*args)
        self.parts = tuple(parts)
        """Tuple[int, ...]: The rejected partition."""


class DegenerateError(Exception):
    """Error class for inputs where the requested ratio is undefined.

    Args:
        value (object): The degenerate input.
        args (tuple): The positional arguments typically passed to an
            exception class.
    """

    def __init__(self, value, *args):
        super(DegenerateError, self).__init__(*args)
        self.value = value
        """object: The degenerate input."""


class NormalizationError(Exception):
    """Error class for polynomials whose certified sup norm exceeds one.

    Args:
        value (float): The certified upper bound that was too large.
        args (tuple): The positional arguments typically passed to an
            exception class.
    """

    def __init__(self, value, *args):
        super(NormalizationError, self).__init__(*args)
        self.value = value
        """float: The certified upper bound on the sup norm."""


class NotConvergedError(Exception):
    """Error class for searches that could not bracket their target.

    Args:
        value (float): The last value examined.
        args (tuple): The positional arguments typically passed to an
            exception class.
    """

    def __init__(self, value, *args):
        super(NotConvergedError, self).__init__(*args)
        self.value = value
        """float: The last value examined."""


class Budget(object):
    """Configuration class for the caps that bound a computation.

    Library functions take these caps as plain keyword arguments; a
    :class:`Budget` bundles them so that a command line run can thread a
    single object through every call.

    Args:
        grid_evaluations (Optional[int]): Total torus grid evaluations allowed
            per sup-norm call. Default is :data:`GRID_BUDGET`.
        enumeration (Optional[int]): Largest explicit enumeration of
            multi-indices. Default is :data:`ENUMERATION_CAP`.
        restarts (Optional[int]): Number of randomly offset grids or search
            restarts. Default is :data:`DEFAULT_RESTARTS`.
        threads (Optional[int]): Worker cap for parallel blocks. Results do
            not depend on it. Default is 1.

    Raises:
        ValueError: If any field is not a positive integer.
    """

    def __init__(
        self,
        grid_evaluations=GRID_BUDGET,
        enumeration=ENUMERATION_CAP,
        restarts=DEFAULT_RESTARTS,
        threads=1,
    ):
        for name, value in (
            ("grid_evaluations", grid_evaluations),
            ("enumeration", enumeration),
            ("restarts", restarts),
            ("threads", threads),
        ):
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ValueError(_NON_POSITIVE_MSG.format(name, value))

        self.grid_evaluations = grid_evaluations
        self.enumeration = enumeration
        self.restarts = restarts
        self.threads = threads

    def sup_norm_kwargs(self):
        """Keyword arguments for :func:`polydisc.torusopt.sup_norm`.

        Returns:
            Mapping[str, int]: The budget, restart and thread caps.
        """
        return {
            "budget": self.grid_evaluations,
            "restarts": self.restarts,
            "threads": self.threads,
        }
