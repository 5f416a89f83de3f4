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

"""Shared utilities used by the bound and search modules."""

import base64
import concurrent.futures
import contextlib
import math
import threading
import warnings

import numpy as np
from mpmath import iv
from mpmath import libmp


_SLOW_CRC32C_WARNING = (
    "Currently using crcmod in pure python form. This is a slow "
    "implementation. Python 3 has a faster implementation, `google-crc32c`, "
    "which will be used if it is installed."
)
_SEED_MASK = (1 << 64) - 1
# mpmath keeps the interval precision on a shared context.
_INTERVAL_LOCK = threading.RLock()


@contextlib.contextmanager
def interval_precision(bits):
    """Run a block with :data:`mpmath.iv` at ``bits`` of working precision.

    The previous precision is restored on exit. Blocks on different
    threads are serialized.

    Args:
        bits (int): Mantissa bits.

    Yields:
        mpmath.ctx_iv.MPIntervalContext: The interval context.
    """
    with _INTERVAL_LOCK:
        saved = iv.prec
        iv.prec = bits
        try:
            yield iv
        finally:
            iv.prec = saved


def round_up(value, ulps=1):
    """Move a float ``ulps`` representable steps towards ``+inf``.

    Args:
        value (float): A finite or infinite float.
        ulps (int): Number of steps.

    Returns:
        float: The rounded value.
    """
    for _ in range(ulps):
        value = math.nextafter(value, math.inf)
    return value


def round_down(value, ulps=1):
    """Move a float ``ulps`` representable steps towards ``-inf``."""
    for _ in range(ulps):
        value = math.nextafter(value, -math.inf)
    return value


def interval_endpoints(value):
    """Convert an :mod:`mpmath.iv` interval to floats, rounding outward.

    Args:
        value (mpmath.iv.mpf): A real interval.

    Returns:
        Tuple[float, float]: ``(lo, hi)`` with ``lo`` rounded down and ``hi``
        rounded up. Overflowing endpoints become infinities.
    """
    lo, hi = value._mpi_
    return (
        libmp.to_float(lo, rnd=libmp.round_floor),
        libmp.to_float(hi, rnd=libmp.round_ceiling),
    )


def interval_upper(value):
    """The upper endpoint of an :mod:`mpmath.iv` interval, rounded up."""
    return interval_endpoints(value)[1]


def fsum_complex(values):
    """Compensated sum of complex numbers.

    Real and imaginary parts are summed independently with
    :func:`math.fsum`, so the result does not depend on input order.

    Args:
        values (Iterable[complex]): The terms.

    Returns:
        complex: The correctly rounded sum of each component.
    """
    values = list(values)
    return complex(
        math.fsum(v.real for v in values), math.fsum(v.imag for v in values)
    )


def make_generator(seed, stream=0):
    """Build a counter-based random generator for one deterministic stream.

    The Philox key packs the 64-bit ``seed`` with the ``stream`` index, so
    restarts and sample blocks can be drawn in any order (or in parallel)
    and still reproduce the same numbers.

    Args:
        seed (int): Base seed of the run.
        stream (int): Restart, trial or block index.

    Returns:
        numpy.random.Generator: A generator on its own stream.
    """
    key = ((stream & _SEED_MASK) << 64) | (seed & _SEED_MASK)
    return np.random.Generator(np.random.Philox(key=key))


def ordered_map(func, items, threads=1):
    """Map ``func`` over ``items``, preserving input order in the output.

    With ``threads > 1`` the calls run on a thread pool; the result list is
    still ordered like ``items``, so any reduction over it is independent of
    scheduling.

    Args:
        func (Callable[[Any], Any]): The function to apply.
        items (Iterable[Any]): The inputs.
        threads (int): Worker cap.

    Returns:
        List[Any]: ``[func(item) for item in items]``.
    """
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    with concurrent.futures.ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(func, items))


def format_float(value):
    """Format a float with 17 significant digits.

    Args:
        value (float): The value.

    Returns:
        str: Its ``%.17g`` representation.
    """
    return "{:.17g}".format(value)


def _get_crc32c_object():
    """Get crc32c object
    Attempt to use the Google-CRC32c package. If it isn't available, try
    to use CRCMod. CRCMod might be using a 'slow' varietal. If so, warn...
    """
    try:
        import google_crc32c  # type: ignore

        crc_obj = google_crc32c.Checksum()
    except ImportError:
        try:
            import crcmod  # type: ignore

            crc_obj = crcmod.predefined.Crc("crc-32c")
            _is_fast_crcmod()

        except ImportError:
            raise ImportError("Failed to import either `google-crc32c` or `crcmod`")

    return crc_obj


def _is_fast_crcmod():
    # Determine if this is using the slow form of crcmod.
    nested_crcmod = __import__(
        "crcmod.crcmod",
        globals(),
        locals(),
        ["_usingExtension"],
        0,
    )
    fast_crc = getattr(nested_crcmod, "_usingExtension", False)
    if not fast_crc:
        warnings.warn(_SLOW_CRC32C_WARNING, RuntimeWarning, stacklevel=2)
    return fast_crc


def prepare_checksum_digest(digest_bytestring):
    """Convert a checksum digest into its base64 text form.

    Args:
        digest_bytestring (bytes): A checksum digest bytestring.

    Returns:
        str: A base64 string representation of the input.
    """
    encoded_digest = base64.b64encode(digest_bytestring)
    return encoded_digest.decode("utf-8")


def report_digest(payload):
    """CRC32C fingerprint of a rendered report.

    Args:
        payload (bytes): The report bytes exactly as written.

    Returns:
        str: The base64 encoded CRC32C digest.
    """
    checksum_object = _get_crc32c_object()
    checksum_object.update(payload)
    return prepare_checksum_digest(checksum_object.digest())
