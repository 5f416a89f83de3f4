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

"""Bounds for Sidon constants and Bohr radii of polynomials on the polydisc.

The modules build on each other:

* :mod:`~polydisc.combinat` and :mod:`~polydisc.polyring` hold multi-index
  counting and sparse polynomials with their JSON file format.
* :mod:`~polydisc.torusopt` certifies sup norms over the torus.
* :mod:`~polydisc.polarize`, :mod:`~polydisc.kernelproj` and
  :mod:`~polydisc.rademacher` carry polarization, the prime-indexed
  tetrahedral projection and Rademacher chaos moments.
* :mod:`~polydisc.sidon_bounds` and :mod:`~polydisc.bohr` turn these into
  explicit bounds.

==========
Installing
==========

To install with `pip`_:

.. code-block:: console

  $ pip install --upgrade polydisc-bounds

.. _pip: https://pip.pypa.io/
"""


from polydisc.common import Budget
from polydisc.common import BudgetError
from polydisc.common import CapacityError
from polydisc.common import DEFAULT_SEED
from polydisc.common import GRID_BUDGET
from polydisc.polyring import Enclosure
from polydisc.polyring import GeneralPoly
from polydisc.polyring import HomPoly


__all__ = [
    "Budget",
    "BudgetError",
    "CapacityError",
    "DEFAULT_SEED",
    "Enclosure",
    "GeneralPoly",
    "GRID_BUDGET",
    "HomPoly",
]
