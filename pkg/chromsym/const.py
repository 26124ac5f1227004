# Copyright 2024 - chromsym contributors

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Constants, size guards and default bounds for the chromsym package."""

import logging

from .errors import GuardExceededError, InvalidStructureError

LOGGER = logging.getLogger(__package__)

# region Size guards

MAX_CSF_VERTICES = 9
"""Largest vertex count accepted by the chromatic symmetric function."""

MAX_ORIENTATION_EDGES = 24
"""Largest edge count accepted by the orientation enumeration."""

MAX_POSET_ENUMERATION = 7
"""Largest ground set accepted by the labeled poset generator."""

MAX_GRAPH_ENUMERATION = 6
"""Largest vertex count accepted by the labeled graph generator."""

MAX_CANONICAL_SIZE = 6
"""Largest poset for which canonical forms (isomorphism reduction) are computed."""

# endregion
# region Default suite bounds

DEFAULT_TABLEAU_SUITE_N = 5
DEFAULT_POSITIVITY_N = 6
DEFAULT_SINK_POSET_N = 6
DEFAULT_GRAPH_SUITE_N = 5
DEFAULT_ORDINAL_TOTAL = 6
DEFAULT_KOSTKA_DEGREE = 8
DEFAULT_COLORING_PALETTE = 4

DEFAULT_WITNESS_FILE = "e-positivity-witness.json"

# endregion
# region Exit codes

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IDENTITY_FAILURE = 2
EXIT_CONJECTURE_VIOLATION = 3

# endregion


class StructureValidator:
    """Mixin class to validate inputs against structural rules and size guards."""

    @staticmethod
    def get_validator() -> "StructureValidator":
        """Return an instance of the validator."""
        return StructureValidator()

    def validate_guard(self, what: str, value: int, bound: int) -> None:
        """
        Refuses inputs larger than a size guard.

        Args:
            what (str): Human readable name of the measured quantity.
            value (int): The measured value.
            bound (int): The largest accepted value.

        Raises:
            GuardExceededError: If value exceeds bound.
        """
        if value > bound:
            raise GuardExceededError(
                f"{what} is {value}, which exceeds the supported bound of {bound}"
            )

    def validate_same_size(self, what: str, left: int, right: int) -> None:
        """
        Checks that two sizes agree.

        Raises:
            InvalidStructureError: If the sizes differ.
        """
        if left != right:
            raise InvalidStructureError(f"Size mismatch in {what}: {left} != {right}")

    def validate_elements(self, n: int, pairs, what: str = "relation") -> None:
        """
        Checks that every pair holds two distinct elements of ``range(n)``.

        Raises:
            InvalidStructureError: If some pair is a loop or out of range.
        """
        bad = [
            (u, v) for u, v in pairs if u == v or not (0 <= u < n and 0 <= v < n)
        ]
        if bad:
            raise InvalidStructureError(
                f"Invalid {what} pairs for n={n}: "
                f"{', '.join(f'({u},{v})' for u, v in sorted(bad))}"
            )


def warn_if_beyond_default(what: str, value: int, default: int) -> None:
    """Log a warning when a suite bound is raised above its default."""
    if value > default:
        LOGGER.warning(
            "%s raised to %d (default %d): expect a long runtime", what, value, default
        )
