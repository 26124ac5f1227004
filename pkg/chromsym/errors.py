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

"""
This module contains the exceptions that can be raised by the chromsym package.
"""

from typing import Sequence


class ChromsymError(Exception):
    """Base exception class for the chromsym package."""


class InvalidStructureError(ChromsymError, ValueError):
    """Raised when a partition, poset, graph, tableau or tabloid is malformed."""


class BasisMismatchError(ChromsymError, ValueError):
    """Raised when symmetric functions in different bases are combined."""


class GuardExceededError(ChromsymError):
    """Raised when an input is larger than a size guard allows."""


class SingularSystemError(ChromsymError):
    """Raised if a basis transition system turns out to be singular."""


class HypothesisViolationError(ChromsymError):
    """
    Raised when a poset does not satisfy the hypothesis of a theorem-backed
    computation (it is not (3+1)-free).
    """

    def __init__(self, message: str, obstruction: Sequence[int] = ()):
        super().__init__(message)
        self.obstruction = tuple(obstruction)


# Parse exception class
class ParseError(ChromsymError):
    """Raised when a graph/poset file or a command-line value cannot be parsed."""

    def __init__(self, message: str, line_no: int | None = None):
        super().__init__(
            ParseError.format_line_error(line_no, message) if line_no else message
        )
        self.line_no = line_no

    @staticmethod
    def format_line_error(line_no: int | None = None, reason: str = "N/A") -> str:
        """Formats the line number and reason in a human-readable format.

        Args:
            line_no (int, optional): the 1-based line number. Defaults to None.
            reason (str, optional): the reason. Defaults to "N/A".

        Returns:
            str: the formatted error message.
        """

        # Convert with str() to ensure that will never raise an exception
        return f"Line {str(line_no if line_no is not None else 'N/A')}: {str(reason)}"
