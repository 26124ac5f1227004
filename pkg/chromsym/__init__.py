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
**chromsym** computes chromatic symmetric functions of small graphs exactly, expands
them in the monomial, elementary, complete and Schur bases, and checks the
combinatorial formulas for their coefficients (P-tableaux, special rim hook
tabloids, acyclic orientations and their sinks) by exhaustive enumeration.
"""

import sys
import logging
from importlib.metadata import version, PackageNotFoundError

from .const import LOGGER
from .csf import (  # noqa: F401
    CsfReport,
    a_coefficients,
    a_coefficients_via_theorem1,
    build_poset_report,
    build_report,
    c_by_length,
    chromatic_symmetric_function,
    f_coefficients,
)
from .orderstruct import Graph, Orientation, Poset, incomparability_graph  # noqa: F401
from .partitions import Cell, Partition, partitions_of  # noqa: F401
from .symfunc import Basis, SymFunc, convert, omega  # noqa: F401

# Get the package version
try:
    __version__ = version(__package__)
except PackageNotFoundError:
    # package is not installed
    __version__ = "unknown"

# region Logging

# Configure the package logger; stderr keeps the command output clean
_formatter = logging.Formatter(
    "%(asctime)s - %(name)s - %(levelname)s - %(message)s - "
    "%(module)s:%(lineno)d (%(funcName)s)"
)
_console_handler = logging.StreamHandler(sys.stderr)
_console_handler.setFormatter(_formatter)
LOGGER.addHandler(_console_handler)
LOGGER.setLevel(logging.WARNING)


def get_logger():
    """
    Allows to set the log level and other properties from the calling code.

    Returns:
        Logger: The package logger
    """
    return LOGGER


# endregion
