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
The chromatic symmetric function of a graph and its coefficient families.

For a graph ``G`` on ``d`` vertices this module computes ``X_G`` in the monomial
basis, the elementary coefficients ``a_lam``, the Schur coefficients ``f_lam`` of
``omega X_G``, the length sums ``c_l`` and the sink counts ``kappa_l``. For the
incomparability graph of a (3+1)-free poset the elementary coefficients can also
be obtained by signed enumeration of special rim hook P-tableaux.
"""

import json
from dataclasses import dataclass
from math import factorial

from .const import LOGGER, MAX_CSF_VERTICES, StructureValidator
from .errors import HypothesisViolationError
from .orderstruct import (
    Graph,
    Poset,
    acyclic_orientation_sink_counts,
    incomparability_graph,
    three_plus_one_obstruction,
)
from .partitions import Partition, hook_shape, partition_from_sizes, partitions_of
from .symfunc import Basis, SymFunc, convert
from .tableaux import enumerate_p_tableaux, enumerate_srhpt, enumerate_srht

# region Chromatic symmetric function


def _stable_partition_types(graph: Graph) -> dict[Partition, int]:
    # Number of set partitions of V into independent sets, per block-size type
    counts: dict[Partition, int] = {}
    full = (1 << graph.n) - 1

    def blocks_with(first: int, candidates: int):
        # independent sets containing `first` drawn from `candidates`
        allowed = candidates & ~graph.neighbor_mask(first) & ~(1 << first)
        sub = allowed
        while True:
            yield sub | 1 << first
            if sub == 0:
                return
            sub = (sub - 1) & allowed

    def split(remaining: int, sizes: tuple[int, ...]) -> None:
        if not remaining:
            lam = partition_from_sizes(sizes)
            counts[lam] = counts.get(lam, 0) + 1
            return
        first = (remaining & -remaining).bit_length() - 1
        for block in blocks_with(first, remaining):
            if graph.is_independent(block):
                split(remaining & ~block, sizes + (block.bit_count(),))

    split(full, ())
    return counts


def chromatic_symmetric_function(graph: Graph) -> SymFunc:
    """
    ``X_G`` in the monomial basis.

    A stable partition of type ``lam`` accounts for ``prod_i r_i!`` colorings per
    monomial ``x^lam``, where ``r_i`` is the multiplicity of ``i`` in ``lam``.

    Raises:
        GuardExceededError: For more than ``MAX_CSF_VERTICES`` vertices.
    """
    StructureValidator.get_validator().validate_guard(
        "Vertex count for the chromatic symmetric function",
        graph.n,
        MAX_CSF_VERTICES,
    )
    coeffs = {}
    for lam, count in _stable_partition_types(graph).items():
        weight = 1
        for multiplicity in lam.multiplicities().values():
            weight *= factorial(multiplicity)
        coeffs[lam] = count * weight
    LOGGER.debug("%s: %d monomial terms", graph.label, len(coeffs))
    return SymFunc(graph.n, Basis.MONOMIAL, coeffs)


# endregion
# region Coefficient families


def a_coefficients(graph: Graph) -> SymFunc:
    """``X_G`` in the elementary basis."""
    return convert(chromatic_symmetric_function(graph), Basis.ELEMENTARY)


def f_coefficients(graph: Graph) -> dict[Partition, int]:
    """
    Schur coefficients of ``omega X_G``, read as the coefficient of ``s_{lam'}``
    in ``X_G``, for every ``lam`` in canonical order.
    """
    schur = convert(chromatic_symmetric_function(graph), Basis.SCHUR)
    return {lam: int(schur[lam.conjugate()]) for lam in partitions_of(graph.n)}


def _sum_by_length(a: SymFunc, n: int) -> tuple[int, ...]:
    totals = [0] * n
    for lam, value in a.integer_coefficients().items():
        # the empty partition only occurs for n = 0
        if lam.length:
            totals[lam.length - 1] += value
    return tuple(totals)


def c_by_length(graph: Graph) -> tuple[int, ...]:
    """``c_l``, the sum of ``a_lam`` over ``lam`` with ``l`` parts, for ``l = 1..d``."""
    return _sum_by_length(a_coefficients(graph), graph.n)


def kappa_by_sinks(graph: Graph) -> tuple[int, ...]:
    """Acyclic orientations with exactly ``l`` sinks, for ``l = 1..d``."""
    counts = acyclic_orientation_sink_counts(graph)
    return tuple(counts.get(sinks, 0) for sinks in range(1, graph.n + 1))


def pi_by_first_column(poset: Poset) -> tuple[int, ...]:
    """Hook-shaped P-tableaux with ``k`` cells in the first column, for ``k = 1..n``."""
    return tuple(
        len(enumerate_p_tableaux(poset, hook_shape(poset.n, k)))
        for k in range(1, poset.n + 1)
    )


# endregion
# region Signed enumeration


def _require_three_plus_one_free(poset: Poset) -> None:
    obstruction = three_plus_one_obstruction(poset)
    if obstruction is not None:
        a, b, c, d = obstruction
        raise HypothesisViolationError(
            f"Poset is not (3+1)-free: {a}<{b}<{c} with {d} incomparable to all three",
            obstruction,
        )


def a_coefficients_via_theorem1(poset: Poset, lam: Partition) -> int:
    """
    ``a_lam`` of the incomparability graph as the signed count of special rim hook
    P-tableaux of type ``lam``.

    Raises:
        HypothesisViolationError: If the poset is not (3+1)-free; the error carries
            the obstructing 4-subset.
        InvalidStructureError: If ``|lam| != |P|``.
    """
    _require_three_plus_one_free(poset)
    return sum(item.sign for item in enumerate_srhpt(poset, lam))


def theorem1_coefficients(poset: Poset) -> dict[Partition, int]:
    """
    Every ``a_lam`` by signed enumeration, in canonical order.

    P-tableaux are counted once per shape and paired with all tabloids of that
    shape.

    Raises:
        HypothesisViolationError: If the poset is not (3+1)-free.
    """
    _require_three_plus_one_free(poset)
    result = {lam: 0 for lam in partitions_of(poset.n)}
    for shape in partitions_of(poset.n):
        tableaux = len(enumerate_p_tableaux(poset, shape))
        if not tableaux:
            continue
        for tabloid, sign in enumerate_srht(shape):
            result[tabloid.type] += sign * tableaux
    return result


# endregion
# region Reports


@dataclass
class CsfReport:
    """All coefficient families of one graph, with integer entries."""

    graph: str
    degree: int
    x: SymFunc
    a: SymFunc
    f: dict[Partition, int]
    c: tuple[int, ...]
    kappa: tuple[int, ...]
    pi: tuple[int, ...] | None = None
    theorem1: dict[Partition, int] | None = None

    def to_dict(self) -> dict:
        """JSON-ready representation; partition keys use the comma syntax."""
        data = {
            "graph": self.graph,
            "degree": self.degree,
            "x": self.x.to_dict(),
            "a": {str(lam): v for lam, v in self.a.integer_coefficients().items()},
            "f": {str(lam): v for lam, v in self.f.items()},
            "c": list(self.c),
            "kappa": list(self.kappa),
        }
        if self.pi is not None:
            data["pi"] = list(self.pi)
        if self.theorem1 is not None:
            data["theorem1"] = {str(lam): v for lam, v in self.theorem1.items()}
        return data

    def to_json(self) -> str:
        """Indented JSON text."""
        return json.dumps(self.to_dict(), indent=2)

    def to_tsv(self) -> str:
        """One row per partition: the m, e and Schur-side coefficients."""
        header = ["partition", "m", "e", "f"]
        if self.theorem1 is not None:
            header.append("theorem1")
        rows = ["\t".join(header)]
        for lam in partitions_of(self.degree):
            row = [str(lam), str(self.x[lam]), str(self.a[lam]), str(self.f[lam])]
            if self.theorem1 is not None:
                row.append(str(self.theorem1[lam]))
            rows.append("\t".join(row))
        return "\n".join(rows)

    def format_lines(self) -> list[str]:
        """Human readable summary, one family per line."""
        lines = [
            f"graph: {self.graph}",
            f"X = {self.x}",
            f"X = {self.a}",
            "f: " + ", ".join(f"{lam}:{v}" for lam, v in self.f.items()),
            "c: " + " ".join(str(v) for v in self.c),
            "kappa: " + " ".join(str(v) for v in self.kappa),
        ]
        if self.pi is not None:
            lines.append("pi: " + " ".join(str(v) for v in self.pi))
        if self.theorem1 is not None:
            lines.append(
                "theorem1: "
                + ", ".join(f"{lam}:{v}" for lam, v in self.theorem1.items())
            )
        return lines


def build_report(
    graph: Graph, poset: Poset | None = None, with_theorem1: bool = False
) -> CsfReport:
    """
    Compute every coefficient family of ``graph``.

    When ``poset`` is given, ``graph`` should be its incomparability graph and the
    report also carries ``pi``; ``with_theorem1`` adds the signed enumeration.

    Raises:
        GuardExceededError: If the graph is too large.
        HypothesisViolationError: If ``with_theorem1`` is set and the poset is not
            (3+1)-free.
    """
    x = chromatic_symmetric_function(graph)
    a = convert(x, Basis.ELEMENTARY)
    schur = convert(x, Basis.SCHUR)
    report = CsfReport(
        graph=graph.label,
        degree=graph.n,
        x=x,
        a=a,
        f={lam: int(schur[lam.conjugate()]) for lam in partitions_of(graph.n)},
        c=_sum_by_length(a, graph.n),
        kappa=kappa_by_sinks(graph),
    )
    if poset is not None:
        report.pi = pi_by_first_column(poset)
        if with_theorem1:
            report.theorem1 = theorem1_coefficients(poset)
    return report


def build_poset_report(poset: Poset, with_theorem1: bool = False) -> CsfReport:
    """:func:`build_report` for the incomparability graph of ``poset``."""
    return build_report(incomparability_graph(poset), poset, with_theorem1)


# endregion
