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
Exhaustive identity suites and the e-positivity scan.

Every suite enumerates small labeled instances, checks one identity per instance
and collects the failing instances as witnesses. Instances are plain tuples so
that they can be shipped to worker processes; results are aggregated in instance
order, which makes reports independent of the worker count.
"""

import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from math import comb, factorial
from pathlib import Path
from typing import Callable, Sequence

import sympy

from .const import (
    DEFAULT_COLORING_PALETTE,
    DEFAULT_GRAPH_SUITE_N,
    DEFAULT_KOSTKA_DEGREE,
    DEFAULT_ORDINAL_TOTAL,
    DEFAULT_POSITIVITY_N,
    DEFAULT_SINK_POSET_N,
    DEFAULT_TABLEAU_SUITE_N,
    DEFAULT_WITNESS_FILE,
    EXIT_CONJECTURE_VIOLATION,
    EXIT_IDENTITY_FAILURE,
    EXIT_OK,
    LOGGER,
    warn_if_beyond_default,
)
from .csf import (
    a_coefficients,
    a_coefficients_via_theorem1,
    build_poset_report,
    c_by_length,
    chromatic_symmetric_function,
    f_coefficients,
    kappa_by_sinks,
    pi_by_first_column,
)
from .orderstruct import (
    Graph,
    Poset,
    acyclic_orientations,
    enumerate_graphs,
    enumerate_posets,
    incomparability_graph,
    ordinal_sum_of_antichains,
    proper_coloring_count,
)
from .partitions import compositions_of, hook_shape, partitions_of
from .symfunc import (
    chromatic_polynomial,
    inverse_kostka,
    inverse_kostka_matrix,
    kostka,
    kostka_matrix,
    specialize_ones,
)
from .tableaux import (
    SpecialRimHookPTableau,
    enumerate_p_tableaux,
    enumerate_srht,
    hook_tableaux_inducing,
    orientation_from_hook_tableau,
    sigma,
)

PosetInstance = tuple[int, ...]
GraphInstance = tuple[int, tuple[tuple[int, int], ...]]
Failure = dict


@dataclass
class SuiteReport:
    """Outcome of one suite run; a suite passes iff it has no failures."""

    suite: str
    bounds: dict[str, int]
    instances: int = 0
    passes: int = 0
    failures: list[Failure] = field(default_factory=list)
    wall_time_ms: int = 0
    conjecture: bool = False

    @property
    def passed(self) -> bool:
        """Whether no instance failed."""
        return not self.failures

    @property
    def exit_code(self) -> int:
        """0 on success, 3 for a conjecture violation, 2 for an identity failure."""
        if self.passed:
            return EXIT_OK
        return EXIT_CONJECTURE_VIOLATION if self.conjecture else EXIT_IDENTITY_FAILURE

    def to_dict(self) -> dict:
        """The documented report schema."""
        return {
            "suite": self.suite,
            "bounds": dict(self.bounds),
            "instances": self.instances,
            "passes": self.passes,
            "failures": list(self.failures),
            "wall_time_ms": self.wall_time_ms,
        }

    def to_json(self) -> str:
        """Indented JSON text."""
        return json.dumps(self.to_dict(), indent=2)

    def summary(self) -> str:
        """One line for humans; it never mentions timings."""
        bounds = " ".join(f"{k}={v}" for k, v in self.bounds.items())
        if self.conjecture:
            return (
                f"{self.suite} ({bounds}): {self.instances} instances scanned, "
                f"{len(self.failures)} violations"
            )
        verdict = "pass" if self.passed else "FAIL"
        return (
            f"{self.suite} ({bounds}): {verdict}, "
            f"{self.passes}/{self.instances} instances passed"
        )


# region Driver


def run_instances(
    check: Callable[[object], list[Failure]], instances: Sequence, jobs: int = 1
) -> list[list[Failure]]:
    """
    Apply ``check`` to every instance, returning the results in instance order.

    With ``jobs > 1`` the instances are spread over a process pool; ``check``
    must then be a picklable module-level callable.
    """
    if jobs <= 1 or len(instances) <= 1:
        return [check(instance) for instance in instances]
    chunksize = max(1, len(instances) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(check, instances, chunksize=chunksize))


def _run_suite(
    suite: str,
    bounds: dict[str, int],
    check: Callable[[object], list[Failure]],
    instances: Sequence,
    jobs: int,
    conjecture: bool = False,
) -> SuiteReport:
    LOGGER.info("Suite %s started on %d instances", suite, len(instances))
    start = time.perf_counter()
    results = run_instances(check, instances, jobs)
    report = SuiteReport(suite, bounds, conjecture=conjecture)
    report.instances = len(results)
    for index, failures in enumerate(results):
        if failures:
            report.failures.extend({"index": index, **f} for f in failures)
        else:
            report.passes += 1
    report.wall_time_ms = int((time.perf_counter() - start) * 1000)
    LOGGER.info(
        "Suite %s finished: %d/%d passed in %d ms",
        suite,
        report.passes,
        report.instances,
        report.wall_time_ms,
    )
    if report.failures and conjecture:
        LOGGER.warning(
            "Suite %s found %d violating instances", suite, len(report.failures)
        )
    elif report.failures:
        LOGGER.error(
            "Suite %s: %d instances failed", suite, report.instances - report.passes
        )
    return report


def _poset_instances(
    max_n: int, three_plus_one_free: bool = True
) -> list[PosetInstance]:
    return [
        tuple(poset.up_mask(x) for x in range(n))
        for n in range(1, max_n + 1)
        for poset in enumerate_posets(n, three_plus_one_free=three_plus_one_free)
    ]


def _graph_instances(max_n: int) -> list[GraphInstance]:
    return [
        (n, tuple(graph.sorted_edges()))
        for n in range(1, max_n + 1)
        for graph in enumerate_graphs(n)
    ]


def _graph(instance: GraphInstance) -> Graph:
    n, edges = instance
    return Graph(n, frozenset(edges))


# endregion
# region Instance checks


def check_gasharov(up: PosetInstance) -> list[Failure]:
    """``f_lam`` equals the number of P-tableaux of shape ``lam``."""
    poset = Poset.from_up_masks(up)
    f = f_coefficients(incomparability_graph(poset))
    failures = []
    for lam in partitions_of(poset.n):
        count = len(enumerate_p_tableaux(poset, lam))
        if count != f[lam]:
            failures.append(
                {
                    "instance": poset.label,
                    "partition": str(lam),
                    "f": f[lam],
                    "tableaux": count,
                }
            )
    return failures


def check_theorem1(up: PosetInstance) -> list[Failure]:
    """Signed enumeration and inverse Kostka expansion both give ``a_lam``."""
    poset = Poset.from_up_masks(up)
    graph = incomparability_graph(poset)
    a = a_coefficients(graph).integer_coefficients()
    f = f_coefficients(graph)
    failures = []
    for lam in partitions_of(poset.n):
        signed = a_coefficients_via_theorem1(poset, lam)
        expanded = sum(inverse_kostka(lam, mu) * f[mu] for mu in partitions_of(poset.n))
        if not a[lam] == signed == expanded:
            failures.append(
                {
                    "instance": poset.label,
                    "partition": str(lam),
                    "a": a[lam],
                    "signed": signed,
                    "kostka_expansion": expanded,
                }
            )
    return failures


def check_lemma1(up: PosetInstance) -> list[Failure]:
    """
    ``pi_k = sum_l C(l-1, k-1) kappa_l``, and the orientation to hook tableau
    construction partitions the hook P-tableaux.
    """
    poset = Poset.from_up_masks(up)
    n = poset.n
    graph = incomparability_graph(poset)
    pi = pi_by_first_column(poset)
    kappa = kappa_by_sinks(graph)
    failures: list[Failure] = []
    for k in range(1, n + 1):
        expected = sum(
            comb(sinks - 1, k - 1) * kappa[sinks - 1] for sinks in range(1, n + 1)
        )
        if pi[k - 1] != expected:
            failures.append(
                {
                    "instance": poset.label,
                    "k": k,
                    "pi": pi[k - 1],
                    "binomial_sum": expected,
                }
            )
    produced: list[Counter] = [Counter() for _ in range(n + 1)]
    for orientation in acyclic_orientations(graph):
        sinks = len(orientation.sinks)
        for k in range(1, n + 1):
            tableaux = hook_tableaux_inducing(poset, orientation, k)
            wanted = comb(sinks - 1, k - 1)
            if len(tableaux) != wanted:
                failures.append(
                    {
                        "instance": poset.label,
                        "k": k,
                        "orientation": sorted(orientation.arcs),
                        "tableaux": len(tableaux),
                        "expected": wanted,
                    }
                )
            for tableau in tableaux:
                if not tableau.is_p_tableau(poset) or (
                    orientation_from_hook_tableau(poset, tableau) != orientation
                ):
                    failures.append(
                        {
                            "instance": poset.label,
                            "k": k,
                            "orientation": sorted(orientation.arcs),
                            "tableau": [list(row) for row in tableau.rows],
                        }
                    )
                produced[k][tableau.rows] += 1
    for k in range(1, n + 1):
        every = Counter(t.rows for t in enumerate_p_tableaux(poset, hook_shape(n, k)))
        if produced[k] != every:
            failures.append(
                {
                    "instance": poset.label,
                    "k": k,
                    "reason": "hook tableaux not partitioned",
                }
            )
    return failures


def check_sink_theorem(instance: GraphInstance) -> list[Failure]:
    """``c_l`` equals the number of acyclic orientations with ``l`` sinks."""
    graph = _graph(instance)
    c = c_by_length(graph)
    kappa = kappa_by_sinks(graph)
    if c != kappa:
        return [{"instance": graph.label, "c": list(c), "kappa": list(kappa)}]
    return []


def check_sink_theorem_poset(up: PosetInstance) -> list[Failure]:
    """:func:`check_sink_theorem` on the incomparability graph of a poset."""
    graph = incomparability_graph(Poset.from_up_masks(up))
    return check_sink_theorem((graph.n, tuple(graph.sorted_edges())))


def check_sigma(up: PosetInstance) -> list[Failure]:
    """
    sigma is a sign-reversing involution fixing the P-tableau and the hook count,
    so non-hook shapes contribute nothing to ``c_l``.
    """
    poset = Poset.from_up_masks(up)
    failures: list[Failure] = []
    signed_by_hooks: Counter = Counter()
    for shape in partitions_of(poset.n):
        if shape.is_hook():
            continue
        tableaux = enumerate_p_tableaux(poset, shape)
        if not tableaux:
            continue
        tabloids = enumerate_srht(shape)
        for tableau in tableaux:
            for tabloid, sign in tabloids:
                item = SpecialRimHookPTableau(tableau, tabloid)
                image = sigma(item)
                signed_by_hooks[item.hook_count] += sign
                if (
                    sigma(image) != item
                    or image.sign != -sign
                    or image.tableau != tableau
                    or image.hook_count != item.hook_count
                ):
                    failures.append(
                        {
                            "instance": poset.label,
                            "shape": str(shape),
                            "tableau": [list(row) for row in tableau.rows],
                            "type": str(tabloid.type),
                        }
                    )
    nonzero = {hooks: total for hooks, total in signed_by_hooks.items() if total}
    if nonzero:
        failures.append(
            {
                "instance": poset.label,
                "reason": "non-hook contributions do not cancel",
                "signed_sums": {str(k): v for k, v in sorted(nonzero.items())},
            }
        )
    return failures


def check_ordinal_sum(nu: tuple[int, ...]) -> list[Failure]:
    """``f_mu = nu_1! nu_2! ... K_{mu,nu}`` for an ordinal sum of antichains."""
    poset = ordinal_sum_of_antichains(nu)
    f = f_coefficients(incomparability_graph(poset))
    weight = 1
    for size in nu:
        weight *= factorial(size)
    failures = []
    for mu in partitions_of(poset.n):
        expected = weight * kostka(mu, nu)
        if f[mu] != expected:
            failures.append(
                {
                    "instance": list(nu),
                    "partition": str(mu),
                    "f": f[mu],
                    "expected": expected,
                }
            )
    return failures


def check_e_positivity(up: PosetInstance) -> list[Failure]:
    """Every ``a_lam`` is nonnegative; a violator carries its full report."""
    poset = Poset.from_up_masks(up)
    a = a_coefficients(incomparability_graph(poset))
    negative = [str(lam) for lam, value in a.terms() if value < 0]
    if not negative:
        return []
    return [
        {
            "instance": poset.label,
            "negative": negative,
            "report": build_poset_report(poset).to_dict(),
        }
    ]


def check_inverse_kostka(d: int) -> list[Failure]:
    """Signed tabloid counts invert the Kostka matrix and match exact inversion."""
    size = len(partitions_of(d))
    inverse = inverse_kostka_matrix(d)
    forward = kostka_matrix(d)
    failures = []
    for i in range(size):
        for j in range(size):
            entry = sum(inverse[i][m] * forward[m][j] for m in range(size))
            if entry != int(i == j):
                failures.append({"instance": d, "row": i, "column": j, "entry": entry})
    if inverse != inverse_kostka_matrix(d, method="algebraic"):
        failures.append({"instance": d, "reason": "differs from the exact inverse"})
    return failures


def check_coloring(instance: GraphInstance, palette: int) -> list[Failure]:
    """
    Specializing ``X_G`` to ``n`` ones counts proper ``n``-colorings, and the
    number of acyclic orientations is ``|chi_G(-1)|``.
    """
    graph = _graph(instance)
    x = chromatic_symmetric_function(graph)
    failures: list[Failure] = []
    for colors in range(palette + 1):
        specialized = specialize_ones(x, colors)
        direct = proper_coloring_count(graph, colors)
        if specialized != direct:
            failures.append(
                {
                    "instance": graph.label,
                    "colors": colors,
                    "specialized": str(specialized),
                    "direct": direct,
                }
            )
    at_minus_one = abs(chromatic_polynomial(x, graph.n).subs(sympy.Symbol("k"), -1))
    orientations = sum(kappa_by_sinks(graph))
    if at_minus_one != orientations:
        failures.append(
            {
                "instance": graph.label,
                "chi_at_minus_one": str(at_minus_one),
                "acyclic_orientations": orientations,
            }
        )
    return failures


# endregion
# region Suites


def verify_gasharov(max_n: int = DEFAULT_TABLEAU_SUITE_N, jobs: int = 1) -> SuiteReport:
    """P-tableau counts against Schur coefficients over (3+1)-free posets."""
    warn_if_beyond_default("gasharov max_n", max_n, DEFAULT_TABLEAU_SUITE_N)
    return _run_suite(
        "gasharov", {"max_n": max_n}, check_gasharov, _poset_instances(max_n), jobs
    )


def verify_theorem1(max_n: int = DEFAULT_TABLEAU_SUITE_N, jobs: int = 1) -> SuiteReport:
    """Signed enumeration against algebraic ``a_lam`` over (3+1)-free posets."""
    warn_if_beyond_default("theorem1 max_n", max_n, DEFAULT_TABLEAU_SUITE_N)
    return _run_suite(
        "theorem1", {"max_n": max_n}, check_theorem1, _poset_instances(max_n), jobs
    )


def verify_lemma1(max_n: int = DEFAULT_TABLEAU_SUITE_N, jobs: int = 1) -> SuiteReport:
    """The hook tableau and sink identity over all posets."""
    warn_if_beyond_default("lemma1 max_n", max_n, DEFAULT_TABLEAU_SUITE_N)
    return _run_suite(
        "lemma1",
        {"max_n": max_n},
        check_lemma1,
        _poset_instances(max_n, three_plus_one_free=False),
        jobs,
    )


def verify_sink_theorem(
    max_n_posets: int = DEFAULT_SINK_POSET_N,
    max_n_graphs: int = DEFAULT_GRAPH_SUITE_N,
    jobs: int = 1,
) -> SuiteReport:
    """``c_l = kappa_l`` on incomparability graphs and on all small graphs."""
    warn_if_beyond_default("sink-theorem max_n", max_n_posets, DEFAULT_SINK_POSET_N)
    warn_if_beyond_default(
        "sink-theorem max_n_graphs", max_n_graphs, DEFAULT_GRAPH_SUITE_N
    )
    bounds = {"max_n": max_n_posets, "max_n_graphs": max_n_graphs}
    posets = _run_suite(
        "sink-theorem",
        bounds,
        check_sink_theorem_poset,
        _poset_instances(max_n_posets),
        jobs,
    )
    graphs = _run_suite(
        "sink-theorem", bounds, check_sink_theorem, _graph_instances(max_n_graphs), jobs
    )
    offset = posets.instances
    return SuiteReport(
        "sink-theorem",
        bounds,
        instances=posets.instances + graphs.instances,
        passes=posets.passes + graphs.passes,
        failures=posets.failures
        + [{**f, "index": f["index"] + offset} for f in graphs.failures],
        wall_time_ms=posets.wall_time_ms + graphs.wall_time_ms,
    )


def verify_sigma(max_n: int = DEFAULT_TABLEAU_SUITE_N, jobs: int = 1) -> SuiteReport:
    """The involution on non-hook special rim hook P-tableaux."""
    warn_if_beyond_default("sigma max_n", max_n, DEFAULT_TABLEAU_SUITE_N)
    return _run_suite(
        "sigma", {"max_n": max_n}, check_sigma, _poset_instances(max_n), jobs
    )


def verify_ordinal_sum_identity(
    max_total: int = DEFAULT_ORDINAL_TOTAL, jobs: int = 1
) -> SuiteReport:
    """The Kostka formula for ordinal sums of antichains, over all compositions."""
    warn_if_beyond_default("ordinal-sum max_total", max_total, DEFAULT_ORDINAL_TOTAL)
    instances = [nu for n in range(1, max_total + 1) for nu in compositions_of(n)]
    return _run_suite(
        "ordinal-sum", {"max_total": max_total}, check_ordinal_sum, instances, jobs
    )


def verify_inverse_kostka(
    max_d: int = DEFAULT_KOSTKA_DEGREE, jobs: int = 1
) -> SuiteReport:
    """Signed tabloid counts times Kostka numbers is the identity, per degree."""
    warn_if_beyond_default("inverse-kostka max_d", max_d, DEFAULT_KOSTKA_DEGREE)
    return _run_suite(
        "inverse-kostka",
        {"max_d": max_d},
        check_inverse_kostka,
        list(range(1, max_d + 1)),
        jobs,
    )


def verify_coloring_crosscheck(
    max_n: int = DEFAULT_GRAPH_SUITE_N,
    palette: int = DEFAULT_COLORING_PALETTE,
    jobs: int = 1,
) -> SuiteReport:
    """Specializations of ``X_G`` against direct proper coloring counts."""
    warn_if_beyond_default("coloring max_n", max_n, DEFAULT_GRAPH_SUITE_N)
    warn_if_beyond_default("coloring palette", palette, DEFAULT_COLORING_PALETTE)
    return _run_suite(
        "coloring",
        {"max_n": max_n, "palette": palette},
        partial(check_coloring, palette=palette),
        _graph_instances(max_n),
        jobs,
    )


def scan_e_positivity(
    max_n: int = DEFAULT_POSITIVITY_N,
    jobs: int = 1,
    witness: str | Path | None = DEFAULT_WITNESS_FILE,
) -> SuiteReport:
    """
    Check that every (3+1)-free poset has an e-positive incomparability graph.

    Any violator is logged and written, with its full report, to ``witness``.
    """
    warn_if_beyond_default("e-positivity max_n", max_n, DEFAULT_POSITIVITY_N)
    report = _run_suite(
        "e-positivity",
        {"max_n": max_n},
        check_e_positivity,
        _poset_instances(max_n),
        jobs,
        conjecture=True,
    )
    if report.failures and witness is not None:
        Path(witness).write_text(report.to_json() + "\n", encoding="utf-8")
        LOGGER.warning("Witnesses written to %s", witness)
    return report


SUITES: dict[str, Callable[..., SuiteReport]] = {
    "gasharov": verify_gasharov,
    "theorem1": verify_theorem1,
    "lemma1": verify_lemma1,
    "sink-theorem": verify_sink_theorem,
    "sigma": verify_sigma,
    "ordinal-sum": verify_ordinal_sum_identity,
    "inverse-kostka": verify_inverse_kostka,
    "coloring": verify_coloring_crosscheck,
}
"""Identity suites by command-line name."""


# endregion
