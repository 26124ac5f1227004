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
Command line front end.

Results go to stdout and diagnostics to stderr. Human output is plain text and
byte-stable across runs; ``--json`` selects the documented schemas.
"""

import argparse
import functools
import json
import logging
import sys
from typing import Callable, Sequence

from .const import (
    DEFAULT_COLORING_PALETTE,
    DEFAULT_GRAPH_SUITE_N,
    DEFAULT_KOSTKA_DEGREE,
    DEFAULT_ORDINAL_TOTAL,
    DEFAULT_POSITIVITY_N,
    DEFAULT_SINK_POSET_N,
    DEFAULT_TABLEAU_SUITE_N,
    DEFAULT_WITNESS_FILE,
    EXIT_OK,
    EXIT_USAGE,
    LOGGER,
)
from .csf import build_poset_report, chromatic_symmetric_function
from .errors import ChromsymError
from .orderstruct import acyclic_orientation_sink_counts, load_graph, load_poset
from .partitions import Partition, partitions_of
from .symfunc import Basis, convert
from .tableaux import (
    enumerate_p_tableaux,
    enumerate_srht,
    render_p_tableau,
    render_tabloid,
)
from .verify import (
    SUITES,
    SuiteReport,
    scan_e_positivity,
    verify_coloring_crosscheck,
    verify_inverse_kostka,
    verify_ordinal_sum_identity,
    verify_sink_theorem,
)


class _ArgumentParser(argparse.ArgumentParser):
    """Argument parser whose usage errors exit with code 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def handle_chromsym_errors(func: Callable[..., int]) -> Callable[..., int]:
    """Decorator turning package errors into a diagnostic and an exit code.

    The decorator catches the following exceptions:
    - ChromsymError: parse errors, malformed structures, size guards and
      theorem hypotheses, reported verbatim
    - OSError: unreadable input files
    - any other exception: for unforeseen errors, logged with a traceback

    Returns:
        int: the command's exit code, or 1 after an error.
    """

    @functools.wraps(func)
    def wrapper(*args, **kwargs) -> int:
        """Wrapper function for the decorator."""
        try:
            return func(*args, **kwargs)
        except ChromsymError as e:
            print(f"chromsym: {e}", file=sys.stderr)
            return EXIT_USAGE
        except OSError as e:
            print(f"chromsym: cannot read input ({e})", file=sys.stderr)
            return EXIT_USAGE
        except Exception as e:  # pylint: disable=broad-exception-caught
            LOGGER.exception("Unexpected error")
            print(f"chromsym: unexpected error ({e})", file=sys.stderr)
            return EXIT_USAGE

    return wrapper


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ChromsymError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _emit_reports(reports: Sequence[SuiteReport], as_json: bool) -> int:
    if as_json:
        data = [r.to_dict() for r in reports]
        print(json.dumps(data[0] if len(data) == 1 else data, indent=2))
    else:
        for report in reports:
            print(report.summary())
            for failure in report.failures:
                print("  " + json.dumps(failure, sort_keys=True))
    return max((r.exit_code for r in reports), default=EXIT_OK)


# region Commands


@handle_chromsym_errors
def cmd_csf(args: argparse.Namespace) -> int:
    """Print X_G in the requested basis."""
    x = convert(chromatic_symmetric_function(load_graph(args.graph)), args.basis)
    if args.json:
        print(json.dumps(x.to_dict(), indent=2))
    elif args.tsv:
        print("partition\tcoefficient")
        for lam in partitions_of(x.degree):
            print(f"{lam}\t{x[lam]}")
    else:
        print(x.pretty())
    return EXIT_OK


@handle_chromsym_errors
def cmd_coeffs(args: argparse.Namespace) -> int:
    """Print the full coefficient report of a poset's incomparability graph."""
    report = build_poset_report(load_poset(args.poset), with_theorem1=args.theorem1)
    if args.json:
        print(report.to_json())
    elif args.tsv:
        print(report.to_tsv())
    else:
        print("\n".join(report.format_lines()))
    return EXIT_OK


@handle_chromsym_errors
def cmd_orientations(args: argparse.Namespace) -> int:
    """Print the number of acyclic orientations per sink count."""
    counts = acyclic_orientation_sink_counts(load_graph(args.graph))
    if args.json:
        print(json.dumps({str(k): v for k, v in counts.items()}, indent=2))
    else:
        for sinks, count in counts.items():
            print(f"{sinks} {'sink' if sinks == 1 else 'sinks'}: {count}")
    return EXIT_OK


@handle_chromsym_errors
def cmd_tableaux(args: argparse.Namespace) -> int:
    """Print every P-tableau of a shape."""
    tableaux = enumerate_p_tableaux(load_poset(args.poset), args.shape)
    print(f"{len(tableaux)} P-tableaux of shape {args.shape}")
    for tableau in tableaux:
        print()
        print(render_p_tableau(tableau))
    return EXIT_OK


@handle_chromsym_errors
def cmd_srht(args: argparse.Namespace) -> int:
    """Print every special rim hook tabloid of a shape, with signs."""
    tabloids = enumerate_srht(args.shape, args.type)
    print(f"{len(tabloids)} special rim hook tabloids of shape {args.shape}")
    for tabloid, _ in tabloids:
        print()
        print(render_tabloid(tabloid))
    return EXIT_OK


def _bound(value: int | None, default: int) -> int:
    return default if value is None else value


def _run_named_suite(args: argparse.Namespace, name: str) -> SuiteReport:
    if name == "sink-theorem":
        return verify_sink_theorem(
            _bound(args.max_n, DEFAULT_SINK_POSET_N),
            _bound(args.max_n_graphs, DEFAULT_GRAPH_SUITE_N),
            jobs=args.jobs,
        )
    if name == "ordinal-sum":
        return verify_ordinal_sum_identity(
            _bound(args.max_n, DEFAULT_ORDINAL_TOTAL), jobs=args.jobs
        )
    if name == "inverse-kostka":
        return verify_inverse_kostka(
            _bound(args.max_n, DEFAULT_KOSTKA_DEGREE), jobs=args.jobs
        )
    if name == "coloring":
        return verify_coloring_crosscheck(
            _bound(args.max_n, DEFAULT_GRAPH_SUITE_N),
            _bound(args.palette, DEFAULT_COLORING_PALETTE),
            jobs=args.jobs,
        )
    return SUITES[name](_bound(args.max_n, DEFAULT_TABLEAU_SUITE_N), jobs=args.jobs)



@handle_chromsym_errors
def cmd_verify(args: argparse.Namespace) -> int:
    """Run one identity suite, or all of them."""
    names = list(SUITES) if args.suite == "all" else [args.suite]
    return _emit_reports([_run_named_suite(args, name) for name in names], args.json)


@handle_chromsym_errors
def cmd_scan(args: argparse.Namespace) -> int:
    """Run the e-positivity scan."""
    report = scan_e_positivity(args.max_n, jobs=args.jobs, witness=args.witness)
    return _emit_reports([report], args.json)


# endregion
# region Parser


def _add_output_flags(parser: argparse.ArgumentParser, tsv: bool = True) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="JSON output")
    if tsv:
        group.add_argument("--tsv", action="store_true", help="tab separated output")


def build_parser() -> argparse.ArgumentParser:
    """The argument parser of the ``chromsym`` command."""
    parser = _ArgumentParser(
        prog="chromsym",
        description=(
            "Chromatic symmetric functions, P-tableaux, special rim hook tabloids "
            "and exhaustive identity checks."
        ),
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log progress to stderr (-v info, -vv debug)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_csf = subparsers.add_parser("csf", help="chromatic symmetric function of a graph")
    p_csf.add_argument("--graph", required=True, help="graph file")
    p_csf.add_argument(
        "--basis",
        choices=[b.value for b in Basis],
        default=Basis.MONOMIAL.value,
        help="target basis (default: m)",
    )
    _add_output_flags(p_csf)
    p_csf.set_defaults(handler=cmd_csf)

    p_coeffs = subparsers.add_parser("coeffs", help="coefficient report of a poset")
    p_coeffs.add_argument("--poset", required=True, help="poset file")
    p_coeffs.add_argument(
        "--theorem1",
        action="store_true",
        help="add the signed enumeration of special rim hook P-tableaux",
    )
    _add_output_flags(p_coeffs)
    p_coeffs.set_defaults(handler=cmd_coeffs)

    p_orient = subparsers.add_parser(
        "orientations", help="acyclic orientations per sink count"
    )
    p_orient.add_argument("--graph", required=True, help="graph file")
    _add_output_flags(p_orient, tsv=False)
    p_orient.set_defaults(handler=cmd_orientations)

    p_tableaux = subparsers.add_parser("tableaux", help="P-tableaux of a shape")
    p_tableaux.add_argument("--poset", required=True, help="poset file")
    p_tableaux.add_argument("--shape", required=True, type=_partition, help="e.g. 2,1")
    p_tableaux.set_defaults(handler=cmd_tableaux)

    p_srht = subparsers.add_parser("srht", help="special rim hook tabloids of a shape")
    p_srht.add_argument("--shape", required=True, type=_partition, help="e.g. 2,2")
    p_srht.add_argument("--type", type=_partition, default=None, help="e.g. 3,1")
    p_srht.set_defaults(handler=cmd_srht)

    p_verify = subparsers.add_parser("verify", help="run an identity suite")
    p_verify.add_argument("suite", choices=[*SUITES, "all"], help="suite name")
    p_verify.add_argument(
        "--max-n",
        type=int,
        default=None,
        help="instance bound (elements, vertices, total or degree, per suite)",
    )
    p_verify.add_argument(
        "--max-n-graphs",
        type=int,
        default=None,
        help=f"graph bound for sink-theorem (default: {DEFAULT_GRAPH_SUITE_N})",
    )
    p_verify.add_argument(
        "--palette",
        type=int,
        default=None,
        help=f"largest palette for coloring (default: {DEFAULT_COLORING_PALETTE})",
    )
    p_verify.add_argument("--jobs", type=int, default=1, help="worker processes")
    _add_output_flags(p_verify, tsv=False)
    p_verify.set_defaults(handler=cmd_verify)

    p_scan = subparsers.add_parser("scan", help="run a conjecture scan")
    p_scan.add_argument("target", choices=["e-positivity"], help="scan name")
    p_scan.add_argument(
        "--max-n",
        type=int,
        default=DEFAULT_POSITIVITY_N,
        help=f"poset size bound (default: {DEFAULT_POSITIVITY_N})",
    )
    p_scan.add_argument(
        "--witness",
        default=DEFAULT_WITNESS_FILE,
        help=f"witness file written on a violation (default: {DEFAULT_WITNESS_FILE})",
    )
    p_scan.add_argument("--jobs", type=int, default=1, help="worker processes")
    _add_output_flags(p_scan, tsv=False)
    p_scan.set_defaults(handler=cmd_scan)

    return parser


# endregion


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point of the ``chromsym`` console script."""
    args = build_parser().parse_args(argv)
    if args.verbose >= 2:
        LOGGER.setLevel(logging.DEBUG)
    elif args.verbose == 1:
        LOGGER.setLevel(logging.INFO)
    return args.handler(args)


if __name__ == "__main__":
    sys.exit(main())
