"""Command line interface: ``conormal <command> ...``.

Exit codes: 0 success, 1 syntax or I/O error, 2 invalid poset, 3 internal
invariant breach (a bug).
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Sequence, TextIO

from . import __version__
from .complex import ConormalComplex, build_complex, verify_d_squared
from .errors import AmbiguousAdjacencyError, InvariantBreach, ParseError, ValidationError
from .fileformat import parse, serialize
from .homology import HomologySummary, full_summary
from .ktheory import ktheory
from .orbit import assert_B_isomorphism
from .poset import (
    CornerPoset,
    boundary_components,
    closed_manifold,
    hypercube,
    interval,
    product,
    simplex,
    validate,
)

EXIT_OK, EXIT_SYNTAX, EXIT_INVALID, EXIT_BREACH = 0, 1, 2, 3

_PARAMETRIC: dict[str, Callable[[int], CornerPoset]] = {
    "boundary": boundary_components,
    "simplex": simplex,
    "cube": hypercube,
}


def builder_from_spec(spec: str) -> CornerPoset:
    """``interval``, ``closed``, ``boundary:p``, ``simplex:k`` or ``cube:k``."""
    if spec == "interval":
        return interval()
    if spec == "closed":
        return closed_manifold()
    name, sep, arg = spec.partition(":")
    if not sep or name not in _PARAMETRIC:
        raise ValueError(f"unknown builder {spec!r}")
    try:
        k = int(arg)
    except ValueError:
        raise ValueError(f"builder {name} needs an integer parameter, got {arg!r}") from None
    return _PARAMETRIC[name](k)


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _load(path: str) -> CornerPoset:
    return parse(_read(path))


def _emit(text: str, out: str | None, stdout: TextIO) -> None:
    if out is None or out == "-":
        stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _checked_complex(poset: CornerPoset) -> ConormalComplex:
    cx = build_complex(poset)
    if not verify_d_squared(cx):
        raise InvariantBreach("conormal differential does not square to zero")
    return cx


def dump_matrices(cx: ConormalComplex) -> list[str]:
    out = []
    for p in range(1, cx.d + 1):
        m = cx.D(p)
        out.append(f"D {p} {m.shape[0]} {m.shape[1]}")
        out.append("rows " + " ".join(cx.basis[p - 1]))
        out.append("cols " + " ".join(cx.basis[p]))
        out.extend(" ".join(str(int(x)) for x in row) for row in m)
    return out


def _homology_lines(summary: HomologySummary, rational: bool) -> list[str]:
    lines = summary.lines()
    if rational:
        lines += [f"b_{p} = {b}" for p, b in enumerate(summary.betti)]
    return lines


def cmd_validate(args, stdout: TextIO) -> int:
    try:
        poset = parse(_read(args.file), check=False)
    except AmbiguousAdjacencyError as exc:
        stdout.write(exc.report.format() + "\n")
        return EXIT_INVALID
    report = validate(poset)
    stdout.write(report.format() + "\n")
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_homology(args, stdout: TextIO) -> int:
    cx = _checked_complex(_load(args.file))
    lines = _homology_lines(full_summary(cx), args.rational)
    if args.dump_matrices:
        lines += dump_matrices(cx)
    stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_ktheory(args, stdout: TextIO) -> int:
    poset = _load(args.file)
    report = ktheory(poset, full_summary(_checked_complex(poset)))
    stdout.write("\n".join(report.lines()) + "\n")
    return EXIT_OK


def cmd_crosscheck(args, stdout: TextIO) -> int:
    poset = _load(args.file)
    try:
        cmp = assert_B_isomorphism(poset, args.ambient_degree)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    stdout.write("\n".join(cmp.lines()) + "\n")
    return EXIT_OK if cmp.passed else EXIT_BREACH


def cmd_build(args, stdout: TextIO) -> int:
    try:
        poset = builder_from_spec(args.spec)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    _emit(serialize(poset), args.output, stdout)
    return EXIT_OK


def cmd_product(args, stdout: TextIO) -> int:
    a, b = _load(args.first), _load(args.second)
    _emit(serialize(product(a, b)), args.output, stdout)
    return EXIT_OK


def cmd_report(args, stdout: TextIO) -> int:
    poset = _load(args.file)
    cx = _checked_complex(poset)
    summary = full_summary(cx)
    cmp = assert_B_isomorphism(poset)
    lines = ["# validation", "VALID", "# homology"]
    lines += _homology_lines(summary, rational=True)
    lines += [f"# crosscheck (N = {cmp.ambient_degree})"] + cmp.lines()
    lines += ["# ktheory"] + ktheory(poset, summary).lines()
    stdout.write("\n".join(lines) + "\n")
    return EXIT_OK if cmp.passed else EXIT_BREACH


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for invalid posets here.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_SYNTAX, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="conormal",
        description="Conormal homology and rational K-theory of manifolds with embedded corners.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name: str, help: str):
        p = sub.add_parser(name, help=help)
        p.add_argument("file", nargs="?", default="-", help="poset file ('-' or omitted: stdin)")
        return p

    p = with_file("validate", "check the structural invariants of a poset file")
    p.set_defaults(func=cmd_validate)

    p = with_file("homology", "conormal homology groups per degree")
    p.add_argument("--rational", action="store_true", help="also print rational Betti numbers")
    p.add_argument("--dump-matrices", action="store_true", help="append the differential matrices")
    p.set_defaults(func=cmd_homology)

    p = with_file("ktheory", "rational K-theory ranks and the obstruction verdict")
    p.set_defaults(func=cmd_ktheory)

    p = with_file("crosscheck", "compare conormal homology with the orbit-space cochain path")
    p.add_argument("--ambient-degree", "-N", type=int, default=None, metavar="N", help="even ambient degree")
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("build", help="emit a builder poset")
    p.add_argument("spec", help="interval | closed | boundary:p | simplex:k | cube:k")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("product", help="emit the product of two poset files")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_product)

    p = with_file("report", "validation, homology, cross-check and K-theory in one run")
    p.set_defaults(func=cmd_report)
    return parser


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, stdout)
    except (ParseError, OSError, _UsageError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_SYNTAX
    except ValidationError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_INVALID
    except InvariantBreach as exc:
        stderr.write(f"internal error: {exc}\n")
        return EXIT_BREACH


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
