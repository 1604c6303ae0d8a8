"""Command-line entry point: ``orthopart <command> ...``."""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

from . import guards, oracle, polygen
from .engine import NoGoodCutFound, partition
from .residues import bound
from .geometry import GeometryError
from .io import (
    IoError,
    PolygonFormatError,
    ValidationError,
    emit_result,
    parse_polygon,
    pieces_from_json,
    polygon_text,
)

EXIT_OK, EXIT_INVALID, EXIT_THEOREM = 0, 2, 3


class TheoremViolation(RuntimeError):
    def __init__(self, msg: str, dump: str):
        super().__init__(msg)
        self.dump = dump


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _solve(P, with_patrols: bool, trace: bool):
    def show(H, lc, label):
        print(f"[{label}] n={H.n} -> {lc.n1} + {lc.n2} via {lc.cut.kind.value}", file=sys.stderr)

    try:
        result = partition(P, trace=show if trace else None)
    except NoGoodCutFound as e:
        raise TheoremViolation(str(e), e.dump()) from e
    except AssertionError as e:
        raise TheoremViolation(f"partition check failed: {e}", polygon_text(P)) from e
    patrols = None
    if with_patrols:
        try:
            patrols = guards.patrols_for(result.pieces)
        except guards.NoPatrolFound as e:
            raise TheoremViolation(str(e), e.dump()) from e
        if not guards.patrols_noncrossing(patrols):
            raise TheoremViolation("patrols cross", polygon_text(P))
    return result, patrols


def _summary(P, result, patrols) -> str:
    lines = [f"n = {P.n}, pieces = {result.count}, bound = {bound(P.n)}"]
    for i, Q in enumerate(result.pieces):
        line = f"  piece {i}: {Q.n} vertices"
        if patrols is not None:
            a, b = patrols[i].segment
            fa = ",".join(str(c) for c in a)
            line += f", guard at ({fa})" if a == b else f", patrol ({fa}) - ({','.join(str(c) for c in b)})"
        lines.append(line)
    return "\n".join(lines)


def cmd_partition(args, with_patrols=False) -> int:
    P = parse_polygon(_read(args.file))
    result, patrols = _solve(P, with_patrols, args.trace)
    emit_result(P, result, patrols, json_path=args.json, svg_path=args.svg)
    print(_summary(P, result, patrols))
    return EXIT_OK


def cmd_verify(args) -> int:
    P = parse_polygon(_read(args.file))
    pieces = pieces_from_json(_read(args.pieces))
    rep = oracle.verify_partition(P, pieces)
    print(f"tiles exactly: {rep.tiles_exactly}")
    print(f"pieces valid: {rep.all_pieces_valid}")
    print(f"pieces <= 8 vertices: {rep.pieces_small}")
    print(f"count {rep.count} <= bound {rep.bound}: {rep.count_within_bound}")
    for k, v in sorted(rep.witness.items()):
        print(f"witness {k}: {v}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump({"ok": rep.ok, "count": rep.count, "bound": rep.bound,
                       "witness": {k: repr(v) for k, v in rep.witness.items()}}, fh, indent=2, sort_keys=True)
    return EXIT_OK if rep.ok else EXIT_INVALID


def cmd_generate(args) -> int:
    P = polygen.generate(args.n, args.seed)
    text = polygon_text(P)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_lemma6(args) -> int:
    rep = oracle.verify_lemma6_table(args.max_n)
    print(f"checked {rep.checked} certificate instances up to n = {args.max_n}")
    print(f"unsound: {len(rep.unsound)}")
    for row in rep.unsound:
        print("  ", row)
    print(f"instances needing the n = 14 (mod 16) exclusion: {len(rep.exclusion_needed)}")
    for row in rep.exclusion_needed[: args.show]:
        print("  n=%d n1=%d n2=%d %s" % row)
    return EXIT_OK if rep.ok else EXIT_THEOREM


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="write a JSON result")
    common.add_argument("--svg", metavar="PATH", help="write an SVG figure")
    common.add_argument("--trace", action="store_true", help="print the case label of every cut")

    ap = argparse.ArgumentParser(prog="orthopart", description="Partition polyominoes into pieces of at most 8 vertices.")
    sub = ap.add_subparsers(dest="command", required=True)
    p = sub.add_parser("partition", parents=[common], help="partition a polygon file")
    p.add_argument("file")
    p = sub.add_parser("guards", parents=[common], help="partition and place one patrol per piece")
    p.add_argument("file")
    p = sub.add_parser("verify", parents=[common], help="check a partition with the independent oracle")
    p.add_argument("file")
    p.add_argument("--pieces", required=True, metavar="JSON")
    p = sub.add_parser("generate", parents=[common], help="emit a random polyomino")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p = sub.add_parser("lemma6-table", parents=[common], help="scan the residue certificates")
    p.add_argument("--max-n", type=int, default=4 + 16 * 12)
    p.add_argument("--show", type=int, default=10)
    return ap


def _write_dump(dump: str) -> str:
    fd, path = tempfile.mkstemp(prefix="orthopart-violation-", suffix=".txt")
    with os.fdopen(fd, "w") as fh:
        fh.write(dump)
    return path


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "partition":
            return cmd_partition(args)
        if args.command == "guards":
            return cmd_partition(args, with_patrols=True)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "generate":
            return cmd_generate(args)
        return cmd_lemma6(args)
    except (PolygonFormatError, ValidationError, GeometryError, ValueError,
            polygen.GenerationBudgetExceeded) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except (IoError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except TheoremViolation as e:
        path = _write_dump(e.dump)
        print(f"theorem violation: {e}\ndump written to {path}", file=sys.stderr)
        return EXIT_THEOREM


if __name__ == "__main__":
    sys.exit(main())
