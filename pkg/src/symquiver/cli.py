"""Command line interface.

Exit status: 0 on success, 1 for invalid input, 2 when verification fails.
Output is one record per line unless ``--pretty`` is given.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .formats import load_matrix, load_quiver, load_representation
from .linalg import nw_rank_matrix
from .perms import PermutationError, bruhat_leq, diagrams, parse_permutation
from .poset import DEFAULT_MAX_SIZE, degeneration_poset, export_poset, verify_dictionary
from .quiver import QuiverError
from .reps import enumerate_symmetric_orbits, orbit_rank_vector, rep_from_multiplicities
from .zelevinsky import image_set, sym_zelevinsky_permutation, zelevinsky_permutation

EXIT_OK, EXIT_INVALID, EXIT_VERIFY = 0, 1, 2


class _Out:
    def __init__(self, stream):
        self.stream = stream
        self.lines: list[str] = []

    def __call__(self, line: str = "") -> None:
        self.lines.append(line)

    def flush(self) -> None:
        text = "\n".join(self.lines)
        if self.lines:
            text += "\n"
        self.stream.write(text)
        self.stream.flush()


def _table(rows: list[list[str]]) -> list[str]:
    widths = [max(len(r[i]) for r in rows if i < len(r)) for i in range(max(map(len, rows)))]
    return ["  ".join(c.rjust(widths[i]) for i, c in enumerate(r)).rstrip() for r in rows]


def _fmt_iv(f) -> str:
    return ",".join(f"{J}:{v}" for J, v in f.items() if v) or "-"


def cmd_orbits(args, out) -> int:
    Q, d = load_quiver(args.quiver)
    orbits = enumerate_symmetric_orbits(Q, d)
    rows = []
    for i, m in enumerate(orbits):
        rows.append([str(i), _fmt_iv(m), _fmt_iv(orbit_rank_vector(Q, d, m))])
    if args.pretty:
        for line in _table([["orbit", "multiplicities", "ranks"], *rows]):
            out(line)
    else:
        for i, m, r in rows:
            out(f"orbit {i} mult {m} ranks {r}")
    return EXIT_OK


def cmd_zel(args, out) -> int:
    Q, d = load_quiver(args.quiver)
    if args.rep:
        targets = [("rep", load_representation(args.rep, Q, d))]
    else:
        orbits = enumerate_symmetric_orbits(Q, d)
        if args.orbit is not None:
            if not 0 <= args.orbit < len(orbits):
                raise QuiverError(f"orbit index {args.orbit} out of range 0..{len(orbits) - 1}")
            picks = [args.orbit]
        else:
            picks = range(len(orbits))
        targets = [(str(i), rep_from_multiplicities(Q, d, orbits[i])) for i in picks]
    rows = []
    for name, W in targets:
        rows.append([name, str(zelevinsky_permutation(W)), str(sym_zelevinsky_permutation(W))])
    if args.pretty:
        for line in _table([["orbit", "v", "v_eps"], *rows]):
            out(line)
    elif len(rows) == 1:
        out(f"v {rows[0][1]}")
        out(f"v_eps {rows[0][2]}")
    else:
        for name, v, ve in rows:
            out(f"orbit {name} v {v} v_eps {ve}")
    return EXIT_OK


def cmd_poset(args, out) -> int:
    Q, d = load_quiver(args.quiver)
    doc = export_poset(degeneration_poset(Q, d), args.format)
    if args.out:
        Path(args.out).write_text(doc)
    else:
        out(doc.rstrip("\n"))
    return EXIT_OK


def cmd_image(args, out) -> int:
    Q, d = load_quiver(args.quiver)
    for u in image_set(Q, d):
        out(str(u))
    return EXIT_OK


def cmd_bruhat(args, out) -> int:
    u, v = parse_permutation(args.u), parse_permutation(args.v)
    if u.n != v.n:
        raise PermutationError(f"size mismatch: {u} has {u.n} letters, {v} has {v.n}")
    out(f"{u} ≤ {v}: {'true' if bruhat_leq(u, v) else 'false'}")
    return EXIT_OK


def cmd_diagrams(args, out) -> int:
    w = parse_permutation(args.w)
    dg = diagrams(w)
    names = ["D", "D+", "D-", "E", "E+", "E-"]
    rows = [[nm, " ".join(f"({i},{j})" for i, j in sorted(cells)) or "-"]
            for nm, cells in zip(names, dg)]
    if args.pretty:
        for line in _table(rows):
            out(line)
    else:
        for nm, cells in rows:
            out(f"{nm} {cells}")
    return EXIT_OK


def cmd_check(args, out) -> int:
    Q, d = load_quiver(args.quiver)
    report = verify_dictionary(Q, d, max_size=args.max_size)
    lines = report.lines() if args.verbose else (
        [f"failure {f}" for f in report.failures] + [report.summary()])
    for line in lines:
        out(line)
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_ranks(args, out) -> int:
    M = load_matrix(args.matrix)
    if not M.is_square():
        raise QuiverError(f"northwest rank table needs a square matrix, got {M.rows}x{M.cols}")
    table = [[str(x) for x in row] for row in nw_rank_matrix(M).tolist()]
    if args.pretty:
        for line in _table(table):
            out(line)
    else:
        for row in table:
            out(" ".join(row))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="aligned, human-oriented output")
    p = argparse.ArgumentParser(prog="symquiver", parents=[common],
                                description="Symmetric type A quiver orbits and Zelevinsky permutations.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("orbits", parents=[common], help="list orbits with multiplicities and ranks")
    s.add_argument("quiver")
    s.set_defaults(fn=cmd_orbits)

    s = sub.add_parser("zel", parents=[common], help="Zelevinsky permutations v and v_eps")
    s.add_argument("quiver")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--rep", help="representation file")
    g.add_argument("--orbit", type=int, help="orbit index as listed by 'orbits'")
    s.set_defaults(fn=cmd_zel)

    s = sub.add_parser("poset", parents=[common], help="export the degeneration poset")
    s.add_argument("quiver")
    s.add_argument("--format", choices=["dot", "json"], required=True)
    s.add_argument("--out", help="write to this path instead of standard output")
    s.set_defaults(fn=cmd_poset)

    s = sub.add_parser("image", parents=[common], help="print the image set A_eps")
    s.add_argument("quiver")
    s.set_defaults(fn=cmd_image)

    s = sub.add_parser("bruhat", parents=[common], help="compare two permutations in Bruhat order")
    s.add_argument("u")
    s.add_argument("v")
    s.set_defaults(fn=cmd_bruhat)

    s = sub.add_parser("diagrams", parents=[common], help="Rothe diagrams and essential sets")
    s.add_argument("w")
    s.set_defaults(fn=cmd_diagrams)

    s = sub.add_parser("check", parents=[common], help="verify the orbit dictionary")
    s.add_argument("quiver")
    s.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE,
                   help=f"largest 2d to attempt (default {DEFAULT_MAX_SIZE})")
    s.add_argument("--verbose", action="store_true", help="print every check")
    s.set_defaults(fn=cmd_check)

    s = sub.add_parser("ranks", parents=[common], help="northwest rank table of a matrix")
    s.add_argument("matrix")
    s.set_defaults(fn=cmd_ranks)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return EXIT_INVALID if ex.code not in (0, None) else EXIT_OK
    stdout = sys.stdout
    if hasattr(stdout, "reconfigure"):
        try:
            stdout.reconfigure(encoding="utf-8")
        except (ValueError, OSError):
            pass
    out = _Out(stdout)
    try:
        code = args.fn(args, out)
    except (QuiverError, PermutationError, ValueError) as ex:
        print(f"symquiver: error: {ex}", file=sys.stderr)
        return EXIT_INVALID
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
