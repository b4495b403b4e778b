"""Command-line front end.

A system file looks like::

    # affine A2
    n 3
    m 1 2 3
    m 2 3 3
    m 1 3 3
    order 1 2 3

Pairs without an ``m`` line get label 2; ``inf`` is accepted as a label.
``order i1 ... in`` lists the generators ``s_1 .. s_n`` of ``c = s_n ... s_1``.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import preproj, weakorder
from .admissible import admissible, is_admissible, is_principal, join, meet, principal_word
from .coxgraph import (
    INF,
    CoxeterGraph,
    Orientation,
    orientation_from_order,
    preset,
    validate_matrix,
)
from .errors import BoundExceeded, CoxeterError, NumericalAmbiguity
from .rootsys import element_of_word, format_vector, parse_vector
from .tracemon import TraceWord, format_word, parse_word

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_NUMERICAL = 4
EXIT_BOUND = 5

WORD_HELP = (
    "Words are written leftmost-first as 1-based vertex indices, e.g. \"1 2 1\" "
    "is v1 v2 v1.  They act right to left: the rightmost letter is applied "
    "first.  The empty word is \"e\".  Roots are coordinate vectors in the "
    "simple-root basis, e.g. \"1 1\"; several roots are separated by ';'."
)


class InputError(Exception):
    """Malformed input (system file, word or root literal); exit code 2."""


@dataclass(frozen=True)
class System:
    graph: CoxeterGraph
    order: Optional[tuple]

    def orientation(self) -> Orientation:
        if self.order is None:
            raise InputError("this command needs an 'order' line in the system file")
        return orientation_from_order(self.graph, self.order)


def parse_system(text: str, name: str = "<system>") -> System:
    """Parse a system file; syntax problems raise :class:`InputError` with the line number."""
    n = None
    labels: dict = {}
    order = None

    def fail(lineno, msg):
        raise InputError(f"{name}:{lineno}: {msg}")

    def index(tok, lineno):
        try:
            k = int(tok)
        except ValueError:
            fail(lineno, f"expected a vertex index, got {tok!r}")
        if not 1 <= k <= n:
            fail(lineno, f"vertex {k} out of range 1..{n}")
        return k - 1

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *args = line.split()
        if key == "n":
            if n is not None:
                fail(lineno, "repeated 'n' line")
            if len(args) != 1 or not args[0].isdigit() or int(args[0]) < 1:
                fail(lineno, "expected 'n <positive integer>'")
            n = int(args[0])
            continue
        if n is None:
            fail(lineno, "the first entry must be 'n <rank>'")
        if key == "m":
            if len(args) != 3:
                fail(lineno, "expected 'm i j value'")
            i, j = index(args[0], lineno), index(args[1], lineno)
            if i == j:
                fail(lineno, "'m' lines are for distinct vertices")
            tok = args[2].lower()
            if tok == "inf":
                value = INF
            elif tok.isdigit() and int(tok) >= 2:
                value = int(tok)
            else:
                fail(lineno, f"label must be an integer >= 2 or 'inf', got {args[2]!r}")
            pair = (min(i, j), max(i, j))
            if pair in labels and labels[pair] != value:
                fail(lineno, f"conflicting labels for {i + 1},{j + 1}")
            labels[pair] = value
        elif key == "order":
            if order is not None:
                fail(lineno, "repeated 'order' line")
            verts = tuple(index(a, lineno) for a in args)
            if sorted(verts) != list(range(n)):
                fail(lineno, f"order must list each of 1..{n} exactly once")
            order = verts
        else:
            fail(lineno, f"unknown entry {key!r}")
    if n is None:
        raise InputError(f"{name}: empty system file")
    matrix = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for (i, j), v in labels.items():
        matrix[i][j] = matrix[j][i] = v
    return System(validate_matrix(matrix), order)


def format_system(graph: CoxeterGraph, order=None) -> str:
    lines = [f"n {graph.n}"]
    for i, j in graph.edges:
        lines.append(f"m {i + 1} {j + 1} {graph.label(i, j)}")
    if order is not None:
        lines.append("order " + " ".join(str(v + 1) for v in order))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# literals
# ---------------------------------------------------------------------------


def _word(graph, text) -> TraceWord:
    try:
        return parse_word(graph, text)
    except ValueError as exc:
        raise InputError(f"bad word {text!r}: {exc}") from None


def _root(graph, text):
    try:
        return parse_vector(graph, text)
    except ValueError as exc:
        raise InputError(f"bad root {text!r}: {exc}") from None


def _roots(graph, text):
    return [_root(graph, part) for part in text.split(";") if part.strip()]


def _vertex(graph, text) -> int:
    try:
        k = int(str(text).lstrip("sSvV"))
    except ValueError:
        raise InputError(f"bad vertex {text!r}") from None
    if not 1 <= k <= graph.n:
        raise InputError(f"vertex {k} out of range 1..{graph.n}")
    return k - 1


def _orientation_text(orient: Orientation) -> str:
    return " ".join(f"{t + 1}->{h + 1}" for t, h in orient.arrows) or "-"


def _mult(vec) -> str:
    return " ".join(str(m) for m in vec)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


@dataclass
class Outcome:
    """What a command produced: ordered text lines plus a JSON-ready result."""

    lines: list
    result: object
    diagnostics: list = field(default_factory=list)


def cmd_validate(system: System, args) -> Outcome:
    g = system.graph
    kind = preproj.coxeter_type(g)
    edges = [f"{i + 1}-{j + 1}:{g.label(i, j)}" for i, j in g.edges]
    result = {"n": g.n, "edges": edges, "type": kind or "infinite"}
    lines = ["valid", f"n: {g.n}", "edges: " + (" ".join(edges) or "-"), f"type: {kind or 'infinite'}"]
    if system.order is not None:
        orient = system.orientation()
        result["order"] = [v + 1 for v in system.order]
        result["orientation"] = _orientation_text(orient)
        lines.append("order: " + " ".join(str(v + 1) for v in system.order))
        lines.append("orientation: " + _orientation_text(orient))
    return Outcome(lines, result)


def cmd_nf(system: System, args) -> Outcome:
    X = _word(system.graph, args.word)
    blocks = [" ".join(str(v + 1) for v in b) for b in reversed(X.normal_form())]
    canon = format_word(X.canonical())
    return Outcome(
        [f"normal-form: {canon}", "blocks: " + (" | ".join(blocks) or "-")],
        {"normal_form": canon, "blocks": blocks},
    )


def cmd_admissible(system: System, args) -> Outcome:
    orient = system.orientation()
    X = _word(system.graph, args.word)
    if not is_admissible(X, orient):
        return Outcome(["not-admissible"], {"admissible": False})
    A = admissible(X, orient)
    principal = is_principal(A)
    lines = ["admissible", f"multiplicity: {_mult(A.multiplicity)}",
             f"final-orientation: {_orientation_text(A.final)}"]
    result = {"admissible": True, "multiplicity": list(A.multiplicity),
              "final_orientation": _orientation_text(A.final)}
    if principal is not None and principal[0] > 0:
        r, x = principal
        lines.append(f"principal: r={r} x={x + 1}")
        result["principal"] = {"r": r, "x": x + 1}
    return Outcome(lines, result)


def _lattice_op(system: System, args, op, label) -> Outcome:
    orient = system.orientation()
    X = admissible(_word(system.graph, args.w1), orient)
    Y = admissible(_word(system.graph, args.w2), orient)
    Z = op(X, Y)
    text = format_word(Z.word)
    return Outcome(
        [f"{label}: {text}", f"multiplicity: {_mult(Z.multiplicity)}"],
        {label: text, "multiplicity": list(Z.multiplicity)},
    )


def cmd_meet(system, args):
    return _lattice_op(system, args, meet, "meet")


def cmd_join(system, args):
    return _lattice_op(system, args, join, "join")


def cmd_principal(system: System, args) -> Outcome:
    orient = system.orientation()
    if args.r < 1:
        raise InputError("r must be >= 1")
    x = _vertex(system.graph, args.x)
    P = principal_word(args.r, x, orient)
    root = preproj.root_of_principal(P)
    blocks = [format_word(b) for b in reversed(P.blocks)]
    word = format_word(P.word.word)
    return Outcome(
        [f"word: {word}", "blocks: " + " | ".join(blocks), f"transpose-root: {format_vector(root)}"],
        {"word": word, "blocks": blocks, "transpose_root": format_vector(root)},
    )


def cmd_projective(system: System, args) -> Outcome:
    roots = preproj.projective_roots(system.orientation())
    lines = [f"s{x + 1}: {format_vector(v)}" for x, v in roots.items()]
    return Outcome(lines, {f"s{x + 1}": format_vector(v) for x, v in roots.items()})


def cmd_preproj(system: System, args) -> Outcome:
    c = system.orientation()
    rmax = args.rmax or preproj.default_rmax(system.graph)
    table = preproj.enumerate_preprojective(c, rmax)
    lines, rows = [], []
    for r in sorted(table):
        for rec in table[r]:
            word = format_word(rec.principal.word.word)
            lines.append(f"r={r} s{rec.apex + 1}: {format_vector(rec.root)} | W: {word}")
            rows.append({"size": r, "apex": rec.apex + 1, "root": format_vector(rec.root), "word": word})
    lines.append(f"count: {len(rows)}")
    return Outcome(lines, {"roots": rows, "count": len(rows)}, [f"rmax={rmax}"])


def cmd_walpha(system: System, args) -> Outcome:
    c = system.orientation()
    rec = preproj.w_alpha(_root(system.graph, args.root), c, args.rmax)
    word = format_word(rec.principal.word.word)
    return Outcome(
        [f"size: {rec.size}", f"apex: s{rec.apex + 1}", f"word: {word}"],
        {"size": rec.size, "apex": rec.apex + 1, "word": word},
    )


def cmd_wpsi(system: System, args) -> Outcome:
    c = system.orientation()
    P = preproj.w_psi(_roots(system.graph, args.roots), c, r_max=args.rmax)
    word = format_word(P.w_psi.word)
    members = [format_vector(r.root) for r in P.roots]
    return Outcome(
        [f"word: {word}", f"independent: {'yes' if P.independent else 'no'}",
         "roots: " + ("; ".join(members) or "-")],
        {"word": word, "independent": P.independent, "roots": members},
        list(P.diagnostics),
    )


def cmd_reduced(system: System, args) -> Outcome:
    X = _word(system.graph, args.word)
    reduced = weakorder.is_reduced(X)
    lines = ["reduced" if reduced else "not-reduced"]
    result: dict = {"reduced": reduced}
    if reduced and system.order is not None:
        c = system.orientation()
        if is_admissible(X, c):
            cl = weakorder.classify_admissible(admissible(X, c))
            psi = [format_vector(r.root) for r in cl.psi.roots]
            lines.append("psi: " + ("; ".join(psi) or "-"))
            result["psi"] = psi
    return Outcome(lines, result)


def cmd_weak_leq(system: System, args) -> Outcome:
    g = system.graph
    u = element_of_word(_word(g, args.w1))
    v = element_of_word(_word(g, args.w2))
    ans = weakorder.leq_L(u, v, g)
    lu, lv = weakorder.length(u, g).length, weakorder.length(v, g).length
    return Outcome(
        ["true" if ans else "false", f"lengths: {lu} {lv}"],
        {"leq": ans, "lengths": [lu, lv]},
    )


def cmd_finite(system: System, args) -> Outcome:
    rmax = args.rmax or preproj.default_rmax(system.graph)
    verdict = preproj.finiteness_probe(system.orientation(), rmax)
    oracle = preproj.finite_type_oracle(system.graph)
    return Outcome(
        [verdict.value, f"classification: {oracle.value}"],
        {"probe": verdict.value, "classification": oracle.value},
        [f"rmax={rmax}"],
    )


def cmd_catalog(system, args) -> Outcome:
    try:
        g = preset(args.name, *args.params)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    text = format_system(g, tuple(g.vertices))
    return Outcome(text.splitlines(), {"system": text})


COMMANDS = {
    "validate": (cmd_validate, "check a system file and describe it"),
    "nf": (cmd_nf, "normal form of a word"),
    "admissible": (cmd_admissible, "test admissibility for the c-orientation"),
    "meet": (cmd_meet, "meet of two admissible words"),
    "join": (cmd_join, "join of two admissible words"),
    "principal": (cmd_principal, "the principal word W_{r,x}"),
    "projective": (cmd_projective, "projective roots of c"),
    "preproj": (cmd_preproj, "preprojective roots of size <= rmax"),
    "walpha": (cmd_walpha, "least admissible word negating a root"),
    "wpsi": (cmd_wpsi, "least admissible word negating a set of roots"),
    "reduced": (cmd_reduced, "whether a word is reduced"),
    "weak-leq": (cmd_weak_leq, "left weak order between two words' elements"),
    "finite": (cmd_finite, "finiteness probe"),
    "catalog": (cmd_catalog, "print a standard system as a system file"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxpreproj",
        description="Admissible words and preprojective roots of Coxeter elements.",
        epilog=WORD_HELP,
    )
    parser.add_argument("--json", action="store_true", help="emit one JSON record per result")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text, epilog=WORD_HELP)
        if name == "catalog":
            p.add_argument("name", help="type name, e.g. A, B, D, E, F, H, I2, affineA, affineC, infdihedral")
            p.add_argument("params", nargs="*", help="rank or dihedral order")
            continue
        p.add_argument("system", help="system file ('-' for stdin)")
        if name in ("nf", "admissible", "reduced"):
            p.add_argument("word")
        elif name in ("meet", "join", "weak-leq"):
            p.add_argument("w1")
            p.add_argument("w2")
        elif name == "principal":
            p.add_argument("r", type=int)
            p.add_argument("x", help="apex vertex (1-based)")
        elif name == "walpha":
            p.add_argument("root")
        elif name == "wpsi":
            p.add_argument("roots", help="roots separated by ';'")
        if name in ("preproj", "finite", "walpha", "wpsi"):
            p.add_argument("--rmax", type=int, default=None, help="size bound (default 2n(n+1))")
    return parser


def _read_system(path: str) -> System:
    if path == "-":
        return parse_system(sys.stdin.read(), "<stdin>")
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_system(text, path)


def _exit_code(exc: CoxeterError) -> int:
    if isinstance(exc, NumericalAmbiguity):
        return EXIT_NUMERICAL
    if isinstance(exc, BoundExceeded):
        return EXIT_BOUND
    return EXIT_DOMAIN


def _inputs(args) -> dict:
    skip = {"command", "json"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler, _ = COMMANDS[args.command]
    try:
        system = None if args.command == "catalog" else _read_system(args.system)
        out = handler(system, args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CoxeterError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return _exit_code(exc)
    if args.json:
        record = {
            "command": args.command,
            "inputs": _inputs(args),
            "result": out.result,
            "diagnostics": out.diagnostics,
        }
        print(json.dumps(record))
    else:
        for line in out.lines:
            print(line)
        for note in out.diagnostics:
            print(f"# {note}")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
