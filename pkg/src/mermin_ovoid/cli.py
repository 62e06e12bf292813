"""Command-line interface: ``mermin-ovoid {verify,closure,ovoid,census,demo}``.

Pentagram files hold one edge per line::

    edge <label>: <obs> <obs> <obs> <obs>

``#`` starts a comment, blank lines are ignored, and exactly five edge
lines are required.  Exit codes: 0 magic (or success), 1 valid but not
magic or structurally invalid, 2 parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path

from . import pauli
from .census import census
from .errors import DocumentError, GeometryError, PauliParseError, StructuralError
from .mermin import (
    PAPER_EDGES,
    Pentagram,
    closure_triple,
    to_ovoid,
    validate,
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2

_EDGE_LINE = re.compile(r"edge\s+([^\s:]+)\s*:\s*(.*)")


@dataclass(frozen=True)
class PentagramDocument:
    edges: tuple[tuple[str, tuple[str, ...]], ...]

    def to_pentagram(self) -> Pentagram:
        return Pentagram.from_edges({label: obs for label, obs in self.edges})


def parse_document(text: str) -> PentagramDocument:
    edges = []
    seen_labels: dict[str, int] = {}
    signs: dict[str, tuple[int, int]] = {}
    n_qubits = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _EDGE_LINE.fullmatch(line)
        if not m:
            raise DocumentError(f"expected 'edge <label>: <obs> x4', got {line!r}", lineno)
        label, rest = m.groups()
        if label in seen_labels:
            raise DocumentError(f"edge label {label!r} already used on line {seen_labels[label]}", lineno)
        seen_labels[label] = lineno
        words = rest.split()
        if len(words) != 4:
            raise DocumentError(f"edge {label!r} lists {len(words)} observables, expected 4", lineno)
        canon = []
        for w in words:
            try:
                obs = pauli.parse(w)
            except PauliParseError as exc:
                raise DocumentError(f"bad Pauli string {w!r}: {exc}", lineno) from None
            if n_qubits is None:
                n_qubits = obs.n
            elif obs.n != n_qubits:
                raise DocumentError(f"{w!r} acts on {obs.n} qubits, expected {n_qubits}", lineno)
            key = obs.letters
            if key in signs and signs[key][0] != obs.sign:
                raise DocumentError(
                    f"{key} has sign {'+' if obs.sign > 0 else '-'} here but the opposite "
                    f"sign on line {signs[key][1]}",
                    lineno,
                )
            signs.setdefault(key, (obs.sign, lineno))
            canon.append(pauli.format_pauli(obs))
        edges.append((label, tuple(canon)))
    if len(edges) != 5:
        raise DocumentError(f"expected 5 edge lines, found {len(edges)}")
    return PentagramDocument(tuple(edges))


def format_document(doc: PentagramDocument) -> str:
    return "".join(f"edge {label}: {' '.join(obs)}\n" for label, obs in doc.edges)


def demo_text() -> str:
    header = "# Mermin pentagram built from real three-qubit observables\n"
    doc = PentagramDocument(
        tuple((label, tuple("+" + w for w in obs)) for label, obs in PAPER_EDGES.items())
    )
    return header + format_document(doc)


def _load(args) -> Pentagram:
    if args.demo:
        text = demo_text()
    elif args.path is None:
        raise DocumentError("give a pentagram file or --demo")
    else:
        try:
            text = Path(args.path).read_text(encoding="utf-8")
        except OSError as exc:
            raise DocumentError(f"cannot read {args.path}: {exc.strerror}") from None
    return parse_document(text).to_pentagram()


def _sign(s: int) -> str:
    return "+" if s > 0 else "-"


def _emit(args, text: str) -> None:
    if not args.quiet:
        print(text)


def cmd_verify(args) -> int:
    p = _load(args)
    try:
        report = validate(p)
    except StructuralError as exc:
        _emit(args, f"structurally invalid: {exc}")
        return EXIT_INVALID
    if args.format == "structured":
        data = {
            "magic": report.magic,
            "edges": [
                {
                    "label": e.label,
                    "observables": [str(o) for o in p.edge(e.label)],
                    "commuting": e.commuting,
                    "product": str(e.product),
                    "product_is_scalar": e.product_is_scalar,
                }
                for e in report.edges
            ],
            "negative_edges": report.negative_edges,
            "failures": report.failures,
        }
        _emit(args, json.dumps(data, indent=2))
    else:
        lines = []
        for e in report.edges:
            obs = " ".join(str(o) for o in p.edge(e.label))
            comm = "commuting" if e.commuting else "NOT commuting"
            prod = f"{_sign(e.sign)}I" if e.product_is_scalar else f"{e.product} (not scalar)"
            lines.append(f"{e.label:<8} {obs}  {comm:<13}  product {prod}")
        for f in report.failures:
            lines.append(f"failure: {f}")
        lines.append(f"magic: {'yes' if report.magic else 'no'}")
        _emit(args, "\n".join(lines))
    return EXIT_OK if report.magic else EXIT_INVALID


def cmd_closure(args) -> int:
    p = _load(args)
    rows = []
    try:
        for label in p.labels:
            triple = closure_triple(p, label)
            rows.append((label, triple, pauli.product(triple).sign))
    except GeometryError as exc:
        _emit(args, f"error: {exc}")
        return EXIT_INVALID
    if args.format == "structured":
        data = {
            label: {"triple": [o.letters for o in t], "product": f"{_sign(s)}I"}
            for label, t, s in rows
        }
        _emit(args, json.dumps(data, indent=2))
    else:
        _emit(args, "\n".join(
            f"{label:<8} {{{', '.join(o.letters for o in t)}}}  product {_sign(s)}I"
            for label, t, s in rows
        ))
    return EXIT_OK


def _graph(p: Pentagram, ovoid) -> str:
    out = ["graph ovoid {"]
    for label in p.labels:
        out.append(f'  "{label}" [label="{label}\\n{ovoid.edge_points[label]}"];')
    for i, o in enumerate(p.observables):
        a, b = p.edges_of(i)
        out.append(f'  "{a}" -- "{b}" [label="{o}"];')
    out.append("}")
    return "\n".join(out)


def cmd_ovoid(args) -> int:
    p = _load(args)
    try:
        ovoid = to_ovoid(p)
    except GeometryError as exc:
        _emit(args, f"error: {exc}")
        return EXIT_INVALID
    rows = []
    for i, o in enumerate(p.observables):
        rows.append({
            "observable": str(o),
            "edges": p.edges_of(i),
            "line": [str(q) for q in ovoid.line_map[i].points],
        })
    closures = {label: [o.letters for o in closure_triple(p, label)] for label in p.labels}
    if args.format == "graph":
        _emit(args, _graph(p, ovoid))
    elif args.format == "structured":
        data = {
            "points": {label: str(q) for label, q in ovoid.edge_points.items()},
            "system": ovoid.system,
            "closures": closures,
            "lines": rows,
        }
        _emit(args, json.dumps(data, indent=2))
    else:
        out = ["ovoid points:"]
        out += [f"  {label:<8} {q}" for label, q in ovoid.edge_points.items()]
        out.append(f"closures (all in generator system {ovoid.system}):")
        out += [f"  {label:<8} {{{', '.join(t)}}}" for label, t in closures.items()]
        out.append("observable lines:")
        out += [
            f"  {r['observable']:<6} {' '.join(r['line'])}  joins {r['edges'][0]}, {r['edges'][1]}"
            for r in rows
        ]
        _emit(args, "\n".join(out))
    return EXIT_OK


def cmd_census(args) -> int:
    data = census()
    if args.format == "structured":
        _emit(args, json.dumps(data, indent=2))
    else:
        by_sys = data["quadric_generators_by_system"]
        rows = [
            ("PG(3,2) points", data["pg32_points"]),
            ("PG(3,2) lines", data["pg32_lines"]),
            ("PG(3,2) planes", data["pg32_planes"]),
            ("W(5,2) points", data["w52_points"]),
            ("W(5,2) generators", data["w52_generators"]),
            ("Q+(5,2) points", data["quadric_points"]),
            ("Q+(5,2) generators", " + ".join(str(v) for v in by_sys.values())),
            ("generators per quadric point", data["generators_per_quadric_point"]),
            ("ovoids of PG(3,2)", data["ovoids"]),
            ("Klein bijection", "ok" if data["klein_bijection"] else "FAILED"),
        ]
        _emit(args, "\n".join(f"{name:<30} {value}" for name, value in rows))
    return EXIT_OK


def cmd_demo(args) -> int:
    sys.stdout.write(demo_text())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mermin-ovoid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, formats, takes_file=True):
        sp = sub.add_parser(name)
        if takes_file:
            sp.add_argument("path", nargs="?")
            sp.add_argument("--demo", action="store_true", help="use the built-in pentagram")
        if formats:
            sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("--quiet", action="store_true")
        sp.set_defaults(func=func)

    add("verify", cmd_verify, ["text", "structured"])
    add("closure", cmd_closure, ["text", "structured"])
    add("ovoid", cmd_ovoid, ["text", "structured", "graph"])
    add("census", cmd_census, ["text", "structured"], takes_file=False)
    add("demo", cmd_demo, None, takes_file=False)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        if not args.quiet:
            print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except StructuralError as exc:
        if not args.quiet:
            print(f"structurally invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
