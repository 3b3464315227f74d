"""Command-line front end: lattice generation, tables, verification, SVG."""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, Iterable, Optional

try:
    import tomllib
except ModuleNotFoundError:  # Python 3.10
    import tomli as tomllib

from . import category
from .acceptance import Workbench, run_acceptance
from .errors import ColorCodeError
from .lattice import Color, ColoredLattice, build_planar, build_torus, micro_torus, validate
from .pauli import PauliOperator
from .render import render_svg
from .sectors import (ALL_LABELS, Detectors, SectorLabel, braiding_sign,
                      monodromy_measure, standard_region)
from .stabilizer import face_stabilizers
from .strings import find_string


def _parse_size(text: str) -> tuple[int, int]:
    a, _, b = text.partition("x")
    return int(a), int(b)


def _add_lattice_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--torus", metavar="BxR", help="torus lattice, e.g. 6x6")
    src.add_argument("--planar", metavar="BxR", help="planar patch, e.g. 4x4")
    src.add_argument("--micro", action="store_true", help="12-qubit oracle fixture")
    src.add_argument("--lattice", metavar="FILE", help="lattice JSON file")


def _load_lattice(args, default: Optional[tuple[int, int]] = None) -> ColoredLattice:
    if args.lattice:
        with open(args.lattice) as fh:
            return ColoredLattice.from_json(json.load(fh))
    if args.micro:
        return micro_torus()
    if args.planar:
        return build_planar(*_parse_size(args.planar))
    if args.torus:
        return build_torus(*_parse_size(args.torus))
    if default is None:
        raise ColorCodeError("no lattice specified")
    return build_torus(*default)


def _load_operator(args, n: int) -> PauliOperator:
    if args.op:
        with open(args.op) as fh:
            return PauliOperator.from_json(json.load(fh))
    if args.op_text:
        return PauliOperator.from_text(args.op_text)
    raise ColorCodeError("no operator specified (use --op or --op-text)")


def _load_config(path: Optional[str]) -> dict:
    if not path:
        return {}
    with open(path, "rb") as fh:
        return tomllib.load(fh)


def _worker_cap() -> int:
    try:
        return max(1, int(os.environ.get("COLORCODE_THREADS", "1")))
    except ValueError:
        return 1


def _ordered_map(fn: Callable, items: Iterable) -> list:
    """Map with optional thread parallelism; output order is always input order."""
    items = list(items)
    workers = min(_worker_cap(), len(items)) or 1
    if workers == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _label(text: str) -> SectorLabel:
    for label in ALL_LABELS:
        if label.value == text:
            return label
    raise ColorCodeError(f"unknown sector label {text!r}; choose from "
                         + " ".join(l.value for l in ALL_LABELS))


def cmd_gsd(args) -> int:
    lattice = _load_lattice(args)
    group = face_stabilizers(lattice)
    if args.json:
        print(json.dumps({"n": group.n, "rank": group.rank,
                          "gsd": group.ground_space_dim()}))
    else:
        print(f"n={group.n} rank={group.rank} gsd={group.ground_space_dim()}")
    return 0


def cmd_omega(args) -> int:
    lattice = _load_lattice(args)
    group = face_stabilizers(lattice)
    value = group.omega0(_load_operator(args, lattice.n_qubits))
    text = {0: "0", 1: "1", -1: "-1", 1j: "i", -1j: "-i"}[value]
    print(json.dumps({"omega0": text}) if args.json else f"omega0 = {text}")
    return 0


def cmd_syndrome(args) -> int:
    lattice = _load_lattice(args)
    group = face_stabilizers(lattice)
    syn = group.syndrome(_load_operator(args, lattice.n_qubits))
    entries = [{"face": f, "violates_K": k, "violates_J": j}
               for f, (k, j) in sorted(syn.violated.items())]
    if args.json:
        print(json.dumps({"syndrome": entries}))
    else:
        if not entries:
            print("syndrome: empty")
        for e in entries:
            kinds = "".join(s for s, bad in (("K", e["violates_K"]), ("J", e["violates_J"])) if bad)
            print(f"face {e['face']}: {kinds}")
    return 0


def cmd_fuse(args) -> int:
    a, b = _label(args.a), _label(args.b)
    if args.side == "category":
        result = category.fusion_label_table()[(a, b)]
    else:
        cfg = _load_config(args.config).get("detector", {})
        lattice = _load_lattice(args, default=(12, 12))
        group = face_stabilizers(lattice)
        det = Detectors(group, standard_region(lattice, cfg.get("radius", 1)),
                        separation=cfg.get("separation", 2))
        result = det.fuse_measure(a, b)
    print(json.dumps({"result": result.value}) if args.json else result.value)
    return 0


def cmd_braid(args) -> int:
    cfg = _load_config(args.config).get("braiding", {})
    lattice = _load_lattice(args, default=(12, 12))
    a, b = _label(args.a), _label(args.b)
    truncation = args.truncation or cfg.get("truncation", 2)
    if a.is_boson and b.is_boson:
        sign = braiding_sign(lattice, a.color, a.kind, b.color, b.kind,
                             args.orientation, truncation)
        key = "braiding"
    else:
        sign = monodromy_measure(lattice, a, b)
        key = "monodromy"
    print(json.dumps({key: sign}) if args.json else f"{sign:+d}")
    return 0


def cmd_tables(args) -> int:
    labels = [l.value for l in ALL_LABELS]
    if args.which == "smatrix":
        S = category.s_matrix()
        rows = [[str(Fraction(v)) for v in row] for row in S]
    elif args.which == "twists":
        twists = category.twist_label_vector()
        rows = [[str(twists[l]) for l in ALL_LABELS]]
    elif args.side == "category":
        if args.which == "fusion":
            table = category.fusion_label_table()
            rows = [[table[(a, b)].value for b in ALL_LABELS] for a in ALL_LABELS]
        else:
            table = category.monodromy_label_table()
            rows = [[str(table[(a, b)]) for b in ALL_LABELS] for a in ALL_LABELS]
    else:
        lattice = _load_lattice(args, default=(12, 12))
        if args.which == "fusion":
            det = Detectors(face_stabilizers(lattice))
            det.classify(det.signature(det.reference_op(ALL_LABELS[0])))  # warm caches
            rows = _ordered_map(
                lambda a: [det.fuse_measure(a, b).value for b in ALL_LABELS],
                ALL_LABELS)
        else:
            rows = _ordered_map(
                lambda a: [str(monodromy_measure(lattice, a, b)) for b in ALL_LABELS],
                ALL_LABELS)
    if args.format == "json":
        print(json.dumps({"which": args.which, "side": args.side,
                          "labels": labels, "rows": rows}))
    else:
        for row in rows:
            print(",".join(row))
    return 0


def cmd_verify(args) -> int:
    numbers = None
    if args.oracle:
        numbers = {2}
    elif args.criteria:
        numbers = {int(tok) for tok in args.criteria.split(",")}
    results = run_acceptance(numbers, Workbench())
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return 1 if failed else 0


def cmd_render(args) -> int:
    lattice = _load_lattice(args, default=(6, 6))
    strings = []
    for spec_text in args.string or []:
        color_s, f1, f2 = spec_text.split(":")
        strings.append(find_string(lattice, Color.from_short(color_s), int(f1), int(f2)))
    syndrome = None
    if args.op or args.op_text:
        group = face_stabilizers(lattice)
        syndrome = group.syndrome(_load_operator(args, lattice.n_qubits))
    svg = render_svg(lattice, strings=strings, syndrome=syndrome)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


def cmd_validate(args) -> int:
    lattice = _load_lattice(args)
    report = validate(lattice)
    print(report)
    return 0 if report.ok() else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorcode",
        description="Color code at desk scale: lattices, stabilizers, anyons.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gsd", help="ground-space dimension of a lattice")
    _add_lattice_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_gsd)

    p = sub.add_parser("omega", help="ground-state expectation of a Pauli monomial")
    _add_lattice_args(p)
    p.add_argument("--op", metavar="FILE")
    p.add_argument("--op-text", metavar="TEXT")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_omega)

    p = sub.add_parser("syndrome", help="faces excited by an operator")
    _add_lattice_args(p)
    p.add_argument("--op", metavar="FILE")
    p.add_argument("--op-text", metavar="TEXT")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_syndrome)

    p = sub.add_parser("fuse", help="fuse two sector labels")
    _add_lattice_args(p)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--side", choices=("lattice", "category"), default="lattice")
    p.add_argument("--config", metavar="FILE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_fuse)

    p = sub.add_parser("braid", help="braiding/monodromy sign of two labels")
    _add_lattice_args(p)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--orientation", choices=("left", "right"), default="left")
    p.add_argument("--truncation", type=int)
    p.add_argument("--config", metavar="FILE")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_braid)

    p = sub.add_parser("tables", help="emit fusion/monodromy/twist/S tables")
    _add_lattice_args(p)
    p.add_argument("--which", choices=("fusion", "monodromy", "twists", "smatrix"),
                   required=True)
    p.add_argument("--side", choices=("lattice", "category"), default="category")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(fn=cmd_tables)

    p = sub.add_parser("verify", help="run the acceptance criteria")
    p.add_argument("--oracle", action="store_true", help="dense-oracle suite only")
    p.add_argument("--criteria", metavar="LIST", help="comma-separated criterion numbers")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("render", help="SVG drawing of a lattice with overlays")
    _add_lattice_args(p)
    p.add_argument("--string", action="append", metavar="c:F1:F2",
                   help="overlay the shortest c-colored string between two faces")
    p.add_argument("--op", metavar="FILE", help="outline the faces excited by this operator")
    p.add_argument("--op-text", metavar="TEXT")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(fn=cmd_render)

    p = sub.add_parser("validate", help="structural validation report")
    _add_lattice_args(p)
    p.set_defaults(fn=cmd_validate)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ColorCodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
