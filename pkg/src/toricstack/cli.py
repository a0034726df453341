"""Command line front end.

Every command prints one JSON document on stdout.  Exit codes: 0 success
(a negative recognition result is still a success), 1 semantic failure,
3 unreadable or malformed input.  argparse usage errors exit with 2.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from typing import Any, Optional, Sequence

from . import __version__
from .errors import NotALine, ToricStackError
from .fan import class_group, is_complete, is_smooth
from .stacky import (StackyFan, dg_group, dm_torus, make_stacky_fan, multiplicities,
                     quotient_presentation)
from .structure import (Decomposition, Distinct, GerbeLayer, Isomorphic, NotWPS, classify_toric_line,
                        compare, decompose, line_stacky_fan, recognize_wps, recompose,
                        root_divisors, root_line_bundle, wps_stacky_fan)

EXIT_OK, EXIT_SEMANTIC, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    """Unreadable file or a document that does not match the schema."""


class RaysMismatch(ToricStackError):
    pass


# ---------------------------------------------------------------------------
# Documents

def _read(path: str) -> bytes:
    try:
        if path == "-":
            return sys.stdin.buffer.read()
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _parse(raw: bytes, path: str) -> Any:
    try:
        return json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: not a JSON document ({exc})") from exc


def _int(x, where) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InputError(f"{where}: expected an integer, got {json.dumps(x)}")
    return x


def _int_list(x, where) -> list[int]:
    if not isinstance(x, list):
        raise InputError(f"{where}: expected an array")
    return [_int(v, f"{where}[{i}]") for i, v in enumerate(x)]


def _int_lists(x, where) -> list[list[int]]:
    if not isinstance(x, list):
        raise InputError(f"{where}: expected an array of arrays")
    return [_int_list(v, f"{where}[{i}]") for i, v in enumerate(x)]


def _member(doc, key, where="document"):
    if not isinstance(doc, dict):
        raise InputError(f"{where}: expected an object")
    if key not in doc:
        raise InputError(f"{where}: missing member {key!r}")
    return doc[key]


def stacky_fan_from_document(doc: Any, where: str = "document") -> StackyFan:
    lattice = _member(doc, "lattice", where)
    d = _int(_member(lattice, "rank", f"{where}.lattice"), f"{where}.lattice.rank")
    torsion = _int_list(lattice.get("torsion", []), f"{where}.lattice.torsion")
    beta = _int_lists(_member(doc, "beta", where), f"{where}.beta")
    cones = _int_lists(_member(doc, "max_cones", where), f"{where}.max_cones")
    rays = doc.get("rays")
    if rays is not None:
        rays = _int_lists(rays, f"{where}.rays")
    sf = make_stacky_fan(d, torsion, beta, cones)
    if rays is not None:
        derived = [list(r) for r in sf.fan.rays]
        if rays != derived:
            raise RaysMismatch(f"'rays' {rays} disagree with the primitive free parts of beta {derived}")
    return sf


def decomposition_from_document(doc: Any) -> Decomposition:
    # accept a decompose report as well as a bare decomposition document
    if isinstance(doc, dict) and doc.get("command") == "decompose" and "result" in doc:
        doc = doc["result"]
    can = stacky_fan_from_document(_member(doc, "canonical"), "canonical")
    a = _int_list(_member(doc, "multiplicities"), "multiplicities")
    gerbe = _member(doc, "gerbe")
    if not isinstance(gerbe, list):
        raise InputError("gerbe: expected an array")
    entries = []
    for i, g in enumerate(gerbe):
        entries.append((_int(_member(g, "order", f"gerbe[{i}]"), f"gerbe[{i}].order"),
                        tuple(_int_list(_member(g, "class", f"gerbe[{i}]"), f"gerbe[{i}].class"))))
    return Decomposition(can, tuple(a), GerbeLayer(tuple(entries)))


def _group(G) -> dict:
    return G.as_dict()


def _vectors(vs) -> list[list[int]]:
    return [list(v) for v in vs]


def _digest(raw: bytes) -> str:
    return hashlib.sha256(raw).hexdigest()


def _report(command: str, digest, result, diagnostics=()) -> dict:
    return {"command": command, "input_digest": digest, "result": result,
            "diagnostics": list(diagnostics)}


# ---------------------------------------------------------------------------
# Commands

def _load(path):
    raw = _read(path)
    return stacky_fan_from_document(_parse(raw, path)), _digest(raw)


def cmd_validate(args):
    raw = _read(args.path)
    doc = _parse(raw, args.path)
    try:
        sf = stacky_fan_from_document(doc)
    except ToricStackError as exc:
        _warn(f"{type(exc).__name__}: {exc}")
        return EXIT_SEMANTIC, _report("validate", _digest(raw), {
            "valid": False, "violation": type(exc).__name__, "message": str(exc)})
    return EXIT_OK, _report("validate", _digest(raw), {
        "valid": True, "rank": sf.free_rank, "torsion": list(sf.torsion_orders), "n": sf.n})


def invariants(sf: StackyFan) -> dict:
    pd = dg_group(sf)
    torus_rank, gerbe = dm_torus(sf)
    out = {
        "pic": _group(pd.pic),
        "divisor_classes": _vectors(pd.divisor_classes),
        "multiplicities": list(multiplicities(sf)),
        "torus": {"rank": torus_rank, "gerbe_factors": list(gerbe)},
        "orbifold": sf.is_orbifold(),
        "canonical": sf.is_canonical(),
        "complete": is_complete(sf.fan),
        "coarse_smooth": is_smooth(sf.fan),
    }
    A, classes = class_group(sf.fan)
    out["class_group"] = {"group": _group(A), "divisor_classes": _vectors(classes)}
    return out


def cmd_invariants(args):
    sf, digest = _load(args.path)
    return EXIT_OK, _report("invariants", digest, invariants(sf))


def cmd_decompose(args):
    sf, digest = _load(args.path)
    return EXIT_OK, _report("decompose", digest, decompose(sf).as_dict())


def cmd_recompose(args):
    raw = _read(args.path)
    return EXIT_OK, recompose(decomposition_from_document(_parse(raw, args.path))).as_dict()


def verdict_dict(v) -> dict:
    if isinstance(v, Isomorphic):
        return {"verdict": v.verdict, "witness": v.witness}
    if isinstance(v, Distinct):
        return {"verdict": v.verdict, "invariant": v.invariant, "values": _jsonable(v.values)}
    return {"verdict": v.verdict, "reason": v.reason}


def _jsonable(x):
    if isinstance(x, (tuple, list)):
        return [_jsonable(y) for y in x]
    return x


def cmd_compare(args):
    sf1, d1 = _load(args.first)
    sf2, d2 = _load(args.second)
    return EXIT_OK, _report("compare", [d1, d2], verdict_dict(compare(sf1, sf2)))


def cmd_recognize(args):
    sf, digest = _load(args.path)
    w = recognize_wps(sf)
    result: dict = {"wps": list(w)} if not isinstance(w, NotWPS) else {"wps": None, "wps_reason": w.reason}
    try:
        result["line"] = classify_toric_line(sf).as_dict()
    except NotALine as exc:
        result["line"] = None
        result["line_reason"] = str(exc)
    return EXIT_OK, _report("recognize", digest, result)


def cmd_quotient(args):
    sf, digest = _load(args.path)
    qp = quotient_presentation(sf)
    return EXIT_OK, _report("quotient", digest, {
        "character_group": _group(qp.character_group),
        "action_weights": _vectors(qp.action_weights),
        "cox_patterns": [sorted(p) for p in qp.cox_patterns],
    })


def cmd_root(args):
    sf, _ = _load(args.path)
    if args.divisors is not None:
        out = root_divisors(sf, args.divisors)
    else:
        out = root_line_bundle(sf, args.line_bundle, args.order)
    return EXIT_OK, out.as_dict()


def cmd_wps(args):
    return EXIT_OK, wps_stacky_fan(args.weights).as_dict()


def cmd_line(args):
    return EXIT_OK, line_stacky_fan(args.a1, args.a2).as_dict()


# ---------------------------------------------------------------------------

def _int_csv(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="toricstack",
                                description="Stacky fans, their Picard groups and their decomposition.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_, paths=("path",), what="stacky fan document"):
        sp = sub.add_parser(name, help=help_, description=help_)
        for a in paths:
            sp.add_argument(a, help=f"{what} ('-' reads stdin)")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check a stacky fan document")
    add("invariants", cmd_invariants, "Picard group, multiplicities, DM torus and flags")
    add("decompose", cmd_decompose, "canonical fan, divisor multiplicities and gerbe classes")
    add("recompose", cmd_recompose, "rebuild a stacky fan from a decomposition",
        what="decomposition document or decompose report")
    add("compare", cmd_compare, "compare two stacky fans", paths=("first", "second"))
    add("recognize", cmd_recognize, "recognize weighted projective stacks and toric lines")
    add("quotient", cmd_quotient, "character group, action weights and Cox patterns")
    r = add("root", cmd_root, "root along divisors or along a line bundle")
    g = r.add_mutually_exclusive_group(required=True)
    g.add_argument("--divisors", type=_int_csv, metavar="A1,...,AN")
    g.add_argument("--line-bundle", type=_int_csv, metavar="C1,...,CN")
    r.add_argument("--order", type=int, help="root order b >= 2 (with --line-bundle)")

    w = sub.add_parser("wps", help="stacky fan of a weighted projective stack")
    w.add_argument("weights", type=int, nargs="+")
    w.set_defaults(func=cmd_wps)
    ln = sub.add_parser("line", help="complete toric line with multiplicities a1, a2")
    ln.add_argument("a1", type=int)
    ln.add_argument("a2", type=int)
    ln.set_defaults(func=cmd_line)
    return p


def _warn(msg: str) -> None:
    print(f"toricstack: {msg}", file=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "root":
        if args.line_bundle is not None and args.order is None:
            parser.error("--line-bundle needs --order")
        if args.divisors is not None and args.order is not None:
            parser.error("--order only applies to --line-bundle")
    try:
        code, doc = args.func(args)
    except InputError as exc:
        _warn(str(exc))
        return EXIT_INPUT
    except ToricStackError as exc:
        _warn(f"{type(exc).__name__}: {exc}")
        return EXIT_SEMANTIC
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
