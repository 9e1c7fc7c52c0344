"""Command line front end.

Lattice files are JSON objects::

    {"n": 4, "covers": [[0, 1], [0, 2], [1, 3], [2, 3]],
     "names": ["0", "a", "b", "1"],          # optional
     "labels": [[0, 1, "1"], [0, 2, "1/2"]],  # optional, rationals as "p/q"
     "omega": [[1, 1], [2, 2]]}               # optional

Results go to stdout as one JSON record per line (sorted keys); a short
human summary goes to stderr.  Exit status: 0 when every verdict holds,
1 when some verdict fails (or a precondition or size bound is not met),
2 on unreadable or invalid input.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from collections import Counter
from fractions import Fraction
from typing import Any

from . import admissibility as adm
from . import corpus as cp
from .errors import ImplicationViolated, InvalidInput, LatticeError, NotRanked, PreconditionFailed, SizeLimitExceeded
from .lattice import Lattice, build_lattice, is_ranked, rank_function
from .predicates import (
    dismantling_sequence,
    is_interval_connected,
    is_lower_semimodular,
    is_planar,
    is_rank_connected,
    is_upper_semimodular,
)
from .shelling import construct_el, search_el, verify_el

OK, FAILED, BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


# ----------------------------------------------------------------------
# serialization


def jsonable(obj: Any) -> Any:
    """Plain JSON data for verdicts, certificates and labelings."""
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        out = {"type": type(obj).__name__}
        for f in dataclasses.fields(obj):
            out[f.name] = jsonable(getattr(obj, f.name))
        return out
    if isinstance(obj, Fraction):
        return fraction_text(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, (frozenset, set)):
        return sorted(jsonable(x) for x in obj)
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    return str(obj)


def fraction_text(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def labels_to_json(f: dict) -> list:
    return [[a, b, fraction_text(v)] for (a, b), v in sorted(f.items())]


def emit(record: dict) -> None:
    sys.stdout.write(json.dumps(jsonable(record), sort_keys=True) + "\n")


def say(text: str) -> None:
    print(text, file=sys.stderr)


# ----------------------------------------------------------------------
# lattice files


def parse_fraction(v) -> Fraction:
    if isinstance(v, bool):
        raise InputError(f"bad label {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, str):
        try:
            return Fraction(v.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise InputError(f"labels must be integers or 'p/q' strings, got {v!r}")


def _int(v, what):
    if isinstance(v, bool) or not isinstance(v, int):
        raise InputError(f"{what} must be an integer, got {v!r}")
    return v


def read_lattice_file(path: str) -> dict:
    """Parse and validate a lattice file; returns the parsed fields."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "n" not in doc or "covers" not in doc:
        raise InputError("a lattice file is an object with fields 'n' and 'covers'")
    n = _int(doc["n"], "n")
    if not isinstance(doc["covers"], list):
        raise InputError("'covers' must be an array of [a, b] pairs")
    covers = []
    for pair in doc["covers"]:
        if not isinstance(pair, list) or len(pair) != 2:
            raise InputError(f"cover {pair!r} is not an [a, b] pair")
        covers.append((_int(pair[0], "cover end"), _int(pair[1], "cover end")))
    try:
        L = build_lattice(covers, n)
    except LatticeError as exc:
        raise InputError(f"{type(exc).__name__}: {exc}") from exc
    names = doc.get("names")
    if names is not None:
        if not isinstance(names, list) or len(names) != n or not all(isinstance(s, str) for s in names):
            raise InputError("'names' must be an array of n strings")
    labels = None
    if doc.get("labels") is not None:
        labels = {}
        for item in doc["labels"]:
            if not isinstance(item, list) or len(item) != 3:
                raise InputError(f"label entry {item!r} is not [a, b, value]")
            a, b = _int(item[0], "label end"), _int(item[1], "label end")
            if (a, b) not in L.covers:
                raise InputError(f"label given for ({a}, {b}), which is not a cover")
            labels[(a, b)] = parse_fraction(item[2])
    omega = None
    if doc.get("omega") is not None:
        omega = {}
        for item in doc["omega"]:
            if not isinstance(item, list) or len(item) != 2:
                raise InputError(f"omega entry {item!r} is not [element, value]")
            omega[_int(item[0], "omega element")] = _int(item[1], "omega value")
    return {"lattice": L, "names": names, "labels": labels, "omega": omega}


def lattice_file(L: Lattice, names=None, labels=None, omega=None) -> dict:
    doc = {"n": L.n, "covers": [list(c) for c in L.cover_list()]}
    if names:
        doc["names"] = list(names)
    if labels:
        doc["labels"] = labels_to_json(labels)
    if omega:
        doc["omega"] = [[z, v] for z, v in sorted(omega.items())]
    return doc


def parse_omega(text: str) -> dict[int, int]:
    """``"1=1,2=1,3=2"`` -> ``{1: 1, 2: 1, 3: 2}``."""
    omega = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        key, sep, value = part.partition("=")
        if not sep:
            raise InputError(f"omega entry {part!r} is not element=value")
        try:
            omega[int(key)] = int(value)
        except ValueError as exc:
            raise InputError(f"omega entry {part!r} is not element=value") from exc
    return omega


# ----------------------------------------------------------------------
# commands

PREDICATES = {
    "planar": lambda L, a: is_planar(L),
    "rank_connected": lambda L, a: is_rank_connected(L),
    "interval_connected": lambda L, a: is_interval_connected(L, a.min_gap),
    "dismantlable": lambda L, a: dismantling_sequence(L),
    "upper_semimodular": lambda L, a: is_upper_semimodular(L),
    "lower_semimodular": lambda L, a: is_lower_semimodular(L),
}


def cmd_check(args) -> int:
    L = read_lattice_file(args.file)["lattice"]
    chosen = [p for p in PREDICATES if getattr(args, p)] or list(PREDICATES)
    status = OK
    for name in chosen:
        try:
            v = PREDICATES[name](L, args)
            record = {"predicate": name, "holds": bool(v), "evidence": v.evidence}
        except (NotRanked, SizeLimitExceeded) as exc:
            record = {"predicate": name, "holds": False, "error": f"{type(exc).__name__}: {exc}"}
        if not record["holds"]:
            status = FAILED
        emit(record)
        say(f"{name}: {'yes' if record['holds'] else 'no'}")
    return status


def cmd_shell(args) -> int:
    parsed = read_lattice_file(args.file)
    L = parsed["lattice"]
    if args.verify:
        f = parsed["labels"]
        if f is None:
            raise InputError("--verify needs a 'labels' field in the file")
        missing = [c for c in L.cover_list() if c not in f]
        if missing:
            raise InputError(f"no label for cover {missing[0]}")
        try:
            v = verify_el(L, f)
        except PreconditionFailed as exc:
            emit({"mode": "verify", "ok": False, "error": str(exc)})
            say(f"precondition failed: {exc}")
            return FAILED
        emit({"mode": "verify", "ok": v.ok, "violation": v.violation})
        say("EL-labeling" if v.ok else f"not an EL-labeling: {v.violation}")
        return OK if v.ok else FAILED
    try:
        if args.search:
            f = search_el(L, args.max_labels)
        else:
            f = construct_el(L)
    except (PreconditionFailed, SizeLimitExceeded) as exc:
        emit({"mode": "search" if args.search else "construct", "ok": False, "error": f"{type(exc).__name__}: {exc}"})
        say(f"{type(exc).__name__}: {exc}")
        return FAILED
    mode = "search" if args.search else "construct"
    if f is None:
        emit({"mode": mode, "ok": False, "labels": None})
        say("no EL-labeling with the given number of labels")
        return FAILED
    emit({"mode": mode, "ok": True, "labels": labels_to_json(f)})
    say(f"labeled {len(f)} covers")
    return OK


FROM_FILE = "@file"


def cmd_admissible(args) -> int:
    parsed = read_lattice_file(args.file)
    L = parsed["lattice"]
    if args.with_omega is not None:
        omega = parsed["omega"] if args.with_omega == FROM_FILE else parse_omega(args.with_omega)
        if omega is None:
            raise InputError("--with-omega without a value needs an 'omega' field in the file")
        try:
            adm.validate_omega(L, omega)
        except InvalidInput as exc:
            raise InputError(str(exc)) from exc
        v = adm.check_admissible_with(L, omega)
        emit({"omega": [[z, k] for z, k in sorted(omega.items())], "ok": v.holds,
              "defect": None if v.holds else v.evidence})
        say("rising chains unique" if v.holds else f"defect in [{v.evidence.x}, {v.evidence.y}]")
        return OK if v.holds else FAILED
    try:
        v = adm.is_admissible(L)
    except SizeLimitExceeded as exc:
        emit({"admissible": None, "error": f"SizeLimitExceeded: {exc}"})
        say(f"SizeLimitExceeded: {exc}")
        return FAILED
    if v.holds:
        emit({"admissible": True, "omega": [[z, k] for z, k in sorted(v.evidence.items())]})
        say("admissible")
        return OK
    emit({"admissible": False, "candidates": v.evidence.candidates})
    say(f"not admissible ({v.evidence.candidates} natural labelings tried)")
    return FAILED


def _levels(L: Lattice):
    if is_ranked(L):
        return rank_function(L).levels
    out: dict[int, list[int]] = {}
    for x in range(L.n):
        out.setdefault(L.height[x], []).append(x)
    return tuple(tuple(out[h]) for h in sorted(out))


def render_dot(L: Lattice, names=None, labels=None) -> str:
    def q(s):
        return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'

    lines = ["digraph lattice {", "  rankdir=BT;", "  node [shape=circle];"]
    for x in range(L.n):
        lines.append(f"  {x} [label={q(names[x] if names else x)}];")
    for level in _levels(L):
        lines.append("  { rank=same; " + " ".join(f"{x};" for x in level) + " }")
    for a, b in L.cover_list():
        attr = f" [label={q(fraction_text(labels[(a, b)]))}]" if labels and (a, b) in labels else ""
        lines.append(f"  {a} -> {b}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_render(args) -> int:
    parsed = read_lattice_file(args.file)
    L = parsed["lattice"]
    sys.stdout.write(render_dot(L, parsed["names"], parsed["labels"]))
    say(f"{L.n} nodes, {len(L.covers)} edges")
    return OK


def kind(L: Lattice) -> str:
    """Short structural name used in corpus summaries."""
    if L.is_chain():
        return "chain"
    if not is_ranked(L):
        return "unranked"
    levels = rank_function(L).levels
    if len(levels) == 3:
        k = len(levels[1])
        return "diamond" if k == 2 else f"M{k}"
    return "levels " + "-".join(str(len(level)) for level in levels)


def _corpus_stream(args):
    if args.enumerate is not None:
        return list(cp.enumerate_lattices(args.enumerate))
    count, size, seed = args.random
    if count < 0 or size < 2:
        raise SizeLimitExceeded("--random needs COUNT >= 0 and SIZE >= 2")
    return [cp.random_dismantlable(size, seed + i, args.corner_bias)[0] for i in range(count)]


def cmd_corpus(args) -> int:
    try:
        lattices = _corpus_stream(args)
    except (SizeLimitExceeded, InvalidInput) as exc:
        emit({"error": f"{type(exc).__name__}: {exc}"})
        say(f"{type(exc).__name__}: {exc}")
        return FAILED
    kinds = Counter(kind(L) for L in lattices)
    if not args.cross_check:
        for i, L in enumerate(lattices):
            emit({"index": i, "n": L.n, "covers": [list(c) for c in L.cover_list()], "kind": kind(L)})
        emit({"summary": {"total": len(lattices), "kinds": dict(sorted(kinds.items()))}})
        say(" ".join(f"{k}:{v}" for k, v in sorted(kinds.items())) + f" total:{len(lattices)}")
        return OK
    rep = cp.CrossCheckReport(summary={k: 0 for k in cp.SUMMARY_KEYS})
    for i, L in enumerate(lattices):
        try:
            record = cp.analyse(L, i, admissibility=not args.no_admissibility, search=args.search, report=rep)
        except ImplicationViolated as exc:
            rep.bump("violations")
            emit({"violation": exc.implication, "index": i, "lattice": {"n": L.n, "covers": L.cover_list()}})
            emit({"summary": rep.summary})
            say(f"implication violated: {exc.implication}")
            return FAILED
        record["kind"] = kind(L)
        emit(record)
    emit({"summary": dict(sorted(rep.summary.items()))})
    s = rep.summary
    say(
        f"{s['lattices']} lattices, {s['violations']} violations; "
        f"EL constructed {s['el_constructed']}, interval-connected {s['interval_connected_instances']}, "
        f"rank-connected not interval-connected {s['rank_connected_not_interval_connected']}, "
        f"planar {s['planar']}"
    )
    return OK


def cmd_fixture(args) -> int:
    fx = cp.fixture(args.name)
    sys.stdout.write(json.dumps(lattice_file(fx.lattice, fx.names), sort_keys=True) + "\n")
    return OK


# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="latshell", description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="structural predicates with witnesses")
    p.add_argument("file")
    p.add_argument("--planar", action="store_true")
    p.add_argument("--rank-connected", dest="rank_connected", action="store_true")
    p.add_argument("--interval-connected", dest="interval_connected", action="store_true")
    p.add_argument("--min-gap", dest="min_gap", type=int, default=2)
    p.add_argument("--dismantlable", action="store_true")
    p.add_argument("--upper-semimodular", dest="upper_semimodular", action="store_true")
    p.add_argument("--lower-semimodular", dest="lower_semimodular", action="store_true")
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("shell", help="construct, verify or search for EL-labelings")
    p.add_argument("file")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--construct", action="store_true")
    mode.add_argument("--verify", action="store_true")
    mode.add_argument("--search", action="store_true")
    p.add_argument("--max-labels", dest="max_labels", type=int, default=None)
    p.set_defaults(run=cmd_shell)

    p = sub.add_parser("admissible", help="natural labelings whose gamma labels have unique rising chains")
    p.add_argument("file")
    p.add_argument("--with-omega", dest="with_omega", nargs="?", const=FROM_FILE, default=None,
                   help='check one labeling, e.g. "1=1,2=2"; without a value, the file\'s omega')
    p.set_defaults(run=cmd_admissible)

    p = sub.add_parser("render", help="Hasse diagram as Graphviz DOT")
    p.add_argument("file")
    p.set_defaults(run=cmd_render)

    p = sub.add_parser("corpus", help="enumerate or sample lattices, optionally cross-check")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--enumerate", type=int, metavar="N")
    src.add_argument("--random", type=int, nargs=3, metavar=("COUNT", "SIZE", "SEED"))
    p.add_argument("--cross-check", dest="cross_check", action="store_true")
    p.add_argument("--search", action="store_true", help="also run the exhaustive EL oracle")
    p.add_argument("--no-admissibility", dest="no_admissibility", action="store_true")
    p.add_argument("--corner-bias", dest="corner_bias", type=float, default=0.5)
    p.set_defaults(run=cmd_corpus)

    p = sub.add_parser("fixture", help="print a built-in fixture lattice as a lattice file")
    p.add_argument("name", choices=cp.FIXTURE_NAMES)
    p.set_defaults(run=cmd_fixture)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except InputError as exc:
        say(f"error: {exc}")
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
