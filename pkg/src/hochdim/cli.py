"""Command-line front end.

Exit codes: 0 success, 1 usage or input-format error, 2 computation error
(infinite-dimensional algebra, size cap), 3 two routes disagree.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import aq as aqlab
from .algebra_file import canonical_hash, read_algebra
from .algorithm import CROSSCHECK_CAP, run_algorithm
from .decomposition import decompose, hc_decomposed
from .errors import (
    AlgebraFormatError,
    CrossCheckError,
    InfiniteDimensionalError,
    SizeCapError,
    StructureError,
)
from .mixed import DEFAULT_CAP, hc, hh
from .quiver import shortest_cycle
from .resolution import gldim_probe
from .scalgebra import sc_from_monomial, sc_hch
from .skoldberg import (
    TruncatedPresentation,
    classify_truncated,
    hh_graded_truncated,
    hh_p_basic_cycle,
    hh_total_truncated,
)

SCHEMA = "v1"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _table(values, start=0) -> dict[str, int]:
    return {str(n): int(v) for n, v in enumerate(values) if n >= start}


def _graded(graded: dict[tuple[int, int], int]) -> dict[str, dict[str, int]]:
    out: dict[str, dict[str, int]] = {}
    for (p, q), d in sorted(graded.items()):
        out.setdefault(str(p), {})[str(q)] = d
    return out


def _algebra_echo(A) -> dict:
    return {
        "hash": canonical_hash(A),
        "vertices": len(A.quiver.vertices),
        "arrows": len(A.quiver.arrows),
        "char": A.char,
        "dimension": A.dimension,
        "truncate": A.truncation,
    }


def _doc(command: str, A=None, **parts) -> dict:
    doc = {"schema": SCHEMA, "command": command}
    if A is not None:
        doc["algebra"] = _algebra_echo(A)
    doc.update(parts)
    return doc


def _line(name: str, values, start=0) -> str:
    return f"{name}: " + ", ".join(f"{n}:{v}" for n, v in enumerate(values) if n >= start)


# subcommands: each returns (document, human-readable lines)


def cmd_hh(args):
    A = read_algebra(args.file)
    n_max = args.max_n
    graded = None
    if args.method == "direct":
        res = hh(A, n_max, args.cap)
        dims, methods, graded = res.dims, ["direct"] * (n_max + 1), res.graded
    else:
        dims = [hh(A, 0, args.cap).dims[0]]
        methods = ["direct"]
        if n_max >= 1:
            dec = decompose(A, n_max, use_formula=args.method == "auto", cap=args.cap)
            dims += dec.totals()[1:]
            for n in range(1, n_max + 1):
                used = {r.method for r in dec.rows if r.hh[n]}
                methods.append("formula" if used == {"formula"} else "decomposition")
        if args.method == "auto" or args.graded:
            try:
                res = hh(A, n_max, CROSSCHECK_CAP if args.method == "auto" else args.cap)
            except SizeCapError:
                if args.graded:
                    raise
                res = None
            if res is not None:
                graded = res.graded
                if args.method == "auto" and res.dims != dims:
                    raise CrossCheckError("hh: decomposition and direct complex disagree", dims, res.dims)
    doc = _doc("hh", A, tables={"hh": _table(dims)}, methods={"hh": _table_str(methods)})
    lines = [_line("hh", dims)]
    if args.graded and graded is not None:
        doc["graded"] = {"hh": _graded(graded)}
        for (p, q), d in sorted(graded.items()):
            lines.append(f"  HH_{{{p},{q}}} = {d}")
    return doc, lines


def _table_str(methods) -> dict[str, str]:
    return {str(n): m for n, m in enumerate(methods)}


def cmd_hc(args):
    A = read_algebra(args.file)
    n_max = args.max_n
    if args.method == "direct":
        dims = hc(A, n_max, args.cap).dims
        methods = ["direct"] * (n_max + 1)
    else:
        dims = [hh(A, 0, args.cap).dims[0]]
        methods = ["direct"]
        if n_max >= 1:
            dims += hc_decomposed(A, n_max, args.cap)[1:]
            methods += ["decomposition"] * n_max
        if args.method == "auto":
            try:
                direct = hc(A, n_max, CROSSCHECK_CAP).dims
            except SizeCapError:
                direct = None
            if direct is not None and direct != dims:
                raise CrossCheckError("hc: decomposition and direct complex disagree", dims, direct)
    doc = _doc("hc", A, tables={"hc": _table(dims)}, methods={"hc": _table_str(methods)})
    return doc, [_line("hc", dims)]


def cmd_hch(args):
    A = read_algebra(args.file)
    dims = sc_hch(sc_from_monomial(A), args.max_n, args.cap)
    doc = _doc("hch", A, tables={"hch": _table(dims)}, methods={"hch": _table_str(["direct"] * len(dims))})
    return doc, [_line("hch", dims)]


def cmd_compute(args):
    A = read_algebra(args.file)
    rep = run_algorithm(A, args.max_n, cap=args.cap)
    doc = _doc(
        "compute",
        A,
        tables={"hh": _table(rep.hh), "hc": _table(rep.hc)},
        methods={"hh": _table_str(rep.hh_methods), "hc": _table_str(rep.hc_methods)},
        orbits=rep.orbits,
        crosscheck={
            "performed": rep.crosschecked,
            "hh_direct": _table(rep.direct_hh) if rep.direct_hh else None,
            "hc_direct": _table(rep.direct_hc) if rep.direct_hc else None,
        },
    )
    lines = [f"proper-cycle orbits (length <= {(args.max_n + 1) * A.max_length}): {len(rep.orbits)}"]
    for o in rep.orbits:
        rels = "; ".join(o["relations"])
        tr = f", truncated at {o['truncated']}" if o["truncated"] else ""
        hh_str = " ".join(f"{n}:{v}" for n, v in o["hh"].items())
        lines.append(f"  [{o['orbit']}] r={o['length']} dim={o['dimension']} rel={{{rels}}}{tr} ({o['method']}) hh {hh_str}")
    lines.append(_line("hh", rep.hh))
    lines.append(_line("hc", rep.hc))
    lines.append("cross-check with direct complex: " + ("agree" if rep.crosschecked else "skipped (size)"))
    return doc, lines


def cmd_decompose(args):
    A = read_algebra(args.file)
    dec = decompose(A, args.max_n, use_formula=args.method != "direct", cap=args.cap)
    rows = [{"orbit": r.word, "length": r.orbit.length, "method": r.method, "hh": _table(r.hh, 1)} for r in dec.rows]
    totals = dec.totals()
    doc = _doc("decompose", A, tables={"hh": _table(totals, 1)}, orbits=rows)
    lines = [f"[{r['orbit']}] ({r['method']}) " + " ".join(f"{n}:{v}" for n, v in r["hh"].items()) for r in rows]
    lines.append(_line("hh", totals, 1))
    return doc, lines


def cmd_skoldberg(args):
    A = read_algebra(args.file)
    if not A.is_truncated:
        raise UsageError("skoldberg needs an algebra given with 'truncate: n'")
    T = TruncatedPresentation.of(A)
    graded = hh_graded_truncated(T, args.max_p)
    dims = hh_total_truncated(T, args.max_p)
    doc = _doc(
        "skoldberg",
        A,
        tables={"hh": _table(dims)},
        methods={"hh": _table_str(["formula"] * len(dims))},
        graded={"hh": _graded(graded)},
    )
    lines = [_line("hh", dims)] + [f"  HH_{{{p},{q}}} = {d}" for (p, q), d in sorted(graded.items())]
    l = len(A.quiver.arrows)
    if l == len(A.quiver.vertices) and A.quiver.arrows and _is_basic_cycle(A):
        cor = [hh_p_basic_cycle(l, T.n, p, T.char) for p in range(args.max_p + 1)]
        doc["tables"]["hh_basic_cycle"] = _table(cor)
        lines.append(_line("basic-cycle formula", cor))
    return doc, lines


def _is_basic_cycle(A) -> bool:
    w = shortest_cycle(A.quiver)
    return w is not None and w.length == len(A.quiver.arrows) and w.basic


def cmd_classify(args):
    A = read_algebra(args.file)
    if A.is_truncated:
        c = classify_truncated(TruncatedPresentation.of(A))
        report = {
            "kind": "truncated",
            "acyclic": c.acyclic,
            "gldim_finite": c.gldim_finite,
            "hhdim_zero": c.hhdim_zero,
        }
        if c.acyclic:
            lines = [f"quiver has no oriented cycle; gl.dim < inf and hh.dim = 0 (hh_0 = {A.num_vertices})"]
        else:
            l = c.witness.length
            report["witness"] = {
                "cycle": A.quiver.word_str(c.witness.arrows),
                "length": l,
                "progression": {"start": c.progression.start, "step": c.progression.step},
            }
            lines = [
                "quiver has oriented cycle; hh.dim = inf (truncated algebra with a cycle); "
                f"witness l={l}",
                f"  shortest cycle: {A.quiver.word_str(c.witness.arrows)}",
                f"  hh_p >= 1 for p = {c.progression.start} + {c.progression.step} m, m >= 0",
            ]
        return _doc("classify", A, classification=report), lines

    probe = gldim_probe(A, args.max_steps)
    n_probe = args.max_n
    dims = hh(A, n_probe, args.cap).dims
    nonzero = [n for n in range(1, n_probe + 1) if dims[n]]
    report = {
        "kind": "monomial",
        "gldim_probe": str(probe),
        "gldim_exact": probe.exact,
        "hh": _table(dims),
        "hh_nonzero_positive": nonzero,
    }
    if probe.exact:
        verdict = f"gl.dim = {probe.value}; hh_n = 0 for 1 <= n <= {n_probe} as required"
        if nonzero:
            raise CrossCheckError("finite gl.dim but nonzero higher hh", [0] * len(nonzero), nonzero)
    elif nonzero:
        verdict = f"gl.dim {probe}; hh_{nonzero[0]} != 0, so hh.dim > 0 and gl.dim is infinite"
    else:
        verdict = f"gl.dim {probe}; no nonzero hh_n for 1 <= n <= {n_probe} (probe, not proof)"
    return _doc("classify", A, classification=report), [verdict, _line("hh", dims)]


def cmd_gldim(args):
    A = read_algebra(args.file)
    probe = gldim_probe(A, args.max_steps)
    doc = _doc("gldim", A, gldim={"probe": str(probe), "value": probe.value, "exact": probe.exact})
    return doc, [f"gl.dim {probe}"]


def cmd_aq(args):
    try:
        q = Fraction(args.q)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--q must be a rational number, got {args.q!r}") from None
    char = args.char
    n_max = args.max_n
    dims = aqlab.hh_aq(n_max, q, char)
    ranks = aqlab.tau_ranks(n_max + 1, q, char)
    tables = {"hh": _table(dims), "tau_rank": _table(ranks, 1)}
    methods = {"hh": _table_str(["bgms"] * len(dims))}
    lines = [_line("hh", dims), _line("rank tau", ranks, 1)]
    if args.cohomology:
        hch = aqlab.hch_aq(n_max, q, char)
        tables["hch"] = _table(hch)
        methods["hch"] = _table_str(["bgms"] * len(hch))
        lines.append(_line("hch", hch))
    small = min(n_max, 3)
    aqlab.crosscheck_aq(q, char, small)
    order = aqlab.root_of_unity_order(q, char)
    doc = _doc(
        "aq",
        None,
        parameters={"q": str(q), "char": char, "root_of_unity_order": order},
        tables=tables,
        methods=methods,
        crosscheck={"max_n": small, "agree": True},
    )
    lines.append(f"bar-complex oracle agrees for n <= {small}")
    if order is not None:
        lines.append(f"note: q is a root of unity of order {order}")
    return doc, lines


COMMANDS = {
    "hh": cmd_hh,
    "hc": cmd_hc,
    "hch": cmd_hch,
    "compute": cmd_compute,
    "decompose": cmd_decompose,
    "skoldberg": cmd_skoldberg,
    "classify": cmd_classify,
    "gldim": cmd_gldim,
    "aq": cmd_aq,
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hochdim", description="Hochschild and cyclic homology of quiver algebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, max_n=True):
        sp.add_argument("--json", action="store_true", help="emit a JSON result document")
        sp.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum complex size")
        if max_n:
            sp.add_argument("--max-n", type=int, default=4)

    for name in ("hh", "hc"):
        sp = sub.add_parser(name)
        sp.add_argument("file")
        common(sp)
        sp.add_argument("--method", choices=["direct", "decomposition", "auto"], default="auto")
        if name == "hh":
            sp.add_argument("--graded", action="store_true")
    sp = sub.add_parser("hch")
    sp.add_argument("file")
    common(sp)
    sp = sub.add_parser("compute")
    sp.add_argument("file")
    common(sp)
    sp = sub.add_parser("decompose")
    sp.add_argument("file")
    common(sp)
    sp.add_argument("--method", choices=["direct", "auto"], default="auto")
    sp = sub.add_parser("skoldberg")
    sp.add_argument("file")
    common(sp, max_n=False)
    sp.add_argument("--max-p", type=int, default=6)
    sp = sub.add_parser("classify")
    sp.add_argument("file")
    common(sp)
    sp.add_argument("--max-steps", type=int, default=8)
    sp = sub.add_parser("gldim")
    sp.add_argument("file")
    common(sp, max_n=False)
    sp.add_argument("--max-steps", type=int, default=8)
    sp = sub.add_parser("aq")
    common(sp)
    sp.add_argument("--q", required=True)
    sp.add_argument("--char", type=int, default=0)
    sp.add_argument("--cohomology", action="store_true")
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        for opt in ("max_n", "max_p", "max_steps"):
            if getattr(args, opt, 0) < 0:
                raise UsageError(f"--{opt.replace('_', '-')} must be >= 0")
        if args.command in ("compute", "decompose") and args.max_n < 1:
            raise UsageError("--max-n must be >= 1 for this command")
        doc, lines = COMMANDS[args.command](args)
    except UsageError as e:
        print(f"usage error: {e}", file=err)
        return 1
    except (AlgebraFormatError, OSError) as e:
        print(f"input error: {e}", file=err)
        return 1
    except (InfiniteDimensionalError, SizeCapError, StructureError) as e:
        print(f"computation error: {e}", file=err)
        return 2
    except CrossCheckError as e:
        print(f"cross-check mismatch: {e}", file=err)
        print(f"  route 1: {e.left}", file=err)
        print(f"  route 2: {e.right}", file=err)
        return 3
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True), file=out)
    else:
        print("\n".join(lines), file=out)
    return 0


def main() -> None:
    sys.exit(run())
