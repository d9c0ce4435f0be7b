"""Command-line front end: ``newton-ehrhart <command> ...`` or ``python -m newton_ehrhart``."""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from importlib import resources
from typing import Callable, Sequence

from . import hstar_formulas
from .ehrhart import gorenstein_index, hstar, is_palindromic, is_unimodal
from .errors import ConsistencyError, DegeneratePolytopeError, EnumerationLimitError, ValidationError
from .handles import GROTHENDIECK, SCHUR, PolytopeHandle
from .idp import certificate, idp_brute
from .partitions import parse_partition, partitions_of
from .reflexivity import (
    classifier_form,
    grothendieck_reflexive_form,
    is_reflexive_geometric,
    schur_gorenstein_form,
)
from .symfun import grothendieck_expansion, schur_expansion, snp_check

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISAGREE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad arguments; 2 is reserved for disagreements here
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def _dump(obj) -> None:
    _emit(json.dumps(obj))


def _handle(args) -> PolytopeHandle:
    lam = parse_partition(args.lam, args.m)
    if args.kind == SCHUR:
        if args.h is not None:
            raise UsageError("--h only applies to --kind grothendieck")
        return PolytopeHandle.schur(lam)
    return PolytopeHandle.grothendieck(1 if args.h is None else args.h, lam)


def _csv_points(points, m: int) -> None:
    _emit(",".join(f"x{i + 1}" for i in range(m)))
    for p in points:
        _emit(",".join(map(str, p)))


def _hstar_record(handle: PolytopeHandle) -> dict:
    v = hstar(handle)
    out = handle.to_json()
    out.update(
        dim=v.dim,
        hstar=[str(c) for c in v],
        palindromic=is_palindromic(v),
        unimodal=is_unimodal(v),
        gorenstein_index=gorenstein_index(v),
    )
    return out


def cmd_hstar(args) -> int:
    handle = _handle(args)
    if args.format == "json":
        _dump(_hstar_record(handle))
        return EXIT_OK
    v = hstar(handle)
    if args.format == "csv":
        _emit(",".join(f"h{j}" for j in range(len(v))))
    _emit(str(v))
    return EXIT_OK


def _cmd_points(getter: Callable[[PolytopeHandle], list]) -> Callable:
    def run(args) -> int:
        handle = _handle(args)
        points = getter(handle)
        if args.format == "json":
            _dump([list(p) for p in points])
        elif args.format == "csv":
            _csv_points(points, handle.m)
        else:
            for p in points:
                _emit(",".join(map(str, p)))
        return EXIT_OK

    return run


def _format_facet(f) -> str:
    terms = []
    for i, a in enumerate(f.coeffs):
        if a:
            coeff = "" if abs(a) == 1 else f"{abs(a)}*"
            sign = "-" if a < 0 else "+"
            terms.append(f"{sign} {coeff}x{i + 1}")
    lhs = " ".join(terms)
    lhs = lhs[2:] if lhs.startswith("+ ") else lhs
    return f"{lhs} {f.sense} {f.bound}" + (f"  [{f.tag}]" if f.tag else "")


def cmd_facets(args) -> int:
    handle = _handle(args)
    facets = handle.facets()
    equations = handle.equations()
    if args.format == "json":
        _dump(
            {
                "facets": [f.to_json() | {"tag": f.tag} for f in facets],
                "equations": [e.to_json() for e in equations],
            }
        )
    elif args.format == "csv":
        _emit(",".join([f"a{i + 1}" for i in range(handle.m)] + ["sense", "bound"]))
        for f in facets + equations:
            _emit(",".join([*map(str, f.coeffs), f.sense, str(f.bound)]))
    else:
        for e in equations:
            _emit(_format_facet(e))
        for f in facets:
            _emit(_format_facet(f))
    return EXIT_OK


def _classifier_verdict(handle: PolytopeHandle) -> tuple[str, str | None]:
    try:
        form = classifier_form(handle)
    except DegeneratePolytopeError:
        return "degenerate", None
    return ("reflexive" if form else "not reflexive"), form


def _report(args, record: dict, lines: list[str], agree: bool) -> int:
    if args.format == "json":
        _dump(record)
    else:
        for line in lines:
            _emit(line)
    if not agree:
        sys.stderr.write("geometric check and classifier disagree\n")
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_reflexive(args) -> int:
    handle = _handle(args)
    record: dict = handle.to_json()
    lines = []
    verdicts = []
    if args.method in ("geometric", "both"):
        rep = is_reflexive_geometric(handle)
        record["geometric"] = rep.to_json()
        verdicts.append(rep.verdict)
        lines.append(f"geometric: {rep.verdict}")
        if rep.interior_point is not None:
            lines.append(f"  interior point: {','.join(map(str, rep.interior_point))}")
        lines.append(f"  interior lattice points: {rep.interior_count}")
        for tag, d in rep.distances:
            lines.append(f"  distance {d} to {tag}")
    if args.method in ("classifier", "both"):
        verdict, form = _classifier_verdict(handle)
        record["classifier"] = {"verdict": verdict, "form": form}
        verdicts.append(verdict)
        lines.append(f"classifier: {verdict}" + (f" (form {form})" if form else ""))
    agree = len(set(verdicts)) == 1
    record["agree"] = agree
    return _report(args, record, lines, agree)


def cmd_gorenstein(args) -> int:
    handle = _handle(args)
    record: dict = handle.to_json()
    lines = []
    verdicts = []
    if args.method in ("classifier", "both") and not handle.is_schur:
        if args.method == "classifier":
            raise UsageError("no Gorenstein classifier for Grothendieck polytopes; use --method geometric")
    degenerate = handle.lam.is_trivial_orbit() or handle.is_degenerate()
    if args.method in ("geometric", "both"):
        if degenerate:
            verdict, index = "degenerate", None
        else:
            index = gorenstein_index(hstar(handle))
            verdict = "gorenstein" if index else "not gorenstein"
        record["geometric"] = {"verdict": verdict, "index": index}
        verdicts.append(verdict)
        lines.append(f"h*-palindromicity: {verdict}" + (f" (index {index})" if index else ""))
    if args.method in ("classifier", "both") and handle.is_schur:
        try:
            form = schur_gorenstein_form(handle.lam)
            verdict = "gorenstein" if form else "not gorenstein"
        except DegeneratePolytopeError:
            form, verdict = None, "degenerate"
        record["classifier"] = {"verdict": verdict, "form": form}
        verdicts.append(verdict)
        lines.append(f"classifier: {verdict}" + (f" (form {form})" if form else ""))
    agree = len(set(verdicts)) == 1
    record["agree"] = agree
    return _report(args, record, lines, agree)


def cmd_idp(args) -> int:
    handle = _handle(args)
    if args.tmax < 1:
        raise UsageError("--tmax must be positive")
    brute = idp_brute(handle, args.tmax) if args.tmax >= 2 else None
    certs = []
    for t in range(1, args.tmax + 1):
        for p in handle.dilate(t).lattice_points():
            certs.append((t, certificate(handle, t, p)))
    holds = brute is None or brute.holds
    if args.format == "json":
        _dump(
            handle.to_json()
            | {
                "tmax": args.tmax,
                "brute_force": holds,
                "counterexample": list(brute.counterexample) if brute and brute.counterexample else None,
                "certificates": [{"t": t} | c.to_json() for t, c in certs],
            }
        )
    else:
        _emit(f"brute force sumsets up to t={args.tmax}: {'IDP holds' if holds else 'IDP fails'}")
        if brute is not None and not holds:
            _emit(f"  first missing point at t={brute.failed_at}: {brute.counterexample}")
        _emit(f"column-splitting certificates validated: {len(certs)}")
    # every certificate validated, so a brute-force failure is a contradiction
    return EXIT_OK if holds else EXIT_DISAGREE


def cmd_snp(args) -> int:
    handle = _handle(args)
    if handle.is_schur:
        poly = schur_expansion(handle.lam)
    else:
        poly = grothendieck_expansion(handle.h, handle.lam)
    ok = snp_check(poly, handle.contains, handle.lattice_points())
    if args.format == "json":
        _dump(handle.to_json() | {"snp": ok, "support_size": len(poly)})
    else:
        _emit("true" if ok else "false")
    return EXIT_OK if ok else EXIT_DISAGREE


def cmd_formula(args) -> int:
    if args.family not in hstar_formulas.FAMILIES:
        raise UsageError(f"unknown family {args.family}")
    fn, shape, least = hstar_formulas.FAMILIES[args.family]
    v = fn(args.n)
    agree = True
    if args.check:
        engine = hstar(PolytopeHandle.schur(shape(args.n)))
        agree = tuple(engine) == tuple(v)
    if args.format == "json":
        rec = {"family": args.family, "n": args.n, "lambda": list(shape(args.n)),
               "hstar": [str(c) for c in v]}
        if args.check:
            rec["engine_agrees"] = agree
        _dump(rec)
    else:
        _emit(str(v))
        if args.check:
            _emit(f"engine: {'agrees' if agree else 'DISAGREES'}")
    return EXIT_OK if agree else EXIT_DISAGREE


def load_table(which: int) -> dict:
    text = resources.files("newton_ehrhart.data").joinpath(f"table{which}.json").read_text()
    return json.loads(text)


def _table_handle(which: int, row: dict) -> PolytopeHandle:
    if which == 3:
        return PolytopeHandle.schur(row["lambda"])
    return PolytopeHandle.grothendieck(row["h"], row["lambda"])


def _row_key(which: int, row: dict) -> int:
    return row["n"] if which == 3 else row["m"]


def cmd_tables(args) -> int:
    table = load_table(args.which)
    rows = [r for r in table["rows"] if args.max_row is None or _row_key(args.which, r) <= args.max_row]
    mismatches = 0
    records = []
    for row in rows:
        handle = _table_handle(args.which, row)
        got = list(hstar(handle))
        ok = got == row["hstar"]
        mismatches += not ok
        rec = {k: row[k] for k in row if k != "hstar"}
        rec |= {"hstar": [str(c) for c in got], "matches_golden": ok}
        if args.stability_check and args.which in (1, 2) and row["h"] >= 2:
            higher = PolytopeHandle.grothendieck(row["h"] + 1, row["lambda"])
            stable = sorted(handle.lattice_points()) == sorted(higher.lattice_points())
            rec["stable_h_plus_1"] = stable
            mismatches += not stable
        records.append(rec)
    if args.format == "json":
        _dump({"table": args.which, "rows": records, "mismatches": mismatches})
    else:
        for rec in records:
            label = rec.get("label") or f"m={rec['m']} h{rec['h_label']}"
            flag = "ok" if rec["matches_golden"] else "MISMATCH"
            extra = ""
            if "stable_h_plus_1" in rec:
                extra = "  stable" if rec["stable_h_plus_1"] else "  NOT STABLE"
            _emit(f"{label}: {','.join(rec['hstar'])}  {flag}{extra}")
    return EXIT_OK if mismatches == 0 else EXIT_DISAGREE


def _sweep_schur(parts: tuple[int, ...]) -> dict:
    handle = PolytopeHandle.schur(parts)
    geo = is_reflexive_geometric(handle).reflexive
    cls = classifier_form(handle) is not None
    gor_geo = gorenstein_index(hstar(handle)) is not None
    gor_cls = schur_gorenstein_form(handle.lam) is not None
    return {"kind": SCHUR, "lambda": list(parts), "reflexive": geo, "agree": geo == cls and gor_geo == gor_cls}


def _sweep_grothendieck(job: tuple[int, tuple[int, ...]]) -> dict:
    h, parts = job
    handle = PolytopeHandle.grothendieck(h, parts)
    geo = is_reflexive_geometric(handle).reflexive
    cls = grothendieck_reflexive_form(h, handle.lam) is not None
    return {"kind": GROTHENDIECK, "h": h, "lambda": list(parts), "reflexive": geo, "agree": geo == cls}


def sweep_jobs(max_n: int, max_m: int, hs: Sequence[int]):
    schur, groth = [], []
    for m in range(2, max_m + 1):
        for n in range(max_n + 1):
            for lam in partitions_of(n, m):
                if lam.is_trivial_orbit():
                    continue
                schur.append(lam.parts)
                if lam[-1] == 0:
                    groth.extend((h, lam.parts) for h in hs)
    return schur, groth


def cmd_sweep(args) -> int:
    schur, groth = sweep_jobs(args.max_n, args.max_m, args.hs)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_sweep_schur, schur, chunksize=16))
            results += list(pool.map(_sweep_grothendieck, groth, chunksize=16))
    else:
        results = [_sweep_schur(p) for p in schur] + [_sweep_grothendieck(j) for j in groth]
    bad = [r for r in results if not r["agree"]]
    summary = {
        "checked": len(results),
        "reflexive": sum(r["reflexive"] for r in results),
        "disagreements": bad,
    }
    if args.format == "json":
        _dump(summary)
    else:
        _emit(f"checked {summary['checked']} polytopes, {summary['reflexive']} reflexive")
        for r in bad:
            _emit(f"DISAGREEMENT: {r}")
        _emit(f"disagreements: {len(bad)}")
    return EXIT_OK if not bad else EXIT_DISAGREE


def _add_selectors(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kind", choices=[SCHUR, GROTHENDIECK], default=SCHUR)
    p.add_argument("--lambda", dest="lam", required=True, help="comma-separated parts, e.g. 2,1,0")
    p.add_argument("--m", type=int, help="number of variables (default: number of parts given)")
    p.add_argument("--h", type=int, help="inflation parameter for Grothendieck polytopes (default 1)")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="newton-ehrhart", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, func, help_: str, selectors: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        if selectors:
            _add_selectors(p)
        _add_format(p)
        p.set_defaults(func=func)
        return p

    add("hstar", cmd_hstar, "h*-vector from exact dilate counts")
    add("points", _cmd_points(lambda h: h.lattice_points()), "all lattice points")
    add("vertices", _cmd_points(lambda h: h.vertices()), "vertices")
    add("facets", cmd_facets, "facet inequalities (plus the span equation for Schur)")
    for name, func in (("reflexive", cmd_reflexive), ("gorenstein", cmd_gorenstein)):
        p = add(name, func, f"{name} verdict with witness")
        p.add_argument("--method", choices=["geometric", "classifier", "both"], default="both")
    p = add("idp", cmd_idp, "integer decomposition property")
    p.add_argument("--tmax", type=int, default=3)
    add("snp", cmd_snp, "saturated Newton polytope check")
    p = add("formula", cmd_formula, "closed-form h*-vectors", selectors=False)
    p.add_argument("--family", choices=list(hstar_formulas.FAMILIES), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", action="store_true", help="compare with the generic engine")
    p = add("tables", cmd_tables, "regenerate golden h*-tables and diff", selectors=False)
    p.add_argument("--which", type=int, choices=[1, 2, 3], required=True)
    p.add_argument("--max-row", type=int, help="largest m (tables 1, 2) or n (table 3)")
    p.add_argument("--stability-check", action="store_true",
                   help="also compare lattice points at h and h+1 for the h>=2 rows")
    p = add("sweep", cmd_sweep, "classifier vs geometry equivalence sweep", selectors=False)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--max-m", type=int, default=5)
    p.add_argument("--hs", type=lambda s: [int(x) for x in s.split(",")], default=[1, 2, 3],
                   help="h values for the Grothendieck sweep (default 1,2,3)")
    p.add_argument("--jobs", type=int, default=1)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValidationError, EnumerationLimitError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ConsistencyError as exc:
        sys.stderr.write(f"consistency failure: {exc}\n")
        return EXIT_DISAGREE


if __name__ == "__main__":
    sys.exit(main())
