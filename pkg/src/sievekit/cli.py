"""Command-line front end.

Every command prints ``{"result": ..., "manifest": ...}`` as JSON by default;
``--format text`` prints a human-readable view instead.  Exit codes: 0 on
success, 1 when a check fails that a theorem says should pass, 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from pathlib import Path

from . import __version__
from .cache import ResultCache, digest
from .errors import SieveKitError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# parsing helpers


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


_SQRT2_TERM = re.compile(r"^([+-]?\d+)?(?:([+-]?\d*)\*?(?:√2|sqrt2|r2))?$")


def parse_sqrt2(token: str):
    """Parse 'a', 'b√2' or 'a+b√2' (also 'sqrt2' / 'r2') into a CycInt of order 8."""
    from .qcalc import CycInt

    t = token.replace(" ", "")
    m = _SQRT2_TERM.match(t)
    if not t or not m:
        raise argparse.ArgumentTypeError(f"cannot parse quiddity entry {token!r}")
    a = int(m.group(1)) if m.group(1) else 0
    b_text = m.group(2)
    if b_text is None:
        b = 0
    elif b_text in ("", "+"):
        b = 1
    elif b_text == "-":
        b = -1
    else:
        b = int(b_text)
    if m.group(1) is None and b_text is None:
        raise argparse.ArgumentTypeError(f"cannot parse quiddity entry {token!r}")
    return CycInt.lam(4, 8) * b + a


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read JSON from {path}: {exc}") from exc


# ---------------------------------------------------------------------------
# commands; each returns (result, ok, text)


def cmd_dissect(args, cache: ResultCache):
    from .csp import CyclicFamily, verify_csp
    from .dissect import (
        Dissection,
        TypeVector,
        a_mu_count,
        a_mu_poly,
        enumerate_by_type,
        fixed_points,
        rotate,
    )

    try:
        tv = TypeVector(tuple(args.mu))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    params = {"mu": list(tv.mu), "fixed": args.fixed}

    def compute():
        if args.fixed:
            found = fixed_points(tv, args.fixed)
        else:
            found = enumerate_by_type(tv)
        return [d.to_json()["diagonals"] for d in sorted(found, key=Dissection.sorted_diagonals)]

    diags, hit = cache.get_or_compute("dissect.enumerate", params, compute)
    result = {"mu": list(tv.mu), "polygon": tv.polygon, "count": len(diags),
              "formula": a_mu_count(tv), "poly": a_mu_poly(tv).to_json()}
    if args.fixed:
        result["d"] = args.fixed
    shown = diags if args.limit is None else diags[: args.limit]
    result["dissections"] = shown
    ok = True
    if args.csp:
        elems = [Dissection.of(tv.polygon, d) for d in
                 (diags if not args.fixed else compute_all(tv))]
        fam = CyclicFamily.from_action(elems, rotate, tv.polygon)
        report = verify_csp(fam, a_mu_poly(tv))
        result["csp"] = report.to_json()
        ok = report.ok
    lines = [f"type {tv} on the {tv.polygon}-gon: {len(diags)} dissections "
             f"(formula {a_mu_count(tv)})"]
    lines += [" ".join(f"({i},{j})" for i, j in d) or "(empty)" for d in shown]
    if args.csp:
        lines.append("CSP " + ("holds" if ok else "FAILS"))
    return result, ok, "\n".join(lines), hit


def compute_all(tv):
    from .dissect import Dissection, enumerate_by_type

    return [d.to_json()["diagonals"] for d in sorted(enumerate_by_type(tv),
                                                     key=Dissection.sorted_diagonals)]


def cmd_punctured(args, cache: ResultCache):
    from .punctured import PuncturedDissection, enumerate_punctured, t_count

    if args.n % args.m or not 1 <= args.spokes <= args.n // args.m:
        raise UsageError("need m | n and 1 <= spokes <= n/m")
    params = {"n": args.n, "m": args.m, "s": args.spokes}

    def compute():
        return [T.to_json() for T in enumerate_punctured(args.n, args.m, args.spokes)]

    items, hit = cache.get_or_compute("punctured.enumerate", params, compute)
    with_v0 = sum(1 for T in items if 0 in T["spokes"])
    result = {"n": args.n, "m": args.m, "s": args.spokes, "count": len(items),
              "formula": t_count(args.n, args.m, args.spokes), "with_spoke_v0": with_v0}
    shown = items if args.limit is None else items[: args.limit]
    result["dissections"] = [{"arcs": [list(a) for a in PuncturedDissection.from_json(T).arcs()],
                              **T} for T in shown]
    text = (f"{len(items)} dissections of the punctured {args.n}-gon into "
            f"{args.m + 2}-gons with {args.spokes} spokes ({with_v0} use the spoke at v0)")
    return result, len(items) == result["formula"], text, hit


def _frieze_input(args):
    from .dissect import Dissection
    from .frieze import InfiniteFrieze, frieze_from_dissection, frieze_from_punctured
    from .punctured import PuncturedDissection

    if args.quiddity:
        row = [parse_sqrt2(t) for t in args.quiddity.split(",")]
        return InfiniteFrieze(tuple(row)), "infinite"
    if not args.source:
        raise UsageError("give --from FILE or --quiddity LIST")
    data = _load_json(args.source)
    try:
        if "spokes" in data:
            return frieze_from_punctured(PuncturedDissection.from_json(data)), "infinite"
        return frieze_from_dissection(Dissection.from_json(data)), "finite"
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed dissection JSON: {exc}") from exc


def cmd_frieze(args, cache: ResultCache):
    from .frieze import check_unimodular, growth_coefficient, render_rows

    F, kind = _frieze_input(args)
    rows = args.rows if args.rows is not None else (F.period + 1 if kind == "finite" else 6)
    if kind == "finite":
        rows = min(rows, F.period + 1)
    grid = [[F._raw(i, i + k) for i in range(F.period)] for k in range(rows)]
    result = F.to_json(rows)
    result["kind"] = kind
    result["display"] = [[str(x) for x in r] for r in grid]
    bad = check_unimodular(F, max_gap=max(rows - 2, 0))
    result["unimodular"] = not bad
    try:
        result["growth"] = str(growth_coefficient(F, 1))
    except SieveKitError as exc:
        result["growth"] = None
        result["growth_error"] = str(exc)
    text = render_rows(grid, args.cell) + f"\n\ngrowth coefficient s1 = {result['growth']}"
    return result, not bad, text, False


def cmd_dyck(args, cache: ResultCache):
    from .dyck import (
        bal_stat,
        balance_labels,
        height_sequence,
        quiddity_coefficients,
        rot_tilde,
        rtn,
        up_stat,
        validate,
    )

    D = validate(args.word, args.m)
    show = set(args.show.split(",")) if args.show else {"labels", "heights", "rot"}
    result: dict = {"word": D.word, "m": D.m, "ell": D.ell}
    lines = [f"{D.word} (m={D.m}, ell={D.ell})"]
    if "labels" in show:
        result["labels"] = [list(x) for x in balance_labels(D)]
        lines.append("balance labels: " + " ".join(f"({i},{j})" for i, j in balance_labels(D)))
    if "heights" in show:
        result["heights"] = height_sequence(D)
        lines.append("heights: " + ",".join(map(str, result["heights"])))
    if "rot" in show:
        result["rot"] = rot_tilde(D).word
        lines.append("rotated: " + result["rot"])
    if "stats" in show:
        N = D.polygon
        result["up"] = [up_stat(D, i) for i in range(N)]
        result["bal"] = [bal_stat(D, i) for i in range(N)]
        lines.append("up:  " + ",".join(map(str, result["up"])))
        lines.append("bal: " + ",".join(map(str, result["bal"])))
    if "quiddity" in show:
        result["quiddity_multipliers"] = quiddity_coefficients(D)
        lines.append(f"quiddity / lambda_{D.m + 2}: "
                     + ",".join(map(str, result["quiddity_multipliers"])))
    if "rtn" in show:
        result["rtn"] = rtn(D).to_json()
        lines.append("dissection: " + " ".join(f"({i},{j})" for i, j in rtn(D).sorted_diagonals()))
    return result, True, "\n".join(lines), False


def cmd_csp(args, cache: ResultCache):
    from .csp import CyclicFamily, verify_csp
    from .dissect import Dissection, a_mu_poly, enumerate_by_type, rotate, type_vectors
    from .punctured import (
        csp_condition,
        enumerate_punctured,
        rotate_punctured,
        t_poly,
        t_total_poly,
    )

    runs = []
    if args.family == "amu":
        if args.all:
            vectors = [tv for N in range(3, args.max_n + 1) for tv in type_vectors(N - 2)]
        elif args.mu:
            from .dissect import TypeVector

            vectors = [TypeVector(tuple(args.mu))]
        else:
            raise UsageError("amu family needs --mu or --all")
        for tv in vectors:
            elems = sorted(enumerate_by_type(tv), key=Dissection.sorted_diagonals)
            fam = CyclicFamily.from_action(elems, rotate, tv.polygon)
            runs.append(({"mu": list(tv.mu)}, verify_csp(fam, a_mu_poly(tv)), True))
    elif args.family == "punctured":
        if args.all:
            triples = [(n, 1, None) for n in range(1, args.max_n + 1)]
        elif args.n:
            triples = [(args.n, args.m, args.s)]
        else:
            raise UsageError("punctured family needs --n or --all")
        for n, m, s in triples:
            if n % m:
                raise UsageError("m must divide n")
            if s is None:
                if m != 1:
                    raise UsageError("the all-spokes sum is only defined for m = 1")
                elems = [T for k in range(1, n + 1) for T in enumerate_punctured(n, 1, k)]
                poly, predicted = t_total_poly(n), True
            else:
                elems = enumerate_punctured(n, m, s)
                poly, predicted = t_poly(n, m, s), csp_condition(n, m, s)
            fam = CyclicFamily.from_action(elems, rotate_punctured, n)
            runs.append(({"n": n, "m": m, "s": s}, verify_csp(fam, poly), predicted))
    else:
        raise UsageError(f"unknown family {args.family}")
    out, ok, lines = [], True, []
    for params, report, predicted in runs:
        out.append({"params": params, "predicted": predicted, **report.to_json()})
        if predicted and not report.ok:
            ok = False
        mism = ", ".join(f"d={r.d}: eval {r.eval} vs fixed {r.fixed}" for r in report.mismatches())
        lines.append(f"{params}: {'ok' if report.ok else 'MISMATCH ' + mism}"
                     + ("" if predicted else " (no match predicted)"))
    result = {"family": args.family, "runs": out, "all_predicted_hold": ok}
    return result, ok, "\n".join(lines), False


def cmd_stanton(args, cache: ResultCache):
    from .csp import B_CANDIDATES, linear_b, stanton_check

    if args.b in B_CANDIDATES:
        candidates = {args.b: B_CANDIDATES[args.b]}
    else:
        coeffs = _load_json(args.b)
        if not isinstance(coeffs, list):
            raise UsageError("a b-file holds a JSON list of linear coefficients")
        candidates = {args.b: linear_b(coeffs)}
    if args.all_candidates:
        candidates = {**B_CANDIDATES, **candidates}
    if not 1 <= args.k <= args.n:
        raise UsageError("need 1 <= k <= n")
    verdicts = {name: stanton_check(args.n, args.k, b).to_json() for name, b in candidates.items()}
    primary = verdicts[args.b]
    lines = [f"{name}: {'holds' if v['holds'] else 'fails at ' + str(v.get('first_diff'))}"
             for name, v in verdicts.items()]
    return {"n": args.n, "k": args.k, "b": args.b, "verdicts": verdicts}, primary["holds"], \
        "\n".join(lines), False


def cmd_orbifold(args, cache: ResultCache):
    from .dissect import Dissection
    from .frieze import orbifold_frieze

    data = _load_json(args.triangulation)
    T = Dissection.from_json(data)
    O = orbifold_frieze(T, args.p)
    table = O.table()
    defects = {f"{i},{j}": str(O.skein_defect(i, j))
               for i in range(O.n) for j in range(O.n) if i != j}
    arcs_one = all(O.f(i, j) == 1 for i, j in O.arcs())
    ok = all(v == "0" for v in defects.values()) and arcs_one
    result = {"n": O.n, "p": O.p, "table": [[str(x) for x in r] for r in table],
              "skein_holds": all(v == "0" for v in defects.values()),
              "unitary_on_triangulation": arcs_one}
    text = "\n".join(" ".join(f"{str(x):>6}" for x in r) for r in table)
    return result, ok, text, False


def cmd_repro(args, cache: ResultCache):
    from . import repro

    if args.list or not args.name:
        names = sorted(repro.TARGETS)
        return {"targets": names}, True, "\n".join(names), False
    names = sorted(repro.TARGETS) if args.name == "all" else [args.name]
    out, ok, lines = {}, True, []
    for name in names:
        try:
            actual, problems = repro.run(name)
        except KeyError as exc:
            raise UsageError(f"unknown repro target {name!r}") from exc
        out[name] = {"actual": actual, "matches": not problems, "diff": problems}
        ok &= not problems
        lines.append(f"{name}: {'matches' if not problems else 'DIFFERS'}")
        lines.extend("  " + p for p in problems)
    return out, ok, "\n".join(lines), False


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--cache-dir", default=None,
                        help="cache directory (default: $SIEVEKIT_CACHE or ~/.cache/sievekit)")
    common.add_argument("--no-cache", action="store_true")

    p = argparse.ArgumentParser(prog="sievekit", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("dissect", parents=[common], help="dissections by type vector")
    d.add_argument("action", choices=["enumerate"])
    d.add_argument("--mu", type=_int_list, required=True)
    d.add_argument("--fixed", type=int, default=None, help="keep d-fold symmetric ones")
    d.add_argument("--csp", action="store_true", help="verify cyclic sieving")
    d.add_argument("--limit", type=int, default=None)
    d.set_defaults(func=cmd_dissect)

    pu = sub.add_parser("punctured", parents=[common], help="dissections of punctured polygons")
    pu.add_argument("action", choices=["enumerate"])
    pu.add_argument("--n", type=int, required=True)
    pu.add_argument("--m", type=int, default=1)
    pu.add_argument("--spokes", type=int, required=True)
    pu.add_argument("--limit", type=int, default=None)
    pu.set_defaults(func=cmd_punctured)

    f = sub.add_parser("frieze", parents=[common], help="frieze from a dissection or quiddity")
    f.add_argument("--from", dest="source", default=None)
    f.add_argument("--quiddity", default=None, help="comma list, entries like 2+√2 or 2+r2")
    f.add_argument("--rows", type=int, default=None)
    f.add_argument("--cell", type=int, default=0, help="minimum cell width in text output")
    f.set_defaults(func=cmd_frieze)

    dy = sub.add_parser("dyck", parents=[common], help="m-Dyck path tools")
    dy.add_argument("--m", type=int, required=True)
    dy.add_argument("--word", required=True)
    dy.add_argument("--show", default=None, help="labels,heights,rot,stats,quiddity,rtn")
    dy.set_defaults(func=cmd_dyck)

    c = sub.add_parser("csp", parents=[common], help="cyclic sieving verification")
    c.add_argument("--family", choices=["amu", "punctured"], required=True)
    c.add_argument("--mu", type=_int_list, default=None)
    c.add_argument("--all", action="store_true")
    c.add_argument("--max-n", type=int, default=8)
    c.add_argument("--n", type=int, default=None)
    c.add_argument("--m", type=int, default=1)
    c.add_argument("--s", type=int, default=None)
    c.set_defaults(func=cmd_csp)

    st = sub.add_parser("stanton", parents=[common], help="check the Stanton identity")
    st.add_argument("--n", type=int, required=True)
    st.add_argument("--k", type=int, required=True)
    st.add_argument("--b", default="derived", help="derived | printed | coefficient JSON file")
    st.add_argument("--all-candidates", action="store_true")
    st.set_defaults(func=cmd_stanton)

    o = sub.add_parser("orbifold", parents=[common], help="orbifold frieze tables")
    o.add_argument("--p", type=int, required=True)
    o.add_argument("--triangulation", required=True)
    o.set_defaults(func=cmd_orbifold)

    r = sub.add_parser("repro", parents=[common], help="reproduce a worked example")
    r.add_argument("name", nargs="?", default=None)
    r.add_argument("--list", action="store_true")
    r.set_defaults(func=cmd_repro)
    return p


def _params(args) -> dict:
    skip = {"func", "format", "cache_dir", "no_cache", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    cache = ResultCache(args.cache_dir, enabled=not args.no_cache)
    start = time.perf_counter()
    try:
        result, ok, text, hit = args.func(args, cache)
    except (UsageError, SieveKitError, ValueError, argparse.ArgumentTypeError) as exc:
        print(f"sievekit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed = time.perf_counter() - start
    if args.format == "text":
        print(text)
    else:
        manifest = {"command": args.command, "parameters": _params(args),
                    "version": __version__, "elapsed": round(elapsed, 6),
                    "digest": digest(result), "cache": "hit" if hit else "miss"}
        print(json.dumps({"result": result, "manifest": manifest},
                         ensure_ascii=False, sort_keys=True))
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
