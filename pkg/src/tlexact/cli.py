"""Command-line front end.

Subcommands::

    jw             print a Jones-Wenzl projector
    pjw            print a p-Jones-Wenzl idempotent (direct and/or recursive)
    idempotent     print the seminormal idempotent of a two-column tableau
    classes        list the p-classes of tableaux with their residue sequences
    collapse       tabulate the collapse map on the one-column p-class
    diamond-check  verify the closed diamond action formulas
    klr-check      verify the KLR relations on the seminormal basis
    verify-all     run every check that fits the given size

Exit status: 0 on success, 1 when a verification fails (or a coefficient
violates p-integrality), 2 on usage errors.  Output is deterministic;
--json switches to the JSON schemas; progress for long computations goes
to stderr only.  The Jones-Wenzl disk cache is taken from --cache, which
the environment variable TL_CACHE overrides.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .coeffs import InvalidPrimeError, check_odd_prime
from . import tableaux
from .diagrams import element_to_str
from . import projectors
from .projectors import IntegralityViolationError
from . import klr

# the full diagram expansion of the recursive construction is kept
# element-level up to this size; beyond it the comparison runs in f-basis
# coordinates unless --slow-expand forces the expansion
_EXPAND_LIMIT = 9


class UsageError(Exception):
    pass


def _progress(msg):
    print(msg, file=sys.stderr)


def _load_cache(args):
    path = os.environ.get("TL_CACHE") or args.cache
    cache = projectors.default_cache()
    if path and os.path.exists(path):
        cache.load(path)
    return cache, path


def _save_cache(cache, path):
    if path:
        cache.save(path)


def _print_element(e, as_json):
    if as_json:
        print(json.dumps(e.to_json()))
    else:
        print(element_to_str(e))


def _require(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required for this command")
    if "p" in names:
        try:
            check_odd_prime(args.p)
        except InvalidPrimeError as exc:
            raise UsageError(str(exc)) from None
    if "n" in names and args.n > args.max_n:
        raise UsageError(
            f"n={args.n} exceeds the safety limit --max-n={args.max_n}")


def _convert_ring(e, ring, p):
    if ring == "Q":
        return e
    if p is None:
        raise UsageError("--p is required for ring Zp or Fp")
    return e.to_Zp(p) if ring == "Zp" else e.reduce_mod_p(p)


def _cmd_jw(args):
    _require(args, "n")
    cache, path = _load_cache(args)
    if args.n >= 10:
        _progress(f"expanding the Jones-Wenzl projector at n={args.n}; "
                  "this is the slow path")
    e = projectors.jones_wenzl(args.n, cache)
    _save_cache(cache, path)
    _print_element(e, args.json)
    return 0


def _cmd_pjw(args):
    _require(args, "n", "p")
    cache, path = _load_cache(args)
    method = args.method
    expand = args.n <= _EXPAND_LIMIT or args.slow_expand
    status = 0
    direct = recursive = None
    if method in ("direct", "both") and expand:
        direct = projectors.p_jones_wenzl_direct(args.n, args.p)
    if method in ("recursive", "both"):
        if expand:
            if args.n >= 10:
                _progress("materializing the recursive construction "
                          f"at n={args.n}; this is the slow path")
            recursive = klr.p_jones_wenzl_recursive(args.n, args.p)
        else:
            _progress(f"n={args.n} > {_EXPAND_LIMIT}: comparing in f-basis "
                      "coordinates (use --slow-expand for the full expansion)")
    if method == "both":
        if expand:
            same = direct == recursive
        else:
            same = (klr.p_jones_wenzl_recursive_operator(args.n, args.p)
                    == klr.direct_projection_operator(args.n, args.p))
        report = {"check": "pjw-direct-vs-recursive", "n": args.n,
                  "p": args.p, "pass": same}
        print(json.dumps(report) if args.json else
              ("direct == recursive" if same else "direct != recursive"))
        if not same:
            status = 1
    out = direct if direct is not None else recursive
    if out is not None:
        _print_element(_convert_ring(out, args.ring, args.p), args.json)
    elif method != "both":
        # no expansion requested or possible: print the index set summary
        tabs = {m: tableaux.tableau_from_index(m, args.n, args.p)
                for m in sorted(tableaux.index_set(args.n, args.p))}
        doc = {"n": args.n, "p": args.p,
               "summands": [{"index": m, "tableau": list(t)}
                            for m, t in tabs.items()]}
        print(json.dumps(doc) if args.json else
              "sum of seminormal idempotents at indices "
              + ", ".join(str(m) for m in tabs))
    _save_cache(cache, path)
    return status


def _parse_tableau(spec):
    try:
        cols = tuple(int(c) for c in spec.split(","))
    except ValueError:
        raise UsageError(f"cannot parse tableau spec {spec!r}") from None
    if not tableaux.is_standard(cols):
        raise UsageError(f"{spec!r} is not a standard two-column tableau "
                         "(ballot sequence of 1s and 2s)")
    return cols


def _cmd_idempotent(args):
    if args.tableau is None:
        raise UsageError("--tableau is required for this command")
    t = _parse_tableau(args.tableau)
    if len(t) > args.max_n:
        raise UsageError(f"tableau size exceeds --max-n={args.max_n}")
    cache, path = _load_cache(args)
    e = projectors.seminormal_idempotent(t)
    _save_cache(cache, path)
    _print_element(_convert_ring(e, args.ring, args.p), args.json)
    return 0


def _cmd_classes(args):
    _require(args, "n", "p")
    for cls in tableaux.all_p_classes(args.n, args.p):
        res = tableaux.residue_sequence(cls[0], args.p)
        if args.json:
            print(json.dumps({"residues": list(res),
                              "members": [list(t) for t in cls]}))
        else:
            members = "  ".join("".join(map(str, t)) for t in cls)
            print(f"residues {','.join(map(str, res))}: {members}")
    return 0


def _cmd_collapse(args):
    _require(args, "n", "p")
    if args.n < args.p:
        raise UsageError("collapse needs n >= p")
    for t in tableaux.class_of_one_column(args.n, args.p):
        small, tag = tableaux.collapse(t, args.p)
        if args.json:
            print(json.dumps({"tableau": list(t), "image": list(small),
                              "tag": tag}))
        else:
            img = "".join(map(str, small)) or "empty"
            tag_str = f" tag {tag}" if tag is not None else ""
            print(f"{''.join(map(str, t))} -> {img}{tag_str}")
    return 0


def _emit_reports(reports, as_json):
    ok = True
    for r in reports:
        ok &= bool(r["pass"])
        if as_json:
            print(json.dumps(r))
        else:
            mark = "PASS" if r["pass"] else "FAIL"
            extra = "" if r["pass"] else f"  {r.get('counterexample')}"
            print(f"{mark} {r['check']} (n={r['n']}, p={r['p']}){extra}")
    return ok


def _cmd_diamond_check(args):
    _require(args, "n", "p")
    if args.n < 2 * args.p + args.p - 1:
        raise UsageError("diamond checks need at least two length-p blocks, "
                         f"n >= {3 * args.p - 1}")
    return 0 if _emit_reports(klr.diamond_formula_check(args.n, args.p),
                              args.json) else 1


def _cmd_klr_check(args):
    _require(args, "n", "p")
    if args.n > 7:
        raise UsageError("the KLR relation suite is exhaustive over the "
                         "f-basis and is kept to n <= 7")
    return 0 if _emit_reports(klr.klr_relations_check(args.n, args.p),
                              args.json) else 1


def _cmd_verify_all(args):
    _require(args, "n", "p")
    n, p = args.n, args.p
    reports = []
    if n <= 7:
        reports.extend(klr.klr_relations_check(n, p))
    if n >= 3 * p - 1:
        reports.extend(klr.diamond_formula_check(n, p))
    if n <= _EXPAND_LIMIT:
        try:
            for cls in tableaux.all_p_classes(n, p):
                projectors.class_idempotent(cls, p)
            reports.append({"check": "class-idempotent-integrality",
                            "n": n, "p": p, "pass": True})
        except IntegralityViolationError as exc:
            reports.append({"check": "class-idempotent-integrality",
                            "n": n, "p": p, "pass": False,
                            "counterexample": str(exc)})
    else:
        _progress(f"skipping diagram-level integrality at n={n} "
                  f"(> {_EXPAND_LIMIT}); see --slow-expand on pjw")
    if n >= p:
        same = (klr.p_jones_wenzl_recursive_operator(n, p)
                == klr.direct_projection_operator(n, p))
        reports.append({"check": "pjw-direct-vs-recursive", "n": n, "p": p,
                        "pass": same})
    return 0 if _emit_reports(reports, args.json) else 1


_COMMANDS = {
    "jw": _cmd_jw,
    "pjw": _cmd_pjw,
    "idempotent": _cmd_idempotent,
    "classes": _cmd_classes,
    "collapse": _cmd_collapse,
    "diamond-check": _cmd_diamond_check,
    "klr-check": _cmd_klr_check,
    "verify-all": _cmd_verify_all,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tlexact",
        description="Exact Temperley-Lieb computations at loop parameter 2.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        sp = sub.add_parser(name)
        sp.add_argument("--n", type=int, default=None)
        sp.add_argument("--p", type=int, default=None)
        sp.add_argument("--ring", choices=("Q", "Zp", "Fp"), default="Q")
        sp.add_argument("--method", choices=("direct", "recursive", "both"),
                        default="direct")
        sp.add_argument("--tableau", type=str, default=None,
                        help="comma-separated column indices, e.g. 1,1,2")
        sp.add_argument("--cache", type=str, default=None,
                        help="path of the Jones-Wenzl JSON cache "
                        "(TL_CACHE overrides)")
        sp.add_argument("--json", action="store_true")
        sp.add_argument("--max-n", type=int, default=12,
                        help="safety limit on the strand count (default 12)")
        sp.add_argument("--slow-expand", action="store_true",
                        help="force full diagram expansions past the "
                        "feasibility threshold")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except IntegralityViolationError as exc:
        print(f"integrality violation: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
