"""Command line front end: analyze, hilbert and cells subcommands.

``analyze`` prints the structural report for one (n, r, s), as text or as
versioned JSON; ``hilbert`` prints the invariant Hilbert function as CSV;
``cells`` lists the Richardson pairs of the semistable locus.  Exit codes:
0 success, 1 a self-check failed, 2 bad arguments, 3 enumeration budget
exceeded.
"""

import argparse
import json
import re
import sys

from . import cohomology, quotient, reps, semistability, weyl
from .errors import CalibrationError, EnumerationCapError, UnsupportedCaseError
from .params import GrassParams

SCHEMA_VERSION = "1"
_JSON_INT_LIMIT = 2**53


def _jsonable(value):
    """Ints beyond 2^53 become decimal strings so any JSON reader loads them."""
    if isinstance(value, bool) or value is None or isinstance(value, (str, float)):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > _JSON_INT_LIMIT else value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    raise TypeError(f"cannot serialize {type(value)!r}")


def _diagnostics(params: GrassParams) -> list:
    """Re-derive cheap invariants so every report is self-checking."""
    checks = []

    def add(name, ok):
        checks.append({"name": name, "ok": bool(ok)})

    word = weyl.build_w_sr(params)
    add("w_sr word is reduced", weyl.is_reduced(word, params.n))
    subset = weyl.coset_subset(weyl.evaluate_word(word, params.n), params.r)
    add("w_sr subset matches closed form",
        subset == semistability.minimal_semistable_subset(params))
    w_tilde = weyl.factor_w_tilde(params)
    add("factorization w0 = w~ * w_sr",
        weyl.compose(weyl.evaluate_word(w_tilde, params.n),
                     weyl.evaluate_word(word, params.n))
        == weyl.evaluate_word(weyl.build_w0_coset(params), params.n))
    add("induction test matches reflection test",
        quotient.detect_induction_case(params)
        == (not weyl.contains_reflection(w_tilde, params.s, params.n)))
    if quotient.detect_induction_case(params):
        base = quotient.base_fibration(params)
        u, v = params.fiber_shape
        add("dimension identity base + fiber = dim X",
            base.dim + u * v - 1 == params.r * (params.n - params.r) - 1)
    return checks


def _bundle_list(raw: str) -> list:
    pairs = []
    for chunk in raw.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        match = re.fullmatch(r"\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?", chunk)
        if not match:
            raise argparse.ArgumentTypeError(
                f"cannot parse bundle {chunk!r}; expected \"(a,b);(a,b);...\"")
        pairs.append((int(match.group(1)), int(match.group(2))))
    return pairs


def build_document(params: GrassParams, max_degree: int, bundles) -> dict:
    classes = semistability.classify_fixed_points(params)
    pairs = semistability.enumerate_A(params)
    word = weyl.build_w_sr(params)
    rep = quotient.report(params)

    decomposition = None
    decomposition_error = None
    try:
        cal = reps.calibrate_descent(params)
        summands = reps.decompose_sections(params, cal.a, cal.b)
        decomposition = {
            "d_min": cal.d_min,
            "a": cal.a,
            "b": cal.b,
            "convention": cal.convention,
            "total_dim": sum(p.dim for p in summands),
            "pairs": [{"left": list(p.left), "right": list(p.right), "dim": p.dim}
                      for p in summands],
        }
    except (UnsupportedCaseError, CalibrationError) as exc:
        decomposition_error = str(exc)

    tables = []
    for a, b in bundles:
        try:
            table = cohomology.cohomology_on_X(params, a, b)
            tables.append({"a": a, "b": b,
                           "table": {str(k): v for k, v in sorted(table.items())},
                           "euler": cohomology.euler_characteristic(params, a, b)})
        except (UnsupportedCaseError, ValueError) as exc:
            tables.append({"a": a, "b": b, "error": str(exc)})

    return {
        "schema_version": SCHEMA_VERSION,
        "params": {"n": params.n, "r": params.r, "s": params.s,
                   "p": params.p, "k": params.k},
        "quotient": rep.to_dict(),
        "semistability": {
            "weights": list(semistability.lambda_weights(params)),
            "class_counts": {"positive": classes.counts[0],
                             "zero": classes.counts[1],
                             "negative": classes.counts[2]},
            "num_pairs": len(pairs),
            "w_sr": {"word": list(word),
                     "subset": list(semistability.minimal_semistable_subset(params))},
            "ss_equals_stable": semistability.ss_equals_stable(params),
        },
        "hilbert": {str(m): value for m, value in
                    reps.hilbert_values(params, range(max_degree + 1)).items()},
        "decomposition": decomposition,
        "decomposition_error": decomposition_error,
        "cohomology": tables,
        "diagnostics": _diagnostics(params),
    }


def _print_text(doc: dict):
    p = doc["params"]
    print(f"GIT quotient report for G(r={p['r']}, n={p['n']}), subgroup index s={p['s']}")
    print(f"  p = {p['p']}, k = {p['k']}")
    q = doc["quotient"]
    print(f"  dim X = {q['dim_X']}, induction case: {q['induction_case']}, "
          f"semistable = stable: {q['ss_eq_stable']}")
    if q["explicit_model"]:
        model, degree = q["explicit_model"]
        print(f"  explicit model: X = {model} with bundle degree {degree}")
    if q["base"]:
        base = q["base"]
        if base["point"]:
            print("  base: point (stabilizer is the whole Levi)")
        else:
            idx, rank = base["grassmannian"]
            print(f"  base: G({idx}, {rank}) in {base['factor']}, dim {base['dim']}")
        u, v = q["fiber_dims"]
        print(f"  fiber: P(M({u} x {v}))")
        print(f"  orbits: {q['orbit_count']} with dims {q['orbit_dims']}")
        print(f"  Picard rank {q['picard_rank']}, Fano: {q['fano']}, "
              f"wonderful: {q['wonderful']}, Aut0 = {q['aut0']}")
    ss = doc["semistability"]
    print(f"  fixed points (+/0/-): {ss['class_counts']['positive']}"
          f"/{ss['class_counts']['zero']}/{ss['class_counts']['negative']}, "
          f"Richardson pairs: {ss['num_pairs']}")
    print(f"  w_sr word {ss['w_sr']['word']} with subset {ss['w_sr']['subset']}")
    hil = ", ".join(f"h({m})={v}" for m, v in doc["hilbert"].items())
    print(f"  hilbert: {hil}")
    if doc["decomposition"]:
        d = doc["decomposition"]
        print(f"  sections at d_min={d['d_min']}: (a,b)=({d['a']},{d['b']}), "
              f"{len(d['pairs'])} summands, total dim {d['total_dim']}")
    elif doc["decomposition_error"]:
        print(f"  sections: unavailable ({doc['decomposition_error']})")
    for entry in doc["cohomology"]:
        if "error" in entry:
            print(f"  H*(a={entry['a']}, b={entry['b']}): {entry['error']}")
        else:
            print(f"  H*(a={entry['a']}, b={entry['b']}): {entry['table']} "
                  f"(chi = {entry['euler']})")
    bad = [c["name"] for c in doc["diagnostics"] if not c["ok"]]
    for check in doc["diagnostics"]:
        print(f"  [{'PASS' if check['ok'] else 'FAIL'}] {check['name']}")
    if bad:
        print(f"  {len(bad)} diagnostic(s) FAILED", file=sys.stderr)


def _cmd_analyze(args) -> int:
    params = GrassParams(args.n, args.r, args.s)
    doc = build_document(params, args.max_degree, args.bundles or [])
    if args.json:
        print(json.dumps(_jsonable(doc), sort_keys=True, separators=(",", ":")))
    else:
        _print_text(doc)
    return 1 if any(not c["ok"] for c in doc["diagnostics"]) else 0


def _cmd_hilbert(args) -> int:
    params = GrassParams(args.n, args.r, args.s)
    print("m,h")
    for m in range(args.degrees + 1):
        print(f"{m},{reps.invariant_hilbert(params, m)}")
    return 0


def _cmd_cells(args) -> int:
    params = GrassParams(args.n, args.r, args.s)
    pairs = semistability.enumerate_A(params)
    limit = args.limit if args.limit is not None else len(pairs)
    for v, phi in pairs[:limit]:
        v_str = ",".join(map(str, v))
        phi_str = ",".join(map(str, phi))
        print(f"{{{v_str}}} <= {{{phi_str}}}")
    if limit < len(pairs):
        print(f"... truncated; {len(pairs)} pairs total")
    else:
        print(f"{len(pairs)} pairs")
    return 0


def _add_params(sub):
    sub.add_argument("n", type=int)
    sub.add_argument("r", type=int)
    sub.add_argument("s", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gitgr",
        description="Exact structure of GIT quotients of Grassmannians by "
                    "diagonal one-parameter subgroups.")
    subs = parser.add_subparsers(dest="command", required=True)

    analyze = subs.add_parser("analyze", help="full structural report")
    _add_params(analyze)
    analyze.add_argument("--json", action="store_true", help="emit JSON")
    analyze.add_argument("--max-degree", type=int, default=6, metavar="D",
                         help="hilbert degrees to include (default 6)")
    analyze.add_argument("--bundles", type=_bundle_list, default=[],
                         metavar="LIST", help='cohomology twists "(a,b);(a,b);..."')
    analyze.set_defaults(func=_cmd_analyze)

    hilbert = subs.add_parser("hilbert", help="invariant Hilbert function as CSV")
    _add_params(hilbert)
    hilbert.add_argument("--degrees", type=int, default=8, metavar="D")
    hilbert.set_defaults(func=_cmd_hilbert)

    cells = subs.add_parser("cells", help="Richardson pairs of the semistable locus")
    _add_params(cells)
    cells.add_argument("--limit", type=int, default=None, metavar="L")
    cells.set_defaults(func=_cmd_cells)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "n"):
            GrassParams(args.n, args.r, args.s)
        if getattr(args, "max_degree", 0) < 0 or \
                (getattr(args, "degrees", 0) or 0) < 0 or \
                (getattr(args, "limit", 0) or 0) < 0:
            raise ValueError("numeric options must be nonnegative")
    except ValueError as exc:
        parser.error(str(exc))  # exits 2
    try:
        return args.func(args)
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
