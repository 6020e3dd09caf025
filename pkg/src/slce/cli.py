"""Command-line front end: generation, direct computation, prediction,
and cross-validation of SLCE sequences.

Subcommands:
  seq      print one period (and optionally the autocorrelation CSV)
  gcd      factored gcd of the sequence polynomial with x^v + 1, and the
           linear complexity
  jacobi   exact K in the power basis, as fixture-ready JSON
  predict  closed-form divisibility prediction for one (p, m, k)
  verify   per-factor criterion vs direct divisibility vs prediction
  grid     verify swept over all odd prime powers q <= bound

Exit codes: 0 = all checks match, 1 = a mismatch was found, 2 = usage
error.  Output is deterministic for fixed flags; timing data is emitted
only when --timings is given so that default reports are byte-stable.
There is no randomness anywhere (--seed-free is accepted as a no-op).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import cyclotomic, gf2poly, sequences
from .predict import NoClosedForm, predict as run_predict
from .fields import build_field, is_prime, prime_factors

DIRECT_VERIFY_BOUND = 20_000
FIELD_SIZE_BOUND = 2_000_000


def _odd_divisors_ge3(n: int) -> list[int]:
    out = [d for d in range(3, n + 1, 2) if n % d == 0]
    return out


def _odd_prime_powers_upto(q_max: int) -> list[tuple[int, int, int]]:
    """(q, p, m) for every odd prime power q <= q_max, ascending."""
    out = []
    for p in range(3, q_max + 1, 2):
        if not is_prime(p):
            continue
        q, m = p, 1
        while q <= q_max:
            out.append((q, p, m))
            q *= p
            m += 1
    return sorted(out)


def _field_block(p: int, m: int, direct: bool) -> dict:
    if direct:
        ctx = build_field(p, m, max_q=FIELD_SIZE_BOUND)
        return {"ctx": ctx, "echo": ctx.describe()}
    return {
        "ctx": None,
        "echo": {"p": p, "m": m, "q": p**m, "modulus": None, "alpha": None},
    }


def _verify_rows(p: int, m: int, ks: list[int] | None, direct: bool) -> dict:
    """Assemble the verification block for one field (the report core)."""
    q = p**m
    t_start = time.perf_counter()
    field = _field_block(p, m, direct)
    ctx = field["ctx"]
    block: dict = {"field": field["echo"], "rows": []}
    timings = {"field_build_s": time.perf_counter() - t_start}

    s2 = None
    if direct:
        t0 = time.perf_counter()
        seq = sequences.generate(ctx)
        s2 = gf2poly.poly_from_seq(seq)
        g = gf2poly.gcd(gf2poly.x_pow_plus_one(seq.v), s2)
        block["gcd_factored"] = gf2poly.factored_str(gf2poly.factor(g)) if g.degree >= 1 else "1"
        block["linear_complexity"] = seq.v - g.degree
        timings["sequence_and_gcd_s"] = time.perf_counter() - t0

    if ks is None:
        ks = _odd_divisors_ge3(q - 1)
    mismatches = 0
    indeterminate = 0
    t0 = time.perf_counter()
    for k in sorted(ks):
        if k < 3 or k % 2 == 0 or (q - 1) % k != 0:
            raise ValueError(f"k = {k} is not an odd divisor >= 3 of q - 1 = {q - 1}")
        row: dict = {"q": q, "k": k}
        direct_all = None
        if direct:
            ideals = cyclotomic.ideal_factors(k)
            row["f"] = ideals[0].f
            factors = []
            for ideal in ideals:
                crit = cyclotomic.criterion(ctx, k, ideal)
                div = ideal.g.divides(s2)
                factors.append(
                    {"g": str(ideal.g), "criterion": crit, "direct": div, "match": crit == div}
                )
                if crit != div:
                    mismatches += 1
            row["factors"] = factors
            row["criterion_all"] = all(f["criterion"] for f in factors)
            direct_all = all(f["direct"] for f in factors)
            row["direct_all"] = direct_all
        else:
            row["factors"] = None
            row["direct_all"] = f"skipped: q = {p}^{m} infeasible"
        try:
            pred = run_predict(p, m, k)
            row["prediction"] = pred.to_json()
            if pred.divides is None:
                indeterminate += 1
                row["prediction_match"] = None
            elif direct:
                row["prediction_match"] = pred.divides == direct_all
                if pred.divides != direct_all:
                    mismatches += 1
            else:
                row["prediction_match"] = None
        except NoClosedForm:
            row["prediction"] = None
            row["prediction_note"] = "no closed form in scope"
            row["prediction_match"] = None
        block["rows"].append(row)
    timings["rows_s"] = time.perf_counter() - t0
    block["summary"] = {
        "rows": len(block["rows"]),
        "mismatches": mismatches,
        "indeterminate_predictions": indeterminate,
    }
    block["_timings"] = timings
    return block


def _print_verify_block(block: dict, out) -> None:
    fe = block["field"]
    mod = fe["modulus"] if fe["modulus"] is not None else "(not built)"
    alpha = fe["alpha"] if fe["alpha"] is not None else "(not built)"
    print(f"field: p={fe['p']} m={fe['m']} q={fe['q']} modulus={mod} alpha={alpha}", file=out)
    if "gcd_factored" in block:
        print(
            f"gcd = {block['gcd_factored']}; linear complexity = {block['linear_complexity']}",
            file=out,
        )
    for row in block["rows"]:
        print(f"k={row['k']}:", file=out)
        if row["factors"] is not None:
            for f in row["factors"]:
                print(
                    f"  g={f['g']}: criterion={f['criterion']} direct={f['direct']} match={f['match']}",
                    file=out,
                )
        else:
            print(f"  direct: {row['direct_all']}", file=out)
        pred = row.get("prediction")
        if pred is not None:
            print(
                f"  prediction [{pred['regime']}]: divides={pred['divides']}"
                f" match={row['prediction_match']}",
                file=out,
            )
            print(f"    {pred['condition_trace']}", file=out)
        elif "prediction_note" in row:
            print(f"  prediction: {row['prediction_note']}", file=out)
    s = block["summary"]
    print(
        f"summary: rows={s['rows']} mismatches={s['mismatches']}"
        f" indeterminate={s['indeterminate_predictions']}",
        file=out,
    )


_CSV_HEADER = "q,k,g,criterion,direct,match,prediction,prediction_match"


def _csv_rows(block: dict) -> list[str]:
    lines = []
    for row in block["rows"]:
        pred = row.get("prediction")
        if pred is None:
            pred_str = "none"
        elif pred["divides"] == "indeterminate":
            pred_str = "indeterminate"
        else:
            pred_str = str(pred["divides"])
        pmatch = row.get("prediction_match")
        if row["factors"] is not None:
            for f in row["factors"]:
                lines.append(
                    f"{row['q']},{row['k']},{f['g']},{f['criterion']},{f['direct']},{f['match']},"
                    f"{pred_str},{pmatch}"
                )
        else:
            lines.append(f"{row['q']},{row['k']},,,skipped,,{pred_str},{pmatch}")
    return lines


def _emit(block: dict, args, out) -> None:
    if not getattr(args, "timings", False):
        block = {k: v for k, v in block.items() if k != "_timings"}
    else:
        block["timings"] = block.pop("_timings")
    if args.json:
        print(json.dumps(block, indent=2), file=out)
    elif getattr(args, "csv", False):
        print(_CSV_HEADER, file=out)
        for line in _csv_rows(block):
            print(line, file=out)
    else:
        _print_verify_block(block, out)


def cmd_seq(args, out) -> int:
    ctx = build_field(args.p, args.m, max_q=FIELD_SIZE_BOUND)
    seq = sequences.generate(ctx)
    if args.autocorr:
        text = sequences.autocorrelation_csv(seq)
    else:
        text = sequences.sequence_text(seq)
        print(f"# p={args.p} m={args.m} q={ctx.q} weight={seq.weight()}", file=sys.stderr)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def cmd_gcd(args, out) -> int:
    block = _verify_rows(args.p, args.m, ks=[], direct=True)
    if args.json:
        report = {
            "field": block["field"],
            "gcd_factored": block["gcd_factored"],
            "linear_complexity": block["linear_complexity"],
        }
        print(json.dumps(report, indent=2), file=out)
    else:
        print(f"gcd = {block['gcd_factored']}", file=out)
        print(f"linear complexity = {block['linear_complexity']}", file=out)
    return 0


def cmd_jacobi(args, out) -> int:
    ctx = build_field(args.p, args.m, max_q=FIELD_SIZE_BOUND)
    kval = cyclotomic.jacobi_K(ctx, args.k)
    report = dict(ctx.describe())
    report.update(kval.to_json())
    print(json.dumps(report, indent=2), file=out)
    return 0


def cmd_predict(args, out) -> int:
    try:
        pred = run_predict(args.p, args.m, args.k)
    except NoClosedForm as exc:
        print(f"no closed form in scope: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(pred.to_json(), indent=2), file=out)
    else:
        verdict = {True: "divides", False: "does not divide", None: "indeterminate"}[pred.divides]
        print(f"{pred.target}: {verdict} [{pred.regime}]", file=out)
        print(pred.condition_trace, file=out)
    return 0


def cmd_verify(args, out) -> int:
    q = args.p**args.m
    direct = q <= args.q_max
    if not direct and not args.predict_only:
        print(
            f"error: q = {q} exceeds the direct-verification bound {args.q_max};"
            " pass --predict-only for a prediction-only report",
            file=sys.stderr,
        )
        return 2
    ks = [args.k] if args.k is not None else None
    try:
        block = _verify_rows(args.p, args.m, ks, direct)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    _emit(block, args, out)
    return 0 if block["summary"]["mismatches"] == 0 else 1


def cmd_grid(args, out) -> int:
    blocks = []
    mismatches = 0
    for q, p, m in _odd_prime_powers_upto(args.q_max):
        direct = q <= DIRECT_VERIFY_BOUND
        if not direct and not args.predict_only:
            print(
                f"error: grid reaches q = {q} above the direct bound {DIRECT_VERIFY_BOUND};"
                " pass --predict-only to include prediction-only rows",
                file=sys.stderr,
            )
            return 2
        block = _verify_rows(p, m, None, direct)
        mismatches += block["summary"]["mismatches"]
        blocks.append(block)
    if args.timings:
        fields = [{("timings" if k == "_timings" else k): v for k, v in b.items()} for b in blocks]
    else:
        fields = [{k: v for k, v in b.items() if k != "_timings"} for b in blocks]
    report = {
        "q_max": args.q_max,
        "fields": fields,
        "summary": {"fields": len(blocks), "mismatches": mismatches},
    }
    if args.json:
        print(json.dumps(report, indent=2), file=out)
    elif args.csv:
        print(_CSV_HEADER, file=out)
        for block in blocks:
            for line in _csv_rows(block):
                print(line, file=out)
    else:
        for block in blocks:
            _print_verify_block(block, out)
        print(f"grid summary: fields={len(blocks)} mismatches={mismatches}", file=out)
    return 0 if mismatches == 0 else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slce",
        description="SLCE sequences: linear complexity, Jacobi-sum tests, closed-form predictions",
    )
    parser.add_argument(
        "--seed-free",
        action="store_true",
        help="reserved no-op: the toolkit is deterministic, nothing is seeded",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_pm(sp):
        sp.add_argument("-p", type=int, required=True, help="odd prime p")
        sp.add_argument("-m", type=int, required=True, help="extension degree m")

    sp = sub.add_parser("seq", help="print one period of the sequence")
    add_pm(sp)
    sp.add_argument("--autocorr", action="store_true", help="emit the autocorrelation profile CSV")
    sp.add_argument("--out", help="write to a file instead of stdout")
    sp.set_defaults(func=cmd_seq)

    sp = sub.add_parser("gcd", help="factored gcd with x^v + 1 and linear complexity")
    add_pm(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_gcd)

    sp = sub.add_parser("jacobi", help="exact K in the power basis (fixture JSON)")
    add_pm(sp)
    sp.add_argument("-k", type=int, required=True, help="odd character order k >= 3 dividing q-1")
    sp.set_defaults(func=cmd_jacobi)

    sp = sub.add_parser("predict", help="closed-form divisibility prediction")
    add_pm(sp)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_predict)

    sp = sub.add_parser("verify", help="criterion vs direct divisibility vs prediction")
    add_pm(sp)
    sp.add_argument("-k", type=int, default=None, help="restrict to one k (default: all valid k)")
    sp.add_argument("--q-max", type=int, default=DIRECT_VERIFY_BOUND, help="direct-verification bound")
    sp.add_argument("--predict-only", action="store_true")
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true", help="per-factor rows as CSV")
    sp.add_argument("--timings", action="store_true", help="include timing data (not byte-stable)")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("grid", help="sweep all odd prime powers q <= --q-max")
    sp.add_argument("--q-max", type=int, required=True)
    sp.add_argument("--predict-only", action="store_true")
    fmt = sp.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true", help="per-factor rows as CSV")
    sp.add_argument("--timings", action="store_true")
    sp.set_defaults(func=cmd_grid)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    out = out if out is not None else sys.stdout
    try:
        return args.func(args, out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
