"""Batch command-line front end.

Subcommands: enum (shapes and tableaux), rsk (insertion tracing), weight
(sequence weights), qmu (deformed power sums), chartable (table generation),
verify (acceptance suites).  Exit codes: 0 pass, 1 verification failure,
2 usage error, 3 guard refusal.

Every command is deterministic given its flags.  --seed is accepted on
verify for randomized property suites; the shipped suites are exhaustive, so
it changes nothing today.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .characters import build_table, specialize_table, verify_frobenius
from .combinatorics import (
    HookParams,
    Multipartition,
    enumerate_multipartitions,
    hook_tableaux,
    standard_tableaux,
)
from .rsk import (
    STRATEGIES,
    CertificationError,
    insert_sequence,
    local_factor_product,
    sw_ne_classify,
    updown_report,
    verify_bijection,
)
from .sequences import ParitySequence, mu_weight_sequence
from .superfunctions import q_mu

SEQ_GUARD = 10_000_000
SHAPE_GUARD = 10_000


class UsageError(Exception):
    pass


class GuardRefusal(Exception):
    pass


def count_multipartitions(n: int, m: int) -> int:
    """|P_(m,n)| by generating-function convolution; the guard must not
    enumerate the very set it is guarding."""
    p = [1] + [0] * n
    for part in range(1, n + 1):
        for j in range(part, n + 1):
            p[j] += p[j - part]
    out = [1] + [0] * n
    for _ in range(m):
        new = [0] * (n + 1)
        for a in range(n + 1):
            if out[a]:
                for b in range(n + 1 - a):
                    new[a + b] += out[a] * p[b]
        out = new
    return out[n]


def _guard_sequences(params: HookParams, n: int, force: bool) -> None:
    total = params.nsymbols**n
    if total > SEQ_GUARD and not force:
        raise GuardRefusal(
            f"sequence space (k+l)^n = {total} exceeds {SEQ_GUARD}; "
            "pass --force to override"
        )


def _guard_shapes(n: int, m: int, force: bool) -> None:
    total = count_multipartitions(n, m)
    if total > SHAPE_GUARD and not force:
        raise GuardRefusal(
            f"|P_(m,n)| = {total} exceeds {SHAPE_GUARD}; pass --force to override"
        )


def _params_for(args, m: int | None = None, n: int | None = None) -> HookParams:
    text = getattr(args, "params", None)
    if text:
        params = HookParams.parse(text)
        if m is not None and params.m != m:
            raise UsageError(f"--params has {params.m} components but --m is {m}")
        return params
    if m is not None and n is not None:
        return HookParams.default(m, n)
    raise UsageError("--params is required for this command")


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=1))
    else:
        print(text)


def schema_path(name: str) -> Path:
    """Shipped JSON schema for a subcommand's --json output."""
    return Path(__file__).resolve().parent / "schemas" / f"{name}.json"


# ---------------------------------------------------------------------------
# subcommands


def cmd_enum(args) -> int:
    chosen = [
        args.multipartitions is not None,
        args.std is not None,
        args.sstd is not None,
    ]
    if sum(chosen) != 1:
        raise UsageError("pick exactly one of --multipartitions, --std, --sstd")
    if args.multipartitions is not None:
        n = args.multipartitions
        m = args.m if args.m is not None else 1
        if n < 0 or m < 1:
            raise UsageError("need n >= 0 and m >= 1")
        _guard_shapes(n, m, args.force)
        items = [str(lam) for lam in enumerate_multipartitions(n, m)]
        payload = {
            "op": "multipartitions",
            "n": n,
            "m": m,
            "count": len(items),
            "items": items,
        }
    elif args.std is not None:
        shape = Multipartition.parse(args.std)
        items = [str(t) for t in standard_tableaux(shape)]
        payload = {
            "op": "std",
            "shape": str(shape),
            "count": len(items),
            "items": items,
        }
    else:
        if not args.params:
            raise UsageError("--sstd needs --params")
        shape = Multipartition.parse(args.sstd)
        params = HookParams.parse(args.params)
        items = [str(t) for t in hook_tableaux(shape, params)]
        payload = {
            "op": "sstd",
            "shape": str(shape),
            "params": str(params),
            "count": len(items),
            "items": items,
        }
    _emit(args, payload, "\n".join(items) if items else "(none)")
    return 0


def cmd_rsk(args) -> int:
    params = _params_for(args, m=args.m)
    seq = ParitySequence.parse(params, args.sequence)
    trace = insert_sequence(seq, args.strategy)
    labels = sw_ne_classify(trace)
    payload = trace.to_json_dict()
    payload["labels"] = labels
    if not args.trace:
        payload.pop("steps")
    lines = [
        f"sequence: {seq}",
        f"strategy: {args.strategy}",
        f"S: {trace.S}",
        f"T: {trace.T}",
        "labels: " + ",".join(labels),
    ]
    if args.trace:
        for i, st in enumerate(trace.steps, start=1):
            line = f"step {i}: insert {st.symbol} -> box {st.new_box} shape {st.shape}"
            if st.bumps:
                chain = " ".join(f"{box}<-{sym}" for box, sym in st.bumps)
                line += f" bumps {chain}"
            lines.append(line)
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_weight(args) -> int:
    params = _params_for(args)
    mu = Multipartition.parse(args.mu)
    if mu.m != params.m:
        raise UsageError(
            f"mu has {mu.m} components but params describe {params.m} colors"
        )
    seq = ParitySequence.parse(params, args.sequence)
    if len(seq) != mu.size:
        raise UsageError(f"sequence length {len(seq)} but |mu| = {mu.size}")
    weight = mu_weight_sequence(seq, mu)
    payload = {
        "mu": str(mu),
        "params": str(params),
        "sequence": list(seq.symbols),
        "weight": str(weight),
    }
    lines = [
        f"mu: {mu}",
        f"params: {params}",
        f"sequence: {seq}",
        f"weight: {weight}",
    ]
    if args.diagnostic:
        product = local_factor_product(seq, mu)
        rows = updown_report(seq, mu)
        payload["diagnostic"] = {"product": str(product), "rows": rows}
        lines.append(f"local-factor product (no up-down gate): {product}")
        bad = []
        for row in rows:
            if row["peak"] is None:
                verdict = "NOT up-down"
                bad.append(row)
            else:
                verdict = f"up-down, peak at position {row['peak']}"
            lines.append(
                f"  row {row['entries']} (component {row['component']}): "
                f"symbols {row['symbols']}: {verdict}"
            )
        if bad:
            rows_txt = "; ".join(str(row["symbols"]) for row in bad)
            lines.append(
                f"weight is 0 because {len(bad)} row(s) fail the up-down "
                f"condition: {rows_txt}"
            )
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_qmu(args) -> int:
    params = _params_for(args)
    mu = Multipartition.parse(args.mu)
    if mu.m != params.m:
        raise UsageError(
            f"mu has {mu.m} components but params describe {params.m} colors"
        )
    poly = q_mu(mu, params)
    payload = {"mu": str(mu), "params": str(params), "qmu": str(poly)}
    _emit(args, payload, str(poly))
    return 0


def cmd_chartable(args) -> int:
    m, n = args.m, args.n
    if m < 1 or n < 0:
        raise UsageError("need m >= 1 and n >= 0")
    params = _params_for(args, m=m, n=n)
    _guard_shapes(n, m, args.force)
    if args.provenance == "rsk":
        _guard_sequences(params, n, args.force)
    table = build_table(
        m,
        n,
        params,
        strategy=args.strategy,
        provenance=args.provenance,
        cache_dir=args.cache_dir,
    )
    if args.specialize:
        spec = specialize_table(table)
        payload = spec.to_json_dict()
        payload["specialized"] = True
        text = spec.to_text()
    else:
        payload = table.to_json_dict()
        text = table.to_text()
    _emit(args, payload, text)
    return 0


def cmd_verify(args) -> int:
    m, n = args.m, args.n
    if m < 1 or n < 0:
        raise UsageError("need m >= 1 and n >= 0")
    params = _params_for(args, m=m, n=n)
    _guard_sequences(params, n, args.force)
    _guard_shapes(n, m, args.force)
    if args.seed is not None:
        random.seed(args.seed)
    wanted = (
        ["bijection", "transport", "frobenius"]
        if args.suite == "all"
        else [args.suite]
    )
    suites = []
    for suite in wanted:
        try:
            if suite == "bijection":
                report = verify_bijection(n, params, args.strategy)
                ok, detail = report.passed, report.summary()
            elif suite == "transport":
                report = verify_bijection(
                    n, params, args.strategy, check_transport=True
                )
                ok, detail = report.passed, report.summary()
            else:
                report = verify_frobenius(m, n, params, args.strategy)
                ok, detail = report.passed, report.summary()
        except CertificationError as exc:
            ok, detail = False, str(exc)
        suites.append({"suite": suite, "passed": ok, "detail": detail})
    passed = all(s["passed"] for s in suites)
    payload = {
        "m": m,
        "n": n,
        "params": str(params),
        "strategy": args.strategy,
        "suites": suites,
        "passed": passed,
    }
    lines = []
    for s in suites:
        lines.append(f"[{'PASS' if s['passed'] else 'FAIL'}] {s['suite']}")
        if not s["passed"]:
            lines.append(s["detail"])
    lines.append("PASS" if passed else "FAIL")
    _emit(args, payload, "\n".join(lines))
    return 0 if passed else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="superhecke",
        description="exact Hecke-algebra characters via superinsertion "
        "and Schur expansion",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument(
            "--force", action="store_true", help="override the size guards"
        )

    p = sub.add_parser("enum", help="list multipartitions or tableaux")
    p.add_argument("--multipartitions", type=int, metavar="N")
    p.add_argument("--m", type=int)
    p.add_argument("--std", metavar="SHAPE", help="standard tableaux of SHAPE")
    p.add_argument(
        "--sstd", metavar="SHAPE", help="semistandard hook fillings of SHAPE"
    )
    p.add_argument("--params", help='alphabet "k1|l1,k2|l2,..."')
    common(p)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("rsk", help="run the insertion on a sequence")
    p.add_argument("--params", help='alphabet "k1|l1,k2|l2,..."')
    p.add_argument("--m", type=int, help="cross-check component count")
    p.add_argument("--strategy", choices=STRATEGIES, default="corrected")
    p.add_argument("--sequence", required=True, help="comma-separated symbols")
    p.add_argument("--trace", action="store_true", help="print every step")
    common(p)
    p.set_defaults(func=cmd_rsk)

    p = sub.add_parser("weight", help="mu-weight of a sequence")
    p.add_argument("--mu", required=True, help='shape "(2,1);(3)"')
    p.add_argument("--params", help='alphabet "k1|l1,k2|l2,..."')
    p.add_argument("--sequence", required=True)
    p.add_argument(
        "--diagnostic",
        action="store_true",
        help="also print the ungated local-factor product and row report",
    )
    common(p)
    p.set_defaults(func=cmd_weight)

    p = sub.add_parser("qmu", help="deformed power sum of a shape")
    p.add_argument("--mu", required=True)
    p.add_argument("--params")
    common(p)
    p.set_defaults(func=cmd_qmu)

    p = sub.add_parser("chartable", help="character table")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--params", help="defaults to k_i = l_i = n")
    p.add_argument("--strategy", choices=STRATEGIES, default="corrected")
    p.add_argument("--provenance", choices=("rsk", "oracle"), default="rsk")
    p.add_argument("--specialize", action="store_true", help="q=1, Q_a=s^a")
    p.add_argument("--cache-dir", help="persist/reuse the table here")
    common(p)
    p.set_defaults(func=cmd_chartable)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--params", help="defaults to k_i = l_i = n")
    p.add_argument("--strategy", choices=STRATEGIES, default="corrected")
    p.add_argument(
        "--suite",
        choices=("frobenius", "bijection", "transport", "all"),
        default="all",
    )
    p.add_argument("--seed", type=int, help="seed for randomized suites")
    common(p)
    p.set_defaults(func=cmd_verify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GuardRefusal as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CertificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
