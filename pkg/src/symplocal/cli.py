"""Command-line surface: reproducible verification jobs with
machine-readable reports.

Subcommands: weyl, alcoves, ideal, hilbert, tableaux, chart, verify.
Exit codes: 0 success / all checks pass, 1 verification failure,
2 usage error.  Output is deterministic for a fixed configuration
(timings are zeroed unless --timings is given).
"""

from __future__ import annotations

import argparse
import json
import sys

from symplocal import alcove as alc
from symplocal import checks as chk
from symplocal import localmodel as lm
from symplocal import tableau as tab
from symplocal import weylc

USAGE_ERROR = 2


def parse_element(text: str, r: int) -> weylc.WeylElement:
    """Element grammar: '*'-joined factors, each 't:v1,...,v2r' (translation),
    's:i1,i2,...' (word in simple reflections), 'tau' or 'tau:k'."""
    out = weylc.identity(r)
    for factor in text.split("*"):
        factor = factor.strip()
        if factor.startswith("t:"):
            vec = tuple(int(x) for x in factor[2:].split(","))
            out = weylc.compose(out, weylc.translation(vec))
        elif factor.startswith("s:"):
            for i in factor[2:].split(","):
                out = weylc.compose(out, weylc.simple_reflection(int(i), r))
        elif factor == "tau":
            out = weylc.compose(out, weylc.tau(r))
        elif factor.startswith("tau:"):
            out = weylc.compose(out, weylc.tau_power(r, int(factor[4:])))
        else:
            raise ValueError(f"cannot parse element factor {factor!r}")
    return out


def _emit(args, payload_json: dict, payload_text: str) -> None:
    out = json.dumps(payload_json, indent=2) if args.format == "json" \
        else payload_text
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _chart_spec(args) -> lm.LocalModelSpec:
    if args.ring_R is not None:
        return lm.LocalModelSpec(max(args.ring_R, 1), "ring", args.ring_R,
                                 "variable", args.prime)
    if args.grass:
        return lm.LocalModelSpec(args.rank, "grass", 0, "variable", args.prime)
    if args.chart is None:
        raise ValueError("choose one of --ring-R, --chart, --grass")
    return lm.LocalModelSpec(args.rank, "pair", args.chart, args.fibre,
                             args.prime)


def cmd_weyl(args) -> int:
    r = args.rank
    if args.length_of:
        w = parse_element(args.length_of, r)
        _emit(args, {"element": w.to_json(), "length": weylc.length(w)},
              str(weylc.length(w)))
    elif args.reduced_word_of:
        w = parse_element(args.reduced_word_of, r)
        word, rem = weylc.reduced_word(w)
        _emit(args, {"word": list(word), "remainder": rem.to_json()},
              f"word: {list(word)}  remainder: {rem.to_json()}")
    elif args.bruhat_leq:
        u = parse_element(args.bruhat_leq[0], r)
        w = parse_element(args.bruhat_leq[1], r)
        res = weylc.bruhat_leq(u, w)
        _emit(args, {"leq": res}, str(res).lower())
    else:
        raise ValueError("weyl needs one of --length-of, "
                         "--reduced-word-of, --bruhat-leq")
    return 0


def cmd_alcoves(args) -> int:
    r = args.rank
    if args.compare:
        ok, witness = chk.check_adm_perm(r)
        _emit(args, {"r": r, "equal": ok, **witness},
              f"Adm=Perm r={r}: {'pass' if ok else 'FAIL'} {witness}")
        return 0 if ok else 1
    which = args.list or "permissible"
    if which == "admissible":
        elems = sorted(alc.enumerate_admissible(r),
                       key=lambda w: (w.perm, w.trans))
        _emit(args, {"r": r, "count": len(elems),
                     "elements": [w.to_json() for w in elems]},
              "\n".join(str(w.to_json()) for w in elems))
        return 0
    alcs = alc.enumerate_permissible(r) if which == "permissible" \
        else alc.extreme_alcoves(r)
    ordered = sorted(alcs, key=lambda a: a.levels)
    _emit(args, {"r": r, "count": len(ordered),
                 "alcoves": [a.to_json() for a in ordered]},
          "\n".join(str(a.to_json()) for a in ordered))
    return 0


def cmd_ideal(args) -> int:
    pres = lm.chart_ideal(_chart_spec(args))
    text = "\n".join(
        f"{pres.ring.format_poly(g)}    # {note}"
        for g, note in zip(pres.generators, pres.provenance))
    _emit(args, pres.to_json(), text)
    return 0


def cmd_hilbert(args) -> int:
    spec = _chart_spec(args)
    rep = lm.fibre_report(spec, max_degree=args.max_degree)
    _emit(args, rep.to_json(),
          "\n".join([f"dim(special fibre) = {rep.dim_special}",
                     f"dim(generic fibre) = {rep.dim_generic}",
                     "hilbert " + " ".join(
                         f"{d}:{v}" for d, v in enumerate(rep.hilbert_special))]))
    return 0


def cmd_tableaux(args) -> int:
    r = args.rank
    if args.list_minors is not None:
        minors = sorted(tab.enumerate_doubly_admissible(r, args.list_minors),
                        key=lambda m: (m.row_i, m.row_j, m.col_i, m.col_j))
        _emit(args, {"r": r, "k": args.list_minors, "count": len(minors),
                     "minors": [str(m) for m in minors]},
              "\n".join(str(m) for m in minors))
        return 0
    if args.list_tableaux is not None:
        chains = sorted(str(t) for t in
                        tab.enumerate_tableaux(r, args.list_tableaux))
        _emit(args, {"r": r, "d": args.list_tableaux, "count": len(chains),
                     "tableaux": chains},
              "\n".join(chains))
        return 0
    counts = [tab.count_tableaux(r, d) for d in range(args.max_degree + 1)]
    _emit(args, {"r": r, "counts": counts},
          " ".join(f"{d}:{c}" for d, c in enumerate(counts)))
    return 0


def cmd_chart(args) -> int:
    r = args.rank
    reports = [lm.extreme_chart(r, x) for x in
               sorted(alc.extreme_alcoves(r), key=lambda a: a.levels)]
    ok = all(rep.pairing_ok and rep.index_identities_ok and rep.recurrence_ok
             and rep.free_orbit_count == r * (r + 1) // 2 for rep in reports)
    _emit(args, {"r": r, "all_ok": ok,
                 "reports": [rep.to_json() for rep in reports]},
          "\n".join(
              f"I={list(rep.zero_rows)} J={list(rep.one_rows)} "
              f"free_orbits={rep.free_orbit_count} pairing={rep.pairing_ok} "
              f"recurrence={rep.recurrence_ok}" for rep in reports))
    return 0 if ok else 1


def cmd_verify(args) -> int:
    primes = (args.prime, args.second_prime)
    checks = chk.acceptance_checks(
        max_rank=args.rank, max_degree=args.max_degree, primes=primes,
        trials=args.trials, seed=args.seed)
    records = chk.run_checks(checks, jobs=args.jobs, timings=args.timings,
                             corrupt=args.corrupt)
    report = chk.VerificationReport(
        command="verify",
        config={"rank": args.rank, "max_degree": args.max_degree,
                "primes": list(primes), "trials": args.trials,
                "seed": args.seed, "jobs": args.jobs},
        checks=records)
    text_lines = [f"[{rec.status.upper():4}] {rec.name}" for rec in records]
    text_lines.append(f"verdict: {report.verdict}")
    _emit(args, report.to_json(), "\n".join(text_lines))
    return 0 if report.verdict == "pass" else 1


def _add_common(sub, rank_default: int = 2):
    sub.add_argument("--rank", type=int, default=rank_default)
    sub.add_argument("--prime", type=int, default=lm.DEFAULT_PRIME)
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--output", default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symplocal",
        description="exact verification jobs for symplectic local models")
    parser.add_argument("--config", default=None,
                        help="key=value file supplying flag defaults")
    sub = parser.add_subparsers(dest="command", required=True)

    weyl = sub.add_parser("weyl", help="length / reduced word / Bruhat queries")
    _add_common(weyl)
    weyl.add_argument("--length-of")
    weyl.add_argument("--reduced-word-of")
    weyl.add_argument("--bruhat-leq", nargs=2, metavar=("U", "W"))
    weyl.set_defaults(fn=cmd_weyl)

    alcs = sub.add_parser("alcoves", help="enumerate or compare alcove sets")
    _add_common(alcs)
    alcs.add_argument("--list", choices=("admissible", "permissible", "extreme"))
    alcs.add_argument("--compare", action="store_true")
    alcs.set_defaults(fn=cmd_alcoves)

    def add_chart_flags(p):
        p.add_argument("--ring-R", type=int, default=None, metavar="M")
        p.add_argument("--chart", type=int, default=None, metavar="I")
        p.add_argument("--grass", action="store_true")
        p.add_argument("--fibre", choices=("variable", "special", "generic"),
                       default="variable")

    ideal = sub.add_parser("ideal", help="emit a chart ideal presentation")
    _add_common(ideal)
    add_chart_flags(ideal)
    ideal.set_defaults(fn=cmd_ideal)

    hilb = sub.add_parser("hilbert", help="fibre dimensions and staircase values")
    _add_common(hilb)
    add_chart_flags(hilb)
    hilb.add_argument("--max-degree", type=int, default=3)
    hilb.set_defaults(fn=cmd_hilbert)

    tabx = sub.add_parser("tableaux", help="enumerate or count tableaux")
    _add_common(tabx)
    tabx.add_argument("--max-degree", type=int, default=3)
    tabx.add_argument("--list-minors", type=int, default=None, metavar="K")
    tabx.add_argument("--list-tableaux", type=int, default=None, metavar="D")
    tabx.set_defaults(fn=cmd_tableaux)

    chart = sub.add_parser("chart", help="extreme-chart reports")
    _add_common(chart)
    chart.set_defaults(fn=cmd_chart)

    verify = sub.add_parser("verify", help="run the acceptance suite")
    _add_common(verify)
    verify.add_argument("--max-degree", type=int, default=None)
    verify.add_argument("--second-prime", type=int, default=lm.SECOND_PRIME)
    verify.add_argument("--trials", type=int, default=100)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument("--timings", action="store_true")
    verify.add_argument("--corrupt", default=None, help=argparse.SUPPRESS)
    verify.set_defaults(fn=cmd_verify)
    return parser


def _apply_config(args: argparse.Namespace, argv: list) -> None:
    """key=value config file values fill in flags not given on the line."""
    if not args.config:
        return
    given = {a.split("=")[0].lstrip("-").replace("-", "_")
             for a in argv if a.startswith("--")}
    with open(args.config) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            key = key.strip().replace("-", "_")
            if key in given or not hasattr(args, key):
                continue
            value = value.strip()
            if isinstance(getattr(args, key), bool):
                setattr(args, key, value.lower() in ("1", "true", "yes"))
            elif value.lstrip("-").isdigit():
                setattr(args, key, int(value))
            else:
                setattr(args, key, value)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args, argv)
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
