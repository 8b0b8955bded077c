"""Command-line interface.

Every verb prints a line-oriented text report whose header comments record
the full resolved configuration; ``--format json`` emits the same data as
one JSON object.  All numbers are exact (digit strings, integers and
``a/b`` rationals) except where an explicit ``--decimal`` rendering or the
display-only reference curve is requested.  Exit codes: 0 success or pass,
1 verification failure, 2 usage or input error, 3 capacity exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import IO, Sequence

from .duality import figure_of_merit
from .errors import CapacityError, PrecisionError
from .fields import field as get_field
from .lnseq import is_nut, ln_generator_matrices, nut_equivalence, parse_ln_spec, rank_condition
from .nets import NetSpec, generate_net_points, net_generator_matrices
from .points import parse_points, write_points
from .poly import Poly, SeriesPrefix
from .search import (
    SearchConfig,
    delta_bound,
    exhaustive_search,
    greedy_extend,
    random_search,
    rho_threshold,
)
from .sequences import (
    SeqSpec,
    generate_sequence_points,
    parse_seq_spec,
    quality_function_T,
    seq_generator_prefix,
)
from .verify import (
    check_T_sequence,
    check_tms_net,
    star_discrepancy_exact,
    star_discrepancy_lower_bound,
    strict_t,
)


def _resolved_seed(args: argparse.Namespace) -> int | None:
    env = os.environ.get("HYPERSEQ_SEED")
    if env is not None:
        return int(env)
    return getattr(args, "seed", None)


def _open_out(args: argparse.Namespace) -> IO[str]:
    path = getattr(args, "out", None)
    if path in (None, "-"):
        return sys.stdout
    return open(path, "w", encoding="utf-8")


def _close_out(stream: IO[str]) -> None:
    if stream is not sys.stdout:
        stream.close()


def _open_points(path: str):
    if path == "-":
        return parse_points(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return parse_points(fh)


def _header(verb: str, pairs: Sequence[tuple[str, object]]) -> str:
    toks = " ".join(f"{key}={val}" for key, val in pairs)
    return f"# hyperseq {verb} {toks}".rstrip()


def _emit(
    args: argparse.Namespace,
    verb: str,
    config: Sequence[tuple[str, object]],
    lines: Sequence[str],
    payload: dict,
) -> None:
    out = _open_out(args)
    try:
        if getattr(args, "format", "text") == "json":
            doc = {"command": verb, "config": {k: str(v) for k, v in config}}
            doc.update(payload)
            out.write(json.dumps(doc, indent=2) + "\n")
        else:
            out.write(_header(verb, config) + "\n")
            for line in lines:
                out.write(line + "\n")
    finally:
        _close_out(out)


def _net_from_args(args: argparse.Namespace) -> NetSpec:
    F = get_field(args.q)
    alphas = tuple(Poly.parse(F, a) for a in args.alpha or ())
    if len(alphas) != args.s:
        raise ValueError(f"expected {args.s} --alpha values, got {len(alphas)}")
    if args.f is not None:
        f = Poly.parse(F, args.f)
        if f.deg != args.m:
            raise ValueError(f"--f must have degree m = {args.m}")
    else:
        f = Poly.x_pow(F, args.m)
    return NetSpec(F, args.s, args.m, f, tuple(a.mod(f) for a in alphas))


def _seq_from_args(args: argparse.Namespace) -> SeqSpec:
    if args.spec is not None:
        if args.spec == "-":
            return parse_seq_spec(sys.stdin)
        with open(args.spec, "r", encoding="utf-8") as fh:
            return parse_seq_spec(fh)
    if args.q is None or args.s is None or args.M is None or not args.alpha:
        raise ValueError("provide --spec FILE or all of --q --s --M --alpha")
    F = get_field(args.q)
    alphas = tuple(
        SeriesPrefix.parse(F, a, precision=args.M) for a in args.alpha
    )
    if len(alphas) != args.s:
        raise ValueError(f"expected {args.s} --alpha values, got {len(alphas)}")
    return SeqSpec(F, args.s, alphas)


def _net_config(spec: NetSpec, extra: Sequence[tuple[str, object]] = ()) -> list:
    pairs = [
        ("q", spec.field.q),
        ("s", spec.s),
        ("m", spec.m),
        ("f", spec.f.digits_str()),
        ("alpha", "|".join(a.digits_str() for a in spec.alphas)),
        ("bases", "canonical"),
    ]
    pairs.extend(extra)
    return pairs


def _seq_config(spec: SeqSpec, extra: Sequence[tuple[str, object]] = ()) -> list:
    chains = "canonical"
    if spec.chains is not None and any(not c.is_canonical for c in spec.chains):
        chains = "custom"
    pairs = [
        ("q", spec.field.q),
        ("s", spec.s),
        ("M", spec.precision),
        ("alpha", "|".join(a.digits_str() for a in spec.alphas)),
        ("chains", chains),
    ]
    pairs.extend(extra)
    return pairs


# -- verb handlers ---------------------------------------------------------------


def _cmd_merit(args: argparse.Namespace) -> int:
    spec = _net_from_args(args)
    report = figure_of_merit(spec.alphas, spec.f)
    lines = [f"rho={report.rho} t={report.t} witness={report.witness_str()}"]
    payload = {
        "rho": report.rho,
        "t": report.t,
        "witness": [p.digits_str() for p in report.witness],
    }
    _emit(args, "merit", _net_config(spec), lines, payload)
    return 0


def _cmd_matrices(args: argparse.Namespace) -> int:
    if args.spec is not None or args.M is not None:
        spec = _seq_from_args(args)
        m = args.m if args.m is not None else spec.precision
        gens = seq_generator_prefix(spec, m)
        config = _seq_config(spec, [("m", m)])
    else:
        net = _net_from_args(args)
        gens = net_generator_matrices(net)
        config = _net_config(net)
    lines = []
    for i, mat in enumerate(gens.matrices, start=1):
        lines.append(f"MATRIX {i}")
        lines.extend(" ".join(str(x) for x in row) for row in mat)
    payload = {"matrices": [[list(row) for row in mat] for mat in gens.matrices]}
    _emit(args, "matrices", config, lines, payload)
    return 0


def _cmd_gen_net(args: argparse.Namespace) -> int:
    spec = _net_from_args(args)
    points = generate_net_points(net_generator_matrices(spec))
    config = _net_config(spec, [("render", args.render)])
    out = _open_out(args)
    try:
        if args.format == "json":
            doc = {
                "command": "gen-net",
                "config": {k: str(v) for k, v in config},
                "points": [
                    ["".join(str(d) for d in coord) for coord in pt]
                    for pt in points.points
                ],
            }
            out.write(json.dumps(doc, indent=2) + "\n")
        else:
            out.write(_header("gen-net", config) + "\n")
            write_points(points, out, render=args.render, decimals=args.decimal)
    finally:
        _close_out(out)
    if args.plot:
        from . import plotting

        plotting.save_scatter(points, args.plot)
    return 0


def _cmd_gen_seq(args: argparse.Namespace) -> int:
    spec = _seq_from_args(args)
    q = spec.field.q
    digits = args.digits if args.digits is not None else spec.precision
    k_from = args.start
    k_to = k_from + args.count - 1
    points = generate_sequence_points(spec, k_from, k_to, render_precision=digits)
    config = _seq_config(
        spec,
        [("from", k_from), ("count", args.count), ("digits", digits), ("render", args.render)],
    )
    out = _open_out(args)
    try:
        if args.format == "json":
            doc = {
                "command": "gen-seq",
                "config": {k: str(v) for k, v in config},
                "points": [
                    ["".join(str(d) for d in coord) for coord in pt]
                    for pt in points.points
                ],
            }
            out.write(json.dumps(doc, indent=2) + "\n")
        else:
            out.write(_header("gen-seq", config) + "\n")
            write_points(points, out, render=args.render, decimals=args.decimal)
    finally:
        _close_out(out)
    if args.plot:
        from . import plotting

        plotting.save_scatter(points, args.plot)
    return 0


def _cmd_check_net(args: argparse.Namespace) -> int:
    points = _open_points(args.points)
    m = args.m if args.m is not None else points.precision
    if m < points.precision:
        points = points.truncate(m)
    report = check_tms_net(points, m, args.t)
    config = [("q", points.q), ("s", points.s), ("m", m), ("t", args.t)]
    payload = {
        "passed": report.passed,
        "t_tested": report.t_tested,
        "failing_shape": list(report.failing_shape) if report.failing_shape else None,
        "failing_box": list(report.failing_box) if report.failing_box else None,
        "observed": report.observed,
    }
    _emit(args, "check-net", config, report.lines(), payload)
    return 0 if report.passed else 1


def _cmd_strict_t(args: argparse.Namespace) -> int:
    points = _open_points(args.points)
    q = points.q
    m = args.m if args.m is not None else points.precision
    if m < points.precision:
        points = points.truncate(m)
    if len(points) != q**m:
        raise ValueError(f"expected q^m = {q ** m} points, got {len(points)}")
    value = strict_t(points, m)
    config = [("q", q), ("s", points.s), ("m", m)]
    _emit(args, "strict-t", config, [f"STRICT_T {value}"], {"strict_t": value})
    return 0


def _cmd_check_seq(args: argparse.Namespace) -> int:
    spec = _seq_from_args(args)
    if args.profile is not None:
        profile = tuple(int(tok) for tok in args.profile.split(","))
        if len(profile) < args.m_max:
            raise ValueError("--profile must list at least m-max values")
    else:
        profile = quality_function_T(spec, args.m_max).values
    report = check_T_sequence(spec, profile, args.m_max, args.k_max)
    config = _seq_config(spec, [("m_max", args.m_max), ("k_max", args.k_max)])
    lines = [
        f"T m={m} value={profile[m - 1]}" for m in range(1, args.m_max + 1)
    ]
    lines.append(f"RESULT {'pass' if report.passed else 'fail'}")
    payload = {
        "profile": list(profile[: args.m_max]),
        "passed": report.passed,
    }
    if report.failure is not None:
        net = report.failure.report
        lines.append(f"FAIL_M {report.failure.m}")
        lines.append(f"FAIL_K {report.failure.k}")
        lines.append(f"T_TESTED {net.t_tested}")
        if net.failing_shape is not None:
            lines.append("FAIL_SHAPE " + ",".join(map(str, net.failing_shape)))
        if net.failing_box is not None:
            lines.append("FAIL_BOX " + ",".join(map(str, net.failing_box)))
        if net.observed is not None:
            lines.append(f"OBSERVED {net.observed}")
        payload["failure"] = {
            "m": report.failure.m,
            "k": report.failure.k,
            "t_tested": net.t_tested,
            "failing_shape": list(net.failing_shape or ()),
            "failing_box": list(net.failing_box or ()),
            "observed": net.observed,
        }
    _emit(args, "check-seq", config, lines, payload)
    return 0 if report.passed else 1


def _cmd_discrepancy(args: argparse.Namespace) -> int:
    points = _open_points(args.points)
    config = [("q", points.q), ("s", points.s), ("m", points.precision),
              ("n", len(points))]
    if args.lower_bound_grid is not None:
        value = star_discrepancy_lower_bound(points, args.lower_bound_grid)
        config.append(("grid", args.lower_bound_grid))
        lines = [f"DSTAR_LOWER_BOUND {value.numerator}/{value.denominator}"]
        payload = {"dstar_lower_bound": str(value)}
        if args.decimal is not None:
            lines.append(f"DSTAR_DECIMAL {_decimal_str(value, args.decimal)}")
    else:
        report = star_discrepancy_exact(points)
        lines = report.lines()
        payload = {
            "dstar": str(report.value),
            "corner": [str(c) for c in report.corner],
        }
        if args.decimal is not None:
            lines.append(f"DSTAR_DECIMAL {_decimal_str(report.value, args.decimal)}")
    _emit(args, "discrepancy", config, lines, payload)
    return 0


def _decimal_str(value: Fraction, places: int) -> str:
    scaled = value * 10**places
    whole = scaled.numerator // scaled.denominator
    if places == 0:
        return str(whole)
    return f"{whole // 10 ** places}.{whole % 10 ** places:0{places}d}"


def _cmd_delta(args: argparse.Namespace) -> int:
    value = delta_bound(args.q, args.s, args.rho)
    config = [("q", args.q), ("s", args.s), ("rho", args.rho)]
    _emit(args, "delta", config, [str(value)], {"delta": value})
    return 0


def _cmd_threshold(args: argparse.Namespace) -> int:
    beta = Fraction(args.beta)
    value = rho_threshold(args.q, args.s, args.m, beta)
    config = [("q", args.q), ("s", args.s), ("m", args.m), ("beta", beta)]
    _emit(args, "threshold", config, [str(value)], {"rho_threshold": value})
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    seed = _resolved_seed(args)
    cfg = SearchConfig(
        field=get_field(args.q),
        s=args.s,
        m=args.m,
        beta=Fraction(args.beta),
        rho_star=args.rho_star,
        mode=args.mode,
        sample_size=args.n,
        seed=seed,
    )
    if args.mode == "random":
        report = random_search(cfg)
    else:
        report = exhaustive_search(cfg, jobs=args.jobs)
    config = [
        ("q", args.q), ("s", args.s), ("m", args.m), ("beta", cfg.beta),
        ("mode", args.mode), ("n", args.n), ("seed", seed), ("jobs", args.jobs),
    ]
    lines = [
        f"rho={rho} count={report.histogram[rho]}"
        for rho in sorted(report.histogram)
    ]
    best = "|".join(a.digits_str() for a in report.best_alpha)
    lines.append(
        f"BEST alpha={best} rho={report.best_merit.rho} t={report.best_merit.t}"
    )
    payload = {
        "total": report.total,
        "histogram": {str(k): v for k, v in sorted(report.histogram.items())},
        "best_alpha": [a.digits_str() for a in report.best_alpha],
        "best_rho": report.best_merit.rho,
        "best_t": report.best_merit.t,
    }
    if report.rho_star is not None:
        met = "met" if report.hypothesis_met else "not-met"
        lines.append(f"DELTA rho_star={report.rho_star} value={report.delta_value}")
        lines.append(f"BOUND {report.hypothesis_bound}")
        lines.append(f"HYPOTHESIS {met}")
        payload.update(
            rho_star=report.rho_star,
            delta=report.delta_value,
            bound=str(report.hypothesis_bound),
            hypothesis_met=report.hypothesis_met,
        )
        if report.count_at_threshold is not None:
            satisfied = (
                "yes" if report.claim_holds
                else "no" if report.claim_holds is not None
                else "n/a"
            )
            lines.append(
                f"COUNT threshold_rho={report.config.s + report.rho_star} "
                f"observed={report.count_at_threshold} "
                f"required={report.required_count} satisfied={satisfied}"
            )
            payload.update(
                threshold_rho=report.config.s + report.rho_star,
                count_observed=report.count_at_threshold,
                count_required=str(report.required_count),
                claim_holds=report.claim_holds,
            )
    _emit(args, "search", config, lines, payload)
    if args.plot:
        from . import plotting

        plotting.save_histogram(report.histogram, args.plot)
    return 0


def _cmd_extend(args: argparse.Namespace) -> int:
    report = greedy_extend(get_field(args.q), args.s, args.m_max)
    spec = report.spec
    config = [("q", args.q), ("s", args.s), ("m_max", args.m_max)]
    lines = []
    for m in range(1, args.m_max + 1):
        target = report.target[m - 1]
        target_str = "-" if target is None else f"{target:.3f}"
        lines.append(f"# T m={m} value={report.profile.T(m)} target~{target_str}")
    lines.append(f"q={spec.field.q}")
    lines.append(f"s={spec.s}")
    lines.append(f"M={spec.precision}")
    for i, a in enumerate(spec.alphas, start=1):
        lines.append(f"alpha_{i}={a.digits_str()}")
    payload = {
        "alphas": [a.digits_str() for a in spec.alphas],
        "profile": list(report.profile.values),
        "target": [None if t is None else round(t, 6) for t in report.target],
    }
    _emit(args, "extend", config, lines, payload)
    if args.plot:
        from . import plotting

        plotting.save_profile(report.profile.values, report.target, args.plot)
    return 0


def _cmd_ln_compare(args: argparse.Namespace) -> int:
    with open(args.ln_spec, "r", encoding="utf-8") as fh:
        ln = parse_ln_spec(fh)
    with open(args.seq_spec, "r", encoding="utf-8") as fh:
        seq = parse_seq_spec(fh)
    if ln.field.q != seq.field.q or ln.s != seq.s:
        raise ValueError("the two descriptions must share q and s")
    m_max = args.m_max
    size = args.size
    if size is None:
        size = min(seq.precision, (ln.precision + 1) // 2)
    seq_gens_full = seq_generator_prefix(seq, min(seq.precision, m_max + 1))
    witnesses = rank_condition(seq_gens_full, m_max)
    seq_gens = seq_generator_prefix(seq, size)
    ln_gens = ln_generator_matrices(ln, size)
    equiv = nut_equivalence(seq_gens, ln_gens)
    nut_a = all(is_nut(seq.field, c) for c in seq_gens.matrices)
    nut_b = all(is_nut(ln.field, c) for c in ln_gens.matrices)
    unique = all(w.passed for w in witnesses)
    config = _seq_config(seq, [("m_max", m_max), ("size", size)])
    lines = []
    for w in witnesses:
        verdict = "pass" if w.passed else "fail"
        lines.append(
            f"RANK m={w.m} wide={w.rank_wide} square={w.rank_square} {verdict}"
        )
    lines.append(f"NUT_A {'yes' if nut_a else 'no'}")
    lines.append(f"NUT_B {'yes' if nut_b else 'no'}")
    lines.append(f"UNIQUE {'yes' if unique else 'no'}")
    if equiv is None:
        lines.append("EQUIV none")
    else:
        rows = ";".join(",".join(str(x) for x in row) for row in equiv)
        lines.append(f"EQUIV P={rows}")
    payload = {
        "ranks": [
            {"m": w.m, "wide": w.rank_wide, "square": w.rank_square, "passed": w.passed}
            for w in witnesses
        ],
        "nut_a": nut_a,
        "nut_b": nut_b,
        "unique": unique,
        "equivalent": equiv is not None,
        "P": None if equiv is None else [list(row) for row in equiv],
    }
    _emit(args, "ln-compare", config, lines, payload)
    return 0


# -- parser ----------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser, *, out: bool = True) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")
    if out:
        p.add_argument("--out", default=None, help="output file (default stdout)")


def _add_net_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--alpha", action="append",
                   help="comma digits, low degree first; repeat s times")
    p.add_argument("--f", default=None,
                   help="modulus as comma digits (default x^m)")


def _add_seq_source(p: argparse.ArgumentParser, *, with_m: bool = False) -> None:
    p.add_argument("--spec", default=None, help="sequence description file (- for stdin)")
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--M", type=int, default=None)
    p.add_argument("--alpha", action="append",
                   help="series prefix with exactly M comma digits; repeat s times")
    if with_m:
        p.add_argument("--m", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperseq",
        description="Digital nets and sequences over small finite fields: "
                    "construction, quality analysis and exact verification.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("merit", help="figure of merit of a generating vector")
    _add_net_flags(p)
    _add_common(p)
    p.set_defaults(func=_cmd_merit)

    p = sub.add_parser("matrices", help="print generating matrices")
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--M", type=int, default=None)
    p.add_argument("--alpha", action="append")
    p.add_argument("--f", default=None)
    p.add_argument("--spec", default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_matrices)

    p = sub.add_parser("gen-net", help="generate the q^m net points")
    _add_net_flags(p)
    p.add_argument("--render", choices=("digits", "rational", "decimal"),
                   default="digits")
    p.add_argument("--decimal", type=int, default=None,
                   help="decimal places for render=decimal (display only)")
    p.add_argument("--plot", default=None, help="save a scatter figure to this file")
    _add_common(p)
    p.set_defaults(func=_cmd_gen_net)

    p = sub.add_parser("gen-seq", help="generate a run of sequence points")
    _add_seq_source(p)
    p.add_argument("--start", type=int, default=0, help="first index k (default 0)")
    p.add_argument("--count", type=int, default=64)
    p.add_argument("--digits", type=int, default=None,
                   help="stored digits per coordinate (default M)")
    p.add_argument("--render", choices=("digits", "rational", "decimal"),
                   default="digits")
    p.add_argument("--decimal", type=int, default=None)
    p.add_argument("--plot", default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_gen_seq)

    p = sub.add_parser("check-net", help="verify the net property at level t")
    p.add_argument("--points", default="-", help="point file (- for stdin)")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--m", type=int, default=None,
                   help="truncate to m digits before checking")
    _add_common(p)
    p.set_defaults(func=_cmd_check_net)

    p = sub.add_parser("strict-t", help="smallest t at which the net property holds")
    p.add_argument("--points", default="-")
    p.add_argument("--m", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_strict_t)

    p = sub.add_parser("check-seq", help="verify a quality profile blockwise")
    _add_seq_source(p)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--k-max", type=int, default=0)
    p.add_argument("--profile", default=None,
                   help="comma-separated T values to test instead of the computed profile")
    _add_common(p)
    p.set_defaults(func=_cmd_check_seq)

    p = sub.add_parser("discrepancy", help="exact star discrepancy of a point file")
    p.add_argument("--points", default="-")
    p.add_argument("--lower-bound-grid", type=int, default=None,
                   help="evaluate on the uniform grid i/G instead (lower bound)")
    p.add_argument("--decimal", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_discrepancy)

    p = sub.add_parser("delta", help="counting bound Delta_q(s, rho)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--rho", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("threshold", help="guaranteed-merit floor for given beta")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--beta", required=True, help="rational, e.g. 1/2")
    _add_common(p)
    p.set_defaults(func=_cmd_threshold)

    p = sub.add_parser("search", help="merit distribution over admissible vectors")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--beta", default="1/2")
    p.add_argument("--rho-star", type=int, default=None)
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--n", type=int, default=0, help="sample size for random mode")
    p.add_argument("--seed", type=int, default=None,
                   help="RNG seed (HYPERSEQ_SEED overrides)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--plot", default=None, help="save a histogram figure")
    _add_common(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("extend", help="greedy digit-by-digit series construction")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--plot", default=None, help="save a profile figure")
    _add_common(p)
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("ln-compare", help="rank condition and NUT comparison")
    p.add_argument("--ln-spec", required=True)
    p.add_argument("--seq-spec", required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--size", type=int, default=None,
                   help="matrix size for the NUT comparison")
    _add_common(p)
    p.set_defaults(func=_cmd_ln_compare)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 3
    except (PrecisionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
