"""Command-line interface: ``hardcore <subcommand> [options]``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage or
input errors.  Rationals are read and written as ``p/q`` strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import verify as V
from .families import (FamilyError, build, closed_form_E_G1, closed_form_E_Z,
                       closed_form_P_bounds, parse_family)
from .graph import Graph, GraphError, emit_graph6, parse_graph6, read_graph6_file
from .model import (free_energy, occupancy_fraction, phi_statistics, profile_mixture,
                    size_distribution, variance_fraction)
from .poly import clique_profile, independence_profile
from .report import fmt, parse_rational, reports_to_csv, reports_to_json
from .sampler import ChainConfig, glauber_chains, glauber_run
from .symmetrization import convex_identity_check, symmetrize_to_multipartite


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_rational(text: str) -> Fraction:
    value = _rational(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"fugacity must be positive, got {text}")
    return value


def _float12(x: float) -> float:
    return float(f"{x:.12g}")


# -- input and output -------------------------------------------------------

def _add_input(p: argparse.ArgumentParser, lam: bool = True, lam_required: bool = True):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6", metavar="STR", help="inline graph6 string")
    src.add_argument("--file", metavar="PATH", help="newline-delimited graph6 file")
    src.add_argument("--family", metavar="SPEC", help="family spec such as Z:7,3")
    if lam:
        p.add_argument("--lambda", dest="lam", type=_positive_rational, required=lam_required,
                       metavar="P/Q", help="fugacity as a rational p/q")


def _add_format(p: argparse.ArgumentParser):
    fmt_group = p.add_mutually_exclusive_group()
    fmt_group.add_argument("--json", action="store_true", help="JSON output")
    fmt_group.add_argument("--csv", action="store_true", help="CSV output")


def _graphs(args) -> list[tuple[Graph, bool]]:
    """Selected graphs, each flagged with whether to tag records by graph6."""
    if args.graph6 is not None:
        return [(parse_graph6(args.graph6), False)]
    if args.family is not None:
        return [(build(parse_family(args.family)), False)]
    graphs = read_graph6_file(args.file)
    if not graphs:
        raise UsageError(f"--file {args.file}: no graphs")
    return [(g, True) for g in graphs]


def _single(args) -> Graph:
    graphs = _graphs(args)
    if len(graphs) != 1:
        raise UsageError("this subcommand takes exactly one graph")
    return graphs[0][0]


def _csv_cell(v):
    return json.dumps(v) if isinstance(v, (list, dict)) else v


def _emit(records: list[dict], args, scalar: str | None = None):
    """Write records; plain mode prints ``scalar`` values one per line if given."""
    out = sys.stdout
    if getattr(args, "csv", False):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(list(records[0]))
        for r in records:
            w.writerow([_csv_cell(v) for v in r.values()])
        out.write(buf.getvalue())
    elif scalar is not None and not getattr(args, "json", False):
        for r in records:
            value = r[scalar]
            line = json.dumps(value) if not isinstance(value, str) else value
            out.write(f"{r['graph6']} {line}\n" if "graph6" in r else f"{line}\n")
    else:
        payload = records[0] if len(records) == 1 else records
        out.write(json.dumps(payload) + "\n")


def _record(g: Graph, tagged: bool, **fields) -> dict:
    rec = {"graph6": emit_graph6(g)} if tagged else {}
    rec.update(fields)
    return rec


# -- subcommands ------------------------------------------------------------

def cmd_poly(args) -> int:
    counter = clique_profile if args.clique else independence_profile
    _emit([_record(g, t, profile=counter(g).to_json()) for g, t in _graphs(args)], args)
    return 0


def cmd_occupancy(args) -> int:
    recs = [_record(g, t, occupancy=fmt(occupancy_fraction(g, args.lam)))
            for g, t in _graphs(args)]
    _emit(recs, args, scalar="occupancy")
    return 0


def cmd_variance(args) -> int:
    recs = [_record(g, t, variance=fmt(variance_fraction(g, args.lam)))
            for g, t in _graphs(args)]
    _emit(recs, args, scalar="variance")
    return 0


def cmd_free_energy(args) -> int:
    recs = [_record(g, t, free_energy=_float12(free_energy(g, args.lam)))
            for g, t in _graphs(args)]
    _emit(recs, args, scalar="free_energy")
    return 0


def cmd_family(args) -> int:
    spec = parse_family(args.spec)
    g = build(spec)
    prof = independence_profile(g)
    rec = {"family": str(spec), "graph6": emit_graph6(g), "n": g.n,
           "alpha": prof.alpha, "profile": prof.to_json()}
    if args.lam is not None:
        lam = args.lam
        rec["occupancy"] = fmt(occupancy_fraction(g, lam))
        rec["variance"] = fmt(variance_fraction(g, lam))
        if spec.kind in ("Z", "G1"):
            n, alpha = spec.params
            closed = closed_form_E_Z if spec.kind == "Z" else closed_form_E_G1
            rec["closed_form_E"] = fmt(closed(n, alpha, lam))
            upper, lower = closed_form_P_bounds(n, alpha, lam)
            rec["closed_form_P"] = fmt(upper if spec.kind == "Z" else lower)
    _emit([rec], args)
    return 0


def cmd_symmetrize(args) -> int:
    h = _single(args)
    if args.pair is not None:
        try:
            u, v = (int(x) for x in args.pair.split(","))
        except ValueError:
            raise UsageError(f"--pair expects u,v, got {args.pair!r}") from None
        step = convex_identity_check(h, u, v, args.lam)
        rec = {"graph6": emit_graph6(h), "pair": [u, v], "lambda": fmt(args.lam),
               "beta_H": fmt(step.beta_before), "beta_H1": fmt(step.beta_h1),
               "beta_H2": fmt(step.beta_h2), "weights": fmt(list(step.weights)),
               "chosen": step.chosen, "after": emit_graph6(step.after)}
        _emit([rec], args)
        return 0
    sys.stdout.write(symmetrize_to_multipartite(h, args.lam).to_json() + "\n")
    return 0


def cmd_mixture(args) -> int:
    recs = []
    for g, t in _graphs(args):
        mix = profile_mixture(independence_profile(g), args.lam)
        law = size_distribution(g, args.lam).probs
        law = tuple(law) + (Fraction(0),) * (g.n + 1 - len(law))
        recs.append(_record(g, t, q=fmt(list(mix.q)), c=fmt(list(mix.c)),
                            omega=fmt(list(mix.w)), size_law=fmt(list(law)),
                            reconstruction_exact=mix.reconstruct() == law))
    _emit(recs, args)
    return 0


def cmd_phi(args) -> int:
    recs = []
    for g, t in _graphs(args):
        st = phi_statistics(g, args.lam)
        recs.append(_record(g, t, mean_phi=fmt(st.mean_phi), mean_x_phi=fmt(st.mean_x_phi),
                            cov_x_phi=fmt(st.cov_x_phi),
                            extension_ratio=fmt(list(st.extension_ratio)),
                            mean_x=fmt(st.mean_x), var_x=fmt(st.var_x)))
    _emit(recs, args)
    return 0


def cmd_sample(args) -> int:
    g = _single(args)
    cfg = ChainConfig(args.lam, samples=args.samples, burn_in=args.burn_in,
                      thinning=args.thinning, seed=args.seed, batches=args.batches)
    if args.chains > 1:
        runs = glauber_chains(g, cfg, args.chains)
        mean = sum(r.mean for r in runs) / len(runs)
        var = sum(r.var for r in runs) / len(runs)
        se_mean = (sum(r.se_mean ** 2 for r in runs) ** 0.5) / len(runs)
        se_var = (sum(r.se_var ** 2 for r in runs) ** 0.5) / len(runs)
        n_samples = sum(r.n_samples for r in runs)
    else:
        r = glauber_run(g, cfg)
        mean, var, se_mean, se_var, n_samples = r.mean, r.var, r.se_mean, r.se_var, r.n_samples
    dist = size_distribution(g, args.lam)
    rec = {"graph6": emit_graph6(g), "lambda": fmt(args.lam), "seed": args.seed,
           "chains": args.chains, "n_samples": n_samples,
           "est_mean": _float12(mean), "se_mean": _float12(se_mean),
           "est_var": _float12(var), "se_var": _float12(se_var),
           "exact_mean": fmt(dist.mean()), "exact_var": fmt(dist.variance())}
    _emit([rec], args)
    return 0


def cmd_verify(args) -> int:
    cfg = V.VerifyConfig.load(args.config) if args.config else V.VerifyConfig()
    if args.n_max is not None:
        cfg.n_max = args.n_max
    if args.lambdas:
        cfg.lambdas = tuple(args.lambdas)
    if args.check:
        unknown = set(args.check) - set(V.CHECKS)
        if unknown:
            raise UsageError(f"--check: unknown checks {sorted(unknown)}")
        cfg.checks = {k: cfg.checks.get(k, {}) for k in args.check}
        if not args.free_energy:
            cfg.free_energy = []
    if args.free_energy:
        cfg.free_energy = [_free_energy_pair(x) for x in args.free_energy]
    if args.file:
        cfg.graph6 = list(cfg.graph6) + list(args.file)
    if args.threads is not None:
        cfg.threads = args.threads
    reports = V.run_all(cfg)
    if args.csv:
        sys.stdout.write(reports_to_csv(reports))
    else:
        sys.stdout.write(reports_to_json(reports, timing=not args.no_timing))
    return 0 if all(r.passed for r in reports) else 1


def _free_energy_pair(text: str) -> tuple[int, int]:
    try:
        d, n = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--free-energy expects d,n, got {text!r}") from None
    return d, n


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hardcore",
        description="Exact hard-core model statistics and bound verification on small graphs.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("poly", help="independence (or clique) polynomial coefficients")
    _add_input(p, lam=False)
    p.add_argument("--clique", action="store_true", help="clique polynomial instead")
    _add_format(p)
    p.set_defaults(func=cmd_poly)

    for name, func, what in (("occupancy", cmd_occupancy, "occupancy fraction E_G"),
                             ("variance", cmd_variance, "variance fraction V_G"),
                             ("free-energy", cmd_free_energy, "free energy (1/n) ln P_G"),
                             ("mixture", cmd_mixture, "truncated-binomial mixture weights"),
                             ("phi", cmd_phi, "moments of the addable-vertex count")):
        p = sub.add_parser(name, help=what)
        _add_input(p)
        _add_format(p)
        p.set_defaults(func=func)

    p = sub.add_parser("family", help="build a named family and report its statistics")
    p.add_argument("spec", nargs="?", help="family spec such as Z:7,3")
    p.add_argument("--family", dest="family_flag", metavar="SPEC", help="same as SPEC")
    p.add_argument("--lambda", dest="lam", type=_positive_rational, metavar="P/Q")
    _add_format(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("symmetrize", help="symmetrise toward a complete multipartite graph")
    _add_input(p)
    p.add_argument("--pair", metavar="U,V", help="single step on a non-adjacent pair")
    _add_format(p)
    p.set_defaults(func=cmd_symmetrize)

    p = sub.add_parser("sample", help="Glauber dynamics estimates of E|I| and Var|I|")
    _add_input(p)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--burn-in", type=int, default=1_000)
    p.add_argument("--thinning", type=int, default=1)
    p.add_argument("--batches", type=int, default=50)
    p.add_argument("--chains", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    _add_format(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("verify", help="run the exhaustive verification suite")
    p.add_argument("--config", metavar="PATH", help="JSON config file")
    p.add_argument("--n-max", type=int)
    p.add_argument("--lambda", dest="lambdas", type=_positive_rational, action="append",
                   metavar="P/Q", help="grid value (repeatable)")
    p.add_argument("--check", action="append", metavar="ID", help="run only this check")
    p.add_argument("--free-energy", action="append", metavar="D,N",
                   help="regular-graph free-energy scope (repeatable)")
    p.add_argument("--file", action="append", metavar="PATH", help="graph6 input (repeatable)")
    p.add_argument("--threads", type=int)
    p.add_argument("--no-timing", action="store_true", help="omit runtime_ms for diffable output")
    fmt_group = p.add_mutually_exclusive_group()
    fmt_group.add_argument("--json", action="store_true", help="JSON report (default)")
    fmt_group.add_argument("--csv", action="store_true", help="CSV summary")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "family":
        if (args.spec is None) == (args.family_flag is None):
            parser.error("family: give exactly one of SPEC or --family")
        args.spec = args.spec or args.family_flag
    if getattr(args, "threads", None) is not None and args.threads < 1:
        parser.error("--threads must be at least 1")
    try:
        return args.func(args)
    except (UsageError, GraphError, FamilyError, V.ConfigError, ValueError, OSError) as exc:
        print(f"hardcore {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
