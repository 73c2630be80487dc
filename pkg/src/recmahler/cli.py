"""Command line front end.

Every subcommand (except the plain CSV `table`) prints one JSON report with
a fixed key layout:

    {"command": ..., "inputs": ..., "exact_results": ...,
     "numeric_results": ..., "checks": [{"name", "status", "detail"}, ...]}

Exact values are serialized as 'p/q * pi^k' strings or coefficient lists of
such rationals, so they can be parsed back without precision loss.  Floats
are printed with 15 significant digits.  Reports for identical invocations
are byte-identical: nothing in here depends on time, machine, or dict
iteration happenstance.

Exit status: 0 when every check passed, 1 when any check failed, 2 for
malformed arguments.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

import numpy as np

from . import montecarlo
from .errors import RecMahlerError
from .exact import PiScaled, laurent_mellin, ratfun_eval_exact, ratfun_to_lists
from .measure import mahler_from_roots, mahler_quadrature, find_roots
from .spectral import (
    h_closed,
    h_eval,
    h_hat,
    h_product,
    hJK_closed,
    hJK_quadrature,
    i_matrix,
    det_ratfun,
    omega_psi_check,
    volume_exact,
)
from .symfun import (
    coefficient_map,
    jacobian_real_factor,
    numeric_jacobian,
)


def _fmt(value):
    """Round every float to 15 significant digits, recursively."""
    if isinstance(value, float):
        return float(f"{value:.15g}")
    if isinstance(value, dict):
        return {k: _fmt(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_fmt(v) for v in value]
    return value


def _check(name: str, ok: bool, detail: str) -> dict:
    return {"name": name, "status": "pass" if ok else "fail", "detail": detail}


def _emit(report: dict) -> int:
    print(json.dumps(_fmt(report), indent=2))
    return 0 if all(c["status"] == "pass" for c in report["checks"]) else 1


def _parse_coeff_vector(text: str) -> np.ndarray:
    data = json.loads(text)
    if not isinstance(data, list) or not data:
        raise ValueError("expected a nonempty JSON array")
    out = []
    for item in data:
        if isinstance(item, (int, float)):
            out.append(complex(item))
        elif (
            isinstance(item, list)
            and len(item) == 2
            and all(isinstance(x, (int, float)) for x in item)
        ):
            out.append(complex(item[0], item[1]))
        else:
            raise ValueError(f"bad coefficient entry: {item!r}")
    return np.asarray(out, dtype=complex)


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_measure(args) -> int:
    if args.coeffs is not None:
        text = args.coeffs
    else:
        with open(args.coeffs_file, "r", encoding="utf-8") as fh:
            text = fh.read()
    coeffs = _parse_coeff_vector(text)
    rs = find_roots(coeffs, args.tol)
    by_roots = mahler_from_roots(coeffs, args.tol)
    by_quad = mahler_quadrature(coeffs, args.nodes)
    rel = abs(by_roots - by_quad) / max(by_roots, by_quad)
    report = {
        "command": "measure",
        "inputs": {
            "coeffs": [[c.real, c.imag] for c in coeffs],
            "nodes": args.nodes,
            "tol": args.tol,
        },
        "exact_results": {},
        "numeric_results": {
            "mahler_from_roots": by_roots,
            "mahler_quadrature": by_quad,
            "root_residual": rs.residual,
        },
        "checks": [
            _check(
                "method-agreement",
                rel <= 1e-6,
                f"relative gap {rel:.3e}, tolerance 1e-06",
            )
        ],
    }
    return _emit(report)


def _cmd_hn(args) -> int:
    n = args.N
    h = h_closed(n)
    mellin = laurent_mellin(h)
    hh = h_hat(n)
    at_one = h.value_at_one()
    numeric = {
        "coeffs": {str(e): t.to_float() for e, t in h.terms.items()},
    }
    if args.xi is not None:
        numeric["h_value"] = h_eval(n, args.xi)
    report = {
        "command": "hn",
        "inputs": {"N": n, "xi": args.xi},
        "exact_results": {
            "h_coeffs": {str(e): str(t) for e, t in h.terms.items()},
            "mellin_transform": ratfun_to_lists(mellin),
        },
        "numeric_results": numeric,
        "checks": [
            _check(
                "mellin-consistency",
                mellin == hh,
                "Mellin image of the closed form equals H_N(s)/(2s), exact",
            ),
            _check(
                "vanishes-at-one",
                at_one.is_zero,
                f"h_N(1) = {at_one}, expected exact 0",
            ),
        ],
    }
    return _emit(report)


def _cmd_volume(args) -> int:
    n = args.N
    vol = volume_exact(n)
    via_mellin = ratfun_eval_exact(h_hat(n), Fraction(n + 1)) * PiScaled(Fraction(2), 1)
    report = {
        "command": "volume",
        "inputs": {"N": n},
        "exact_results": {"volume": str(vol)},
        "numeric_results": {"volume": vol.to_float()},
        "checks": [
            _check(
                "mellin-consistency",
                via_mellin == vol,
                "2 pi hhat_N(N+1) equals the closed product form, exact",
            )
        ],
    }
    return _emit(report)


def _cmd_verify_det(args) -> int:
    n = args.N
    det = det_ratfun(i_matrix(n))
    prod = h_product(n)
    report = {
        "command": "verify-det",
        "inputs": {"N": n},
        "exact_results": {
            "determinant": ratfun_to_lists(det),
            "product_form": ratfun_to_lists(prod),
        },
        "numeric_results": {},
        "checks": [
            _check(
                "determinant-identity",
                det == prod,
                "det of the moment matrix equals prod 2 pi s/(s^2 - n^2), exact",
            )
        ],
    }
    return _emit(report)


def _cmd_verify_entries(args) -> int:
    j, k = args.J, args.K
    nodes = 4 * (j + k) + 16
    closed = hJK_closed(j, k)
    radii = [1.0, 1.1, 2.0, 5.0]
    rows = []
    worst = 0.0
    ok = True
    for r in radii:
        cv = closed.eval(r) if not closed.is_zero else 0.0
        qv = hJK_quadrature(j, k, r, nodes)
        gap = abs(cv - qv)
        tol = 1e-10 * (1.0 + abs(cv))
        ok = ok and gap <= tol
        worst = max(worst, gap / (1.0 + abs(cv)))
        rows.append({"r": r, "closed": cv, "quadrature": qv, "abs_gap": gap})
    report = {
        "command": "verify-entries",
        "inputs": {"J": j, "K": k, "nodes": nodes},
        "exact_results": {
            "closed_form": {
                "pi_power": closed.pi_power,
                "coeffs": {str(e): str(c) for e, c in closed.coeffs.items()},
            }
        },
        "numeric_results": {"grid": rows},
        "checks": [
            _check(
                "quadrature-match",
                ok,
                f"worst scaled gap {worst:.3e}, tolerance 1e-10 * (1 + |value|)",
            )
        ],
    }
    return _emit(report)


def _cmd_rank_one(args) -> int:
    rep = omega_psi_check(args.N)
    report = {
        "command": "rank-one",
        "inputs": {"N": args.N},
        "exact_results": {"psi": [str(x) for x in rep.psi]},
        "numeric_results": {},
        "checks": [
            _check(name, ok, detail + " (tolerance: exact)")
            for name, ok, detail in rep.checks
        ],
    }
    return _emit(report)


def _cmd_jacobian_test(args) -> int:
    rng = np.random.Generator(np.random.Philox(key=np.uint64(args.seed)))
    n = args.N
    rows = []
    ok_all = True
    produced = 0
    while produced < args.points:
        radius = rng.uniform(0.5, 2.0, size=n)
        angle = rng.uniform(0.0, 2.0 * np.pi, size=n)
        alpha = radius * np.exp(1j * angle)
        formula = jacobian_real_factor(alpha)
        if formula < 1e-6:
            continue  # too close to a critical point for a relative check
        produced += 1
        jac = numeric_jacobian(coefficient_map, alpha, args.step)
        fd = float(np.linalg.det(jac))
        rel = abs(fd - formula) / abs(formula)
        ok_all = ok_all and rel <= 1e-5
        rows.append(
            {
                "alpha": [[a.real, a.imag] for a in alpha],
                "formula": formula,
                "finite_difference": fd,
                "rel_gap": rel,
            }
        )
    report = {
        "command": "jacobian-test",
        "inputs": {
            "N": n,
            "points": args.points,
            "seed": args.seed,
            "step": args.step,
        },
        "exact_results": {},
        "numeric_results": {"points": rows},
        "checks": [
            _check(
                "jacobian-agreement",
                ok_all,
                "finite differences vs closed determinant, tolerance 1e-05 relative",
            )
        ],
    }
    return _emit(report)


def _cmd_mc(args) -> int:
    if args.mode == "hn":
        if args.xi is None:
            raise _Usage("--xi is required for --mode hn")
        est = montecarlo.mc_hN(args.N, args.xi, args.samples, args.seed, args.workers)
        target = h_eval(args.N, args.xi)
        target_str = "h_N(xi) closed form"
    else:
        est = montecarlo.mc_volume(args.N, args.samples, args.seed, args.workers)
        target = volume_exact(args.N).to_float()
        target_str = "star body volume closed form"
    z = (est.mean - target) / est.std_error if est.std_error > 0 else math.inf
    report = {
        "command": "mc",
        "inputs": {
            "mode": args.mode,
            "N": args.N,
            "xi": args.xi,
            "samples": args.samples,
            "seed": args.seed,
            "workers": args.workers,
        },
        "exact_results": {},
        "numeric_results": {
            "estimate": {
                "mean": est.mean,
                "std_error": est.std_error,
                "samples": est.samples,
                "seed": est.seed,
                "region_volume": est.region_volume,
                "rejections": est.rejections,
            },
            "target": target,
            "z_score": z,
        },
        "checks": [
            _check(
                "within-3-sigma",
                abs(z) <= 3.0,
                f"z = {z:.3f} against {target_str}, tolerance 3 sigma",
            )
        ],
    }
    return _emit(report)


def _cmd_table(args) -> int:
    print("xi,h_N")
    xi = args.start
    steps = int(round((args.stop - args.start) / args.step))
    for i in range(steps + 1):
        xi = args.start + i * args.step
        print(f"{xi:.15g},{h_eval(args.N, xi):.15g}")
    return 0


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="recmahler",
        description=(
            "Exact and numeric engine for the distribution of Mahler "
            "measures of complex reciprocal polynomials."
        ),
    )
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("measure", help="Mahler measure of a coefficient vector")
    g = m.add_mutually_exclusive_group(required=True)
    g.add_argument("--coeffs", help="JSON array of [re, im] pairs, ascending")
    g.add_argument("--coeffs-file", help="file containing the same JSON")
    m.add_argument("--nodes", type=int, default=4096)
    m.add_argument("--tol", type=float, default=1e-10)
    m.set_defaults(fn=_cmd_measure)

    h = sub.add_parser("hn", help="closed distribution form h_N")
    h.add_argument("--N", type=int, required=True)
    h.add_argument("--xi", type=float, default=None)
    h.set_defaults(fn=_cmd_hn)

    v = sub.add_parser("volume", help="exact star body volume")
    v.add_argument("--N", type=int, required=True)
    v.set_defaults(fn=_cmd_volume)

    vd = sub.add_parser("verify-det", help="determinant identity, exact")
    vd.add_argument("--N", type=int, required=True)
    vd.set_defaults(fn=_cmd_verify_det)

    ve = sub.add_parser("verify-entries", help="entry quadrature cross-check")
    ve.add_argument("--J", type=int, required=True)
    ve.add_argument("--K", type=int, required=True)
    ve.set_defaults(fn=_cmd_verify_entries)

    ro = sub.add_parser("rank-one", help="rank-one kernel identity, exact")
    ro.add_argument("--N", type=int, required=True)
    ro.set_defaults(fn=_cmd_rank_one)

    jt = sub.add_parser("jacobian-test", help="finite differences vs formula")
    jt.add_argument("--N", type=int, default=2)
    jt.add_argument("--points", type=int, default=5)
    jt.add_argument("--seed", type=int, default=0)
    jt.add_argument("--step", type=float, default=None)
    jt.set_defaults(fn=_cmd_jacobian_test)

    mc = sub.add_parser("mc", help="Monte Carlo cross-checks")
    mc.add_argument("--mode", choices=("hn", "volume"), required=True)
    mc.add_argument("--N", type=int, required=True)
    mc.add_argument("--xi", type=float, default=None)
    mc.add_argument("--samples", type=int, default=100_000)
    mc.add_argument("--seed", type=int, default=0)
    mc.add_argument("--workers", type=int, default=1)
    mc.set_defaults(fn=_cmd_mc)

    t = sub.add_parser("table", help="CSV table of h_N on a xi grid")
    t.add_argument("--N", type=int, required=True)
    t.add_argument("--start", type=float, default=1.0)
    t.add_argument("--stop", type=float, default=3.0)
    t.add_argument("--step", type=float, default=0.01)
    t.set_defaults(fn=_cmd_table)

    return p


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.fn(args)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError, RecMahlerError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
