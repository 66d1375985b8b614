"""Batch command line front end.

Subcommands take a JSON instance file (``-i``), dispatch to the library
and print a single JSON report to stdout.  All numbers in reports are
decimal strings (rationals as "p/q"), never native floats, and reports
are deterministic: identical input and flags give byte-identical bytes.

Instance file schema::

    {
      "bundle": {
        "rank": 4, "degree": 4, "base_genus": 0,
        "hn": [{"rank": 3, "degree": 3}, {"rank": 1, "degree": 1}],
        "split": [1, 1, 1, 1]
      },
      "ci": {"k": [3, 3], "y": [1, 2]}
    }

``hn`` and ``split`` are optional; a ``split`` list must be consistent
with (rank, degree) and induces the Harder-Narasimhan profile (which
must then agree with ``hn`` when both are present).

Exit codes: 0 success, 2 invalid input, 3 internal exact-identity
failure, 4 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any

from . import __version__
from .bundles import (
    BundleOverCurve,
    ConeLabel,
    classify,
    cone,
    virtual_slopes,
)
from .exact import binom_trunc
from .contact import ContactInstance, WeightFiltration, hm_test, contact_of_intersection
from .errors import InputError, InternalCheckError
from .invariants import (
    RelativeCI,
    alpha_invariant,
    canonical_class,
    canonical_top_power,
    ci_class,
    effectivity_violations,
    fibre_deg,
    h_top,
    positivity_margin,
    pushforward,
)
from .oracles import (
    SplitBundle,
    chow_expand,
    hilbert_series_rank,
    koszul_degree_bruteforce,
    sym_degree_bruteforce,
)
from .verdicts import (
    Orientation,
    VerdictReport,
    asymptotic_verdict,
    build_example,
    h_sweep,
    instability_verdict,
    slope_verdict,
    small_h_verdict,
)
from .svg import cone_diagram

_SIGN_WORD = {-1: "negative", 0: "zero", 1: "positive"}


def _enc(value: Any) -> Any:
    """Encode report values: every number becomes a decimal string."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _enc(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_enc(v) for v in value]
    if hasattr(value, "value") and isinstance(value.value, str):  # Enum
        return value.value
    raise TypeError(f"cannot encode {value!r} in a report")


def _rat(value: Any, field: str) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise InputError(f"{field}: rationals must be integers or 'p/q' strings")
    try:
        return Fraction(str(value))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{field}: not a rational: {value!r}") from exc


def _int(value: Any, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"{field}: expected an integer, got {value!r}")
    return value


def _parse_instance(data: Any) -> tuple[BundleOverCurve, RelativeCI, SplitBundle | None]:
    if not isinstance(data, dict):
        raise InputError("instance file must contain a JSON object")
    try:
        braw = data["bundle"]
        ciraw = data["ci"]
    except KeyError as exc:
        raise InputError(f"instance file missing section {exc.args[0]!r}") from exc
    rank = _int(braw.get("rank"), "bundle.rank")
    degree = _int(braw.get("degree"), "bundle.degree")
    genus = _int(braw.get("base_genus", 0), "bundle.base_genus")
    hn = None
    if braw.get("hn") is not None:
        hn = tuple(
            (_int(b.get("rank"), "bundle.hn.rank"), _int(b.get("degree"), "bundle.hn.degree"))
            for b in braw["hn"]
        )
    split = None
    if braw.get("split") is not None:
        split = SplitBundle(tuple(_int(a, "bundle.split") for a in braw["split"]))
        if split.rank != rank or split.degree != degree:
            raise InputError(
                f"bundle.split implies (rank, degree) = ({split.rank}, {split.degree}), "
                f"file says ({rank}, {degree})"
            )
        induced = split.to_bundle(genus)
        if hn is not None and induced.hn != hn:
            raise InputError("bundle.hn disagrees with the profile induced by bundle.split")
        hn = induced.hn
    bundle = BundleOverCurve(rank, degree, genus, hn)
    k = tuple(_int(v, "ci.k") for v in ciraw.get("k", ()))
    y = tuple(_int(v, "ci.y") for v in ciraw.get("y", ()))
    if not k:
        raise InputError("ci.k must be a nonempty list")
    X = RelativeCI(bundle, k, y)
    return bundle, X, split


def _load_instance(path: str) -> tuple[BundleOverCurve, RelativeCI, SplitBundle | None, dict]:
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read instance file {path}: {exc}") from exc
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"instance file {path} is not valid JSON: {exc}") from exc
    bundle, X, split = _parse_instance(data)
    echo = {
        "bundle": {
            "rank": bundle.rank,
            "degree": bundle.degree,
            "base_genus": bundle.base_genus,
            "hn": [{"rank": r, "degree": d} for r, d in bundle.hn] if bundle.hn else None,
            "split": list(split.line_degrees) if split else None,
        },
        "ci": {"k": list(X.k), "y": list(X.y)},
    }
    return bundle, X, split, echo


def _warnings(X: RelativeCI) -> list[str]:
    return [
        f"hypersurface {i}: y/k = {Fraction(X.y[i - 1], X.k[i - 1])} exceeds the "
        f"top Harder-Narasimhan slope; no effective member exists"
        for i in effectivity_violations(X)
    ]


def _verdict_dict(v: VerdictReport) -> dict:
    return {
        "theorem": v.theorem,
        "conclusion": v.conclusion,
        "hypotheses": {name: ok for name, ok in v.hypotheses},
        "witnesses": v.witnesses,
    }


def _report(command: str, inp: Any, result: Any, warnings: list[str]) -> dict:
    return {
        "command": command,
        "input": _enc(inp),
        "result": _enc(result),
        "warnings": warnings,
        "tool": {"name": "relci", "version": __version__},
    }


def _emit(report: dict, pretty: bool) -> None:
    if pretty:
        text = json.dumps(report, sort_keys=True, indent=2)
    else:
        text = json.dumps(report, sort_keys=True, separators=(",", ":"))
    sys.stdout.write(text + "\n")


# ---------------------------------------------------------------- commands


def _cmd_invariants(args: argparse.Namespace) -> int:
    bundle, X, _, echo = _load_instance(args.instance)
    h = args.h
    pf = pushforward(X, h)
    rep = positivity_margin(X, h) if h >= 1 else None
    canon = canonical_class(X)
    result = {
        "h": h,
        "h_top": h_top(X),
        "fibre_deg": fibre_deg(X),
        "rank": pf.rank,
        "deg": pf.degree,
        "alpha": alpha_invariant(X),
        "canonical": {
            "h_coeff": canon.h_coeff,
            "fibre_coeff": canon.fibre_coeff,
            "general_type_fibres": canon.general_type_fibres,
        },
        "kf_top": canonical_top_power(X),
    }
    if rep is not None:
        result["e_cleared"] = rep.e_cleared
        result["e_rational"] = rep.e_rational
        result["sign"] = _SIGN_WORD[rep.sign]
    _emit(_report("invariants", echo, result, _warnings(X)), args.pretty)
    return 0


def _cmd_verdict(args: argparse.Namespace) -> int:
    bundle, X, _, echo = _load_instance(args.instance)
    cls = ci_class(X)
    cone_part: dict[str, Any] = {"class": {"p": cls.p, "q": cls.q}}
    if bundle.has_hn:
        slopes = virtual_slopes(bundle)
        c = X.codim
        cone_part["region"] = classify(bundle, cls).value
        cone_part["thresholds"] = {
            "nef": sum(slopes[-c:], Fraction(0)),
            "bridge": c * bundle.slope,
            "pseff": sum(slopes[:c], Fraction(0)),
        }
    else:
        ratio = X.ratio_sum
        bridge = X.codim * bundle.slope
        membership = (
            "Inside" if ratio < bridge else "Boundary" if ratio == bridge else "Outside"
        )
        cone_part["bridge_membership"] = membership
        cone_part["note"] = "virtual slopes unavailable: bridge membership only"
    result = {
        "small_h": _verdict_dict(small_h_verdict(X)),
        "asymptotic": _verdict_dict(asymptotic_verdict(X)),
        "slope": _verdict_dict(slope_verdict(X)),
        "instability": _verdict_dict(instability_verdict(X)),
        "cone": cone_part,
    }
    _emit(_report("verdict", echo, result, _warnings(X)), args.pretty)
    return 0


def _cmd_cones(args: argparse.Namespace) -> int:
    bundle, X, _, echo = _load_instance(args.instance)
    if not bundle.has_hn:
        raise InputError("cone description needs the Harder-Narasimhan profile (hn or split)")
    c = args.codim
    described = [
        cone(bundle, c, label)
        for label in (ConeLabel.PSEFF, ConeLabel.BRIDGE, ConeLabel.NEF)
    ]
    svg_path = None
    if args.svg:
        Path(args.svg).write_text(
            cone_diagram(described, bundle.is_semistable), encoding="utf-8"
        )
        svg_path = args.svg
    result = {
        "codim": c,
        "cones": [
            {
                "label": cd.label.value,
                "threshold": cd.threshold,
                "ray1": {"p": cd.ray1.p, "q": cd.ray1.q},
                "ray2": {"p": cd.ray2.p, "q": cd.ray2.q},
            }
            for cd in described
        ],
        "coincide": bundle.is_semistable,
        "svg": svg_path,
    }
    _emit(_report("cones", echo, result, _warnings(X)), args.pretty)
    return 0


def _cmd_sweep(args: argparse.Namespace) -> int:
    bundle, X, _, echo = _load_instance(args.instance)
    sweep = h_sweep(X, args.h_max)
    result = {
        "margins": [
            {"h": rep.h, "e_cleared": rep.e_cleared, "sign": _SIGN_WORD[rep.sign]}
            for rep in sweep.reports
        ],
        "stable_poly_coeffs": list(sweep.stable_poly.coeffs),
        "sign_stable_from": sweep.sign_stable_from,
        "eventual_sign": _SIGN_WORD[sweep.eventual_sign],
    }
    _emit(_report("sweep", echo, result, _warnings(X)), args.pretty)
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    bundle, X, split, echo = _load_instance(args.instance)
    if split is None:
        raise InputError("oracle runs need a split bundle (bundle.split in the file)")
    h_max = args.h_max
    r, d = bundle.rank, bundle.degree
    mismatches: list[dict] = []
    checks = {"sym_closed_form": 0, "koszul_vs_degree": 0, "hilbert_vs_rank": 0, "chow_vs_closed_forms": 0}

    for a in range(h_max + 1):
        for twist in range(-3, 4):
            brute = sym_degree_bruteforce(split, a, twist)
            closed = Fraction(binom_trunc(a + r - 1, r - 1) * (a * d - twist * r), r)
            checks["sym_closed_form"] += 1
            if brute != closed:
                mismatches.append(
                    {"suite": "sym_closed_form", "a": a, "twist": twist, "brute": brute, "closed": closed}
                )
    for h in range(h_max + 1):
        pf = pushforward(X, h)
        brute_deg = koszul_degree_bruteforce(split, X, h)
        checks["koszul_vs_degree"] += 1
        if brute_deg != pf.degree:
            mismatches.append(
                {"suite": "koszul_vs_degree", "h": h, "brute": brute_deg, "closed": pf.degree}
            )
        brute_rank = hilbert_series_rank(X.k, r, h)
        checks["hilbert_vs_rank"] += 1
        if brute_rank != pf.rank:
            mismatches.append(
                {"suite": "hilbert_vs_rank", "h": h, "brute": brute_rank, "closed": pf.rank}
            )
    summary = chow_expand(X)
    cls = ci_class(X)
    for name, brute, closed in (
        ("h_top", summary.h_top, h_top(X)),
        ("fibre_deg", summary.fibre_deg, fibre_deg(X)),
        ("kf_top", summary.kf_top, canonical_top_power(X)),
        ("ci_class_p", summary.ci_class.p, cls.p),
        ("ci_class_q", summary.ci_class.q, cls.q),
    ):
        checks["chow_vs_closed_forms"] += 1
        if brute != closed:
            mismatches.append(
                {"suite": "chow_vs_closed_forms", "field": name, "brute": brute, "closed": closed}
            )

    result = {
        "h_max": h_max,
        "checks": checks,
        "mismatches": mismatches,
        "status": "all 4 oracle suites passed" if not mismatches else "oracle mismatch",
    }
    _emit(_report("oracle", echo, result, _warnings(X)), args.pretty)
    return 0 if not mismatches else 4


def _cmd_contact(args: argparse.Namespace) -> int:
    try:
        raw = (
            sys.stdin.read()
            if args.instance == "-"
            else Path(args.instance).read_text(encoding="utf-8")
        )
        data = json.loads(raw)
    except OSError as exc:
        raise InputError(f"cannot read contact file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"contact input is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("contact input must be a JSON object")
    try:
        weights = WeightFiltration(
            tuple(_rat(w, "weights") for w in data["weights"])
        )
        insts = {}
        for name in ("y", "z"):
            node = data[name]
            insts[name] = ContactInstance(
                ambient_n=weights.ambient_n,
                dim=_int(node.get("dim"), f"{name}.dim"),
                deg=_int(node.get("deg"), f"{name}.deg"),
                e_f=_rat(node.get("e_f"), f"{name}.e_f"),
            )
    except KeyError as exc:
        raise InputError(f"contact input missing field {exc.args[0]!r}") from exc
    cut = contact_of_intersection(insts["y"], insts["z"], weights)
    result = {
        "y_status": hm_test(insts["y"], weights).value,
        "z_status": hm_test(insts["z"], weights).value,
        "intersection": {
            "dim": cut.dim,
            "deg": cut.deg,
            "e_f": cut.e_f,
            "status": hm_test(cut, weights).value,
        },
    }
    echo = {
        "weights": list(weights.weights),
        "y": {"dim": insts["y"].dim, "deg": insts["y"].deg, "e_f": insts["y"].e_f},
        "z": {"dim": insts["z"].dim, "deg": insts["z"].deg, "e_f": insts["z"].e_f},
    }
    _emit(_report("contact", echo, result, []), args.pretty)
    return 0


def _cmd_example(args: argparse.Namespace) -> int:
    bundle, X, report = build_example(args.a, args.r, args.c, args.m, args.orientation)
    echo = {
        "a": args.a,
        "r": args.r,
        "c": args.c,
        "m": args.m,
        "orientation": args.orientation,
    }
    result = {
        "bundle": {
            "rank": bundle.rank,
            "degree": bundle.degree,
            "hn": [{"rank": r, "degree": d} for r, d in bundle.hn],
        },
        "ci": {"k": list(X.k), "y": list(X.y)},
        "verdict": _verdict_dict(report),
    }
    _emit(_report("example", echo, result, []), args.pretty)
    return 0


# ------------------------------------------------------------------ parser


def _add_common(sp: argparse.ArgumentParser, instance: bool = True) -> None:
    sp.add_argument("--help", action="help", help="show this help message and exit")
    if instance:
        sp.add_argument("-i", "--instance", required=True, metavar="FILE",
                        help="JSON instance file")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="compact JSON output (default)")
    group.add_argument("--pretty", action="store_true", help="indented JSON output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relci",
        description="exact invariants and verdicts for relative complete intersections",
    )
    parser.add_argument("--version", action="version", version=f"relci {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("invariants", add_help=False,
                        help="intersection numbers, pushforward data and margins")
    _add_common(sp)
    sp.add_argument("-h", dest="h", type=int, default=1, metavar="H",
                    help="tautological twist (default 1)")
    sp.set_defaults(func=_cmd_invariants)

    sp = sub.add_parser("verdict", add_help=False, help="all theorem-level verdicts")
    _add_common(sp)
    sp.set_defaults(func=_cmd_verdict)

    sp = sub.add_parser("cones", add_help=False, help="cone rays and optional SVG diagram")
    _add_common(sp)
    sp.add_argument("-c", dest="codim", type=int, required=True, metavar="C",
                    help="cycle codimension")
    sp.add_argument("--svg", metavar="PATH", help="write a wedge diagram to PATH")
    sp.set_defaults(func=_cmd_cones)

    sp = sub.add_parser("sweep", add_help=False, help="margins over a twist range")
    _add_common(sp)
    sp.add_argument("--h-max", dest="h_max", type=int, default=12, metavar="N",
                    help="largest twist to report (default 12)")
    sp.set_defaults(func=_cmd_sweep)

    sp = sub.add_parser("oracle", add_help=False,
                        help="brute-force cross-checks (needs a split bundle)")
    _add_common(sp)
    sp.add_argument("--h-max", dest="h_max", type=int, default=8, metavar="N",
                    help="largest twist to cross-check (default 8)")
    sp.set_defaults(func=_cmd_oracle)

    sp = sub.add_parser("contact", add_help=False,
                        help="degree-of-contact arithmetic (JSON in/out)")
    _add_common(sp)
    sp.set_defaults(func=_cmd_contact)

    sp = sub.add_parser("example", add_help=False,
                        help="build and validate the candidate unstable family")
    _add_common(sp, instance=False)
    sp.add_argument("--a", type=int, required=True, help="top line-bundle degree")
    sp.add_argument("--r", type=int, required=True, help="bundle rank")
    sp.add_argument("--c", type=int, required=True, help="codimension")
    sp.add_argument("--m", type=int, required=True, help="system multiplier")
    sp.add_argument(
        "--orientation",
        choices=[o.value for o in Orientation],
        default=Orientation.AS_WRITTEN.value,
        help="degree/twist reading of the linear system",
    )
    sp.set_defaults(func=_cmd_example)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"relci: invalid input: {exc}", file=sys.stderr)
        return 2
    except InternalCheckError as exc:
        print(f"relci: internal check failed: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
