"""Command line front end. Every verb prints one JSON object.

Exit codes: 0 success, 1 a finding (bound violation, failed check, campaign
findings), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds, campaign
from .fileio import parse_complex, read_coeff_series, write_coeff_series
from .generators import EXTREMAL_KINDS, extremal, parse_g_spec
from .phi import parse_phi_spec
from .subord import (
    FAILS,
    SubordinationConfig,
    is_subordinate,
    ks_membership,
    stankiewicz_check,
)

DEFAULT_ORDER = 24


def _emit(obj, path: str | None = None) -> None:
    text = json.dumps(obj, sort_keys=True, indent=2)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _phi(args):
    return parse_phi_spec(args.phi, order=args.order)


def _cmd_bound_fs(args) -> int:
    _emit(bounds.fs_report(_phi(args), args.mu).to_dict())
    return 0


def _cmd_bound_inverse_fs(args) -> int:
    _emit(bounds.inverse_fs_report(_phi(args), args.mu).to_dict())
    return 0


def _cmd_bound_distortion(args) -> int:
    _emit(bounds.distortion_report(_phi(args), args.r).to_dict())
    return 0


def _cmd_bound_growth(args) -> int:
    _emit(bounds.growth_report(_phi(args), args.r).to_dict())
    return 0


def _cmd_bound_covering(args) -> int:
    _emit(bounds.covering_report(_phi(args)).to_dict())
    return 0


def _cmd_bound_kowalczyk(args) -> int:
    _emit(bounds.kowalczyk_report(args.gamma, args.r).to_dict())
    return 0


def _cmd_extremal(args) -> int:
    member = extremal(args.kind, _phi(args))
    out = {
        "kind": args.kind,
        "a2": [member.a2.real, member.a2.imag],
        "a3": [member.a3.real, member.a3.imag],
        "provenance": member.provenance(),
    }
    if args.coeffs:
        write_coeff_series(args.coeffs, member.f)
        out["coeffs"] = args.coeffs
    _emit(out)
    return 0


def _subord_config(args) -> SubordinationConfig:
    if getattr(args, "check_order", None):
        return SubordinationConfig(order=args.check_order)
    return SubordinationConfig()


def _cmd_check_membership(args) -> int:
    f = read_coeff_series(args.f)
    g = parse_g_spec(args.g, order=max(f.order, 3))
    verdict = ks_membership(f, g, _phi(args), _subord_config(args))
    _emit(verdict.to_dict())
    return 1 if verdict.verdict == FAILS else 0


def _cmd_check_subordination(args) -> int:
    sub = read_coeff_series(args.sub)
    target = read_coeff_series(args.target)
    verdict = is_subordinate(sub, target, _subord_config(args))
    _emit(verdict.to_dict())
    return 1 if verdict.verdict == FAILS else 0


def _cmd_check_stankiewicz(args) -> int:
    f = read_coeff_series(args.f)
    g = parse_g_spec(args.g, order=max(f.order, 3))
    result = stankiewicz_check(f, g, args.delta, args.samples, _subord_config(args))
    _emit(result.to_dict())
    return 0 if result.consistent else 1


def _cmd_campaign(args) -> int:
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            config = campaign.CampaignConfig.from_dict(json.load(fh))
    else:
        config = campaign.CampaignConfig()
    report = campaign.run_campaign(config, csv_path=args.csv)
    _emit(report.to_dict(), args.out)
    return 1 if report.findings else 0


def _cmd_replay(args) -> int:
    with open(args.report, encoding="utf-8") as fh:
        report = json.load(fh)
    records = campaign.replay(report, args.trial)
    _emit(records)
    return 1 if any(rec["status"] == campaign.FAIL for rec in records) else 0


def _add_phi(parser, required=True):
    parser.add_argument("--phi", required=required, help="halfplane | gamma:G | poly:B1,B2,...")
    parser.add_argument("--order", type=int, default=DEFAULT_ORDER, help="series truncation order")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ks",
        description="Bounds, extremal members, and subordination checks for the close-to-convex class.",
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    bound = verbs.add_parser("bound", help="sharp bounds with witnesses where they exist")
    which = bound.add_subparsers(dest="which", required=True)

    for name, handler, needs_mu, needs_r in (
        ("fs", _cmd_bound_fs, True, False),
        ("inverse-fs", _cmd_bound_inverse_fs, True, False),
        ("distortion", _cmd_bound_distortion, False, True),
        ("growth", _cmd_bound_growth, False, True),
        ("covering", _cmd_bound_covering, False, False),
    ):
        sp = which.add_parser(name)
        _add_phi(sp)
        if needs_mu:
            sp.add_argument("--mu", type=parse_complex, required=True, help="complex, e.g. 1+0i")
        if needs_r:
            sp.add_argument("--r", type=float, required=True, help="radius in (0, 1)")
        sp.set_defaults(func=handler)

    sp = which.add_parser("kowalczyk")
    sp.add_argument("--gamma", type=float, required=True, help="order parameter in [0, 1)")
    sp.add_argument("--r", type=float, required=True, help="radius in (0, 1)")
    sp.set_defaults(func=_cmd_bound_kowalczyk)

    sp = verbs.add_parser("extremal", help="named sharpness witnesses")
    sp.add_argument("--kind", required=True, choices=EXTREMAL_KINDS)
    _add_phi(sp)
    sp.add_argument("--coeffs", help="write the member's coefficients to this file")
    sp.set_defaults(func=_cmd_extremal)

    check = verbs.add_parser("check", help="subordination-style verdicts")
    csub = check.add_subparsers(dest="which", required=True)

    sp = csub.add_parser("membership")
    sp.add_argument("--f", required=True, help="coefficient file for f")
    sp.add_argument("--g", required=True, help="generator, e.g. atoms:1@1")
    _add_phi(sp)
    sp.add_argument("--check-order", type=int, help="grid check truncation order")
    sp.set_defaults(func=_cmd_check_membership)

    sp = csub.add_parser("subordination")
    sp.add_argument("--sub", required=True, help="coefficient file for the subordinate side")
    sp.add_argument("--target", required=True, help="coefficient file for the target side")
    sp.add_argument("--check-order", type=int, help="grid check truncation order")
    sp.set_defaults(func=_cmd_check_subordination)

    sp = csub.add_parser("stankiewicz")
    sp.add_argument("--f", required=True, help="coefficient file for f")
    sp.add_argument("--g", required=True, help="generator, e.g. atoms:1@1")
    sp.add_argument("--delta", type=float, default=0.05)
    sp.add_argument("--samples", type=int, default=5)
    sp.add_argument("--check-order", type=int, help="grid check truncation order")
    sp.set_defaults(func=_cmd_check_stankiewicz)

    sp = verbs.add_parser("campaign", help="randomized verification campaign")
    sp.add_argument("--config", help="JSON config file (defaults are used otherwise)")
    sp.add_argument("--out", help="write the JSON report here instead of stdout")
    sp.add_argument("--csv", help="also write per-record CSV rows here")
    sp.set_defaults(func=_cmd_campaign)

    sp = verbs.add_parser("replay", help="re-run a single trial from a report")
    sp.add_argument("--report", required=True, help="campaign report JSON")
    sp.add_argument("--trial", type=int, required=True)
    sp.set_defaults(func=_cmd_replay)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
