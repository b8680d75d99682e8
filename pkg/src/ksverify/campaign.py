"""Randomized verification campaigns with reproducible, machine-readable reports.

A campaign runs `trials` independent trials. Trial i seeds its own
counter-based generator from (seed, i) and draws one (g, w) pair up front,
so enabling or disabling individual checks never shifts anyone else's
random stream. The target phi cycles through phi_specs.

Cheap coefficient checks run at the configured order; envelope and
membership checks regenerate the member at EVAL_ORDER from its recorded
provenance, which keeps series tails far below the tolerances being
asserted.
"""

from __future__ import annotations

import csv
import math
import time
from dataclasses import dataclass, field

import numpy as np

from . import bounds
from .fileio import parse_complex
from .generators import IDENTITY_TOL, ClassMember, member_from
from .phi import MaMindaFunction, parse_phi_spec
from .sampling import MU_RADIUS, RNG_NAME, random_schwarz, random_starlike, trial_rng
from .subord import FAILS, HOLDS, ks_membership, stankiewicz_check

CHECK_NAMES = ("fs", "inverse_fs", "a2a3", "distortion", "growth", "membership", "stankiewicz")

SCHEMA_VERSION = 1
EVAL_ORDER = 256
ENVELOPE_ANGLES = 120
BOUND_SLACK = 1e-8

DEFAULT_PHI_SPECS = ("halfplane", "gamma:0.25", "gamma:0.5", "gamma:0.75")
DEFAULT_RADII = (0.3, 0.6, 0.9)

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


def default_mu_grid() -> tuple[complex, ...]:
    """8 rings x 8 angles filling the parameter disk |mu| <= 3."""
    out = []
    for ring in range(1, 9):
        r = MU_RADIUS * ring / 8.0
        for k in range(8):
            out.append(complex(r * np.exp(1j * (2.0 * math.pi * k / 8.0))))
    return tuple(out)


def structural_mus(phi: MaMindaFunction) -> tuple[complex, ...]:
    """mu values where the bound's max switches branch, plus the classics."""
    b1 = phi.B1
    return (0j, 1.0 + 0j, 2.0 + 0j, (8.0 / 3.0) * phi.B2 / (b1 * b1))


_CONFIG_FIELDS = (
    "seed",
    "trials",
    "phi_specs",
    "mu_grid",
    "radii",
    "order",
    "checks",
    "stankiewicz_delta",
    "stankiewicz_samples",
)


def _as_complex(value) -> complex:
    if isinstance(value, str):
        return parse_complex(value)
    if isinstance(value, (list, tuple)):
        re, im = value
        return complex(float(re), float(im))
    return complex(value)


@dataclass(frozen=True)
class CampaignConfig:
    seed: int = 42
    trials: int = 1000
    phi_specs: tuple[str, ...] = DEFAULT_PHI_SPECS
    mu_grid: tuple[complex, ...] = field(default_factory=default_mu_grid)
    radii: tuple[float, ...] = DEFAULT_RADII
    order: int = 24
    checks: tuple[str, ...] = CHECK_NAMES
    stankiewicz_delta: float = 0.05
    stankiewicz_samples: int = 3

    def __post_init__(self):
        object.__setattr__(self, "phi_specs", tuple(str(s) for s in self.phi_specs))
        object.__setattr__(self, "mu_grid", tuple(_as_complex(m) for m in self.mu_grid))
        object.__setattr__(self, "radii", tuple(float(r) for r in self.radii))
        seen = set(str(c) for c in self.checks)
        unknown = seen - set(CHECK_NAMES)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)} (known: {list(CHECK_NAMES)})")
        object.__setattr__(self, "checks", tuple(n for n in CHECK_NAMES if n in seen))

        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must fit in 64 bits")
        if self.trials < 1:
            raise ValueError(f"trials must be at least 1, got {self.trials}")
        if self.order < 8:
            raise ValueError(f"campaign order must be at least 8, got {self.order}")
        if not self.phi_specs:
            raise ValueError("at least one phi spec is required")
        envelopes = {"distortion", "growth"} & set(self.checks)
        for s in self.phi_specs:
            phi = parse_phi_spec(s, order=self.order)  # reject bad specs before any trial
            if envelopes and phi.kind == "polynomial":
                raise ValueError(
                    f"{sorted(envelopes)} checks need a target with known circle extrema; "
                    f"{s!r} is a polynomial spec without a monotonicity attestation"
                )
        for m in self.mu_grid:
            if not (math.isfinite(m.real) and math.isfinite(m.imag)):
                raise ValueError("mu grid entries must be finite")
        if not self.radii:
            raise ValueError("at least one radius is required")
        for r in self.radii:
            if not 0.0 < r <= 0.9:
                raise ValueError(f"radii must lie in (0, 0.9], got {r}")
        if self.stankiewicz_delta <= 0.0:
            raise ValueError("stankiewicz_delta must be positive")
        if self.stankiewicz_samples < 1:
            raise ValueError("stankiewicz_samples must be at least 1")

    @classmethod
    def from_dict(cls, data: dict) -> "CampaignConfig":
        unknown = set(data) - set(_CONFIG_FIELDS)
        if unknown:
            raise ValueError(f"unknown config fields: {sorted(unknown)}")
        kwargs = dict(data)
        for key in ("seed", "trials", "order", "stankiewicz_samples"):
            if key in kwargs:
                kwargs[key] = int(kwargs[key])
        if "stankiewicz_delta" in kwargs:
            kwargs["stankiewicz_delta"] = float(kwargs["stankiewicz_delta"])
        return cls(**kwargs)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "phi_specs": list(self.phi_specs),
            "mu_grid": [[m.real, m.imag] for m in self.mu_grid],
            "radii": list(self.radii),
            "order": self.order,
            "checks": list(self.checks),
            "stankiewicz_delta": self.stankiewicz_delta,
            "stankiewicz_samples": self.stankiewicz_samples,
        }


@dataclass(frozen=True)
class CampaignReport:
    config: CampaignConfig
    counts: dict
    worst: dict
    findings: tuple
    wall_time: float

    def __post_init__(self):
        total = sum(sum(c.values()) for c in self.counts.values())
        expected = self.config.trials * len(self.config.checks)
        if total != expected:
            raise ValueError(f"count bookkeeping broken: {total} records vs {expected} expected")

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "rng": RNG_NAME,
            "config": self.config.to_dict(),
            "counts": {k: dict(v) for k, v in self.counts.items()},
            "worst": {k: dict(v) for k, v in self.worst.items()},
            "findings": [dict(f) for f in self.findings],
            "wall_time": self.wall_time,
        }


# -- per-check workers ----------------------------------------------------

_ENVELOPE_CACHE: dict[tuple, tuple[float, float]] = {}


def _envelope(kind: str, phi: MaMindaFunction, r: float) -> tuple[float, float]:
    key = (kind, phi.spec(), r)
    hit = _ENVELOPE_CACHE.get(key)
    if hit is None:
        fn = bounds.distortion_bounds if kind == "distortion" else bounds.growth_bounds
        hit = fn(phi, r)
        _ENVELOPE_CACHE[key] = hit
    return hit


def _grid(r: float, angles: int) -> np.ndarray:
    theta = np.linspace(0.0, 2.0 * math.pi, angles, endpoint=False)
    return r * np.exp(1j * theta)


def _record(trial: int, check: str, status: str, margin: float, prov: dict, detail: dict) -> dict:
    return {
        "trial": trial,
        "check": check,
        "status": status,
        "margin": float(margin),
        "provenance": prov,
        "detail": detail,
    }


def _check_fs(config: CampaignConfig, member: ClassMember, big, trial: int, prov: dict) -> dict:
    margin = math.inf
    worst = None
    for mu in config.mu_grid + structural_mus(member.phi):
        b = bounds.fs_bound(member.phi, mu)
        v = bounds.fs_value(member, mu)
        if b - v < margin:
            margin = b - v
            worst = (mu, b, v)
    mu, b, v = worst
    status = PASS if margin >= -BOUND_SLACK else FAIL
    detail = {"mu": [mu.real, mu.imag], "bound": b, "value": v}
    return _record(trial, "fs", status, margin, prov, detail)


def _check_inverse_fs(config: CampaignConfig, member: ClassMember, big, trial: int, prov: dict) -> dict:
    d2, d3 = bounds.inverse_coefficients(member.f)
    a2, a3 = member.a2, member.a3
    margin = math.inf
    worst = None
    ident_err = 0.0
    for mu in config.mu_grid + structural_mus(member.phi):
        value = abs(d3 - mu * d2 * d2)
        ident_err = max(ident_err, abs(value - abs(a3 - (2.0 - mu) * a2 * a2)))
        b = bounds.inverse_fs_bound(member.phi, mu)
        if b - value < margin:
            margin = b - value
            worst = (mu, b, value)
    mu, b, value = worst
    ok = margin >= -BOUND_SLACK and ident_err <= IDENTITY_TOL
    detail = {"mu": [mu.real, mu.imag], "bound": b, "value": value, "identity_error": ident_err}
    return _record(trial, "inverse_fs", PASS if ok else FAIL, margin, prov, detail)


def _check_a2a3(config: CampaignConfig, member: ClassMember, big, trial: int, prov: dict) -> dict:
    g, w, phi = member.g, member.w, member.phi
    err2 = abs(2.0 * member.a2 - phi.B1 * w.w1)
    err3 = abs(3.0 * member.a3 - (2.0 * g.g3 - g.g2**2 + phi.B1 * w.w2 + phi.B2 * w.w1**2))
    err = max(err2, err3)
    detail = {"err_a2": err2, "err_a3": err3}
    return _record(trial, "a2a3", PASS if err <= IDENTITY_TOL else FAIL, IDENTITY_TOL - err, prov, detail)


def _check_envelope(kind: str, series, config: CampaignConfig, phi, trial: int, prov: dict) -> dict:
    margin = math.inf
    at = None
    for r in config.radii:
        lo, hi = _envelope(kind, phi, r)
        tol = series.tail_bound(r) + BOUND_SLACK
        mags = np.abs(series.evaluate_many(_grid(r, ENVELOPE_ANGLES)))
        slack = min(float(mags.min()) - (lo - tol), (hi + tol) - float(mags.max()))
        if slack < margin:
            margin = slack
            at = (r, lo, hi, float(mags.min()), float(mags.max()))
    r, lo, hi, seen_min, seen_max = at
    detail = {"r": r, "lower": lo, "upper": hi, "seen_min": seen_min, "seen_max": seen_max}
    return _record(trial, kind, PASS if margin >= 0.0 else FAIL, margin, prov, detail)


def _check_distortion(config, member, big: ClassMember, trial: int, prov: dict) -> dict:
    return _check_envelope("distortion", big.f.derivative(), config, big.phi, trial, prov)


def _check_growth(config, member, big: ClassMember, trial: int, prov: dict) -> dict:
    return _check_envelope("growth", big.f, config, big.phi, trial, prov)


def _check_membership(config, member, big: ClassMember, trial: int, prov: dict) -> dict:
    verdict = ks_membership(big.f, big.g, big.phi)
    status = {HOLDS: PASS, FAILS: FAIL}.get(verdict.verdict, INCONCLUSIVE)
    return _record(trial, "membership", status, verdict.margin, prov, verdict.to_dict())


def _check_stankiewicz(config: CampaignConfig, member, big: ClassMember, trial: int, prov: dict) -> dict:
    res = stankiewicz_check(
        big.f, big.g, config.stankiewicz_delta, config.stankiewicz_samples
    )
    if not res.consistent:
        status = FAIL
    elif res.conclusion.holds:
        status = PASS
    else:
        status = INCONCLUSIVE
    detail = {
        "consistent": res.consistent,
        "conclusion": res.conclusion.verdict,
        "criterion": [v.verdict for v in res.criterion],
        "ts": list(res.ts),
    }
    return _record(trial, "stankiewicz", status, res.conclusion.margin, prov, detail)


_CHECK_FNS = {
    "fs": _check_fs,
    "inverse_fs": _check_inverse_fs,
    "a2a3": _check_a2a3,
    "distortion": _check_distortion,
    "growth": _check_growth,
    "membership": _check_membership,
    "stankiewicz": _check_stankiewicz,
}

_REGEN_CHECKS = frozenset(("distortion", "growth", "membership", "stankiewicz"))


def _parse_phis(config: CampaignConfig) -> tuple[MaMindaFunction, ...]:
    return tuple(parse_phi_spec(s, order=config.order) for s in config.phi_specs)


def run_trial(config: CampaignConfig, trial: int, phis=None) -> list[dict]:
    """All check records for one trial; reproducible standalone from (config, trial)."""
    if phis is None:
        phis = _parse_phis(config)
    rng = trial_rng(config.seed, trial)
    g = random_starlike(rng, config.order)
    w = random_schwarz(rng, config.order)
    phi = phis[trial % len(phis)]
    member = member_from(g, w, phi, verify=False)
    prov = member.provenance()
    big = None
    if any(c in _REGEN_CHECKS for c in config.checks):
        big = member_from(
            g.with_order(EVAL_ORDER),
            w.with_order(EVAL_ORDER),
            phi.with_order(EVAL_ORDER),
            verify=False,
        )
    return [_CHECK_FNS[name](config, member, big, trial, prov) for name in config.checks]


def run_campaign(config: CampaignConfig, csv_path: str | None = None) -> CampaignReport:
    """Run every trial, reduce records in trial order, optionally stream a CSV."""
    phis = _parse_phis(config)
    started = time.perf_counter()
    counts = {name: {PASS: 0, FAIL: 0, INCONCLUSIVE: 0} for name in config.checks}
    worst: dict[str, dict] = {}
    findings: list[dict] = []

    sink = open(csv_path, "w", newline="") if csv_path else None
    try:
        writer = None
        if sink is not None:
            writer = csv.writer(sink)
            writer.writerow(["trial", "check", "status", "margin", "phi", "g", "w"])
        for i in range(config.trials):
            for rec in run_trial(config, i, phis):
                counts[rec["check"]][rec["status"]] += 1
                prior = worst.get(rec["check"])
                if prior is None or rec["margin"] < prior["margin"]:
                    worst[rec["check"]] = rec
                if rec["status"] == FAIL:
                    findings.append(rec)
                if writer is not None:
                    p = rec["provenance"]
                    writer.writerow(
                        [rec["trial"], rec["check"], rec["status"], repr(rec["margin"]), p["phi"], p["g"], p["w"]]
                    )
    finally:
        if sink is not None:
            sink.close()

    return CampaignReport(
        config=config,
        counts=counts,
        worst=worst,
        findings=tuple(findings),
        wall_time=time.perf_counter() - started,
    )


def replay(report: dict, trial: int) -> list[dict]:
    """Re-run one trial from a report's config echo."""
    config = CampaignConfig.from_dict(report["config"])
    if not 0 <= trial < config.trials:
        raise ValueError(f"trial {trial} outside 0..{config.trials - 1}")
    return run_trial(config, trial)
