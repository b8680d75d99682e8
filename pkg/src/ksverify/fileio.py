"""Plain-text coefficient files and the small complex-literal dialect used
on the command line and in provenance strings ("0.4+0.1i", "2i", "-1").

Coefficient files hold one "re im" pair per line, degree 0 first; blank
lines and lines starting with '#' are skipped.
"""

from __future__ import annotations

import cmath
import re
from pathlib import Path

from .series import PowerSeries

_BARE_J = re.compile(r"(^|[+-])j")


def parse_complex(text: str) -> complex:
    """Parse a complex literal; accepts 'i' or 'j' for the imaginary unit."""
    s = text.strip().replace(" ", "").lower().replace("i", "j")
    s = _BARE_J.sub(r"\g<1>1j", s)
    try:
        z = complex(s)
    except ValueError:
        raise ValueError(f"malformed complex literal: {text!r}") from None
    if not cmath.isfinite(z):
        raise ValueError(f"non-finite complex literal: {text!r}")
    return z


def format_float(x: float) -> str:
    """repr of a float, with a trailing '.0' trimmed for round integers."""
    r = repr(float(x))
    return r[:-2] if r.endswith(".0") else r


def format_complex(z: complex) -> str:
    """Round-trippable 'a+bi' form, dropping a vanishing imaginary part."""
    z = complex(z)
    if z.imag == 0:
        return format_float(z.real)
    sign = "+" if z.imag >= 0 else "-"
    return f"{format_float(z.real)}{sign}{format_float(abs(z.imag))}i"


def read_coeff_series(path) -> PowerSeries:
    """Load a PowerSeries from a plain-text coefficient file."""
    coeffs = []
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected 're im', got {raw!r}")
        try:
            coeffs.append(complex(float(parts[0]), float(parts[1])))
        except ValueError:
            raise ValueError(f"{path}:{lineno}: malformed number in {raw!r}") from None
    if len(coeffs) < 2:
        raise ValueError(f"{path}: a coefficient file needs at least degrees 0 and 1")
    return PowerSeries(coeffs)


def write_coeff_series(path, series: PowerSeries) -> None:
    lines = [f"{c.real!r} {c.imag!r}" for c in (complex(v) for v in series.coeffs)]
    Path(path).write_text("\n".join(lines) + "\n")
