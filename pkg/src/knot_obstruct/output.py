"""Text, JSON, CSV and SVG output for the command line front end."""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .obstruction import ObstructionReport
from .polycore import CyclotomicFactorization
from .signature import JumpSpectrum, StepFunction

SCHEMA_VERSION = 1


def factorization_list(f: CyclotomicFactorization) -> list[dict]:
    return [{"n": n, "exp": e} for n, e in sorted(f.factors.items())]


def jumps_list(s: JumpSpectrum) -> list[dict]:
    return [{"num": x.numerator, "den": x.denominator, "jump": j} for x, j in s.items()]


def report_dict(report: ObstructionReport) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "input": str(report.knot),
        "tau": report.tau,
        "alexander_coeffs": [str(c) for c in report.alexander.coeffs],
        "factorization": factorization_list(report.factorization),
        "jumps": jumps_list(report.spectrum),
        "forced_factor": factorization_list(report.forced_factor),
        "forced_degree": report.forced_degree,
        "checks": [{"name": c.name, "outcome": c.outcome, "reason": c.reason} for c in report.checks],
        "verdict": report.verdict,
    }


def report_json(report: ObstructionReport) -> str:
    return json.dumps(report_dict(report), indent=2, ensure_ascii=False) + "\n"


def report_text(report: ObstructionReport) -> str:
    lines = [
        f"knot:           {report.knot}",
        f"tau:            {report.tau}",
        f"alexander:      {report.alexander}",
        f"factorization:  {report.factorization}",
        f"singular pts:   {len(report.spectrum)}",
        f"forced factor:  {report.forced_factor} (degree {report.forced_degree})",
        "checks:",
    ]
    for c in report.checks:
        lines.append(f"  [{c.outcome}] {c.name}: {c.reason}")
    lines.append(f"verdict:        {report.verdict}")
    return "\n".join(lines) + "\n"


def jumps_table(s: JumpSpectrum) -> str:
    rows = ["angle\tjump"]
    rows += [f"{x}\t{j:+d}" for x, j in s.items()]
    return "\n".join(rows) + "\n"


def sample_points(f: StepFunction) -> list[Fraction]:
    """Each breakpoint plus the midpoint of every interval it cuts (0, 1) into."""
    pts = [Fraction(0), *f.breakpoints, Fraction(1)]
    out = []
    for a, b in zip(pts, pts[1:]):
        if a > 0:
            out.append(a)
        out.append((a + b) / 2)
    return out


def signature_csv(f: StepFunction) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t_num", "t_den", "sigma"])
    for t in sample_points(f):
        w.writerow([t.numerator, t.denominator, f(t)])
    return buf.getvalue()


def signature_text(f: StepFunction) -> str:
    pts = [Fraction(0), *f.breakpoints, Fraction(1)]
    rows = ["interval\tsigma"]
    for i, (a, b) in enumerate(zip(pts, pts[1:])):
        rows.append(f"({a}, {b})\t{f.values[i]}")
    return "\n".join(rows) + "\n"


def signature_svg(f: StepFunction, title: str = "", width: int = 640, height: int = 360,
                  t_max: Fraction = Fraction(1, 2)) -> str:
    """Step plot of sigma on [0, t_max] with each jump angle labeled as a fraction."""
    margin = 48
    breaks = [x for x in f.breakpoints if x <= t_max]
    shown = list(f.values[: len(breaks) + 1])
    lo, hi = min(shown + [0]), max(shown + [0])
    if lo == hi:
        lo, hi = lo - 1, hi + 1
    plot_w, plot_h = width - 2 * margin, height - 2 * margin

    def X(t) -> float:
        return margin + float(Fraction(t) / t_max) * plot_w

    def Y(v) -> float:
        return margin + (hi - v) / (hi - lo) * plot_h

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    if title:
        out.append(f'<text x="{width / 2:.1f}" y="20" text-anchor="middle" font-size="14">{title}</text>')
    # axes
    out.append(f'<line x1="{X(0):.2f}" y1="{Y(0):.2f}" x2="{X(t_max):.2f}" y2="{Y(0):.2f}" stroke="#888"/>')
    out.append(f'<line x1="{X(0):.2f}" y1="{Y(lo):.2f}" x2="{X(0):.2f}" y2="{Y(hi):.2f}" stroke="#888"/>')
    out.append(f'<text x="{X(t_max):.2f}" y="{Y(0) - 6:.2f}" text-anchor="end">t = {t_max}</text>')
    for v in range(lo, hi + 1, 2 if hi - lo > 10 else 1):
        out.append(f'<text x="{X(0) - 6:.2f}" y="{Y(v) + 4:.2f}" text-anchor="end">{v}</text>')
    # one horizontal segment per interval
    edges = [Fraction(0), *breaks, t_max]
    for i, (a, b) in enumerate(zip(edges, edges[1:])):
        y = Y(shown[i])
        out.append(f'<line class="step" x1="{X(a):.2f}" y1="{y:.2f}" x2="{X(b):.2f}" y2="{y:.2f}" '
                   f'stroke="black" stroke-width="2"/>')
    for i, x in enumerate(breaks):
        out.append(f'<line x1="{X(x):.2f}" y1="{Y(lo):.2f}" x2="{X(x):.2f}" y2="{Y(hi):.2f}" '
                   f'stroke="#ccc" stroke-dasharray="3,3"/>')
        out.append(f'<text class="jump" x="{X(x):.2f}" y="{height - margin + 16:.2f}" '
                   f'text-anchor="middle" data-jump="{f.jump_at(i)}">{x}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
