"""JSON and Markdown rendering of suite reports.

JSON output carries integers and strings only; rationals appear as ``"p/q"``
(or ``"p"`` when integral).  Key order is fixed by construction, so equal
reports render to identical bytes.
"""

from __future__ import annotations

import json

from ..jets import jet_indices
from .suite import FAIL, GENERICITY_NOTE, PASS, SKIPPED

SCHEMA_VERSION = 1
ROMAN = ["", "I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "X"]


def rat_str(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def form_name(t):
    return ROMAN[t] if t < len(ROMAN) else f"I^{t}"


def jet_label(alpha, varnames):
    if not any(alpha):
        return "x"
    return "x_" + "".join(name * e for name, e in zip(varnames, alpha))


def report_to_dict(r, include_timings=False):
    cfg = r.config
    out = {
        "schema": SCHEMA_VERSION,
        "variety": r.variety,
        "k": r.k,
        "N": r.N,
        "config": {"max_order": cfg.max_order, "seed": cfg.seed, "samples": cfg.samples, "bound": cfg.bound},
        "genericity": {"protocol": GENERICITY_NOTE, "working_point": [rat_str(x) for x in r.sample_point]},
        "dims": list(r.dims),
        "expected_dims": list(r.expected),
        "deltas": [{"t": t, "delta": delta} for t, delta in enumerate(r.deltas, start=2)],
        "fundamental_forms": [
            {"t": t, "projective_dim": S.projective_dim, "forms": S.to_strings()}
            for t, S in sorted(r.forms.items())
        ],
        "laplace": {
            "t": 2,
            "count": len(r.laplace),
            "rows": [jet_label(a, r.varnames) for a in jet_indices(r.k, 2)],
            "relations": [[c.to_str(r.varnames) for c in rel.coefficients] for rel in r.laplace],
        },
        "gauss": [],
        "checks": [],
    }
    for g in r.gauss:
        entry = {"s": g.s, "fiber_dim": g.fiber_dim, "image_dim": g.image_dim, "vertex_dim": g.vertex_dim,
                 "route": g.route, "bound_rhs": g.bound_rhs}
        if g.tan_dim is not None:
            entry["tan_dim"] = g.tan_dim
        out["gauss"].append(entry)
    for c in r.checks:
        entry = {"check": c.name}
        if c.index is not None:
            entry["index"] = c.index
        entry["status"] = c.status
        if c.detail is not None:
            entry["detail" if c.status != SKIPPED else "reason"] = c.detail
        out["checks"].append(entry)
    out["summary"] = {s: sum(c.status == s for c in r.checks) for s in (PASS, FAIL, SKIPPED)}
    if include_timings:
        out["timings_ms"] = {key: int(round(v * 1000)) for key, v in r.timings.items()}
    return out


def _dumps(obj):
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":")) + "\n"


def _num(n):
    # typographic minus, as in the printed examples
    return f"−{-n}" if n < 0 else str(n)


def _markdown(r, include_timings=False):
    cfg = r.config
    lines = [
        f"# {r.variety}",
        "",
        f"- k = {r.k}, N = {r.N}; seed {cfg.seed}, {cfg.samples} samples, bound {cfg.bound}, max order {cfg.max_order}",
        f"- genericity: {GENERICITY_NOTE}",
        f"- working point: ({', '.join(rat_str(x) for x in r.sample_point)})",
        "",
        "## Osculating dimensions",
        "",
        "| t | d_t | expected | Δ_t |",
        "|---|-----|----------|-----|",
    ]
    for t, (dt, et) in enumerate(zip(r.dims, r.expected), start=1):
        delta = "" if t == 1 else _num(r.deltas[t - 2])
        lines.append(f"| {t} | {dt} | {et} | {delta} |")
    lines += ["", "## Fundamental forms", ""]
    for t, S in sorted(r.forms.items()):
        if S.is_empty:
            lines.append(f"- Δ_{t} = {_num(S.projective_dim)} (|{form_name(t)}| empty)")
        else:
            lines.append(f"- Δ_{t} = {_num(S.projective_dim)}: |{form_name(t)}| = ⟨{', '.join(S.to_strings())}⟩")
    lines += ["", "## Laplace relations (t = 2)", ""]
    if not r.laplace:
        lines.append("- none")
    labels = [jet_label(a, r.varnames) for a in jet_indices(r.k, 2)]
    for rel in r.laplace:
        terms = [f"({c.to_str(r.varnames)})*{lab}" for c, lab in zip(rel.coefficients, labels) if not c.is_zero]
        lines.append(f"- {' + '.join(terms)} = 0")
    lines += ["", "## Gauss maps", "", "| s | fiber dim m | image dim | vertex dim | route | dim Tan^s |",
              "|---|-------------|-----------|------------|-------|-----------|"]
    for g in r.gauss:
        tan = "" if g.tan_dim is None else str(g.tan_dim)
        lines.append(f"| {g.s} | {g.fiber_dim} | {g.image_dim} | {g.vertex_dim} | {g.route} | {tan} |")
    lines += ["", "## Checks", "", "| check | index | status | detail |", "|-------|-------|--------|--------|"]
    for c in r.checks:
        idx = "" if c.index is None else str(c.index)
        lines.append(f"| {c.name} | {idx} | {c.status} | {c.detail or ''} |")
    if include_timings:
        lines += ["", "## Timings (ms)", ""]
        lines += [f"- {key}: {int(round(v * 1000))}" for key, v in r.timings.items()]
    return "\n".join(lines) + "\n"


def render_report(r, format="json", include_timings=False):
    if format == "json":
        return _dumps(report_to_dict(r, include_timings))
    if format == "markdown":
        return _markdown(r, include_timings)
    raise ValueError(f"unknown report format {format!r}")


def render_reports(reports, format="json", include_timings=False):
    """Several reports plus a FAIL/PASS/SKIPPED summary, as one document."""
    totals = {s: sum(c.status == s for r in reports for c in r.checks) for s in (PASS, FAIL, SKIPPED)}
    if format == "json":
        return _dumps({"reports": [report_to_dict(r, include_timings) for r in reports], "summary": totals})
    if format == "markdown":
        body = "\n".join(_markdown(r, include_timings) for r in reports)
        summary = ", ".join(f"{n} {s}" for s, n in totals.items())
        return body + f"\n# Summary\n\n{summary}\n"
    raise ValueError(f"unknown report format {format!r}")
