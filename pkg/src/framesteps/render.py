"""Text renderings of tableaux and GT patterns (ASCII and LaTeX)."""

from __future__ import annotations

from fractions import Fraction

from .gt import GTPattern
from .tableaux import Tableau


def _fmt(x) -> str:
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x)) if isinstance(x, (int, Fraction)) else f"{x:g}"


def tableau_ascii(t: Tableau) -> str:
    """French layout: bottom row printed last, skewed-out cells shown as ``.``."""
    if not t.rows:
        return "(empty)"
    w = max(len(str(x)) for r in t.rows for x in r) if t.size else 1
    lines = []
    for inner, row in zip(t.inner, t.rows):
        cells = ["." * w] * inner + [str(x).rjust(w) for x in row]
        lines.append(" ".join(cells).rstrip())
    return "\n".join(reversed(lines))


def gt_ascii(p: GTPattern) -> str:
    """Top row first; each lower row is shifted right by half a cell."""
    if not p.rows:
        return "(empty)"
    cells = [[_fmt(x) for x in r] for r in p.rows]
    w = max(len(c) for r in cells for c in r)
    gap = " " * (w + 1)
    step = (2 * w + 1) // 2
    lines = []
    for depth, row in enumerate(reversed(cells)):
        lines.append((" " * (step * depth) + gap.join(c.rjust(w) for c in row)).rstrip())
    return "\n".join(lines)


def tableau_latex(t: Tableau) -> str:
    if not t.rows:
        return r"\emptyset"
    body = []
    for inner, row in reversed(list(zip(t.inner, t.rows))):
        body.append(" & ".join([r"\none"] * inner + [str(x) for x in row]))
    return "\\begin{ytableau}\n" + " \\\\\n".join(body) + "\n\\end{ytableau}"


def gt_latex(p: GTPattern) -> str:
    if not p.rows:
        return r"\emptyset"
    lines = []
    for depth, row in enumerate(reversed(p.rows)):
        cells = [""] * depth + [c for x in row for c in (_fmt(x), "")][:-1]
        lines.append(" & ".join(cells))
    return "\\begin{matrix}\n" + " \\\\\n".join(lines) + "\n\\end{matrix}"


def render(obj, fmt: str = "ascii") -> str:
    if fmt not in ("ascii", "latex"):
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(obj, Tableau):
        return tableau_ascii(obj) if fmt == "ascii" else tableau_latex(obj)
    if isinstance(obj, GTPattern):
        return gt_ascii(obj) if fmt == "ascii" else gt_latex(obj)
    raise TypeError(f"cannot render {type(obj).__name__}")
