"""Figure rendering for report documents and bound-curve tables.

Everything draws through the Agg backend and writes straight to a file;
the matplotlib import lives here so library users who never plot do not
pay for it.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

_CURVE_STYLE = {
    "log2_eq16": ("entropy bound", "tab:blue", "-"),
    "log2_eq17": ("sqrt(e) polynomial bound", "tab:orange", "--"),
    "log2_eq1": ("doubly-even comparison bound", "tab:green", "-."),
    "log2_baseline": ("binomial baseline", "tab:gray", ":"),
}


def plot_bound_curves(table: dict, path: str) -> None:
    """Render a curve table (see report.bound_curve_table) to an image file."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ws = [row["w"] for row in table["rows"]]
    for key, (label, color, style) in _CURVE_STYLE.items():
        pts = [(w, row[key]) for w, row in zip(ws, table["rows"]) if row[key] is not None]
        if not pts:
            continue
        ax.plot(*zip(*pts), style, color=color, label=label, linewidth=1.4)
    cfg = table["config"]
    title = f"bound curves, n={cfg['n']}, k={cfg['k']}"
    if cfg["d"] is not None:
        title += f", d={cfg['d']}"
    ax.set_title(title)
    ax.set_xlabel("weight w")
    ax.set_ylabel("log2 of bound")
    ax.grid(alpha=0.3)
    ax.legend(fontsize=8)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def plot_report(doc: dict, path: str) -> None:
    """Render a report's per-weight counts against the bound curves."""
    fig, ax = plt.subplots(figsize=(7, 4.5))
    rows = doc["bounds"].get("rows", [])
    ws = [r["w"] for r in rows]
    for key, pick in (
        ("log2_eq16", lambda r: r["eq16"]),
        ("log2_eq17", lambda r: r["eq17"]),
        ("log2_eq1", lambda r: r["eq1"]),
    ):
        label, color, style = _CURVE_STYLE[key]
        pts = [(w, pick(r)["log2"]) for w, r in zip(ws, rows) if pick(r)["applicable"]]
        if pts:
            ax.plot(*zip(*pts), style, color=color, label=label, linewidth=1.4)
    label, color, style = _CURVE_STYLE["log2_baseline"]
    if rows:
        ax.plot(ws, [r["baseline"]["log2"] for r in rows], style, color=color,
                label=label, linewidth=1.4)
    counted = [(r["w"], r["log2_count"]) for r in rows if r["log2_count"] is not None]
    if counted:
        ax.plot(*zip(*counted), "o", color="black", label="log2 A_w", markersize=5)
    zero = [r["w"] for r in rows if r["log2_count"] is None]
    if zero:
        # weights with no codewords sit below any log scale; mark them on the axis
        ax.plot(zero, [0.0] * len(zero), "x", color="black", label="A_w = 0")
    meta = doc["code"]
    ax.set_title(f"{meta['name']}  [{meta['n']},{meta['k']}] d={meta['d']}")
    ax.set_xlabel("weight w")
    ax.set_ylabel("log2")
    ax.grid(alpha=0.3)
    ax.legend(fontsize=8)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
