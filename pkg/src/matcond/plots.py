"""SVG figure panels for experiment output.

Each panel shows up to four series -- upper/lower bounds for the structured
and unstructured level-2 condition numbers -- on a log-scale y axis.  Output
is deterministic: fixed hash salt, no timestamps, fonts embedded as paths.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

__all__ = ["SERIES_ORDER", "save_panel"]

# legend labels in fixed draw order
SERIES_ORDER = ("ub uscond2", "lb uscond2", "ub scond2", "lb scond2")

_STYLE = {
    "ub uscond2": dict(color="#1f77b4", marker="o", linestyle="-"),
    "lb uscond2": dict(color="#1f77b4", marker="v", linestyle="--"),
    "ub scond2": dict(color="#d62728", marker="s", linestyle="-"),
    "lb scond2": dict(color="#d62728", marker="^", linestyle="--"),
}


def _clean(xs, ys):
    # log-scale axes cannot show missing or nonpositive points
    pts = [
        (x, y)
        for x, y in zip(xs, ys)
        if x is not None and y is not None and y > 0.0
    ]
    return [p[0] for p in pts], [p[1] for p in pts]


def save_panel(path, x, series, xlabel, title, logx=True) -> None:
    """Write one panel.

    ``series`` maps a label from SERIES_ORDER to a list of values aligned
    with ``x``; None or nonpositive values are skipped point-wise.
    """
    with plt.rc_context({"svg.hashsalt": "matcond"}):
        fig, ax = plt.subplots(figsize=(6.0, 4.5))
        try:
            for label in SERIES_ORDER:
                if label not in series:
                    continue
                xs, ys = _clean(x, series[label])
                if not xs:
                    continue
                ax.plot(xs, ys, label=label, markersize=4.5, **_STYLE[label])
            ax.set_yscale("log")
            if logx:
                ax.set_xscale("log")
            ax.set_xlabel(xlabel)
            ax.set_ylabel("level-2 bound")
            ax.set_title(title)
            ax.grid(True, which="major", alpha=0.3)
            ax.legend(loc="best", fontsize=9)
            fig.tight_layout()
            fig.savefig(path, format="svg", metadata={"Date": None})
        finally:
            plt.close(fig)
