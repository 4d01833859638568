"""PNG rendering for the CLI report path.

Imported lazily so the numerical modules never pull in matplotlib.  The
Agg backend and stripped metadata keep repeated renders byte-identical.
"""
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

STYLE = {
    "figure.figsize": (8.0, 5.6),
    "figure.dpi": 100,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "font.size": 11,
    "lines.linewidth": 1.4,
    "svg.hashsalt": "spectra",
}


def line_plot(path, x, series, xlabel, ylabel, title="", markers=False, points=()):
    """Save a line plot of ``series`` (label -> y values) against ``x``.

    ``points`` is an optional list of (label, xs, ys) drawn as stems, used
    for point masses of a measure.
    """
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        for label, y in series.items():
            ax.plot(x, y, "o" if markers else "-", label=label, ms=3)
        for label, xs, ys in points:
            ax.vlines(xs, 0, ys, linestyles=":", label=label)
        ax.set_xlabel(xlabel)
        ax.set_ylabel(ylabel)
        if title:
            ax.set_title(title)
        if series or points:
            ax.legend(fontsize=8)
        fig.tight_layout()
        fig.savefig(path, format="png", metadata={"Software": None})
        plt.close(fig)
    return path
