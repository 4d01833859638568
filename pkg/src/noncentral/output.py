"""Deterministic CSV and gnuplot-script writers (no plotting library needed)."""
import os

from . import __version__

FMT = "%.17g"


def fmt(v):
    if isinstance(v, (int,)) and not isinstance(v, bool):
        return str(v)
    if isinstance(v, str):
        return v
    return FMT % float(v)


def write_csv(path, columns, rows, header=(), units=None):
    """Write comma-separated rows preceded by ``#`` header lines.

    ``header`` is a sequence of (key, value) pairs echoed as ``# key = value``.
    Integers are written as integers, floats with 17 significant digits.
    """
    lines = [f"# spectra {__version__}"]
    for key, value in header:
        lines.append(f"# {key} = {value}")
    if units:
        lines.append("# units: " + ", ".join(f"{k} [{v}]" for k, v in units.items()))
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(fmt(v) for v in row))
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
    return path


def read_csv(path):
    """Column names and float rows of a file written by :func:`write_csv`."""
    with open(path) as fh:
        lines = [ln.rstrip("\n") for ln in fh if not ln.startswith("#")]
    cols = lines[0].split(",")
    rows = [[float(v) for v in ln.split(",")] for ln in lines[1:] if ln]
    return cols, rows


def write_gnuplot(path, csv_name, png_name, xcol, ycols, xlabel, ylabel, title="", style="lines"):
    """Plot script that reproduces the PNG from the CSV with gnuplot."""
    lines = [
        "set datafile separator ','",
        "set datafile commentschars '#'",
        "set key autotitle columnhead",
        "set terminal pngcairo size 800,560",
        f"set output '{os.path.splitext(png_name)[0]}-gnuplot.png'",
        f"set xlabel '{xlabel}'",
        f"set ylabel '{ylabel}'",
    ]
    if title:
        lines.append(f"set title '{title}'")
    parts = [f"'{csv_name}' using {xcol}:{c} with {style}" for c in ycols]
    lines.append("plot " + ", \\\n     ".join(parts))
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")
    return path
