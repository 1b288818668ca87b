#!/usr/bin/env python3
"""Render the photon-number sweep CSV into the reference figure.

Standalone companion to the dcesim CLI: it consumes the five-column
`fig1` CSV (T_duration_s, N_vacuum, N_thermal, thermal_floor,
variance_band) and draws the thermal curve (solid), the vacuum curve
(dashed) and the thermal background band [floor - band, floor + band]
clipped at zero, on a log photon-number axis by default.

No physics is recomputed here: the plot is a pure function of the CSV.

Usage:
    figures <in.csv> <out-image> [--linear] [--title TEXT]

Exits nonzero on missing or malformed columns and never leaves a partial
output file behind.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
import tempfile
from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

EXPECTED_COLUMNS = ["T_duration_s", "N_vacuum", "N_thermal",
                    "thermal_floor", "variance_band"]


class FigureInputError(ValueError):
    pass


@dataclass
class FigureSpec:
    input_csv: str
    output_image: str
    xlabel: str = "drive duration T [s]"
    ylabel: str = "photons in the fundamental mode"
    log_axis: bool = True
    title: str = ""
    extra: dict = field(default_factory=dict)


def load_fig1_csv(path: str) -> dict:
    """Parse and validate the sweep CSV; returns column-name -> float array."""
    try:
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            try:
                header = next(reader)
            except StopIteration:
                raise FigureInputError(f"{path}: empty file") from None
            rows = list(reader)
    except OSError as exc:
        raise FigureInputError(f"cannot read {path}: {exc}") from None
    if header != EXPECTED_COLUMNS:
        raise FigureInputError(
            f"{path}: expected columns {EXPECTED_COLUMNS}, got {header}")
    if not rows:
        raise FigureInputError(f"{path}: no data rows")
    data = {}
    try:
        table = np.array([[float(cell) for cell in row] for row in rows])
    except ValueError as exc:
        raise FigureInputError(f"{path}: non-numeric cell ({exc})") from None
    if table.shape[1] != len(EXPECTED_COLUMNS):
        raise FigureInputError(f"{path}: ragged rows")
    for i, name in enumerate(EXPECTED_COLUMNS):
        data[name] = table[:, i]
    return data


def build_figure(data: dict, spec: FigureSpec):
    """Assemble the matplotlib figure; the data series are plotted verbatim."""
    fig, ax = plt.subplots(figsize=(7.0, 5.0))
    t = data["T_duration_s"]
    floor = data["thermal_floor"]
    band = data["variance_band"]
    lower = np.clip(floor - band, 0.0, None)
    upper = floor + band
    ax.fill_between(t, lower, upper, color="0.75", alpha=0.6, linewidth=0,
                    label="thermal background (half variance)")
    ax.plot(t, data["N_thermal"], "-", color="tab:red", linewidth=1.8,
            label="with thermal occupation")
    ax.plot(t, data["N_vacuum"], "--", color="tab:blue", linewidth=1.6,
            label="vacuum only")
    if spec.log_axis:
        ax.set_yscale("log")
    ax.set_xlabel(spec.xlabel)
    ax.set_ylabel(spec.ylabel)
    if spec.title:
        ax.set_title(spec.title)
    ax.set_xlim(t[0], t[-1])
    ax.legend(loc="lower right")
    fig.tight_layout()
    return fig, ax


def render_fig1(spec: FigureSpec) -> str:
    """Validate, draw and atomically write the image; returns the final path."""
    data = load_fig1_csv(spec.input_csv)
    fig, _ = build_figure(data, spec)
    out_dir = os.path.dirname(os.path.abspath(spec.output_image)) or "."
    suffix = os.path.splitext(spec.output_image)[1] or ".png"
    fd, tmp_path = tempfile.mkstemp(suffix=suffix, dir=out_dir)
    os.close(fd)
    try:
        fig.savefig(tmp_path)
        os.replace(tmp_path, spec.output_image)
    except Exception:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise
    finally:
        plt.close(fig)
    return spec.output_image


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="figures", description="render the photon-number sweep CSV")
    parser.add_argument("input_csv")
    parser.add_argument("output_image")
    parser.add_argument("--linear", action="store_true",
                        help="linear photon-number axis instead of log")
    parser.add_argument("--title", default="")
    args = parser.parse_args(argv)
    spec = FigureSpec(input_csv=args.input_csv, output_image=args.output_image,
                      log_axis=not args.linear, title=args.title)
    try:
        render_fig1(spec)
    except FigureInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
