"""Figure series: one CSV and one gnuplot script per figure."""

from __future__ import annotations

from collections.abc import Callable, Sequence
import math
from pathlib import Path

from ..core import midpoints
from ..enums import Figure
from ..graphons.base import Graphon
from ..utils.csv_io import comment_line, write_rows
from ..utils.logger import LOGGER
from .records import RunRecord, aggregate_means


def _inverse_fourth_root(n: float) -> float:
    return n**-0.25


def _log_rate(n: float) -> float:
    return math.sqrt(math.log(n) / n)


def _mean_with_reference(
    records: Sequence[RunRecord], metric: str, reference: Callable[[float], float]
) -> list[list[float]]:
    """Rows (n, mean, count, reference) with the reference anchored at the first mean."""
    means = aggregate_means(records, metric)
    if not means:
        return []
    first_n, (first_mean, _) = next(iter(means.items()))
    scale = first_mean / reference(first_n)
    return [[n, mean, count, scale * reference(n)] for n, (mean, count) in means.items()]


def _script(figure: Figure, master_seed: int, ylabel: str, plot: str, logscale: str = "xy") -> str:
    lines = [
        comment_line(master_seed),
        'set datafile separator ","',
        "set key autotitle columnhead",
        "set terminal pngcairo size 800,600",
        f'set output "{figure}.png"',
    ]
    if logscale:
        lines.append(f"set logscale {logscale}")
    lines.extend(['set xlabel "N"', f'set ylabel "{ylabel}"', plot])
    return "\n".join(lines) + "\n"


def _series_script(figure: Figure, master_seed: int, ylabel: str, reference: str) -> str:
    return _script(
        figure,
        master_seed,
        ylabel,
        f'plot "{figure}.csv" using 1:2 with linespoints title "{ylabel}", \\\n'
        f'     "{figure}.csv" using 1:4 with lines dashtype 2 title "{reference}"',
    )


def _write(out_dir: Path, figure: Figure, header: Sequence[str], rows: list, script: str, master_seed: int) -> list[Path]:
    csv_path = write_rows(out_dir / f"{figure}.csv", header, rows, master_seed)
    script_path = out_dir / f"{figure}.gp"
    script_path.write_text(script, encoding="utf-8")
    return [csv_path, script_path]


def emit_figures(
    records: Sequence[RunRecord],
    out_dir: str | Path,
    *,
    graphon: Graphon,
    master_seed: int,
    limit_mu2: float | None = None,
    pixel_resolution: int = 100,
) -> list[Path]:
    """Write the series of every figure the records hold data for.

    The pixel picture of the graphon is always written.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths: list[Path] = []

    points = midpoints(pixel_resolution)
    pixels = graphon.pixel_matrix(pixel_resolution)
    paths += _write(
        out_dir,
        Figure.PIXEL,
        ("x", "y", "w"),
        [[points[i], points[j], pixels[i, j]] for i in range(pixel_resolution) for j in range(pixel_resolution)],
        _script(
            Figure.PIXEL,
            master_seed,
            "y",
            f'set xlabel "x"\nset yrange [*:*] reverse\n'
            f'plot "{Figure.PIXEL}.csv" using 1:2:3 with image notitle',
            logscale="",
        ),
        master_seed,
    )

    header = ("n", "mean", "count", "reference")
    if rows := _mean_with_reference(records, "thm1_lhs", _inverse_fourth_root):
        paths += _write(
            out_dir,
            Figure.EIGENVALUE_DISTANCE,
            header,
            rows,
            _series_script(Figure.EIGENVALUE_DISTANCE, master_seed, "||mu_N - d||_2", "N^(-1/4)"),
            master_seed,
        )

    if rows := _mean_with_reference(records, "mu2_diff", _log_rate):
        paths += _write(
            out_dir,
            Figure.SPECTRAL_GAP_DIFFERENCE,
            header,
            rows,
            _series_script(
                Figure.SPECTRAL_GAP_DIFFERENCE, master_seed, "|mu_2 - mu_2 bar|", "(log N / N)^(1/2)"
            ),
            master_seed,
        )

    mu2 = aggregate_means(records, "mu2")
    mu2_bar = aggregate_means(records, "mu2_bar")
    if mu2 and mu2_bar:
        limit = math.nan if limit_mu2 is None else limit_mu2
        paths += _write(
            out_dir,
            Figure.SPECTRAL_GAP_LIMIT,
            ("n", "mu2", "mu2_bar", "limit"),
            [[n, mean, mu2_bar.get(n, (math.nan, 0))[0], limit] for n, (mean, _) in mu2.items()],
            _script(
                Figure.SPECTRAL_GAP_LIMIT,
                master_seed,
                "mu_2",
                f'plot "{Figure.SPECTRAL_GAP_LIMIT}.csv" using 1:2 with linespoints, \\\n'
                f'     "{Figure.SPECTRAL_GAP_LIMIT}.csv" using 1:3 with linespoints, \\\n'
                f'     "{Figure.SPECTRAL_GAP_LIMIT}.csv" using 1:4 with lines dashtype 2',
                logscale="x",
            ),
            master_seed,
        )

    spectral = aggregate_means(records, "r_spectral")
    limit_values = aggregate_means(records, "r_graphon")
    if spectral and limit_values:
        paths += _write(
            out_dir,
            Figure.RESISTANCE,
            ("n", "r_spectral", "r_graphon"),
            [[n, mean, limit_values.get(n, (math.nan, 0))[0]] for n, (mean, _) in spectral.items()],
            _script(
                Figure.RESISTANCE,
                master_seed,
                "R_ave",
                f'plot "{Figure.RESISTANCE}.csv" using 1:2 with linespoints, \\\n'
                f'     "{Figure.RESISTANCE}.csv" using 1:3 with lines dashtype 2',
            ),
            master_seed,
        )

    if rows := _mean_with_reference(records, "r_rel_error", _inverse_fourth_root):
        paths += _write(
            out_dir,
            Figure.RESISTANCE_RELATIVE_ERROR,
            header,
            rows,
            _series_script(
                Figure.RESISTANCE_RELATIVE_ERROR, master_seed, "relative error", "N^(-1/4)"
            ),
            master_seed,
        )

    LOGGER.info("<Figures> %s files written to %s", len(paths), out_dir)
    return paths


__all__ = ["emit_figures"]
