"""Parameter sweeps over the mixing angle, emitted as CSV files.

Every value flows through the full numerical pipeline, never the closed
forms, so the files double as regression fixtures.  Numbers are printed
with 17 significant digits (round-trip exact for binary64) and rows are
ordered by increasing ``r``; two runs with the same configuration produce
byte-identical files.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

import numpy as np

from . import unruh
from .report import PointReport, evaluate_point


class InvalidRangeError(ValueError):
    """Sweep bounds or step count are unusable."""


# Column layout per figure file; "III" abbreviates the (I, II) pair.
FIGURE_COLUMNS: dict[str, tuple[str, ...]] = {
    "fig2_entropy": ("r", "S_A", "S_I", "S_II"),
    "fig3_negativity": ("r", "N_AI", "N_III", "N_AII"),
    "fig4_eof": ("r", "EF_AI", "EF_III", "EF_AII"),
    "fig5_mutual_info": ("r", "I_AI", "I_III", "I_AII"),
    "fig6_tangles": ("r", "tau_AI", "tau_III", "tau_AII"),
    "fig7_eta": ("r", "eta_AI", "eta_III", "eta_AII"),
    "fig8_single_qubit": ("r", "sbar2_A", "sbar2_I", "sbar2_II"),
}

PAIR_SUFFIX = {("A", "I"): "AI", ("A", "II"): "AII", ("I", "II"): "III"}

DEFAULT_STEPS = 257  # both endpoints plus the dyadic midpoints of [0, pi/4]


@dataclass(frozen=True)
class SweepConfig:
    r_min: float = 0.0
    r_max: float = unruh.R_MAX
    steps: int = DEFAULT_STEPS
    figures: tuple[str, ...] = tuple(FIGURE_COLUMNS)
    out_dir: Path = field(default_factory=Path.cwd)
    plot: bool = True

    def __post_init__(self) -> None:
        if not 0.0 <= self.r_min <= self.r_max <= unruh.R_MAX:
            raise InvalidRangeError(
                f"need 0 <= r_min <= r_max <= pi/4, got [{self.r_min}, {self.r_max}]"
            )
        if self.steps < 2:
            raise InvalidRangeError(f"steps must be >= 2, got {self.steps}")
        unknown = [f for f in self.figures if f not in FIGURE_COLUMNS]
        if unknown:
            raise InvalidRangeError(f"unknown figure ids {unknown}")
        object.__setattr__(self, "figures", tuple(self.figures))
        object.__setattr__(self, "out_dir", Path(self.out_dir))


def format_value(x: float) -> str:
    return format(float(x), ".17g")


def grid(cfg: SweepConfig) -> list[float]:
    return [float(r) for r in np.linspace(cfg.r_min, cfg.r_max, cfg.steps)]


def point_row(report: PointReport) -> dict[str, float]:
    """Flatten one report into the full CSV column namespace."""
    row: dict[str, float] = {"r": report.r}
    for k, s in report.measures.entropies.items():
        row[f"S_{k}"] = s
    for pair, pm in report.measures.pairs.items():
        suffix = PAIR_SUFFIX[pair]
        row[f"N_{suffix}"] = pm.log_negativity
        row[f"EF_{suffix}"] = pm.eof
        row[f"I_{suffix}"] = pm.mutual_information
        row[f"tau_{suffix}"] = pm.tangle
    for pair, pp in report.complementarity.pairs.items():
        row[f"eta_{PAIR_SUFFIX[pair]}"] = pp.eta
    for k, qp in report.complementarity.qubits.items():
        row[f"sbar2_{k}"] = qp.sbar2
    return row


def write_csv(path: Path, columns: Iterable[str], rows: list[dict[str, float]]) -> None:
    columns = tuple(columns)
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(format_value(row[c]) for c in columns))
    # newline="" keeps the line endings LF on every platform
    with open(path, "w", encoding="ascii", newline="") as fh:
        fh.write("\n".join(lines) + "\n")


def run_sweep(cfg: SweepConfig) -> list[Path]:
    """Evaluate the grid and write one CSV (and optionally one PNG) per
    selected figure.  Returns the paths written."""
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    rows = [point_row(evaluate_point(r)) for r in grid(cfg)]
    written: list[Path] = []
    for fig_id in cfg.figures:
        path = cfg.out_dir / f"{fig_id}.csv"
        write_csv(path, FIGURE_COLUMNS[fig_id], rows)
        written.append(path)
    if cfg.plot:
        from . import figures

        written.extend(figures.render_figures(rows, cfg.figures, cfg.out_dir))
    return written
