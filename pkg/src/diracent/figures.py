"""Render the sweep curves to PNG files next to the CSV output."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

# y-axis label and legend text per curve, keyed by figure id
_STYLE: dict[str, tuple[str, list[tuple[str, str]]]] = {
    "fig2_entropy": (
        "entropy (bits)",
        [("S_A", "mode A with rest"), ("S_I", "mode I with rest"), ("S_II", "mode II with rest")],
    ),
    "fig3_negativity": (
        "logarithmic negativity (bits)",
        [("N_AI", "A and I"), ("N_III", "I and II"), ("N_AII", "A and II")],
    ),
    "fig4_eof": (
        "entanglement of formation (bits)",
        [("EF_AI", "A and I"), ("EF_III", "I and II"), ("EF_AII", "A and II")],
    ),
    "fig5_mutual_info": (
        "mutual information (bits)",
        [("I_AI", "A and I"), ("I_III", "I and II"), ("I_AII", "A and II")],
    ),
    "fig6_tangles": (
        "tangle",
        [("tau_AI", "A and I"), ("tau_III", "I and II"), ("tau_AII", "A and II")],
    ),
    "fig7_eta": (
        "separable uncertainty",
        [("eta_AI", "A and I"), ("eta_III", "I and II"), ("eta_AII", "A and II")],
    ),
    "fig8_single_qubit": (
        "averaged single-qubit information",
        [("sbar2_A", "mode A"), ("sbar2_I", "mode I"), ("sbar2_II", "mode II")],
    ),
}

_LINESTYLES = ("-", "--", ":")


def _plt():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_figures(
    rows: list[dict[str, float]], figure_ids: Iterable[str], out_dir: Path
) -> list[Path]:
    """One PNG per figure id, drawn from already-evaluated sweep rows."""
    plt = _plt()
    out_dir = Path(out_dir)
    rs = [row["r"] for row in rows]
    written: list[Path] = []
    for fig_id in figure_ids:
        ylabel, curves = _STYLE[fig_id]
        fig, ax = plt.subplots(figsize=(6.0, 4.0))
        for (column, label), style in zip(curves, _LINESTYLES):
            ax.plot(rs, [row[column] for row in rows], style, label=label)
        ax.set_xlabel("acceleration parameter r")
        ax.set_ylabel(ylabel)
        ax.set_xlim(min(rs), max(rs))
        ax.grid(True, alpha=0.3)
        ax.legend()
        fig.tight_layout()
        path = out_dir / f"{fig_id}.png"
        fig.savefig(path, dpi=150)
        plt.close(fig)
        written.append(path)
    return written
