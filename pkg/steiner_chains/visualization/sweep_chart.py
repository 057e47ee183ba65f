"""
Chart of S(t) and L(t) over the poristic bend range
Renders a sweep table to PNG with the closed-form extremes marked.
"""

import os
from dataclasses import dataclass
from typing import Optional

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from ..core.extremal import ExtremalResult, SweepTable  # noqa: E402
from ..utils.logger import get_logger  # noqa: E402


@dataclass
class ChartConfig:
    """Chart configuration"""
    width: int = 12          # figure width (inches)
    height: int = 8          # figure height (inches)
    dpi: int = 150
    title: str = ""

    # Style
    line_width: float = 2.0
    grid_alpha: float = 0.3
    font_size: int = 11


class SweepChartGenerator:
    """Two-panel chart: sum of squared radii on top, sum of radii below"""

    def __init__(self):
        plt.style.use('default')
        self._logger = get_logger(__name__)
        self.colors = {
            'area': '#1f77b4',
            'perimeter': '#ff7f0e',
            'max': '#d62728',
            'min': '#2ca02c',
        }

    def _mark_extremes(self, ax, result: Optional[ExtremalResult], config: ChartConfig) -> None:
        if result is None:
            return
        ax.axhline(y=result.raw_max, color=self.colors['max'], linestyle='--',
                   linewidth=1.5, alpha=0.7, label=f'max ({result.argmax.kind.value}) {result.raw_max:.6g}')
        ax.axhline(y=result.raw_min, color=self.colors['min'], linestyle='--',
                   linewidth=1.5, alpha=0.7, label=f'min ({result.argmin.kind.value}) {result.raw_min:.6g}')

    def generate_sweep_chart(
        self,
        table: SweepTable,
        output_path: str,
        config: Optional[ChartConfig] = None,
        area: Optional[ExtremalResult] = None,
        perimeter: Optional[ExtremalResult] = None,
    ) -> str:
        """Save the chart to output_path and return it"""
        config = config or ChartConfig()
        fig, (ax_s, ax_l) = plt.subplots(2, 1, figsize=(config.width, config.height), sharex=True)

        ax_s.plot(table.t, table.S, color=self.colors['area'], linewidth=config.line_width, label='S(t)')
        self._mark_extremes(ax_s, area, config)
        ax_s.set_ylabel("sum of squared radii", fontsize=config.font_size)

        ax_l.plot(table.t, table.L, color=self.colors['perimeter'], linewidth=config.line_width, label='L(t)')
        self._mark_extremes(ax_l, perimeter, config)
        ax_l.set_ylabel("sum of radii", fontsize=config.font_size)
        ax_l.set_xlabel("bend t", fontsize=config.font_size)

        for ax in (ax_s, ax_l):
            ax.grid(True, alpha=config.grid_alpha)
            ax.legend(loc='best')
        fig.suptitle(config.title or "Poristic 4-chains", fontsize=config.font_size + 2, fontweight='bold')

        directory = os.path.dirname(output_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        fig.tight_layout()
        fig.savefig(output_path, dpi=config.dpi, bbox_inches='tight')
        plt.close(fig)
        self._logger.info(f"Sweep chart saved to {output_path}")
        return output_path
