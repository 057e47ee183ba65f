"""
Visualization module

Provides the SVG chain depiction and the sweep chart.
"""

from .chain_svg import emit_chain_svg, write_chain_svg
from .sweep_chart import ChartConfig, SweepChartGenerator

__all__ = ['emit_chain_svg', 'write_chain_svg', 'ChartConfig', 'SweepChartGenerator']
