"""
SVG depiction of a Steiner chain and its Soddy circles.

Output is deterministic: fixed element order, fixed attribute order and a fixed
number of decimals. The y axis is flipped so the picture keeps math orientation.
"""

import xml.etree.ElementTree as ET
from typing import Optional, Tuple

from ..core.geometry import Chain, Circle

SVG_NS = "http://www.w3.org/2000/svg"


def _fmt(value: float, precision: int) -> str:
    text = f"{value:.{precision}f}"
    # no "-0.000000"
    if float(text) == 0.0:
        text = f"{0.0:.{precision}f}"
    return text


def svgroot(half: float, precision: int) -> ET.Element:
    side = _fmt(2.0 * half, precision)
    corner = _fmt(-half, precision)
    return ET.Element(
        "svg",
        xmlns=SVG_NS,
        version="1.1",
        viewBox=f"{corner} {corner} {side} {side}",
    )


def svgcircle(parent: ET.Element, circle: Circle, role: str, precision: int) -> ET.Element:
    return ET.SubElement(
        parent,
        "circle",
        cx=_fmt(circle.cx, precision),
        cy=_fmt(-circle.cy, precision),
        r=_fmt(circle.radius, precision),
        attrib={"class": role},
    )


def emit_chain_svg(
    chain: Chain,
    soddy: Optional[Tuple[Circle, Circle]] = None,
    precision: int = 6,
    margin: float = 0.05,
) -> str:
    """SVG document with the outer Soddy circle, the chain circles, then the inner Soddy circle"""
    inner, outer = soddy if soddy is not None else chain.soddy_circles()
    half = (max(abs(outer.cx), abs(outer.cy)) + outer.radius) * (1.0 + margin)

    root = svgroot(half, precision)
    stroke = _fmt(outer.radius / 500.0, precision)
    group = ET.SubElement(root, "g", fill="none", stroke="black", attrib={"stroke-width": stroke})
    svgcircle(group, outer, "soddy-outer", precision)
    for circle in chain.circles:
        svgcircle(group, circle, "chain", precision)
    svgcircle(group, inner, "soddy-inner", precision)

    ET.indent(root)
    return ET.tostring(root, encoding="unicode") + "\n"


def write_chain_svg(chain: Chain, path: str, **kwargs) -> str:
    with open(path, "w", encoding="utf-8") as f:
        f.write(emit_chain_svg(chain, **kwargs))
    return path
