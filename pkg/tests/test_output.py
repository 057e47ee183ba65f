"""Tests for JSON documents and the SVG depiction."""

import json
import xml.etree.ElementTree as ET

import pytest

from steiner_chains.core.geometry import axial_phase, construct_chain
from steiner_chains.core.serialization import chain_from_dict, chain_to_dict, dumps, format_number, loads_chain
from steiner_chains.utils.validators import DomainError, InputError
from steiner_chains.visualization.chain_svg import emit_chain_svg, write_chain_svg

SVG = "{http://www.w3.org/2000/svg}"


class TestSerialization:
    def test_numbers_use_seventeen_digits(self):
        assert format_number(0.1) == "0.10000000000000001"
        assert format_number(2.0) == "2"

    def test_non_finite_rejected(self):
        with pytest.raises(InputError):
            format_number(float("nan"))

    def test_dumps_is_valid_sorted_json(self):
        text = dumps({"b": [1, 2.5, True, None], "a": {"z": 0.1, "y": "s"}})
        assert text.index('"a"') < text.index('"b"')
        assert json.loads(text) == {"a": {"y": "s", "z": 0.1}, "b": [1, 2.5, True, None]}

    def test_chain_document_preserves_circles(self, gauge_6_1):
        chain = construct_chain(gauge_6_1, 0.7)
        restored = loads_chain(dumps(chain_to_dict(chain)))
        assert restored.circles == chain.circles
        assert restored.gauge == chain.gauge
        assert restored.phase == chain.phase

    @pytest.mark.parametrize("text", ["not json", "[]", '{"gauge": {}, "circles": []}',
                                      '{"gauge": {"R": 6, "r": 1, "d": 1, "n": "4"}, "circles": []}'])
    def test_malformed_documents(self, text):
        with pytest.raises(InputError):
            loads_chain(text)

    def test_invalid_gauge_in_document(self):
        doc = {"gauge": {"R": 6, "r": 1, "d": 2, "n": 4}, "circles": []}
        with pytest.raises(DomainError):
            chain_from_dict(doc)


def _circles(svg_text):
    root = ET.fromstring(svg_text)
    return root.findall(f".//{SVG}circle")


class TestChainSvg:
    def test_axial_chain_radii(self, gauge_6_1):
        svg = emit_chain_svg(construct_chain(gauge_6_1, axial_phase(4)))
        radii = sorted(float(c.get("r")) for c in _circles(svg))
        assert radii == pytest.approx([1.0, 2.0, 2.4, 2.4, 3.0, 6.0], abs=1e-6)

    def test_concentric_chain(self, concentric4):
        circles = _circles(emit_chain_svg(construct_chain(concentric4)))
        assert len(circles) == 6
        chain_radii = {c.get("r") for c in circles if c.get("class") == "chain"}
        assert len(chain_radii) == 1

    def test_view_box_fits_outer_circle(self, gauge_6_1):
        root = ET.fromstring(emit_chain_svg(construct_chain(gauge_6_1)))
        x, y, w, h = (float(v) for v in root.get("viewBox").split())
        assert (x, y, w, h) == pytest.approx((-6.3, -6.3, 12.6, 12.6))

    def test_precision(self, gauge_6_1):
        for circle in _circles(emit_chain_svg(construct_chain(gauge_6_1, 0.5))):
            for attr in ("cx", "cy", "r"):
                assert len(circle.get(attr).split(".")[1]) == 6

    def test_deterministic(self, gauge_6_1):
        chain = construct_chain(gauge_6_1, 1.234)
        assert emit_chain_svg(chain) == emit_chain_svg(chain)

    def test_write_to_file(self, gauge_6_1, tmp_path):
        chain = construct_chain(gauge_6_1, 0.2)
        path = write_chain_svg(chain, str(tmp_path / "chain.svg"), precision=3)
        with open(path, encoding="utf-8") as f:
            assert f.read() == emit_chain_svg(chain, precision=3)
