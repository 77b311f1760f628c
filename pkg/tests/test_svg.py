import pytest

from tilingforge.constraints import triangle_spec
from tilingforge.exactnum import QRoot3, SQRT3
from tilingforge.search import SearchConfig, render_svg, run_search
from tilingforge.tilealgebra import tile_from_sides

ISO = tile_from_sides(1, 1, SQRT3)


def _cert(side_mult):
    tri = triangle_spec(ISO, [side_mult * SQRT3] * 3)
    out = run_search(ISO, tri, SearchConfig())
    assert out.status == "found"
    return out.certificate


def test_n3_render(tmp_path):
    cert = _cert(1)
    path = tmp_path / "n3.svg"
    render_svg(cert, str(path))
    text = path.read_text()
    assert text.count("<polygon") == 4  # target outline + 3 tiles
    # byte-stable across runs
    path2 = tmp_path / "n3b.svg"
    render_svg(cert, str(path2))
    assert path2.read_bytes() == path.read_bytes()


def test_n12_render(tmp_path):
    cert = _cert(2)
    path = tmp_path / "n12.svg"
    render_svg(cert, str(path))
    assert path.read_text().count("<polygon") == 13


def test_empty_certificate_rejected(tmp_path):
    from tilingforge.search.certificate import Certificate

    cert = _cert(1)
    empty = Certificate(cert.tile, cert.target, (), True)
    with pytest.raises(ValueError, match="empty certificate"):
        render_svg(empty, str(tmp_path / "no.svg"))


def test_mirrored_fill_distinct(tmp_path):
    t357 = tile_from_sides(3, 5, 7)
    tri = triangle_spec(t357, [QRoot3(6), QRoot3(10), QRoot3(14)])
    out = run_search(t357, tri, SearchConfig())
    cert = out.certificate
    # force one mirrored flag to exercise the distinct fill (render only)
    from tilingforge.search.placements import Placement
    from tilingforge.search.certificate import Certificate

    flipped = Certificate(
        cert.tile,
        cert.target,
        (Placement(cert.placements[0].vertices, True),) + cert.placements[1:],
        True,
    )
    path = tmp_path / "mix.svg"
    render_svg(flipped, str(path))
    text = path.read_text()
    assert "#fdae6b" in text and "#9ecae1" in text
