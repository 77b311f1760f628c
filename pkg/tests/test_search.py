import json

import pytest

from tilingforge.constraints import triangle_spec
from tilingforge.exactnum import QRoot3, SQRT3
from tilingforge.search.certificate import check_certificate
from tilingforge.search.engine import (
    InvalidInstance,
    SearchConfig,
    TilingSearch,
    resume_from_checkpoint,
    run_search,
)
from tilingforge.tilealgebra import tile_from_sides

ISO = tile_from_sides(1, 1, SQRT3)
T357 = tile_from_sides(3, 5, 7)


def tri_eq(tile, side):
    return triangle_spec(tile, [side] * 3)


def test_n3_control():
    out = run_search(ISO, tri_eq(ISO, SQRT3), SearchConfig())
    assert out.status == "found"
    assert out.certificate.n == 3
    assert check_certificate(out.certificate) == []


def test_n4_control():
    tri = triangle_spec(T357, [QRoot3(6), QRoot3(10), QRoot3(14)])
    out = run_search(T357, tri, SearchConfig())
    assert out.status == "found"
    assert out.certificate.n == 4
    assert check_certificate(out.certificate) == []


def test_n12_control():
    out = run_search(ISO, tri_eq(ISO, 2 * SQRT3), SearchConfig())
    assert out.status == "found"
    assert out.certificate.n == 12
    assert check_certificate(out.certificate) == []


def test_all_solutions_unique_on_controls():
    assert len(TilingSearch(ISO, tri_eq(ISO, SQRT3), SearchConfig()).enumerate_all()) == 1
    tri = triangle_spec(T357, [QRoot3(6), QRoot3(10), QRoot3(14)])
    assert len(TilingSearch(T357, tri, SearchConfig()).enumerate_all()) == 1


def test_headline_probe_exhausts():
    out = run_search(T357, tri_eq(T357, QRoot3(15)), SearchConfig())
    assert out.status == "exhausted"
    assert not out.stats.conditional_on_paper_lemmas
    assert out.stats.nodes > 100


def test_determinism_across_runs():
    tri = tri_eq(T357, QRoot3(15))
    a = run_search(T357, tri, SearchConfig())
    b = run_search(T357, tri, SearchConfig())
    assert (a.status, a.stats.nodes, a.stats.max_depth) == (b.status, b.stats.nodes, b.stats.max_depth)


def test_budget_and_checkpoint_resume(tmp_path):
    tri = tri_eq(T357, QRoot3(15))
    ck = str(tmp_path / "ck.json")
    out = TilingSearch(T357, tri, SearchConfig(node_budget=150, checkpoint_path=ck)).run()
    assert out.status == "budget"
    assert out.checkpoint_path == ck
    resumed = resume_from_checkpoint(ck, SearchConfig(node_budget=10**6, checkpoint_path=ck))
    assert resumed.status == "exhausted"
    full = TilingSearch(T357, tri, SearchConfig()).run()
    assert resumed.stats.nodes == full.stats.nodes


def test_resume_matches_direct_partial_state(tmp_path):
    tri = tri_eq(T357, QRoot3(15))
    ck1, ck2 = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    TilingSearch(T357, tri, SearchConfig(node_budget=120, checkpoint_path=ck1)).run()
    resume_from_checkpoint(ck1, SearchConfig(node_budget=260, checkpoint_path=ck1))
    TilingSearch(T357, tri, SearchConfig(node_budget=260, checkpoint_path=ck2)).run()
    d1, d2 = json.load(open(ck1)), json.load(open(ck2))
    assert d1["indices"] == d2["indices"]
    assert d1["nodes"] == d2["nodes"]


def test_periodic_checkpoint_interval(tmp_path):
    tri = tri_eq(T357, QRoot3(15))
    ck = str(tmp_path / "periodic.json")
    cfg = SearchConfig(node_budget=10**6, checkpoint_path=ck, checkpoint_interval=50)
    out = TilingSearch(T357, tri, cfg).run()
    assert out.status == "exhausted"
    data = json.load(open(ck))
    assert data["schema"] == "v1"
    assert data["nodes"] % 50 == 0
    # resuming from a periodic snapshot reaches the same final state
    resumed = resume_from_checkpoint(ck, SearchConfig(node_budget=10**6))
    assert resumed.status == "exhausted"
    assert resumed.stats.nodes == TilingSearch(T357, tri, SearchConfig()).run().stats.nodes


def test_worker_counts_agree():
    tri = tri_eq(T357, QRoot3(15))
    one = run_search(T357, tri, SearchConfig(split_depth=2, workers=1))
    two = run_search(T357, tri, SearchConfig(split_depth=2, workers=2))
    assert (one.status, one.stats.nodes) == (two.status, two.stats.nodes)


def test_worker_counts_agree_on_found():
    tri = tri_eq(ISO, 2 * SQRT3)
    one = run_search(ISO, tri, SearchConfig(split_depth=1, workers=1))
    two = run_search(ISO, tri, SearchConfig(split_depth=1, workers=3))
    assert one.status == two.status == "found"
    assert one.certificate.to_json() == two.certificate.to_json()
    assert one.stats.nodes == two.stats.nodes


def test_paper_pruning_labels_conditional():
    out = run_search(T357, tri_eq(T357, QRoot3(15)), SearchConfig(paper_pruning=True))
    assert out.status == "exhausted"
    assert out.stats.conditional_on_paper_lemmas
    # similar targets and isosceles tiles never get the conditional label
    out2 = run_search(ISO, tri_eq(ISO, SQRT3), SearchConfig(paper_pruning=True))
    assert not out2.stats.conditional_on_paper_lemmas


def test_invalid_instances_rejected():
    with pytest.raises(InvalidInstance):
        TilingSearch(T357, tri_eq(T357, QRoot3(10)), SearchConfig())  # N = 100/15
    with pytest.raises(InvalidInstance):
        # area count integral (N=75) but side 15*sqrt3/... has no composition:
        # 5*sqrt3 is not a nonnegative integer combination of 3, 5, 7
        TilingSearch(T357, tri_eq(T357, 5 * SQRT3), SearchConfig())


def test_area_conservation_along_a_branch():
    # walk the canonical leftmost branch; region area must always equal
    # (N - placed) * tile area
    from tilingforge.search.engine import _Frame

    tri = tri_eq(T357, QRoot3(15))
    s = TilingSearch(T357, tri, SearchConfig())
    regions = (s.initial,)
    placed = 0
    counts = (0, 0, 0)
    while regions:
        total = QRoot3(0)
        for r in regions:
            total = total + r.area()
        assert total == (s.n - placed) * T357.area
        cands = s._expand(regions, counts)
        if not cands:
            break
        frame = _Frame(regions, cands, counts, 0)
        regions = s._apply(frame, cands[0])
        counts = s._bump_counts(counts, cands[0])
        placed += 1


def test_mirror_flag_respected():
    tri = triangle_spec(T357, [QRoot3(6), QRoot3(10), QRoot3(14)])
    out = run_search(T357, tri, SearchConfig(allow_mirror=False))
    assert out.status == "found"
    assert all(not p.mirrored for p in out.certificate.placements)
