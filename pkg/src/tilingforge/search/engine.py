"""Exhaustive backtracking search for N-tilings, exact throughout.

The tree is canonical: the active subregion is the canonically-first
polygon of the remaining region, the active corner is its smallest
interior angle (ties by lexicographic vertex order), and candidates are
enumerated in a fixed order.  With a fixed configuration the outcome and
the node count are reproducible run to run and across worker counts.

Checkpoints record the candidate-index path of the depth-first stack, so
resuming replays the prefix deterministically and continues where the
budget ran out.  Pruning built into candidate generation uses only
self-evident necessary conditions (angle representability, edge-length
representability, exact containment).  The optional vertex-splitting cap
is off by default, and any exhaustion proved with it on is reported as
conditional.
"""

from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import dataclass
from typing import Optional

from ..constraints import TriangleSpec, area_count, enumerate_dmatrices
from ..tilealgebra import TileShape
from .certificate import Certificate, canonical_target_vertices, check_certificate
from .placements import Candidate, TileGeometry, candidate_placements, select_corner
from .region import Polygon, subtract_triangle

CHECKPOINT_SCHEMA = "v1"


@dataclass
class SearchConfig:
    node_budget: int = 10**8
    workers: int = 1
    split_depth: int = 0  # partition depth for the worker pool; 0 = no split
    allow_mirror: bool = True
    paper_pruning: bool = False
    checkpoint_path: Optional[str] = None
    checkpoint_interval: int = 100_000

    def to_json(self) -> dict:
        return {
            "node_budget": self.node_budget,
            "workers": self.workers,
            "split_depth": self.split_depth,
            "allow_mirror": self.allow_mirror,
            "paper_pruning": self.paper_pruning,
        }


@dataclass
class SearchStats:
    nodes: int = 0
    max_depth: int = 0
    elapsed: float = 0.0
    conditional_on_paper_lemmas: bool = False

    def to_json(self) -> dict:
        return {
            "nodes": self.nodes,
            "max_depth": self.max_depth,
            "elapsed_seconds": round(self.elapsed, 3),
            "conditional_on_paper_lemmas": self.conditional_on_paper_lemmas,
        }


@dataclass
class Outcome:
    status: str  # "found" | "exhausted" | "budget"
    stats: SearchStats
    certificate: Optional[Certificate] = None
    checkpoint_path: Optional[str] = None


class InvalidInstance(ValueError):
    pass


@dataclass
class _Frame:
    regions: tuple[Polygon, ...]
    cands: list[Candidate]
    corner_counts: tuple[int, int, int]  # alpha, beta, gamma used at target corners
    idx: int = -1


class TilingSearch:
    def __init__(self, tile: TileShape, target: TriangleSpec, config: Optional[SearchConfig] = None):
        self.tile = tile
        self.target = target
        self.config = config or SearchConfig()
        self.geom = TileGeometry(tile)
        n = area_count(tile, target)
        if n.denominator != 1 or n <= 0:
            raise InvalidInstance(f"area quotient {n} is not a positive integer")
        self.n = int(n)
        if not enumerate_dmatrices(tile, target):
            raise InvalidInstance("no boundary composition exists for this instance")
        self.target_vertices = canonical_target_vertices(target)
        self.initial = Polygon.from_points(list(self.target_vertices))
        self._corner_keys = {v.lex_key() for v in self.target_vertices}
        self._pruning_active = (
            self.config.paper_pruning
            and not tile.is_isosceles()
            and sorted(target.angles) != [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
        )

    # -- candidate generation ---------------------------------------------------

    def _expand(self, regions: tuple[Polygon, ...], counts) -> list[Candidate]:
        region = regions[0]
        corner = select_corner(region)
        cands = candidate_placements(
            region, corner, self.geom, allow_mirror=self.config.allow_mirror
        )
        if self._pruning_active:
            cands = [c for c in cands if self._splitting_allows(c, counts)]
        return cands

    def _splitting_allows(self, cand: Candidate, counts) -> bool:
        if cand.corner.lex_key() not in self._corner_keys:
            return True
        a, b, g = counts
        if cand.angle_name == "alpha":
            return a < 3
        if cand.angle_name == "beta":
            return b < 3
        return False  # no gamma at target corners under the splitting cap

    def _apply(self, frame: _Frame, cand: Candidate) -> tuple[Polygon, ...]:
        rest = subtract_triangle(frame.regions[0], cand.placement.vertices)
        merged = list(rest) + list(frame.regions[1:])
        merged.sort(key=lambda p: p.vertices[0].lex_key())
        return tuple(merged)

    def _bump_counts(self, counts, cand: Candidate):
        if cand.corner.lex_key() not in self._corner_keys:
            return counts
        a, b, g = counts
        if cand.angle_name == "alpha":
            return (a + 1, b, g)
        if cand.angle_name == "beta":
            return (a, b + 1, g)
        return (a, b, g + 1)

    # -- sequential search --------------------------------------------------------

    def enumerate_all(self, limit: int = 10**6) -> list[Certificate]:
        """Every complete tiling in the canonical tree (validation aid)."""
        found: list[Certificate] = []
        stack: list[_Frame] = []
        placements: list[Candidate] = []
        root = _Frame((self.initial,), [], (0, 0, 0))
        root.cands = self._expand(root.regions, root.corner_counts)
        stack.append(root)
        nodes = 0
        while stack:
            if nodes >= limit:
                raise RuntimeError("enumeration limit hit")
            frame = stack[-1]
            frame.idx += 1
            if frame.idx >= len(frame.cands):
                stack.pop()
                if placements:
                    placements.pop()
                continue
            cand = frame.cands[frame.idx]
            nodes += 1
            new_regions = self._apply(frame, cand)
            placements.append(cand)
            if not new_regions:
                found.append(self._certificate(placements))
                placements.pop()
                continue
            child = _Frame(new_regions, [], self._bump_counts(frame.corner_counts, cand))
            child.cands = self._expand(new_regions, child.corner_counts)
            stack.append(child)
        return found

    def run(self, resume_indices: Optional[list[int]] = None, start_nodes: int = 0) -> Outcome:
        t0 = time.monotonic()
        stats = SearchStats(conditional_on_paper_lemmas=self._pruning_active)
        stack: list[_Frame] = []
        placements: list[Candidate] = []

        root = _Frame(( self.initial,), [], (0, 0, 0))
        root.cands = self._expand(root.regions, root.corner_counts)
        stack.append(root)
        nodes = start_nodes

        if resume_indices:
            nodes, stack, placements = self._replay(resume_indices, nodes)

        budget = self.config.node_budget
        interval = self.config.checkpoint_interval
        last_checkpoint = -1
        while stack:
            # checkpoints are only written here, where every frame's idx is
            # the index of its last fully explored candidate
            if nodes >= budget:
                path = self._maybe_checkpoint(stack, nodes, force=True)
                stats.nodes = nodes
                stats.elapsed = time.monotonic() - t0
                return Outcome("budget", stats, checkpoint_path=path)
            if (
                self.config.checkpoint_path
                and nodes % interval == 0
                and nodes != last_checkpoint
            ):
                self._maybe_checkpoint(stack, nodes, force=False)
                last_checkpoint = nodes
            frame = stack[-1]
            frame.idx += 1
            if frame.idx >= len(frame.cands):
                stack.pop()
                if placements:
                    placements.pop()
                continue
            cand = frame.cands[frame.idx]
            nodes += 1
            new_regions = self._apply(frame, cand)
            placements.append(cand)
            stats.max_depth = max(stats.max_depth, len(placements))
            if not new_regions:
                cert = self._certificate(placements)
                stats.nodes = nodes
                stats.elapsed = time.monotonic() - t0
                return Outcome("found", stats, certificate=cert)
            child = _Frame(new_regions, [], self._bump_counts(frame.corner_counts, cand))
            child.cands = self._expand(new_regions, child.corner_counts)
            stack.append(child)
        stats.nodes = nodes
        stats.elapsed = time.monotonic() - t0
        return Outcome("exhausted", stats)

    def _certificate(self, placements: list[Candidate]) -> Certificate:
        cert = Certificate(
            self.tile, self.target, tuple(c.placement for c in placements), self.config.allow_mirror
        )
        violations = check_certificate(cert)
        if violations:
            raise AssertionError(f"search produced an invalid certificate: {violations}")
        return cert

    # -- checkpointing -------------------------------------------------------------

    def _maybe_checkpoint(self, stack, nodes, force: bool) -> Optional[str]:
        path = self.config.checkpoint_path
        if not path:
            return None
        data = {
            "schema": CHECKPOINT_SCHEMA,
            "tile": self.tile.to_json(),
            "target": self.target.to_json(),
            "config": self.config.to_json(),
            "indices": [f.idx for f in stack],
            "nodes": nodes,
        }
        with open(path, "w") as fh:
            json.dump(data, fh)
        return path

    def _replay(self, indices: list[int], nodes: int):
        """Rebuild the depth-first stack from a saved candidate-index path."""
        stack: list[_Frame] = []
        placements: list[Candidate] = []
        root = _Frame((self.initial,), [], (0, 0, 0))
        root.cands = self._expand(root.regions, root.corner_counts)
        stack.append(root)
        for level, idx in enumerate(indices):
            frame = stack[-1]
            frame.idx = idx
            if level == len(indices) - 1:
                break
            if not (0 <= idx < len(frame.cands)):
                raise InvalidInstance("checkpoint does not match this instance")
            cand = frame.cands[idx]
            new_regions = self._apply(frame, cand)
            placements.append(cand)
            if not new_regions:
                raise InvalidInstance("checkpoint replay ended in a completed tiling")
            child = _Frame(new_regions, [], self._bump_counts(frame.corner_counts, cand))
            child.cands = self._expand(new_regions, child.corner_counts)
            stack.append(child)
        return nodes, stack, placements


def resume_from_checkpoint(path: str, config: Optional[SearchConfig] = None) -> Outcome:
    with open(path) as fh:
        data = json.load(fh)
    if data.get("schema") != CHECKPOINT_SCHEMA:
        raise InvalidInstance(f"unsupported checkpoint schema {data.get('schema')!r}")
    tile = TileShape.from_json(data["tile"])
    target = TriangleSpec.from_json(data["target"])
    cfg = config or SearchConfig()
    saved = data["config"]
    cfg.allow_mirror = saved["allow_mirror"]
    cfg.paper_pruning = saved["paper_pruning"]
    search = TilingSearch(tile, target, cfg)
    return search.run(resume_indices=data["indices"], start_nodes=data["nodes"])


# ---------------------------------------------------------------------------
# worker pool


def _subtree_prefixes(search: TilingSearch, depth: int) -> list[list[int]]:
    """Candidate-index paths of length `depth` (or to a leaf), in canonical
    order; the subtrees below them partition the search tree."""
    prefixes: list[list[int]] = []

    def walk(regions, counts, path):
        if len(path) == depth:
            prefixes.append(list(path))
            return
        cands = search._expand(regions, counts)
        if not cands:
            prefixes.append(list(path))
            return
        for i, cand in enumerate(cands):
            new_regions = search._apply(_Frame(regions, cands, counts, i), cand)
            if not new_regions:
                prefixes.append(list(path) + [i])
                continue
            walk(new_regions, search._bump_counts(counts, cand), path + [i])

    walk((search.initial,), (0, 0, 0), [])
    return prefixes


def _run_subtree(args) -> dict:
    tile_json, target_json, config_json, prefix, budget = args
    tile = TileShape.from_json(tile_json)
    target = TriangleSpec.from_json(target_json)
    cfg = SearchConfig(
        node_budget=budget,
        allow_mirror=config_json["allow_mirror"],
        paper_pruning=config_json["paper_pruning"],
    )
    search = TilingSearch(tile, target, cfg)
    outcome = _run_rooted(search, prefix)
    return {
        "status": outcome.status,
        "nodes": outcome.stats.nodes,
        "max_depth": outcome.stats.max_depth,
        "certificate": outcome.certificate.to_json() if outcome.certificate else None,
    }


def _run_rooted(search: TilingSearch, prefix: list[int]) -> Outcome:
    """Run the sequential search restricted to the subtree under `prefix`."""
    t0 = time.monotonic()
    stats = SearchStats(conditional_on_paper_lemmas=search._pruning_active)
    stack: list[_Frame] = []
    placements: list[Candidate] = []
    regions: tuple[Polygon, ...] = (search.initial,)
    counts = (0, 0, 0)
    for idx in prefix:
        frame = _Frame(regions, search._expand(regions, counts), counts, idx)
        if not (0 <= idx < len(frame.cands)):
            return Outcome("exhausted", stats)
        cand = frame.cands[idx]
        new_regions = search._apply(frame, cand)
        placements.append(cand)
        counts = search._bump_counts(counts, cand)
        if not new_regions:
            cert = search._certificate(placements)
            stats.elapsed = time.monotonic() - t0
            return Outcome("found", stats, certificate=cert)
        regions = new_regions
    root = _Frame(regions, search._expand(regions, counts), counts)
    stack.append(root)
    nodes = 0
    while stack:
        if nodes >= search.config.node_budget:
            stats.nodes = nodes
            stats.elapsed = time.monotonic() - t0
            return Outcome("budget", stats)
        frame = stack[-1]
        frame.idx += 1
        if frame.idx >= len(frame.cands):
            stack.pop()
            if len(placements) > len(prefix):
                placements.pop()
            continue
        cand = frame.cands[frame.idx]
        nodes += 1
        new_regions = search._apply(frame, cand)
        placements.append(cand)
        stats.max_depth = max(stats.max_depth, len(placements))
        if not new_regions:
            cert = search._certificate(placements)
            stats.nodes = nodes
            stats.elapsed = time.monotonic() - t0
            return Outcome("found", stats, certificate=cert)
        child = _Frame(new_regions, [], search._bump_counts(frame.corner_counts, cand))
        child.cands = search._expand(new_regions, child.corner_counts)
        stack.append(child)
    stats.nodes = nodes
    stats.elapsed = time.monotonic() - t0
    return Outcome("exhausted", stats)


def run_search(tile: TileShape, target: TriangleSpec, config: Optional[SearchConfig] = None) -> Outcome:
    """Entry point: sequential when split_depth == 0, else partitioned into
    subtrees handled by a pool of `workers` processes.

    With a fixed split_depth the partition, the per-subtree budgets and the
    merged result are independent of the worker count: every subtree is
    explored to its own completion or budget, the first certificate in
    canonical subtree order wins, and node counts are summed.
    """
    cfg = config or SearchConfig()
    search = TilingSearch(tile, target, cfg)
    if cfg.split_depth <= 0:
        return search.run()

    t0 = time.monotonic()
    prefixes = _subtree_prefixes(search, cfg.split_depth)
    stats = SearchStats(conditional_on_paper_lemmas=search._pruning_active)
    if not prefixes:
        stats.elapsed = time.monotonic() - t0
        return Outcome("exhausted", stats)
    per_budget = max(1, cfg.node_budget // max(1, len(prefixes)))
    jobs = [
        (tile.to_json(), target.to_json(), cfg.to_json(), prefix, per_budget)
        for prefix in prefixes
    ]
    if cfg.workers <= 1:
        results = [_run_subtree(j) for j in jobs]
    else:
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(processes=cfg.workers) as pool:
            results = pool.map(_run_subtree, jobs)

    total_nodes = len(prefixes)
    found: Optional[Certificate] = None
    any_budget = False
    for res in results:
        total_nodes += res["nodes"]
        stats.max_depth = max(stats.max_depth, res["max_depth"])
        if res["status"] == "budget":
            any_budget = True
        if res["status"] == "found" and found is None:
            found = Certificate.from_json(res["certificate"])
    stats.nodes = total_nodes
    stats.elapsed = time.monotonic() - t0
    if found is not None:
        return Outcome("found", stats, certificate=found)
    if any_budget:
        return Outcome("budget", stats)
    return Outcome("exhausted", stats)
