"""Exact forcing-number solvers.

min_forcing_number finds the smallest forcing set of one orientation by
subset search with three prunes: in-degree-0 vertices are mandatory,
weakly-connected components are solved independently (forcing numbers add),
and candidate sizes start at max(minimum out-degree - k + 1, 1).
min_orientation_forcing / max_orientation_forcing score every orientation of
a graph with it, in increasing order of the direction bits so the reported
witness is the lexicographically least optimum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from . import invariants
from .errors import LimitError, ParameterError
from .forcing import fixpoint_mask, is_forcing_set
from .graphs import Graph, OrientedGraph, mask_vertices

SUBSET_SEARCH_LIMIT = 20
ORIENTATION_LIMIT = 20


@dataclass(frozen=True)
class SolveResult:
    problem: str
    parameters: dict[str, Any]
    value: int
    witness: Any
    explored: int
    limits_hit: bool = False

    def to_payload(self) -> dict:
        w = self.witness
        if isinstance(w, frozenset):
            w = sorted(w)
        elif isinstance(w, tuple) and len(w) == 2 and isinstance(w[1], frozenset):
            w = {"direction_bits": w[0], "forcing_set": sorted(w[1])}
        return {
            "problem": self.problem,
            "parameters": self.parameters,
            "value": self.value,
            "witness": w,
            "explored": self.explored,
            "limits_hit": self.limits_hit,
        }


def _component_out_masks(verts: tuple[int, ...], out_masks) -> list[int]:
    """Out-masks of a weak component, relabeled to local indices."""
    pos = {v: i for i, v in enumerate(verts)}
    local = []
    for v in verts:
        m = out_masks[v]
        acc = 0
        while m:
            lsb = m & -m
            m ^= lsb
            acc |= 1 << pos[lsb.bit_length() - 1]
        local.append(acc)
    return local


def _solve_component(out: list[int], k: int) -> tuple[int, int, int]:
    """(size, witness mask, closures run) for one weak component.

    Candidate sets are supersets of the in-degree-0 vertices, tried by
    increasing size and in lexicographic order within a size, so the first
    success is the lexicographically least minimum forcing set.
    """
    n = len(out)
    full = (1 << n) - 1
    indeg = 0
    for v in range(n):
        indeg |= out[v]
    src_mask = full & ~indeg
    src_count = src_mask.bit_count()
    delta_plus = min(o.bit_count() for o in out)
    free = [v for v in range(n) if not src_mask >> v & 1]
    start = max(1, src_count, delta_plus - k + 1)
    closures = 0
    for size in range(start, n + 1):
        for combo in combinations(free, size - src_count):
            cand = src_mask
            for v in combo:
                cand |= 1 << v
            closures += 1
            if fixpoint_mask(out, full, cand, k) == full:
                return size, cand, closures
    raise AssertionError("the full vertex set always forces")  # pragma: no cover


def min_forcing_number(d: OrientedGraph, k: int, *, limit: int = SUBSET_SEARCH_LIMIT) -> SolveResult:
    """Exact smallest size of a forcing set of d under budget k."""
    if k < 1:
        raise ParameterError("k must be a positive integer")
    if d.n < 1:
        raise ParameterError("the orientation must have at least one vertex")
    if d.n > limit:
        raise LimitError(f"min_forcing_number is limited to n <= {limit}, got n = {d.n}")
    out_masks = d.out_masks
    total = 0
    witness = 0
    closures = 0
    for comp in d.graph.components():
        local_out = _component_out_masks(comp, out_masks)
        size, local_mask, used = _solve_component(local_out, k)
        total += size
        closures += used
        rem = local_mask
        while rem:
            lsb = rem & -rem
            rem ^= lsb
            witness |= 1 << comp[lsb.bit_length() - 1]
    wset = frozenset(mask_vertices(witness))
    if not is_forcing_set(d, wset, k):
        raise AssertionError("solver witness failed engine validation")
    return SolveResult(
        problem="fk",
        parameters={"k": k, "n": d.n, "m": d.m},
        value=total,
        witness=wset,
        explored=closures,
    )


def _orientation_out_masks(g: Graph, bits: int, buf: list[int]) -> None:
    for i in range(g.n):
        buf[i] = 0
    for i, (u, v) in enumerate(g.edges):
        if bits >> i & 1:
            buf[u] |= 1 << v
        else:
            buf[v] |= 1 << u


def _forcing_value(g: Graph, out: list[int], k: int) -> int:
    """F_k of one orientation given its out-masks; component-decomposed."""
    if g.is_connected():
        return _solve_component(out, k)[0]
    total = 0
    for comp in g.components():
        total += _solve_component(_component_out_masks(comp, out), k)[0]
    return total


@dataclass
class _Extreme:
    better: Any  # comparison for "new value strictly improves"
    value: int | None = None
    bits: int | None = None
    done: bool = False

    def offer(self, value: int, bits: int, target: int | None) -> None:
        if self.done:
            return
        if self.value is None or self.better(value, self.value):
            self.value, self.bits = value, bits
            if target is not None and value == target:
                self.done = True


def _sweep(g: Graph, k: int, *, want_min: bool, want_max: bool,
           min_target: int | None, limit: int) -> tuple[_Extreme, _Extreme, int, bool]:
    if k < 1:
        raise ParameterError("k must be a positive integer")
    if g.n < 1:
        raise ParameterError("the graph must have at least one vertex")
    if g.m > limit:
        raise LimitError(
            f"orientation enumeration is limited to m <= {limit}, got m = {g.m}"
        )
    lo = _Extreme(lambda a, b: a < b)
    hi = _Extreme(lambda a, b: a > b)
    max_target = g.n - 1 if g.m else g.n
    full = (1 << g.m) - 1
    out = [0] * g.n
    explored = 0
    for bits in range(full + 1):
        # the 1-forcing number is invariant under reversal, so at k=1 only
        # the smaller of each reversal pair needs scoring
        if k == 1 and bits > full ^ bits:
            continue
        _orientation_out_masks(g, bits, out)
        value = _forcing_value(g, out, k)
        explored += 1
        if want_min:
            lo.offer(value, bits, min_target)
        if want_max:
            hi.offer(value, bits, max_target)
        if (not want_min or lo.done) and (not want_max or hi.done):
            break
    early = (want_min and lo.done) or (want_max and hi.done)
    return lo, hi, explored, early


def _extreme_result(g: Graph, k: int, ext: _Extreme, problem: str,
                    explored: int, early: bool) -> SolveResult:
    d = OrientedGraph(g, ext.bits)
    inner = min_forcing_number(d, k)
    if inner.value != ext.value:
        raise AssertionError("witness orientation re-solve disagrees")
    return SolveResult(
        problem=problem,
        parameters={"k": k, "n": g.n, "m": g.m},
        value=ext.value,
        witness=(ext.bits, inner.witness),
        explored=explored,
        limits_hit=early,
    )


def min_orientation_forcing(g: Graph, k: int, *, limit: int = ORIENTATION_LIMIT,
                            early_exit: bool = True) -> SolveResult:
    """Smallest forcing number over all orientations of g (exhaustive).

    With early_exit, the sweep stops once the running minimum reaches the
    tree-cover oracle value, which no orientation can beat: the chain forest
    of any forcing set is a vertex-disjoint cover by trees of maximum degree
    at most k+1.
    """
    target = None
    if early_exit and 1 <= g.n <= invariants.TREE_COVER_LIMIT:
        target = invariants.tree_cover_number(g, k).value
    lo, _, explored, early = _sweep(
        g, k, want_min=True, want_max=False, min_target=target, limit=limit
    )
    return _extreme_result(g, k, lo, "mof", explored, early)


def max_orientation_forcing(g: Graph, k: int, *, limit: int = ORIENTATION_LIMIT) -> SolveResult:
    """Largest forcing number over all orientations of g (exhaustive).

    Stops early when the running maximum reaches n - 1, the most any
    orientation of a non-empty graph can require.
    """
    _, hi, explored, early = _sweep(
        g, k, want_min=False, want_max=True, min_target=None, limit=limit
    )
    return _extreme_result(g, k, hi, "MOF", explored, early)


def orientation_extremes(g: Graph, k: int, *, limit: int = ORIENTATION_LIMIT) -> tuple[SolveResult, SolveResult]:
    """Both extremes from one shared sweep over all orientations."""
    lo, hi, explored, early = _sweep(
        g, k, want_min=True, want_max=True, min_target=None, limit=limit
    )
    return (
        _extreme_result(g, k, lo, "mof", explored, early),
        _extreme_result(g, k, hi, "MOF", explored, early),
    )
