"""The oriented k-color change rule and everything built directly on it.

A colored vertex directed towards at most k non-colored vertices forces all
of them; all eligible vertices force simultaneously in each round.  The
closure (the final colored set) does not depend on application order, so the
solvers use a fast fixpoint kernel over bitmasks while the public trace API
applies the rule in strict simultaneous rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ParameterError, PreconditionError
from .graphs import OrientedGraph, mask_vertices, vertex_mask


def _check_k(k: int) -> None:
    if k < 1:
        raise ParameterError("k must be a positive integer")


def _check_set(d: OrientedGraph, s: Iterable[int]) -> frozenset[int]:
    vs = frozenset(int(v) for v in s)
    if not vs:
        raise ParameterError("the colored set must be nonempty")
    if any(v < 0 or v >= d.n for v in vs):
        raise ParameterError("colored set reaches outside the graph")
    return vs


def fixpoint_mask(out_masks, full: int, colored: int, k: int) -> int:
    """Fast order-free closure of a colored bitmask.

    `pending` tracks colored vertices that might still force; a vertex whose
    out-neighbours are all colored can never force again.
    """
    pending = colored
    while True:
        added = 0
        rem = pending
        done = 0
        while rem:
            lsb = rem & -rem
            rem ^= lsb
            v = lsb.bit_length() - 1
            unc = out_masks[v] & ~colored
            if not unc:
                done |= lsb
            elif unc.bit_count() <= k:
                added |= unc
                done |= lsb
        if not added:
            return colored
        colored |= added
        if colored == full:
            return colored
        pending = (pending & ~done) | added


def step(d: OrientedGraph, colored: Iterable[int], k: int) -> list[tuple[int, int]]:
    """One simultaneous round of the rule against the given colored set.

    Returns every (forcer, forced) pair in increasing (forcer, forced)
    order; the same vertex may appear as forced under several forcers.
    An empty list means the process is stalled.
    """
    _check_k(k)
    cs = _check_set(d, colored)
    cmask = vertex_mask(cs)
    pairs = []
    for u in sorted(cs):
        unc = d.out_masks[u] & ~cmask
        if unc and unc.bit_count() <= k:
            for w in mask_vertices(unc):
                pairs.append((u, w))
    return pairs


@dataclass(frozen=True)
class ForcingTrace:
    """Round-by-round record of a run of the rule.

    Each round lists one (forcer, forced) pair per newly colored vertex;
    when several vertices force the same target in a round, the
    smallest-index forcer is recorded.
    """

    initial: frozenset[int]
    rounds: tuple[tuple[tuple[int, int], ...], ...]
    final: frozenset[int]

    @property
    def forced(self) -> frozenset[int]:
        return self.final - self.initial

    def text_lines(self) -> list[str]:
        return [
            "round {}: {}".format(i + 1, ", ".join(f"{u}>{w}" for u, w in rnd))
            for i, rnd in enumerate(self.rounds)
        ]

    def to_payload(self) -> dict:
        return {
            "initial": sorted(self.initial),
            "rounds": [[[u, w] for u, w in rnd] for rnd in self.rounds],
            "final": sorted(self.final),
        }


def closure(d: OrientedGraph, s: Iterable[int], k: int) -> ForcingTrace:
    """Apply the rule in simultaneous rounds until no color changes occur."""
    _check_k(k)
    initial = _check_set(d, s)
    out_masks = d.out_masks
    full = (1 << d.n) - 1
    cmask = vertex_mask(initial)
    rounds: list[tuple[tuple[int, int], ...]] = []
    while True:
        forced_now: dict[int, int] = {}
        rem = cmask
        while rem:
            lsb = rem & -rem
            rem ^= lsb
            u = lsb.bit_length() - 1
            unc = out_masks[u] & ~cmask
            if unc and unc.bit_count() <= k:
                for w in mask_vertices(unc):
                    if w not in forced_now:
                        forced_now[w] = u
        if not forced_now:
            break
        pairs = tuple(sorted((u, w) for w, u in forced_now.items()))
        rounds.append(pairs)
        cmask |= vertex_mask(forced_now)
        if cmask == full:
            break
    return ForcingTrace(initial, tuple(rounds), frozenset(mask_vertices(cmask)))


def closure_set(d: OrientedGraph, s: Iterable[int], k: int) -> frozenset[int]:
    """Final colored set only, via the fixpoint kernel."""
    _check_k(k)
    vs = _check_set(d, s)
    full = (1 << d.n) - 1
    out = fixpoint_mask(d.out_masks, full, vertex_mask(vs), k)
    return frozenset(mask_vertices(out))


def is_forcing_set(d: OrientedGraph, s: Iterable[int], k: int) -> bool:
    _check_k(k)
    vs = _check_set(d, s)
    full = (1 << d.n) - 1
    return fixpoint_mask(d.out_masks, full, vertex_mask(vs), k) == full


@dataclass(frozen=True)
class ChainForest:
    """Parent assignment realizing a set of forcing chains.

    Roots are exactly the forcing set; every other vertex points at the
    vertex recorded as forcing it, so each component is an out-tree rooted
    in the forcing set with at most k children per vertex.
    """

    roots: frozenset[int]
    parents: tuple[tuple[int, int], ...]  # (child, parent), sorted by child

    def parent_of(self, v: int) -> int | None:
        for child, parent in self.parents:
            if child == v:
                return parent
        return None

    def children_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for _, parent in self.parents:
            counts[parent] = counts.get(parent, 0) + 1
        return counts

    def components(self) -> list[frozenset[int]]:
        """One vertex set per chain, ordered by their roots."""
        parent = dict(self.parents)
        members: dict[int, set[int]] = {r: {r} for r in sorted(self.roots)}
        for child in parent:
            v = child
            while v not in self.roots:
                v = parent[v]
            members[v].add(child)
        return [frozenset(members[r]) for r in sorted(self.roots)]

    def validate(self, d: OrientedGraph, k: int) -> None:
        """Raise unless every ChainForest invariant holds in d."""
        parent = dict(self.parents)
        if set(parent) & self.roots:
            raise PreconditionError("a root cannot also have a parent")
        if set(parent) | self.roots != set(range(d.n)):
            raise PreconditionError("forest does not span the vertex set")
        for child, par in parent.items():
            if not d.has_arc(par, child):
                raise PreconditionError(f"arc ({par},{child}) is not in the orientation")
        for v, cnt in self.children_counts().items():
            if cnt > k:
                raise PreconditionError(f"vertex {v} has {cnt} children; at most {k} allowed")
        for child in parent:
            seen = {child}
            v = child
            while v not in self.roots:
                v = parent[v]
                if v in seen:
                    raise PreconditionError("parent pointers contain a cycle")
                seen.add(v)
        if len(self.components()) != len(self.roots):
            raise PreconditionError("component count differs from the root count")


def forcing_chains(d: OrientedGraph, s: Iterable[int], k: int) -> ChainForest:
    """Chain forest of a forcing set: parent(v) is the smallest-index
    forcer of v in its round of the trace."""
    vs = _check_set(d, s)
    if not is_forcing_set(d, vs, k):
        raise PreconditionError("the given set does not force the whole graph")
    trace = closure(d, vs, k)
    parents = []
    for rnd in trace.rounds:
        for u, w in rnd:
            parents.append((w, u))
    parents.sort()
    return ChainForest(frozenset(vs), tuple(parents))
