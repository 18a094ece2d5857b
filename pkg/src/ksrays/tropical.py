"""Anticlique sections, tropical dimension, and tropical subconfigurations.

An anticlique section of a clique collection picks exactly one ray from
each clique so that the picked rays are pairwise non-orthogonal with
respect to the parent configuration (an independent transversal).  The
tropical dimension is the smallest number of maximal cliques for which
no section exists.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations

from .rays import Configuration
from .orthograph import maximal_cliques, signature


@dataclass(frozen=True)
class TropicalWitness:
    """A section-free collection of maximal cliques at the tropical dimension."""

    clique_indices: tuple[int, ...]  # into the parent's maximal-clique list
    union: frozenset[int]  # ray indices


def _clique_masks(parent: Configuration) -> list[int]:
    return [sum(1 << v for v in c) for c in maximal_cliques(parent)]


def _section_masks(rows, masks: list[int]) -> int | None:
    """Independent-transversal search over clique bitmasks.

    Returns the picked ray set as a bitmask, or None if no section
    exists.  Cliques are processed fewest-candidates-first with
    exclusion propagation through the adjacency bitsets.
    """

    def rec(pending: list[int], forbidden: int, picked: int) -> int | None:
        if not pending:
            return picked
        # fail-first: most constrained clique
        best_i = -1
        best_cand = 0
        best_cnt = None
        for i, mask in enumerate(pending):
            if mask & picked:
                continue  # already satisfied by an earlier pick
            cand = mask & ~forbidden
            cnt = cand.bit_count()
            if cnt == 0:
                return None
            if best_cnt is None or cnt < best_cnt:
                best_i, best_cand, best_cnt = i, cand, cnt
                if cnt == 1:
                    break
        if best_cnt is None:
            return picked
        rest = pending[:best_i] + pending[best_i + 1 :]
        cand = best_cand
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            got = rec(rest, forbidden | rows[v], picked | low)
            if got is not None:
                return got
        return None

    return rec(masks, 0, 0)


def admits_anticlique_section(
    parent: Configuration, cliques: list[tuple[int, ...]] | list[frozenset]
) -> frozenset[int] | None:
    """A section of the collection as a ray-index set, or None.

    Picks are unique per clique and pairwise non-orthogonal in the
    parent's full orthogonality relation.
    """
    if not cliques:
        raise ValueError("empty clique collection")
    d = parent.dim
    valid = set(map(frozenset, maximal_cliques(parent)))
    masks = []
    for c in cliques:
        cs = frozenset(c)
        if cs not in valid:
            raise ValueError(f"{sorted(cs)} is not a maximal clique of the parent")
        masks.append(sum(1 << v for v in cs))
    got = _section_masks(parent.adj, masks)
    if got is None:
        return None
    return frozenset(i for i in range(parent.n) if (got >> i) & 1)


def _disjoint_tuples(masks: list[int], size: int):
    """Yield index tuples of pairwise-disjoint clique masks, lexicographic."""
    m = len(masks)
    # Precompute compatibility bitsets over clique indices.
    compat = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if masks[i] & masks[j] == 0:
                compat[i] |= 1 << j

    out: list[int] = []

    def rec(cand: int, depth: int):
        while cand:
            low = cand & -cand
            cand ^= low
            i = low.bit_length() - 1
            out.append(i)
            if depth + 1 == size:
                yield tuple(out)
            else:
                nxt = cand & compat[i]
                if nxt.bit_count() >= size - depth - 1:
                    yield from rec(nxt, depth + 1)
            out.pop()

    yield from rec((1 << m) - 1, 0)


def tropical_dimension(
    config: Configuration,
    max_n: int,
    exhaustive: bool = False,
    sample_per_n: int = 2000,
    rng: random.Random | None = None,
):
    """Smallest n <= max_n with a section-free clique collection.

    Returns (n, witnesses) or None if every examined collection up to
    max_n admits a section.  In the default (non-exhaustive) mode,
    levels below the first failing one are sampled rather than fully
    enumerated, and the failing level is searched over pairwise-disjoint
    tuples plus a random sample of overlapping ones; every witness found
    is checked to have pairwise-disjoint members.  With
    ``exhaustive=True``, every level is a full enumeration (long run).
    """
    rng = rng or random.Random(20240901)
    masks = _clique_masks(config)
    m = len(masks)
    rows = config.adj

    # Precondition: every orthogonal pair lies in some d-clique.
    covered = [0] * config.n
    for mask in masks:
        vs = [i for i in range(config.n) if (mask >> i) & 1]
        for v in vs:
            covered[v] |= mask & ~(1 << v)
    for i in range(config.n):
        extra = config.adj[i] & ~covered[i]
        if extra:
            j = (extra & -extra).bit_length() - 1
            raise ValueError(
                f"orthogonal pair ({i}, {j}) lies in no maximal clique"
            )

    for n in range(1, max_n + 1):
        witnesses: list[TropicalWitness] = []
        if exhaustive:
            pool = combinations(range(m), n)
        elif n < max_n:
            pool = _sampled_tuples(m, n, sample_per_n, rng)
        else:
            pool = None  # handled below
        if pool is not None:
            for tup in pool:
                if _section_masks(rows, [masks[i] for i in tup]) is None:
                    witnesses.append(_witness(config, masks, tup))
            if witnesses:
                return n, witnesses
            continue
        # Restricted top level: disjoint tuples plus an overlap sample.
        for tup in _disjoint_tuples(masks, n):
            if _section_masks(rows, [masks[i] for i in tup]) is None:
                witnesses.append(_witness(config, masks, tup))
        for tup in _sampled_tuples(m, n, sample_per_n, rng):
            if any(
                masks[a] & masks[b]
                for a, b in combinations(tup, 2)
            ):
                if _section_masks(rows, [masks[i] for i in tup]) is None:
                    witnesses.append(_witness(config, masks, tup))
        for w in witnesses:
            ms = [masks[i] for i in w.clique_indices]
            if any(a & b for a, b in combinations(ms, 2)):
                raise AssertionError(
                    "witness with overlapping cliques found; rerun exhaustively"
                )
        if witnesses:
            witnesses.sort(key=lambda w: w.clique_indices)
            return n, witnesses
    return None


def _witness(config, masks, tup) -> TropicalWitness:
    union = 0
    for i in tup:
        union |= masks[i]
    return TropicalWitness(
        tuple(tup),
        frozenset(i for i in range(config.n) if (union >> i) & 1),
    )


def _sampled_tuples(m: int, n: int, count: int, rng: random.Random):
    if n > m:
        return
    for _ in range(count):
        yield tuple(sorted(rng.sample(range(m), n)))


def iter_witnesses(
    config: Configuration,
    n: int,
    start: int = 0,
    progress=None,
    progress_every: int = 100_000,
):
    """Scan all n-subsets of the maximal cliques for section-free ones.

    Yields (position, clique index tuple) pairs in lexicographic order,
    beginning at the given position; a caller can checkpoint the last
    position seen and resume later.  Positions count every examined
    subset, witness or not, so the stream is restartable at any point.
    The optional progress callback receives (position, total) every
    progress_every subsets.
    """
    masks = _clique_masks(config)
    rows = config.adj
    total = math.comb(len(masks), n)
    for pos, tup in enumerate(combinations(range(len(masks)), n)):
        if pos < start:
            continue
        if progress is not None and pos % progress_every == 0:
            progress(pos, total)
        if _section_masks(rows, [masks[i] for i in tup]) is None:
            yield pos, tup


def enumerate_tropical_subconfigurations(
    config: Configuration, witnesses: list[TropicalWitness] | None = None
) -> list[Configuration]:
    """Distinct unions over all tropical witnesses, as subconfigurations.

    Witnesses default to the restricted tropical-dimension search with
    max_n = d - 2 (the value realized by the built-in datasets).
    """
    if witnesses is None:
        got = tropical_dimension(config, config.dim - 2)
        if got is None:
            return []
        _, witnesses = got
    unions = sorted({tuple(sorted(w.union)) for w in witnesses})
    return [config.restrict(u) for u in unions]
