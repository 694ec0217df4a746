"""Closure operator whose closed sets are transfer systems, plus the
reverse pass that extracts a deterministic minimal basis.

All heavy lifting works on int bitmasks over edge indices.  A
ClosureContext precomputes, per edge, its direct consequences under
conjugation and restriction and the composition partners, so a closure
call is a plain worklist sweep.
"""

from __future__ import annotations

from .lattice import SubgroupLattice, TransferSystem, complete_mask


class ClosureContext:
    """Precomputed single-edge consequences for one lattice and mode.

    mode FULL saturates conjugation orbits; UNDERLYING skips them.  The
    same machinery drives quotient posets via :func:`poset_context`,
    where restriction adds every maximal common lower bound.
    """

    def __init__(self, edges, direct, comp_pairs):
        self.edges = edges
        self.edge_count = len(edges)
        self.direct = direct          # per edge: tuple of edge ids forced outright
        self.comp_pairs = comp_pairs  # per edge: tuple of (partner, result) ids

    def close(self, seed_mask, base_mask=0):
        """Least closed superset of base_mask | seed_mask.

        base_mask must already be closed (pass 0 otherwise).
        """
        m = base_mask
        stack = []
        s = seed_mask & ~m
        while s:
            low = s & -s
            stack.append(low.bit_length() - 1)
            s &= s - 1
        direct = self.direct
        comp = self.comp_pairs
        while stack:
            e = stack.pop()
            if m >> e & 1:
                continue
            m |= 1 << e
            for d in direct[e]:
                if not m >> d & 1:
                    stack.append(d)
            for f, g in comp[e]:
                if (m >> f & 1) and not (m >> g & 1):
                    stack.append(g)
        return m


def _composition_pairs(edges, edge_index):
    by_lower = {}
    by_upper = {}
    for k, (a, b) in enumerate(edges):
        by_lower.setdefault(a, []).append(k)
        by_upper.setdefault(b, []).append(k)
    comp = []
    for a, b in edges:
        pairs = []
        # (a,b) then (b,c) gives (a,c)
        for f in by_lower.get(b, ()):
            _, c = edges[f]
            pairs.append((f, edge_index[(a, c)]))
        # (c,a) then (a,b) gives (c,b)
        for f in by_upper.get(a, ()):
            c, _ = edges[f]
            pairs.append((f, edge_index[(c, b)]))
        comp.append(tuple(pairs))
    return comp


def lattice_context(lattice, mode="FULL"):
    """Closure context for a subgroup lattice in FULL or UNDERLYING mode."""
    edges = lattice.edges
    edge_index = lattice.edge_index
    direct = []
    for k, (a, b) in enumerate(edges):
        forced = set()
        if mode == "FULL":
            forced.update(lattice.edge_orbits[lattice.orbit_of_edge[k]])
        for low in lattice.below(b):
            m = lattice.meet[a][low]
            if m != low:
                forced.add(edge_index[(m, low)])
        forced.discard(k)
        direct.append(tuple(sorted(forced)))
    return ClosureContext(edges, direct, _composition_pairs(edges, edge_index))


def poset_context(quotient):
    """Closure context for a quotient poset: restriction along L <= B adds
    (M, L) for every maximal common lower bound M of A and L."""
    edges = quotient.edges
    edge_index = {e: i for i, e in enumerate(edges)}
    below = {}
    for a, b in quotient.leq:
        below.setdefault(b, []).append(a)
    direct = []
    for a, b in edges:
        forced = set()
        for low in below.get(b, ()):
            for m in quotient.meet_candidates[(a, low)]:
                if m != low:
                    forced.add(edge_index[(m, low)])
        forced.discard(edge_index[(a, b)])
        direct.append(tuple(sorted(forced)))
    return ClosureContext(edges, direct, _composition_pairs(edges, edge_index))


def closure(seed, lattice, mode="FULL", _ctx=None):
    """Least transfer system containing the seed edge set."""
    ctx = _ctx or lattice_context(lattice, mode)
    mask = seed if isinstance(seed, int) else _mask_of(seed)
    return TransferSystem.from_mask(lattice, ctx.close(mask))


def poset_closure(seed, quotient, _ctx=None):
    """Least poset transfer system on a quotient poset; returns the set of
    class pairs."""
    ctx = _ctx or poset_context(quotient)
    edge_index = {e: i for i, e in enumerate(quotient.edges)}
    mask = 0
    for p in seed:
        mask |= 1 << edge_index[tuple(p)]
    out = ctx.close(mask)
    return frozenset(quotient.edges[i] for i in range(len(quotient.edges))
                     if out >> i & 1)


def _mask_of(indices):
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def find_basis_mask(mask, ctx):
    """Deterministic minimal generating set of a closed mask: iterate edges
    in descending index order and drop any whose removal still closes back."""
    basis = mask
    e = mask.bit_length() - 1
    while e >= 0:
        if basis >> e & 1:
            trial = basis & ~(1 << e)
            if ctx.close(trial) == mask:
                basis = trial
        e -= 1
    return basis


def find_basis(system, mode="FULL", _ctx=None):
    """Minimal generating edge set of a validated transfer system."""
    ctx = _ctx or lattice_context(system.lattice, mode)
    basis = find_basis_mask(system.mask, ctx)
    return tuple(i for i in range(system.lattice.edge_count) if basis >> i & 1)


def width(lattice, _ctx=None):
    """Minimal basis size of the complete transfer system; needs no
    enumeration."""
    ctx = _ctx or lattice_context(lattice, "FULL")
    return bin(find_basis_mask(complete_mask(lattice), ctx)).count("1")
