"""Brute-force reference implementations used to cross-check the library.

Everything here works by exhaustive search over edge subsets, so it is
only usable on small lattices, but it depends on nothing beyond the
axiom-checking predicate.
"""

from itertools import combinations

from ninfty import is_transfer_system


def brute_force_masks(lattice, mode="FULL"):
    """All transfer systems on a lattice as a set of int masks."""
    n = lattice.edge_count
    return {m for m in range(1 << n) if is_transfer_system(m, lattice, mode)}


def brute_force_closure(seed_mask, lattice, closed=None, mode="FULL"):
    """Least transfer system containing the seed, by intersecting all
    closed supersets."""
    if closed is None:
        closed = brute_force_masks(lattice, mode)
    out = (1 << lattice.edge_count) - 1
    for m in closed:
        if seed_mask & ~m == 0:
            out &= m
    return out


def minimal_generating_sizes(system, closed=None):
    """Cardinalities of all minimal generating subsets of a system, found
    by exhaustive subset search."""
    lat = system.lattice
    if closed is None:
        closed = brute_force_masks(lat)
    target = system.mask
    generating = []
    for r in range(len(system.edges) + 1):
        for combo in combinations(system.edges, r):
            m = 0
            for e in combo:
                m |= 1 << e
            if brute_force_closure(m, lat, closed) == target:
                generating.append(set(combo))
    return {len(g) for g in generating
            if not any(h < g for h in generating)}
