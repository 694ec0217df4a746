"""Per-transfer-system predicates and constructions: saturation tests,
minimal fibrant subgroup, hulls and cores, lifting left sets, and the
self-duality available over cyclic groups.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd

from . import rubin
from .lattice import TransferSystem, complete_mask


@lru_cache(maxsize=64)
def _chain_triples(lattice):
    """Edge-index triples ((x,y),(y,z),(x,z)) over all strict chains x<y<z."""
    idx = lattice.edge_index
    triples = []
    for (x, y) in lattice.edges:
        for z in lattice.above(y):
            triples.append((idx[(x, y)], idx[(y, z)], idx[(x, z)]))
    return tuple(triples)


def is_saturated(system):
    """Two-out-of-three over every chain of three subgroups."""
    m = system.mask
    for a, b, c in _chain_triples(system.lattice):
        present = (m >> a & 1) + (m >> b & 1) + (m >> c & 1)
        if present == 2:
            return False
    return True


def is_cosaturated(system):
    """True iff the system is generated by its pairs into the top."""
    return cosaturated_core(system).mask == system.mask


def minimal_fibrant_subgroup(system):
    """Meet of all subgroups transferring to the top; top itself if none."""
    lat = system.lattice
    f = lat.top
    for (a, b) in system.pairs:
        if b == lat.top:
            f = lat.meet[f][a]
    return f


def is_flat(system):
    """No nontrivial pair lies at or below the minimal fibrant subgroup."""
    lat = system.lattice
    f = minimal_fibrant_subgroup(system)
    for (a, b) in system.pairs:
        if lat.le(b, f):
            return False
    return True


def left_set(system):
    """Edges with the left lifting property against the system.

    A pair (a,b) lifts against (c,d) when a <= c and b <= d force b <= c;
    identities on either side are vacuous, so only the stored pairs of the
    system matter.  Returns a frozenset of edge indices.
    """
    lat = system.lattice
    pairs = system.pairs
    out = []
    for k, (a, b) in enumerate(lat.edges):
        ok = True
        for (c, d) in pairs:
            if lat.le(a, c) and lat.le(b, d) and not lat.le(b, c):
                ok = False
                break
        if ok:
            out.append(k)
    return frozenset(out)


def saturated_hull(system, _ctx=None):
    """Least saturated transfer system containing the input, by alternating
    two-out-of-three completion with Rubin closure until jointly stable."""
    lat = system.lattice
    ctx = _ctx or rubin.lattice_context(lat, "FULL")
    triples = _chain_triples(lat)
    m = system.mask
    while True:
        grown = m
        for a, b, c in triples:
            bits = (grown >> a & 1) + (grown >> b & 1) + (grown >> c & 1)
            if bits == 2:
                grown |= (1 << a) | (1 << b) | (1 << c)
        grown = ctx.close(grown)
        if grown == m:
            return TransferSystem.from_mask(lat, m)
        m = grown


def cosaturated_core(system, _ctx=None):
    """Greatest cosaturated system inside the input: the closure of its
    pairs into the top."""
    lat = system.lattice
    ctx = _ctx or rubin.lattice_context(lat, "FULL")
    seed = 0
    for k in system.edges:
        if lat.edges[k][1] == lat.top:
            seed |= 1 << k
    return TransferSystem.from_mask(lat, ctx.close(seed))


def cyclic_antiautomorphism(lattice):
    """The order-reversing bijection of a divisor lattice (order d maps to
    order |G|/d); None when the lattice is not of this shape."""
    orders = lattice.node_orders
    if len(set(orders)) != len(orders):
        return None
    if any(len(c) != 1 for c in lattice.node_classes):
        return None
    top = orders[lattice.top]
    by_order = {o: i for i, o in enumerate(orders)}
    for i in range(lattice.node_count):
        for j in range(lattice.node_count):
            if orders[lattice.meet[i][j]] != gcd(orders[i], orders[j]):
                return None
            if orders[lattice.join[i][j]] != orders[i] * orders[j] // gcd(orders[i], orders[j]):
                return None
    phi = []
    for o in orders:
        if top % o or top // o not in by_order:
            return None
        phi.append(by_order[top // o])
    return tuple(phi)


def dual(system):
    """Self-duality of the transfer-system lattice over cyclic groups,
    computed through the left set; identity on any other group."""
    lat = system.lattice
    phi = cyclic_antiautomorphism(lat)
    if phi is None:
        return system
    edges = []
    for k in left_set(system):
        a, b = lat.edges[k]
        edges.append(lat.edge_index[(phi[b], phi[a])])
    return TransferSystem(lat, tuple(sorted(edges)))


def complete_system(lattice):
    return TransferSystem.from_mask(lattice, complete_mask(lattice))


def trivial_system(lattice):
    return TransferSystem(lattice, ())
