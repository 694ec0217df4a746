"""Native constructors for subgroup lattices of built-in group families.

Cyclic groups are built analytically from divisor arithmetic; everything
else goes through a small permutation-group engine that enumerates all
subgroups and the conjugation action.
"""

from __future__ import annotations

from math import gcd

from .lattice import build_lattice, ValidationError


DEFAULT_ELEMENT_CAP = 20_000


class GroupError(Exception):
    pass


def _compose(p, q):
    # (p*q)(i) = p(q(i))
    return tuple(p[q[i]] for i in range(len(p)))


def _inverse(p):
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


class PermutationGroup:
    """Finite permutation group on points 0..degree-1 given by generators."""

    def __init__(self, degree, generators, element_cap=DEFAULT_ELEMENT_CAP):
        self.degree = degree
        self.generators = [tuple(g) for g in generators]
        for g in self.generators:
            if sorted(g) != list(range(degree)):
                raise GroupError(f"not a permutation of 0..{degree - 1}: {g}")
        self.element_cap = element_cap
        self._elements = None

    @property
    def elements(self):
        if self._elements is None:
            identity = tuple(range(self.degree))
            seen = {identity}
            frontier = [identity]
            while frontier:
                nxt = []
                for p in frontier:
                    for g in self.generators:
                        q = _compose(g, p)
                        if q not in seen:
                            seen.add(q)
                            if len(seen) > self.element_cap:
                                raise GroupError(
                                    f"group exceeds element cap {self.element_cap}")
                            nxt.append(q)
                frontier = nxt
            self._elements = sorted(seen)
        return self._elements

    @property
    def order(self):
        return len(self.elements)


def _generated_subgroup(gens, cap):
    """Subgroup generated by a set of permutations."""
    gens = list(gens)
    degree = len(gens[0])
    identity = tuple(range(degree))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                r = _compose(p, g)
                if r not in seen:
                    seen.add(r)
                    if len(seen) > cap:
                        raise GroupError(f"subgroup closure exceeds element cap {cap}")
                    nxt.append(r)
        frontier = nxt
    return frozenset(seen)


def _element_order(p):
    identity = tuple(range(len(p)))
    q, k = p, 1
    while q != identity:
        q = _compose(p, q)
        k += 1
    return k


def _all_subgroups(group):
    """All subgroups as frozensets of elements: cyclic seeds closed under join."""
    identity = tuple(range(group.degree))
    subgroups = {frozenset([identity])}
    for g in group.elements:
        cyc = {identity}
        q = g
        while q != identity:
            cyc.add(q)
            q = _compose(g, q)
        subgroups.add(frozenset(cyc))
    stable = False
    while not stable:
        stable = True
        current = sorted(subgroups, key=lambda s: (len(s), sorted(s)))
        for i, a in enumerate(current):
            for b in current[i + 1:]:
                if a <= b or b <= a:
                    continue
                j = _generated_subgroup(a | b, len(group.elements))
                if j not in subgroups:
                    subgroups.add(j)
                    stable = False
    return subgroups


_SMALL_NAMES = {1: "1"}


def _involutions(sub):
    return sum(1 for p in sub if _element_order(p) == 2)


def _structure_name(sub):
    order = len(sub)
    if order == 1:
        return "1"
    orders = sorted(_element_order(p) for p in sub)
    if orders[-1] == order:
        return f"C{order}"
    if order == 4:
        return "C2xC2"
    if order == 6:
        return "S3"
    if order == 8:
        return {1: "Q8", 3: "C4xC2", 5: "D4", 7: "C2xC2xC2"}.get(_involutions(sub), "G8")
    if order == 10:
        return "D5"
    if order == 12:
        return {1: "Dic3", 3: "A4", 7: "D6"}.get(_involutions(sub), "G12")
    return f"G{order}"


def subgroup_lattice(group, name="G"):
    """Enumerate all subgroups of a permutation group and assemble the
    lattice with conjugation orbit data."""
    elements = group.elements
    element_index = {e: i for i, e in enumerate(elements)}
    subs = _all_subgroups(group)
    # canonical node order: by subgroup order, then by sorted element indices
    keyed = sorted(subs, key=lambda s: (len(s), sorted(element_index[e] for e in s)))
    index_of = {s: i for i, s in enumerate(keyed)}
    n = len(keyed)

    leq = [(i, j) for i in range(n) for j in range(n)
           if i != j and keyed[i] < keyed[j]]
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            inter = keyed[i] & keyed[j]
            if inter not in index_of:
                raise GroupError("subgroup intersection missing from enumeration")
            meet[i][j] = meet[j][i] = index_of[inter]
            if keyed[i] <= keyed[j]:
                join[i][j] = join[j][i] = j
            elif keyed[j] <= keyed[i]:
                join[i][j] = join[j][i] = i
            else:
                jn = index_of[_generated_subgroup(keyed[i] | keyed[j], len(elements))]
                join[i][j] = join[j][i] = jn

    # conjugation action of each group generator on the node set
    node_perms = []
    for g in group.generators:
        ginv = _inverse(g)
        perm = []
        for s in keyed:
            conj = frozenset(_compose(g, _compose(p, ginv)) for p in s)
            perm.append(index_of[conj])
        node_perms.append(perm)

    node_classes = _orbits(range(n), node_perms)
    edges = sorted(leq)
    edge_of = {e: k for k, e in enumerate(edges)}
    edge_perms = [[edge_of[(perm[a], perm[b])] for a, b in edges]
                  for perm in node_perms]
    edge_orbit_sets = _orbits(range(len(edges)), edge_perms)

    base = [_structure_name(s) if len(s) < len(elements) else name for s in keyed]
    names = _disambiguate(base)

    return build_lattice(
        name, "group", names, [len(s) for s in keyed], leq, meet, join,
        node_classes=node_classes,
        edge_orbits=[[list(edges[k]) for k in orb] for orb in edge_orbit_sets],
    )


def _orbits(items, perms):
    items = list(items)
    parent = {i: i for i in items}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in perms:
        for i in items:
            a, b = find(i), find(perm[i])
            if a != b:
                parent[a] = b
    groups = {}
    for i in items:
        groups.setdefault(find(i), []).append(i)
    return sorted((sorted(v) for v in groups.values()), key=lambda c: c[0])


def _disambiguate(names):
    from collections import Counter
    counts = Counter(names)
    seen = Counter()
    out = []
    for nm in names:
        if counts[nm] > 1:
            seen[nm] += 1
            out.append(f"{nm}({seen[nm]})")
        else:
            out.append(nm)
    return out


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def cyclic_lattice(n, name=None):
    """Divisor lattice of n: nodes are divisors, meet is gcd, join is lcm."""
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    divs = _divisors(n)
    idx = {d: i for i, d in enumerate(divs)}
    k = len(divs)
    leq = [(i, j) for i in range(k) for j in range(k)
           if i != j and divs[j] % divs[i] == 0]
    meet = [[idx[gcd(a, b)] for b in divs] for a in divs]
    join = [[idx[a * b // gcd(a, b)] for b in divs] for a in divs]
    names = ["1"] + [f"C{d}" for d in divs[1:]]
    edges = sorted(leq)
    return build_lattice(
        name or f"C{n}", "group", names, divs, leq, meet, join,
        node_classes=[[i] for i in range(k)],
        edge_orbits=[[list(e)] for e in edges],
    )


def _cyclic_perm(n):
    return tuple((i + 1) % n for i in range(n))


def _quaternion8():
    # units 1,-1,i,-i,j,-j,k,-k as points 0..7; left multiplication by i and j
    mul_i = [2, 3, 1, 0, 6, 7, 5, 4]   # i*1=i, i*-1=-i, i*i=-1, i*-i=1, i*j=k, ...
    mul_j = [4, 5, 7, 6, 1, 0, 2, 3]   # j*1=j, j*-1=-j, j*i=-k, j*-i=k, j*j=-1, ...
    return PermutationGroup(8, [tuple(mul_i), tuple(mul_j)])


def _shift_block(degree, start, size):
    p = list(range(degree))
    for i in range(size):
        p[start + i] = start + (i + 1) % size
    return tuple(p)


def builtin(spec, element_cap=DEFAULT_ELEMENT_CAP):
    """Build a lattice for a spec such as ``cyclic:12``, ``symmetric:4``,
    ``quaternion:8``, ``elemab:2:2`` or ``cyclic:3 x cyclic:5``."""
    spec = spec.strip()
    if spec.startswith("builtin:"):
        spec = spec[len("builtin:"):]
    if " x " in spec or ("x" in spec and spec.count("cyclic:") == 2):
        parts = [p.strip() for p in spec.replace(" x ", "x").split("x")]
        if len(parts) == 2 and all(p.startswith("cyclic:") for p in parts):
            a, b = (int(p.split(":")[1]) for p in parts)
            return _cyclic_product(a, b, element_cap)
        raise GroupError(f"unknown group spec {spec!r}")
    fields = spec.split(":")
    kind = fields[0]
    try:
        if kind == "cyclic" and len(fields) == 2:
            return cyclic_lattice(int(fields[1]))
        if kind == "dihedral" and len(fields) == 2:
            n = int(fields[1])
            if n < 3:
                raise GroupError("dihedral:n needs n >= 3")
            rot = _cyclic_perm(n)
            ref = tuple((n - i) % n for i in range(n))
            g = PermutationGroup(n, [rot, ref], element_cap)
            return subgroup_lattice(g, f"D{n}")
        if kind == "symmetric" and len(fields) == 2:
            n = int(fields[1])
            if n <= 1:
                return subgroup_lattice(PermutationGroup(1, [], element_cap), f"S{n}")
            gens = [_cyclic_perm(n)]
            if n >= 2:
                swap = list(range(n))
                swap[0], swap[1] = 1, 0
                gens.append(tuple(swap))
            return subgroup_lattice(PermutationGroup(n, gens, element_cap), f"S{n}")
        if kind == "alternating" and len(fields) == 2:
            n = int(fields[1])
            if n <= 2:
                return subgroup_lattice(PermutationGroup(1, [], element_cap), f"A{n}")
            # generated by the 3-cycles (0 1 k)
            gens = []
            for k in range(2, n):
                p = list(range(n))
                p[0], p[1], p[k] = 1, k, 0
                gens.append(tuple(p))
            return subgroup_lattice(PermutationGroup(n, gens, element_cap), f"A{n}")
        if kind == "quaternion" and len(fields) == 2:
            if int(fields[1]) != 8:
                raise GroupError("only quaternion:8 is supported")
            return subgroup_lattice(_quaternion8(), "Q8")
        if kind == "elemab" and len(fields) == 3:
            p, k = int(fields[1]), int(fields[2])
            degree = p * k
            gens = [_shift_block(degree, i * p, p) for i in range(k)]
            g = PermutationGroup(degree, gens, element_cap)
            return subgroup_lattice(g, "x".join([f"C{p}"] * k))
    except ValueError as exc:
        raise GroupError(f"bad group spec {spec!r}: {exc}") from exc
    raise GroupError(f"unknown group spec {spec!r}")


def _cyclic_product(a, b, element_cap):
    if gcd(a, b) == 1:
        return cyclic_lattice(a * b, name=f"C{a}xC{b}")
    degree = a + b
    gens = [_shift_block(degree, 0, a), _shift_block(degree, a, b)]
    g = PermutationGroup(degree, gens, element_cap)
    return subgroup_lattice(g, f"C{a}xC{b}")
