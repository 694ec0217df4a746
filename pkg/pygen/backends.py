"""Group-theory backends for the data-file generator.

A backend exposes one operation: resolve a small-group library ID to the
full subgroup data (element sets, conjugation action) needed to emit a
data file.  The default backend drives sympy's permutation groups from a
table of generators for the supported IDs.
"""

import sys

from sympy.combinatorics import Permutation, PermutationGroup


class BackendError(Exception):
    pass


def _cycle(n):
    return Permutation(list(range(1, n)) + [0])


def _swap(n):
    p = list(range(n))
    p[0], p[1] = 1, 0
    return Permutation(p)


def _dihedral(n):
    # rotation and reflection on n points; group order 2n
    return [_cycle(n), Permutation([(n - i) % n for i in range(n)])]


# small-group library IDs -> (name, permutation generators)
_SMALL_GROUPS = {
    (1, 1): ("1", [Permutation([0])]),
    (2, 1): ("C2", [_swap(2)]),
    (3, 1): ("C3", [_cycle(3)]),
    (4, 1): ("C4", [_cycle(4)]),
    (4, 2): ("C2xC2", [Permutation([1, 0, 2, 3]), Permutation([0, 1, 3, 2])]),
    (5, 1): ("C5", [_cycle(5)]),
    (6, 1): ("S3", [_cycle(3), _swap(3)]),
    (6, 2): ("C6", [_cycle(6)]),
    (7, 1): ("C7", [_cycle(7)]),
    (8, 1): ("C8", [_cycle(8)]),
    (8, 3): ("D4", _dihedral(4)),
    # quaternion group in its regular representation
    (8, 4): ("Q8", [Permutation([2, 3, 1, 0, 6, 7, 5, 4]),
                    Permutation([4, 5, 7, 6, 1, 0, 2, 3])]),
    (12, 3): ("A4", [Permutation([1, 2, 0, 3]), Permutation([0, 2, 3, 1])]),
    (16, 7): ("D8", _dihedral(8)),
    (24, 12): ("S4", [_cycle(4), _swap(4)]),
    (60, 5): ("A5", [Permutation([1, 2, 0, 3, 4]),
                     Permutation([0, 2, 3, 1, 4]),
                     Permutation([0, 1, 3, 4, 2])]),
}


class SympyBackend:
    """Subgroup data computed with sympy.combinatorics."""

    def known_ids(self):
        return sorted(_SMALL_GROUPS)

    def small_group(self, order, index, verbose=False):
        """Return (default_name, GroupData) for a small-group ID."""
        try:
            name, gens = _SMALL_GROUPS[(order, index)]
        except KeyError:
            raise BackendError(
                f"small group ({order},{index}) is not in the backend table; "
                f"known IDs: {', '.join(map(str, self.known_ids()))}")
        data = GroupData(gens, verbose=verbose)
        if data.order != order:
            raise BackendError(
                f"backend table inconsistency for ({order},{index})")
        return name, data


class GroupData:
    """All subgroups of a permutation group, with the conjugation action."""

    def __init__(self, generators, verbose=False):
        self.generators = generators
        self._say = (lambda msg: print(msg, file=sys.stderr)) if verbose \
            else (lambda msg: None)
        group = PermutationGroup(generators)
        self.elements = sorted(group.elements, key=lambda p: p.array_form)
        self.order = len(self.elements)
        self._rank = {p: i for i, p in enumerate(self.elements)}
        self._say(f"group of order {self.order}")
        self.subgroups = self._all_subgroups()
        self._say(f"{len(self.subgroups)} subgroups")

    def span(self, elements):
        """Element set generated by the given elements."""
        gens = [p for p in elements if not p.is_Identity]
        if not gens:
            return frozenset({_identity_of(self.elements)})
        return frozenset(PermutationGroup(gens).elements)

    def _all_subgroups(self):
        """Cyclic subgroups closed under pairwise join, canonically sorted."""
        identity = _identity_of(self.elements)
        subs = {frozenset({identity})}
        for p in self.elements:
            cyc = {identity}
            q = p
            while not q.is_Identity:
                cyc.add(q)
                q = q * p
            subs.add(frozenset(cyc))
        self._say(f"{len(subs)} cyclic subgroups")
        frontier = set(subs)
        rounds = 0
        while frontier:
            rounds += 1
            new = set()
            for a in frontier:
                for b in subs:
                    if a <= b or b <= a:
                        continue
                    j = self.span(a | b)
                    if j not in subs and j not in new:
                        new.add(j)
            subs |= new
            frontier = new
            self._say(f"join closure round {rounds}: {len(subs)} subgroups")
        return sorted(subs, key=self._key)

    def _key(self, sub):
        return (len(sub), sorted(self._rank[p] for p in sub))

    def conjugation_maps(self):
        """For each generator, the induced permutation of subgroup indices."""
        index = {s: i for i, s in enumerate(self.subgroups)}
        maps = []
        for g in self.generators:
            gi = g ** -1
            maps.append([index[frozenset(g * p * gi for p in s)]
                         for s in self.subgroups])
        return maps


def _identity_of(elements):
    for p in elements:
        if p.is_Identity:
            return p
    raise BackendError("group has no identity element")


BACKENDS = {"sympy": SympyBackend}


def get_backend(name):
    try:
        return BACKENDS[name]()
    except KeyError:
        raise BackendError(f"unknown backend {name!r}; available: "
                           + ", ".join(sorted(BACKENDS)))
