"""Subgroup-lattice data model, interchange format, and derived structures.

A lattice is the ambient object everything else lives on: nodes are
subgroups (or abstract lattice elements), ``leq`` is the strict inclusion
order, and conjugation is recorded as a partition of nodes and of edges
into orbits.  Edges are *all* strict comparable pairs, indexed by their
position in the lexicographically sorted pair list.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np


class LatticeError(Exception):
    pass


class ParseError(LatticeError):
    pass


class ValidationError(LatticeError):
    pass


class SubgroupLattice:
    """Immutable subgroup lattice with meet/join tables and orbit data.

    Instances are only built through :func:`build_lattice` or
    :func:`load_lattice`, both of which validate every invariant.
    """

    def __init__(self, name, kind, node_names, node_orders, leq, meet, join,
                 node_classes, edge_orbits, pretty_names=None,
                 vertex_layout=None, edge_options=None):
        self.name = name
        self.kind = kind
        self.node_names = tuple(node_names)
        self.node_orders = tuple(node_orders)
        self.node_count = len(self.node_names)
        self.leq = frozenset((int(a), int(b)) for a, b in leq)
        self.meet = tuple(tuple(int(x) for x in row) for row in meet)
        self.join = tuple(tuple(int(x) for x in row) for row in join)
        self.edges = tuple(sorted(self.leq))
        self.edge_index = {e: i for i, e in enumerate(self.edges)}
        self.node_classes = tuple(tuple(c) for c in node_classes)
        self.edge_orbits = tuple(tuple(sorted(self.edge_index[tuple(e)] for e in orb))
                                 for orb in edge_orbits)
        self.pretty_names = tuple(pretty_names) if pretty_names else None
        self.vertex_layout = tuple(vertex_layout) if vertex_layout else None
        self.edge_options = dict(edge_options) if edge_options else None

        below = [set() for _ in range(self.node_count)]
        above = [set() for _ in range(self.node_count)]
        for a, b in self.leq:
            below[b].add(a)
            above[a].add(b)
        self._below = tuple(frozenset(s) for s in below)
        self._above = tuple(frozenset(s) for s in above)
        tops = [i for i in range(self.node_count) if not above[i]]
        bottoms = [i for i in range(self.node_count) if not below[i]]
        if self.node_count and (len(tops) != 1 or len(bottoms) != 1):
            raise ValidationError("leq does not have a unique top and bottom")
        self.top = tops[0]
        self.bottom = bottoms[0]
        self.orbit_of_edge = {}
        for k, orb in enumerate(self.edge_orbits):
            for e in orb:
                self.orbit_of_edge[e] = k
        self.class_of_node = {}
        for k, cls in enumerate(self.node_classes):
            for i in cls:
                self.class_of_node[i] = k
        self._leq_matrix = None

    def le(self, a, b):
        """Non-strict order test."""
        return a == b or (a, b) in self.leq

    def below(self, b):
        """Nodes strictly below b."""
        return self._below[b]

    def above(self, a):
        return self._above[a]

    @property
    def edge_count(self):
        return len(self.edges)

    @property
    def leq_matrix(self):
        """Boolean matrix of the non-strict order, diagonal included."""
        if self._leq_matrix is None:
            n = self.node_count
            m = np.eye(n, dtype=bool)
            for a, b in self.leq:
                m[a, b] = True
            m.setflags(write=False)
            self._leq_matrix = m
        return self._leq_matrix

    def is_dedekind(self):
        return all(len(c) == 1 for c in self.node_classes)

    def covers(self):
        """Cover pairs of the order, derived on demand."""
        out = []
        for a, b in self.edges:
            if not any((a, z) in self.leq and (z, b) in self.leq
                       for z in self._above[a] & self._below[b]):
                out.append((a, b))
        return out

    def __eq__(self, other):
        if not isinstance(other, SubgroupLattice):
            return NotImplemented
        return (self.name, self.kind, self.node_names, self.node_orders,
                self.leq, self.meet, self.join, self.node_classes,
                self.edge_orbits) == \
               (other.name, other.kind, other.node_names, other.node_orders,
                other.leq, other.meet, other.join, other.node_classes,
                other.edge_orbits)

    # hashed by identity: lattices are immutable and used as cache keys
    def __hash__(self):
        return id(self)

    def __repr__(self):
        return f"SubgroupLattice({self.name!r}, {self.node_count} nodes, {self.edge_count} edges)"


@dataclass(frozen=True)
class TransferSystem:
    """A set of non-identity comparable pairs, stored as sorted edge indices.

    Identity pairs are implicit and never stored.  Equality and hashing are
    structural over the canonical sorted index tuple.
    """

    lattice: SubgroupLattice
    edges: tuple[int, ...]

    @classmethod
    def from_mask(cls, lattice, mask):
        return cls(lattice, tuple(i for i in range(lattice.edge_count) if mask >> i & 1))

    @classmethod
    def from_pairs(cls, lattice, pairs):
        return cls(lattice, tuple(sorted(lattice.edge_index[tuple(p)] for p in pairs)))

    @property
    def mask(self):
        m = 0
        for i in self.edges:
            m |= 1 << i
        return m

    @property
    def pairs(self):
        return tuple(self.lattice.edges[i] for i in self.edges)

    def __len__(self):
        return len(self.edges)

    def __contains__(self, item):
        return item in self.edges

    def __le__(self, other):
        return set(self.edges) <= set(other.edges)

    def __hash__(self):
        return hash((id(self.lattice), self.edges))

    def __eq__(self, other):
        if not isinstance(other, TransferSystem):
            return NotImplemented
        return self.lattice is other.lattice and self.edges == other.edges


@dataclass(frozen=True, eq=False)
class QuotientPoset:
    """Conjugacy-class poset Sub(G)/G with meet-candidate data."""

    class_count: int
    class_names: tuple[str, ...]
    leq: frozenset  # strict pairs of class indices
    meet_candidates: dict  # (i, j) -> tuple of maximal common lower bounds
    is_lattice: bool
    edges: tuple = field(default=())  # sorted strict pairs; edge index = position
    bottom: int = 0
    top: int = 0

    @property
    def edge_count(self):
        return len(self.edges)

    def le(self, a, b):
        return a == b or (a, b) in self.leq


def complete_mask(lattice):
    return (1 << lattice.edge_count) - 1


def is_transfer_system(edge_set, lattice, mode="FULL"):
    """Check the closure axioms directly; total predicate, no closure used.

    ``edge_set`` may be an int mask or an iterable of edge indices.  In
    UNDERLYING mode the conjugation (orbit saturation) axiom is skipped.
    """
    if isinstance(edge_set, int):
        members = {i for i in range(lattice.edge_count) if edge_set >> i & 1}
    else:
        members = set(edge_set)
    pairs = {lattice.edges[i] for i in members}
    # conjugation
    if mode == "FULL":
        for i in members:
            orb = lattice.edge_orbits[lattice.orbit_of_edge[i]]
            if not members.issuperset(orb):
                return False
    # composition
    for a, b in pairs:
        for c in lattice.above(b):
            if (b, c) in pairs and (a, c) not in pairs:
                return False
    # restriction
    for a, b in pairs:
        for low in lattice.below(b):
            m = lattice.meet[a][low]
            if m != low and (m, low) not in pairs:
                return False
    return True


def opposite(lattice):
    """Order-reversed lattice with meet/join and bottom/top swapped.

    Node indices are preserved; edge indices are re-derived from the
    reversed pairs.  Returns ``(op_lattice, edge_map)`` where ``edge_map``
    sends an edge index of the input to its index in the opposite.
    """
    rev = [(b, a) for a, b in lattice.leq]
    orbits = [[(lattice.edges[i][1], lattice.edges[i][0]) for i in orb]
              for orb in lattice.edge_orbits]
    op = SubgroupLattice(
        name=lattice.name + "^op",
        kind=lattice.kind,
        node_names=lattice.node_names,
        node_orders=lattice.node_orders,
        leq=rev,
        meet=lattice.join,
        join=lattice.meet,
        node_classes=lattice.node_classes,
        edge_orbits=orbits,
    )
    edge_map = tuple(op.edge_index[(b, a)] for a, b in lattice.edges)
    return op, edge_map


def conjugacy_quotient(lattice):
    """The poset of conjugacy classes, ordered by subconjugacy."""
    classes = lattice.node_classes
    k = len(classes)
    leq = set()
    for i in range(k):
        for j in range(k):
            if i != j and any(lattice.le(a, b) for a in classes[i] for b in classes[j]):
                leq.add((i, j))
    # sanity: the subconjugacy relation must be a partial order
    for a, b in leq:
        if (b, a) in leq:
            raise ValidationError("conjugacy quotient relation is not antisymmetric")
        for c in range(k):
            if (b, c) in leq and c != a and (a, c) not in leq:
                raise ValidationError("conjugacy quotient relation is not transitive")
    meet_candidates = {}
    is_lattice = True
    for i in range(k):
        for j in range(k):
            lower = [c for c in range(k)
                     if (c == i or (c, i) in leq) and (c == j or (c, j) in leq)]
            maximal = [c for c in lower
                       if not any(d != c and (c, d) in leq for d in lower)]
            meet_candidates[(i, j)] = tuple(sorted(maximal))
            if len(maximal) != 1:
                is_lattice = False
    names = tuple(lattice.node_names[cls[0]] for cls in classes)
    bottoms = [i for i in range(k) if not any((j, i) in leq for j in range(k))]
    tops = [i for i in range(k) if not any((i, j) in leq for j in range(k))]
    if len(bottoms) != 1 or len(tops) != 1:
        raise ValidationError("conjugacy quotient lacks a unique top or bottom")
    return QuotientPoset(
        class_count=k,
        class_names=names,
        leq=frozenset(leq),
        meet_candidates=meet_candidates,
        is_lattice=is_lattice,
        edges=tuple(sorted(leq)),
        bottom=bottoms[0],
        top=tops[0],
    )


def validate(lattice):
    """Check every structural invariant; raises ValidationError on the first
    violation found."""
    n = lattice.node_count
    leq = lattice.leq
    for a, b in leq:
        if not (0 <= a < n and 0 <= b < n):
            raise ValidationError(f"leq pair ({a},{b}) out of range")
        if a == b:
            raise ValidationError(f"leq pair ({a},{a}) is reflexive")
        if (b, a) in leq:
            raise ValidationError(f"leq pairs ({a},{b}) and ({b},{a}) break antisymmetry")
    for a, b in leq:
        for c in range(n):
            if (b, c) in leq and c != a and (a, c) not in leq:
                raise ValidationError(f"leq not transitive: ({a},{b}),({b},{c})")
    if len(lattice.meet) != n or any(len(r) != n for r in lattice.meet):
        raise ValidationError("meet table has wrong shape")
    if len(lattice.join) != n or any(len(r) != n for r in lattice.join):
        raise ValidationError("join table has wrong shape")
    for i in range(n):
        for j in range(n):
            m = lattice.meet[i][j]
            lower = [c for c in range(n) if lattice.le(c, i) and lattice.le(c, j)]
            maximal = [c for c in lower
                       if not any(d != c and lattice.le(c, d) for d in lower)]
            if maximal != [m]:
                raise ValidationError(f"meet({i},{j}) inconsistent with leq")
            jn = lattice.join[i][j]
            upper = [c for c in range(n) if lattice.le(i, c) and lattice.le(j, c)]
            minimal = [c for c in upper
                       if not any(d != c and lattice.le(d, c) for d in upper)]
            if minimal != [jn]:
                raise ValidationError(f"join({i},{j}) inconsistent with leq")
    seen_nodes = sorted(i for cls in lattice.node_classes for i in cls)
    if seen_nodes != list(range(n)):
        raise ValidationError("node_classes do not partition the nodes")
    seen_edges = sorted(i for orb in lattice.edge_orbits for i in orb)
    if seen_edges != list(range(lattice.edge_count)):
        raise ValidationError("edge_orbits do not partition the edges")
    for orb in lattice.edge_orbits:
        a0, b0 = lattice.edges[orb[0]]
        for e in orb[1:]:
            a, b = lattice.edges[e]
            if lattice.class_of_node[a] != lattice.class_of_node[a0] or \
               lattice.class_of_node[b] != lattice.class_of_node[b0]:
                raise ValidationError(f"edge orbit mixes node classes at edge {e}")
            if lattice.node_orders[a] != lattice.node_orders[a0] or \
               lattice.node_orders[b] != lattice.node_orders[b0]:
                raise ValidationError(f"edge orbit mixes subgroup orders at edge {e}")
    singleton_nodes = all(len(c) == 1 for c in lattice.node_classes)
    singleton_edges = all(len(o) == 1 for o in lattice.edge_orbits)
    if singleton_nodes != singleton_edges:
        raise ValidationError("node classes and edge orbits disagree on triviality of the action")
    if lattice.kind == "lattice" and not singleton_nodes:
        raise ValidationError("abstract lattice input must have singleton conjugacy classes")
    if lattice.pretty_names is not None and \
            len(lattice.pretty_names) != len(lattice.node_classes):
        raise ValidationError("pretty_names length must equal the number of node classes")
    if lattice.vertex_layout is not None and \
            len(lattice.vertex_layout) != len(lattice.node_classes):
        raise ValidationError("vertex_layout length must equal the number of node classes")
    return lattice


def build_lattice(name, kind, node_names, node_orders, leq, meet, join,
                  node_classes, edge_orbits, pretty_names=None,
                  vertex_layout=None, edge_options=None):
    """Construct and validate a lattice from raw components."""
    lat = SubgroupLattice(name, kind, node_names, node_orders, leq, meet, join,
                          node_classes, edge_orbits, pretty_names,
                          vertex_layout, edge_options)
    return validate(lat)


def lattice_from_order(name, node_names, node_orders, strict_pairs, kind="lattice"):
    """Build a lattice from a bare strict order, deriving meet/join tables.

    Conjugacy classes and edge orbits are singletons.  Raises
    ValidationError if some pair lacks a unique meet or join.
    """
    n = len(node_names)
    leq = set(map(tuple, strict_pairs))
    # transitive closure, so callers may pass covers
    changed = True
    while changed:
        changed = False
        for a, b in list(leq):
            for b2, c in list(leq):
                if b2 == b and (a, c) not in leq and a != c:
                    leq.add((a, c))
                    changed = True

    def le(a, b):
        return a == b or (a, b) in leq

    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            lower = [c for c in range(n) if le(c, i) and le(c, j)]
            maximal = [c for c in lower if not any(d != c and le(c, d) for d in lower)]
            if len(maximal) != 1:
                raise ValidationError(f"nodes {i},{j} have no unique meet")
            meet[i][j] = maximal[0]
            upper = [c for c in range(n) if le(i, c) and le(j, c)]
            minimal = [c for c in upper if not any(d != c and le(d, c) for d in upper)]
            if len(minimal) != 1:
                raise ValidationError(f"nodes {i},{j} have no unique join")
            join[i][j] = minimal[0]
    edges = sorted(leq)
    return build_lattice(
        name, kind, node_names, node_orders, leq, meet, join,
        node_classes=[[i] for i in range(n)],
        edge_orbits=[[e] for e in edges],
    )


_REQUIRED_FIELDS = ("name", "kind", "nodes", "leq", "meet", "join",
                    "node_classes", "edge_orbits")


def lattice_from_dict(doc):
    if not isinstance(doc, dict):
        raise ParseError("data file must be a JSON object")
    for key in _REQUIRED_FIELDS:
        if key not in doc:
            raise ParseError(f"missing required field {key!r}")
    if doc["kind"] not in ("group", "lattice"):
        raise ParseError(f"kind must be 'group' or 'lattice', got {doc['kind']!r}")
    try:
        names = [nd["name"] for nd in doc["nodes"]]
        orders = [int(nd["order"]) for nd in doc["nodes"]]
        leq = [tuple(map(int, p)) for p in doc["leq"]]
        orbits = [[tuple(map(int, p)) for p in orb] for orb in doc["edge_orbits"]]
        edge_options = None
        if doc.get("edge_options"):
            edge_options = {tuple(map(int, k.split(","))): v
                            for k, v in doc["edge_options"].items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed data file: {exc}") from exc
    return build_lattice(
        doc["name"], doc["kind"], names, orders, leq, doc["meet"], doc["join"],
        doc["node_classes"], orbits,
        pretty_names=doc.get("pretty_names"),
        vertex_layout=doc.get("vertex_layout"),
        edge_options=edge_options,
    )


def load_lattice(path):
    """Load and validate a JSON data file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
    return lattice_from_dict(doc)


def lattice_to_dict(lattice):
    doc = {
        "name": lattice.name,
        "kind": lattice.kind,
        "nodes": [{"name": nm, "order": od}
                  for nm, od in zip(lattice.node_names, lattice.node_orders)],
        "leq": [list(p) for p in lattice.edges],
        "meet": [list(r) for r in lattice.meet],
        "join": [list(r) for r in lattice.join],
        "node_classes": [list(c) for c in lattice.node_classes],
        "edge_orbits": [[list(lattice.edges[i]) for i in orb]
                        for orb in lattice.edge_orbits],
    }
    if lattice.pretty_names is not None:
        doc["pretty_names"] = list(lattice.pretty_names)
    if lattice.vertex_layout is not None:
        doc["vertex_layout"] = list(lattice.vertex_layout)
    if lattice.edge_options is not None:
        doc["edge_options"] = {f"{a},{b}": v for (a, b), v in lattice.edge_options.items()}
    return doc


def serialize(lattice, path=None):
    """Serialize to the JSON interchange format; returns the text."""
    text = json.dumps(lattice_to_dict(lattice), indent=1)
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return text
