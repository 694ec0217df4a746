"""Pairs of transfer systems: premodel intervals, weak equivalences,
composition-closed and Quillen detection, weak-equivalence types, and
compatible (bi-incomplete) pairs.

Relations on the node set are boolean matrices, so the per-interval
checks reduce to a handful of small matrix products:

  W            = left_lifting(F) composed with AF (identities included)
  comp. closed = W.W inside W
  Quillen      = additionally W.W^T and W^T.W inside W on comparable pairs
  compatible   = no witness (A,B,C) of the bi-incompleteness condition
"""

from __future__ import annotations

import numpy as np

from .lattice import TransferSystem


class PreconditionError(ValueError):
    pass


def _relation_matrix(system):
    lat = system.lattice
    n = lat.node_count
    m = np.eye(n, dtype=bool)
    for a, b in system.pairs:
        m[a, b] = True
    return m


def _left_lifting_matrix(tid, leq):
    """Pairs (a,b), a <= b, lifting against a system given as a reflexive
    relation matrix; reflexive pairs always lift."""
    leq8 = leq.astype(np.uint8)
    u = tid.astype(np.uint8) @ leq8.T            # u[c,b]: some (c,d) with b <= d
    bad = leq8 @ (u.astype(bool) & ~leq.T).astype(np.uint8)
    return leq & ~bad.astype(bool)


def weak_equivalences(af, f):
    """Node pairs factoring as an acyclic cofibration of F followed by a
    member of AF; identities included."""
    _require_nested(af, f)
    w = _we_matrix(_relation_matrix(af), _relation_matrix(f),
                   af.lattice.leq_matrix)
    n = af.lattice.node_count
    return frozenset((a, b) for a in range(n) for b in range(n) if w[a, b])


def _we_matrix(af_id, f_id, leq):
    ls = _left_lifting_matrix(f_id, leq)
    return (ls.astype(np.uint8) @ af_id.astype(np.uint8)).astype(bool)


def _classify_w(w, leq):
    """0 / 1 / 2 for a weak-equivalence relation."""
    w8 = w.astype(np.uint8)
    if np.any((w8 @ w8).astype(bool) & ~w):
        return 0
    two_of_three = (
        not np.any((w8 @ w8.T).astype(bool) & leq & ~w)
        and not np.any((w8.T @ w8).astype(bool) & leq & ~w)
    )
    return 2 if two_of_three else 1


def model_check(af, f):
    """2 for Quillen, 1 for composition closed but not Quillen, else 0."""
    _require_nested(af, f)
    leq = af.lattice.leq_matrix
    w = _we_matrix(_relation_matrix(af), _relation_matrix(f), leq)
    return _classify_w(w, leq)


def is_compatible(tm, ta):
    """Bi-incomplete Tambara compatibility of a nested pair tm <= ta."""
    _require_nested(tm, ta)
    lat = tm.lattice
    leq = lat.leq_matrix
    ta_id = _relation_matrix(ta)
    tm_id = _relation_matrix(tm)
    r = _compat_matrix(ta_id, np.array(lat.meet))
    viol = (r.T.astype(np.uint8) @ tm_id.astype(np.uint8)).astype(bool) & leq & ~ta_id
    return not np.any(viol)


def _compat_matrix(ta_id, meet):
    # r[b, c] = ta_id[meet(b,c), b]
    n = ta_id.shape[0]
    return ta_id[meet, np.arange(n)[:, None]]


def _require_nested(small, big):
    if small.lattice is not big.lattice:
        raise PreconditionError("systems live on different lattices")
    if not set(small.edges) <= set(big.edges):
        raise PreconditionError("acyclic fibrations are not contained in the fibrations")


def intervals(store):
    """All ordered index pairs (i, j) with systems[i] a subset of
    systems[j], including i = j."""
    masks = store.systems
    out = []
    for i, a in enumerate(masks):
        for j, b in enumerate(masks):
            if a & ~b == 0:
                out.append((i, j))
    return out


class ModelScan:
    """One pass over all intervals of an ALL store, accumulating the pair
    counts and the set of Quillen weak-equivalence types."""

    def __init__(self, store):
        self.store = store
        lat = store.structure
        self.lattice = lat
        n = lat.node_count
        leq = lat.leq_matrix
        edges = lat.edges
        ids = []
        for m in store.systems:
            t = np.eye(n, dtype=bool)
            for k in range(lat.edge_count):
                if m >> k & 1:
                    t[edges[k]] = True
            ids.append(t)
        self.t_id = ids
        self.ls = [_left_lifting_matrix(t, leq) for t in ids]
        meet = np.array(lat.meet)
        self.compat_r = [_compat_matrix(t, meet) for t in ids]
        self.leq = leq
        self._run()

    def _run(self):
        leq = self.leq
        masks = self.store.systems
        n_sys = len(masks)
        premodel = cclosed = quillen = compatible = 0
        wtypes = set()
        t8 = [t.astype(np.uint8) for t in self.t_id]
        ls8 = [m.astype(np.uint8) for m in self.ls]
        r8 = [m.T.astype(np.uint8) for m in self.compat_r]
        not_t = [~t for t in self.t_id]
        for i in range(n_sys):
            mi = masks[i]
            ti8 = t8[i]
            for j in range(n_sys):
                if mi & ~masks[j]:
                    continue
                premodel += 1
                w = (ls8[j] @ ti8).astype(bool)
                cls = _classify_w(w, leq)
                if cls >= 1:
                    cclosed += 1
                if cls == 2:
                    quillen += 1
                    wtypes.add(w.tobytes())
                viol = (r8[j] @ ti8).astype(bool) & leq & not_t[j]
                if not viol.any():
                    compatible += 1
        self.premodel = premodel
        self.cclosed = cclosed
        self.quillen = quillen
        self.compatible = compatible
        self.weak_equivalence_types = len(wtypes)

    def counts(self):
        return {
            "premodel": self.premodel,
            "cclosed": self.cclosed,
            "quillen": self.quillen,
            "wetypes": self.weak_equivalence_types,
            "compatible": self.compatible,
        }


def weak_equivalence_types(store):
    """Number of distinct weak-equivalence relations over Quillen pairs."""
    return ModelScan(store).weak_equivalence_types
