"""Layered breadth-first enumeration of all closed sets of a closure
operator, with dedup, layer statistics, and the derived counts.

Layer k holds exactly the systems whose minimal basis has size k, so the
index of the last layer is the complexity.  The expansion within a layer
is partitioned into ordered chunks across workers; results are merged in
task order, which makes the store identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum

from . import rubin
from .lattice import (SubgroupLattice, TransferSystem, conjugacy_quotient,
                      opposite)


DEFAULT_MEMORY_CAP = 8 << 30  # bytes, estimated store footprint


class Kind(str, Enum):
    ALL = "all"
    COSATURATED = "cosaturated"
    UNDERLYING = "underlying"
    CONJUGACY = "conjugacy"
    SATURATED_OPPOSITE = "saturated"


class MemoryCapExceeded(Exception):
    def __init__(self, layer, count, cap):
        super().__init__(
            f"enumeration store exceeded the memory cap ({cap} bytes) "
            f"at layer {layer} with {count} systems")
        self.layer = layer


@dataclass
class EnumerationStore:
    """Deduplicated closed sets of one kind, stratified by BFS layer.

    ``structure`` is the object the systems live on: the input lattice for
    ALL/UNDERLYING/COSATURATED, its opposite for SATURATED_OPPOSITE, and
    the conjugacy quotient poset for CONJUGACY.
    """

    kind: Kind
    lattice: SubgroupLattice
    structure: object
    systems: list  # int masks in first-seen order
    layer_of: dict  # mask -> layer
    layer_sizes: list
    _index: dict = field(default=None, repr=False)

    def __len__(self):
        return len(self.systems)

    def index_of(self, mask):
        if self._index is None:
            self._index = {m: i for i, m in enumerate(self.systems)}
        return self._index[mask]

    def transfer_systems(self):
        """Systems as TransferSystem values (only for kinds living on a
        SubgroupLattice)."""
        if not isinstance(self.structure, SubgroupLattice):
            raise TypeError("store does not hold lattice transfer systems")
        return [TransferSystem.from_mask(self.structure, m) for m in self.systems]


def _expand_chunk(ctx, chunk):
    close = ctx.close
    return [close(1 << e, base) for base, e in chunk]


def enumerate_systems(lattice, kind=Kind.ALL, workers=1,
                      memory_cap=DEFAULT_MEMORY_CAP, progress=None):
    """BFS over closed sets.  ``progress`` is an optional callable invoked
    as progress(layer, layer_size, total)."""
    kind = Kind(kind)
    if workers < 1:
        raise ValueError("workers must be >= 1")
    structure = lattice
    if kind is Kind.SATURATED_OPPOSITE:
        structure, _ = opposite(lattice)
        ctx = rubin.lattice_context(structure, "FULL")
        gens = [i for i, (a, b) in enumerate(structure.edges) if b == structure.top]
    elif kind is Kind.CONJUGACY:
        structure = conjugacy_quotient(lattice)
        ctx = rubin.poset_context(structure)
        gens = list(range(structure.edge_count))
    else:
        mode = "UNDERLYING" if kind is Kind.UNDERLYING else "FULL"
        ctx = rubin.lattice_context(structure, mode)
        if kind is Kind.COSATURATED:
            gens = [i for i, (a, b) in enumerate(structure.edges) if b == structure.top]
        else:
            gens = list(range(structure.edge_count))

    entry_bytes = ctx.edge_count // 8 + 96
    root = ctx.close(0)
    systems = [root]
    layer_of = {root: 0}
    layer_sizes = [1]
    frontier = [root]
    if progress:
        progress(0, 1, 1)
    pool = ThreadPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        layer = 0
        while frontier:
            layer += 1
            tasks = [(t, e) for t in frontier for e in gens if not t >> e & 1]
            if not tasks:
                break
            if pool is not None:
                step = max(1, len(tasks) // (workers * 4))
                chunks = [tasks[i:i + step] for i in range(0, len(tasks), step)]
                results = []
                for part in pool.map(lambda c: _expand_chunk(ctx, c), chunks):
                    results.extend(part)
            else:
                results = _expand_chunk(ctx, tasks)
            new = []
            for m in results:
                if m not in layer_of:
                    layer_of[m] = layer
                    systems.append(m)
                    new.append(m)
            if not new:
                break
            layer_sizes.append(len(new))
            if len(systems) * entry_bytes > memory_cap:
                raise MemoryCapExceeded(layer, len(systems), memory_cap)
            if progress:
                progress(layer, len(new), len(systems))
            frontier = new
    finally:
        if pool is not None:
            pool.shutdown()
    return EnumerationStore(kind, lattice, structure, systems, layer_of, layer_sizes)


def complexity(store):
    """Index of the last nonempty generation layer."""
    return len(store.layer_sizes) - 1


def generation_statistics(store):
    return list(store.layer_sizes)


def width(lattice):
    """Size of a minimal basis of the complete transfer system."""
    return rubin.width(lattice)


def maximally_generated(store):
    """Systems whose minimal basis size equals the complexity."""
    top_layer = complexity(store)
    masks = [m for m in store.systems if store.layer_of[m] == top_layer]
    return [TransferSystem.from_mask(store.structure, m) for m in masks]


def saturated_filter(store):
    """All members of an ALL store satisfying two-out-of-three."""
    from .classify import is_saturated
    return [t for t in store.transfer_systems() if is_saturated(t)]
