"""Textual and graphical emitters: data sheets, LaTeX tables, Sage poset
strings, subgroup dictionaries, transfer listings, and TikZ diagrams.
"""

from __future__ import annotations

import math
import re

from . import classify, enumeration, model, rubin
from .enumeration import Kind
from .lattice import conjugacy_quotient


class Pipeline:
    """Lazily computed, cached stores and statistics for one lattice."""

    def __init__(self, lattice, workers=1, memory_cap=enumeration.DEFAULT_MEMORY_CAP,
                 progress=None):
        self.lattice = lattice
        self.workers = workers
        self.memory_cap = memory_cap
        self.progress = progress
        self._stores = {}
        self._scan = None

    def store(self, kind):
        kind = Kind(kind)
        if kind not in self._stores:
            self._stores[kind] = enumeration.enumerate_systems(
                self.lattice, kind, workers=self.workers,
                memory_cap=self.memory_cap, progress=self.progress)
        return self._stores[kind]

    @property
    def scan(self):
        if self._scan is None:
            self._scan = model.ModelScan(self.store(Kind.ALL))
        return self._scan

    def flat_count(self):
        return sum(1 for t in self.store(Kind.ALL).transfer_systems()
                   if classify.is_flat(t))

    def width(self):
        return rubin.width(self.lattice)


def _stats_text(layer_sizes):
    return "{" + ",".join(str(x) for x in layer_sizes) + "}"


def data_sheet(lattice, workers=1, pipeline=None):
    """The summary block, one `key=value` line per statistic."""
    p = pipeline or Pipeline(lattice, workers)
    all_store = p.store(Kind.ALL)
    cosat = p.store(Kind.COSATURATED)
    satop = p.store(Kind.SATURATED_OPPOSITE)
    counts = p.scan.counts()
    lines = [
        f"G={lattice.name}",
        f"#Transfer Systems={len(all_store)}",
        f"Complexity={enumeration.complexity(all_store)}",
        f"Generation Statistics={_stats_text(all_store.layer_sizes)}",
        f"#Saturated Transfer Systems={len(satop)}",
        f"Cosaturated Complexity={enumeration.complexity(cosat)}",
        f"#Cosaturated Transfer Systems={len(cosat)}",
        f"Saturated Complexity={enumeration.complexity(satop)}",
        f"Width={p.width()}",
        f"#Flat transfers={p.flat_count()}",
        f"#Premodel structures={counts['premodel']}",
        f"#Composition closed structures={counts['cclosed']}",
        f"#Quillen structures={counts['quillen']}",
        f"#Weak equivalence types={counts['wetypes']}",
        f"#Compatible pairs={counts['compatible']}",
    ]
    return "\n".join(lines) + "\n"


def _latex_name(name):
    m = re.fullmatch(r"([A-Za-z]+)(\d+)", name)
    if m:
        return f"{m.group(1)}_{{{m.group(2)}}}"
    return name


def data_sheet_latex(lattice, workers=1, pipeline=None):
    """The same statistics as the data sheet, as a LaTeX tabular."""
    p = pipeline or Pipeline(lattice, workers)
    all_store = p.store(Kind.ALL)
    cosat = p.store(Kind.COSATURATED)
    satop = p.store(Kind.SATURATED_OPPOSITE)
    counts = p.scan.counts()
    stats = _stats_text(all_store.layer_sizes).replace("{", r"\{").replace("}", r"\}")
    rows = [
        (r"\#Transfer systems", len(all_store)),
        ("Complexity", enumeration.complexity(all_store)),
        ("Width", p.width()),
        ("Generation values", stats),
        (r"\#Saturated", len(satop)),
        ("Saturated complexity", enumeration.complexity(satop)),
        (r"\#Cosaturated", len(cosat)),
        ("Cosaturated complexity", enumeration.complexity(cosat)),
        (r"\#Flat", p.flat_count()),
        (r"\#Premodel structures", counts["premodel"]),
        (r"\#C.closed structures", counts["cclosed"]),
        (r"\#Quillen structures", counts["quillen"]),
        (r"\#Weak equivalence types", counts["wetypes"]),
        (r"\#Compatible pairs", counts["compatible"]),
    ]
    out = [
        r"\begin{tabular}{|cc|}",
        r"\hline",
        r"\multicolumn{2}{|c|}{$G = %s$} \\ \hline" % _latex_name(lattice.name),
    ]
    for label, value in rows:
        out.append(r"\multicolumn{1}{|c|}{%s} & %s\\ \hline" % (label, value))
    out.append(r"\end{tabular}")
    return "\n".join(out) + "\n"


def subgroup_dictionary(lattice):
    """Index-to-name listing, with a conjugacy-class block when the action
    is nontrivial."""
    lines = [f"{{{i}:{name}}}" for i, name in enumerate(lattice.node_names)]
    if not lattice.is_dedekind():
        lines.append("")
        lines.append("Conjugacy Classes:")
        for cls in lattice.node_classes:
            lines.append("[" + ",".join(str(i) for i in cls) + "]")
    return "\n".join(lines) + "\n"


def all_transfers_text(store):
    """One line per system in first-seen order; the empty system prints as
    an empty pair of braces."""
    lat = store.structure
    lines = []
    for m in store.systems:
        pairs = [lat.edges[k] for k in range(lat.edge_count) if m >> k & 1]
        body = ",".join(f"({a},{b})" for a, b in pairs)
        lines.append("{" + body + "}")
    return "\n".join(lines) + "\n"


def _covers_of_relation(count, strict):
    strict = set(strict)
    covers = {i: [] for i in range(count)}
    for i, j in strict:
        if not any((i, k) in strict and (k, j) in strict for k in range(count)):
            covers[i].append(j)
    return covers


def _poset_string(count, covers):
    parts = []
    for i in range(count):
        inner = "".join(f"{j}," for j in sorted(covers[i]))
        parts.append(f"{i}:[{inner}],")
    return "Poset({" + "".join(parts) + "})"


def sage_poset(store, which="TRANSFER", scan=None):
    """Sage command for the poset of systems under subset order (TRANSFER)
    or under composition-closed / Quillen pairing."""
    masks = store.systems
    n = len(masks)
    if which == "TRANSFER":
        strict = [(i, j) for i in range(n) for j in range(n)
                  if i != j and masks[i] & ~masks[j] == 0]
    else:
        threshold = 2 if which == "QUILLEN" else 1
        scan = scan or model.ModelScan(store)
        leq = scan.leq
        t8 = [t.astype("uint8") for t in scan.t_id]
        ls8 = [m.astype("uint8") for m in scan.ls]
        strict = []
        for i in range(n):
            for j in range(n):
                if i == j or masks[i] & ~masks[j]:
                    continue
                w = (ls8[j] @ t8[i]).astype(bool)
                if model._classify_w(w, leq) >= threshold:
                    strict.append((i, j))
        order_ok = all((j, i) not in set(strict) for i, j in strict)
        strict_set = set(strict)
        transitive = all((i, k) in strict_set
                         for i, j in strict for j2, k in strict
                         if j2 == j and i != k)
        if not (order_ok and transitive):
            pairs = "".join(f"({i},{j})," for i, j in sorted(strict))
            return ("# WARNING: relation is not a partial order; raw relation list\n"
                    f"Poset(([{','.join(str(i) for i in range(n))}], [{pairs}]))")
    return _poset_string(n, _covers_of_relation(n, strict))


FAINT_STYLE = "faint"
ACCENT_STYLE = "accent"
_TIKZ_PREAMBLE = (
    "% requires: \\tikzset{faint/.style={black!10},accent/.style={codepurple}}"
)


def edges_to_tikz(edge_set, lattice, layout=None):
    """TikZ picture of an edge set (not necessarily a transfer system) on
    the conjugacy-quotient poset.

    Edges present in the set are drawn in the accent style, the remaining
    comparable pairs faintly.  Classes sit on a circle unless the data
    file carries a vertex_layout; edge_options strings are pasted onto the
    matching edge.
    """
    q = conjugacy_quotient(lattice)
    m = q.class_count
    if isinstance(edge_set, int):
        edge_ids = [k for k in range(lattice.edge_count) if edge_set >> k & 1]
    else:
        edge_ids = sorted(edge_set)
    accent = set()
    for k in edge_ids:
        a, b = lattice.edges[k]
        accent.add((lattice.class_of_node[a], lattice.class_of_node[b]))

    layout = layout if layout is not None else lattice.vertex_layout
    if layout is not None and len(layout) != m:
        raise ValueError(
            f"vertex layout has {len(layout)} entries for {m} classes")
    if lattice.pretty_names is not None:
        labels = lattice.pretty_names
    else:
        labels = [lattice.node_names[q_cls[0]] for q_cls in lattice.node_classes]

    lines = [_TIKZ_PREAMBLE]
    if layout is None:
        lines.append(r"\begin{tikzpicture}[scale=0.5]")
        for k in range(m):
            ang = math.radians(90 - k * 360 / m)
            x, y = 3 * math.cos(ang), 3 * math.sin(ang)
            lines.append(r"\node[inner sep=0cm] (%d) at (%.4f,%.4f) {$%s$};"
                         % (k, x, y, labels[k]))
    else:
        lines.append(r"\begin{tikzpicture}")
        for k in range(m):
            lines.append(r"\node[inner sep=0cm] (%d) at %s {$%s$};"
                         % (k, layout[k], labels[k]))
    options = {}
    if lattice.edge_options:
        options = {tuple(k): v for k, v in lattice.edge_options.items()}
    for style, selected in ((FAINT_STYLE, False), (ACCENT_STYLE, True)):
        for i, j in q.edges:
            if ((i, j) in accent) != selected:
                continue
            opt = options.get((i, j), "")
            lines.append(r"\draw[%s,->] (%d) edge%s (%d);" % (style, i, opt, j))
    lines.append(r"\end{tikzpicture}")
    return "\n".join(lines) + "\n"
