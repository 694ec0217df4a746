"""Generate JSON lattice data files for the ninfty tool.

Two modes:

  python gen.py --group ORDER INDEX --name NAME   small-group library ID
  python gen.py --lattice FILE --name NAME        abstract finite lattice

Group mode asks the backend for all subgroups of the identified group
and emits the full data file: names, orders, comparability, meet/join
tables, conjugacy classes, and edge orbits.  Lattice mode reads a
relation description (either a JSON object mapping each node to the
nodes above it, or the same map written as a Poset({...}) expression),
checks that it is a lattice, and emits singleton classes and orbits.
"""

import argparse
import ast
import json
import os
import re
import sys

from backends import BackendError, get_backend


class GenError(Exception):
    pass


def _say(verbose, msg):
    if verbose:
        print(msg, file=sys.stderr)


def _structure_name(sub):
    """Heuristic display name for a subgroup given as an element set."""
    n = len(sub)
    if n == 1:
        return "1"
    orders = sorted(_element_order(p) for p in sub)
    if n in orders:
        return f"C{n}"
    if n == 4:
        return "C2xC2"
    if n == 8:
        inv = orders.count(2)
        return {1: "Q8", 3: "C4xC2", 5: "D4", 7: "C2xC2xC2"}.get(inv, "G8")
    if n == 6:
        return "S3"
    if n == 12:
        inv = orders.count(2)
        return {1: "Dic3", 3: "A4", 7: "D6"}.get(inv, "G12")
    return f"G{n}"


def _element_order(p):
    k = 1
    q = p
    while not q.is_Identity:
        q = q * p
        k += 1
    return k


def _disambiguate(names):
    out = []
    from collections import Counter
    total = Counter(names)
    seen = Counter()
    for nm in names:
        if total[nm] > 1:
            seen[nm] += 1
            out.append(f"{nm}({seen[nm]})")
        else:
            out.append(nm)
    return out


def _orbits(count, maps):
    parent = list(range(count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for mp in maps:
        for i, j in enumerate(mp):
            parent[find(i)] = find(j)
    groups = {}
    for i in range(count):
        groups.setdefault(find(i), []).append(i)
    return [sorted(v) for v in groups.values()]


def generate_group(order, index, name, backend, verbose=False):
    """Data-file document for a small-group library ID."""
    default_name, data = backend.small_group(order, index, verbose=verbose)
    name = name or default_name
    subs = data.subgroups
    n = len(subs)
    _say(verbose, f"building order relation on {n} subgroups")
    leq = sorted((i, j) for i in range(n) for j in range(n)
                 if i != j and subs[i] < subs[j])
    _say(verbose, "computing meet and join tables")
    index_of = {s: i for i, s in enumerate(subs)}
    meet = [[index_of[subs[i] & subs[j]] for j in range(n)] for i in range(n)]
    join = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            join[i][j] = index_of[data.span(subs[i] | subs[j])]

    _say(verbose, "computing conjugation orbits")
    maps = data.conjugation_maps()
    node_classes = sorted(_orbits(n, maps), key=lambda c: c[0])
    edge_index = {e: k for k, e in enumerate(leq)}
    edge_maps = [[edge_index[(mp[a], mp[b])] for a, b in leq] for mp in maps]
    edge_orbits = sorted(_orbits(len(leq), edge_maps), key=lambda o: o[0])

    names = [_structure_name(s) for s in subs]
    names[-1] = name
    names = _disambiguate(names)
    return {
        "name": name,
        "kind": "group",
        "nodes": [{"name": nm, "order": len(s)} for nm, s in zip(names, subs)],
        "leq": [list(e) for e in leq],
        "meet": meet,
        "join": join,
        "node_classes": node_classes,
        "edge_orbits": [[list(leq[k]) for k in orb] for orb in edge_orbits],
    }


def parse_relations(text):
    """Relation map from a JSON object or a Poset({...}) expression."""
    text = text.strip()
    m = re.fullmatch(r"(?:L0\s*=\s*)?Poset\((.*)\)", text, re.S)
    if m:
        text = m.group(1)
    try:
        raw = json.loads(text)
    except json.JSONDecodeError:
        try:
            raw = ast.literal_eval(text)
        except (SyntaxError, ValueError) as exc:
            raise GenError(f"cannot parse lattice description: {exc}") from exc
    if not isinstance(raw, dict):
        raise GenError("lattice description must be a mapping")
    return {int(k): [int(v) for v in vs] for k, vs in raw.items()}


def generate_lattice(relations, name, verbose=False):
    """Data-file document for an abstract lattice given by relations."""
    nodes = sorted(set(relations) | {v for vs in relations.values() for v in vs})
    if nodes != list(range(len(nodes))):
        raise GenError("lattice nodes must be 0..n-1")
    n = len(nodes)
    leq = {(a, b) for a, vs in relations.items() for b in vs if a != b}
    changed = True
    while changed:
        changed = False
        for a, b in list(leq):
            for c in relations.get(b, ()):
                if c != a and (a, c) not in leq:
                    leq.add((a, c))
                    changed = True
    for a, b in leq:
        if (b, a) in leq:
            raise GenError(f"relation is not antisymmetric at {a},{b}")

    def le(a, b):
        return a == b or (a, b) in leq

    _say(verbose, f"{n} nodes, {len(leq)} strict pairs")
    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            lower = [c for c in range(n) if le(c, i) and le(c, j)]
            maximal = [c for c in lower
                       if not any(d != c and le(c, d) for d in lower)]
            if len(maximal) != 1:
                raise GenError(f"nodes {i},{j} have no unique meet; "
                               "input is not a lattice")
            meet[i][j] = maximal[0]
            upper = [c for c in range(n) if le(i, c) and le(j, c)]
            minimal = [c for c in upper
                       if not any(d != c and le(d, c) for d in upper)]
            if len(minimal) != 1:
                raise GenError(f"nodes {i},{j} have no unique join; "
                               "input is not a lattice")
            join[i][j] = minimal[0]
    edges = sorted(leq)
    down = [1 + sum(1 for a in range(n) if (a, b) in leq) for b in range(n)]
    return {
        "name": name,
        "kind": "lattice",
        "nodes": [{"name": str(i), "order": down[i]} for i in range(n)],
        "leq": [list(e) for e in edges],
        "meet": meet,
        "join": join,
        "node_classes": [[i] for i in range(n)],
        "edge_orbits": [[list(e)] for e in edges],
    }


def main(argv=None):
    ap = argparse.ArgumentParser(
        description="generate a JSON lattice data file")
    src = ap.add_mutually_exclusive_group(required=True)
    src.add_argument("--group", nargs=2, type=int, metavar=("ORDER", "INDEX"),
                     help="small-group library ID")
    src.add_argument("--lattice", metavar="FILE",
                     help="file with a relation map or Poset({...}) text")
    ap.add_argument("--name", help="output name (defaults per group ID)")
    ap.add_argument("--backend", default="sympy")
    ap.add_argument("--outdir", default=".", help="output directory")
    ap.add_argument("--quiet", action="store_true",
                    help="suppress progress output")
    args = ap.parse_args(argv)
    verbose = not args.quiet
    try:
        if args.group:
            order, index = args.group
            doc = generate_group(order, index, args.name,
                                 get_backend(args.backend), verbose=verbose)
        else:
            if not args.name:
                ap.error("--lattice requires --name")
            with open(args.lattice, "r", encoding="utf-8") as fh:
                relations = parse_relations(fh.read())
            doc = generate_lattice(relations, args.name, verbose=verbose)
    except (BackendError, GenError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    path = os.path.join(args.outdir, doc["name"] + ".json")
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")
    _say(verbose, f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
