"""Command-line interface: every operation behind one binary with a
uniform --group/--file source selector.

Results go to stdout (or --output); diagnostics and progress to stderr.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import classify, enumeration, groups, model, report, rubin
from .enumeration import Kind
from .lattice import (LatticeError, TransferSystem, load_lattice, serialize,
                      complete_mask)


def _add_common(sub):
    sub.add_argument("--group", help="builtin spec, e.g. builtin:cyclic:4")
    sub.add_argument("--file", help="path to a JSON lattice data file")
    sub.add_argument("--threads", type=int, default=None,
                     help="worker count (default: machine parallelism)")
    sub.add_argument("--verbose", action="store_true",
                     help="stream per-layer enumeration progress to stderr")
    sub.add_argument("--memory-cap", type=float, default=8.0,
                     help="enumeration store cap in GiB")
    sub.add_argument("--output", help="write result to a file instead of stdout")
    sub.add_argument("--element-cap", type=int, default=groups.DEFAULT_ELEMENT_CAP,
                     help="permutation group element cap")


def _parse_system(text, lattice):
    if not text:
        return TransferSystem(lattice, ())
    pairs = []
    for item in text.split(","):
        a, b = item.strip().split("<")
        pairs.append((int(a), int(b)))
    return TransferSystem.from_pairs(lattice, pairs)


def build_parser():
    ap = argparse.ArgumentParser(prog="ninfty",
                                 description="transfer system enumeration and classification")
    subs = ap.add_subparsers(dest="command", required=True)

    def sub(name, **kw):
        s = subs.add_parser(name, **kw)
        _add_common(s)
        return s

    sub("datasheet", help="print the enumeration summary block")
    sub("datasheet-latex", help="print the summary as a LaTeX table")
    s = sub("count", help="count transfer systems of one kind")
    s.add_argument("--kind", default="all",
                   choices=[k.value for k in Kind])
    sub("width", help="minimal basis size of the complete system")
    sub("complexity", help="largest minimal basis size")
    sub("stats", help="generation statistics")
    sub("maximally-generated", help="list systems realising the complexity")
    s = sub("list", help="list all transfer systems")
    s.add_argument("--kind", default="all", choices=[k.value for k in Kind])
    sub("dictionary", help="print the subgroup dictionary")
    s = sub("classify", help="full report on one transfer system")
    s.add_argument("--system", required=True, help='edge list "a<b,c<d,..."')
    for name in ("basis", "dual", "hull", "core", "leftset"):
        s = sub(name)
        s.add_argument("--system", required=True)
    sub("model-count", help="premodel / composition closed / Quillen / types / compatible")
    s = sub("model-check", help="model structure check for a pair")
    s.add_argument("--af", required=True, help="acyclic fibrations edge list")
    s.add_argument("--f", required=True, help="fibrations edge list")
    s = sub("compatible", help="compatibility check for a nested pair")
    s.add_argument("--m", required=True)
    s.add_argument("--a", required=True)
    sub("intervals", help="list premodel interval index pairs")
    s = sub("sage-poset", help="Sage poset string")
    s.add_argument("--which", default="transfer",
                   choices=["transfer", "cclosed", "quillen"])
    s = sub("tikz", help="TikZ diagram of an edge set")
    s.add_argument("--system", default="", help='edge list "a<b,c<d,..." (may be empty)')
    sub("validate", help="load a data file and validate it")
    sub("export", help="emit the data file for a builtin group")
    sub("bench", help="time the full enumeration")
    return ap


def _load(args):
    if bool(args.group) == bool(args.file):
        raise LatticeError("exactly one of --group or --file is required")
    if args.group:
        return groups.builtin(args.group, element_cap=args.element_cap)
    return load_lattice(args.file)


def _progress(layer, size, total):
    print(f"layer {layer}: {size} new systems ({total} total)", file=sys.stderr)


def run(args):
    lattice = _load(args)
    workers = args.threads or os.cpu_count() or 1
    cap = int(args.memory_cap * (1 << 30))
    pipe = report.Pipeline(lattice, workers=workers, memory_cap=cap,
                           progress=_progress if args.verbose else None)
    cmd = args.command

    if cmd == "datasheet":
        return report.data_sheet(lattice, pipeline=pipe)
    if cmd == "datasheet-latex":
        return report.data_sheet_latex(lattice, pipeline=pipe)
    if cmd == "count":
        return f"{len(pipe.store(args.kind))}\n"
    if cmd == "width":
        return f"{rubin.width(lattice)}\n"
    if cmd == "complexity":
        return f"{enumeration.complexity(pipe.store(Kind.ALL))}\n"
    if cmd == "stats":
        return report._stats_text(pipe.store(Kind.ALL).layer_sizes) + "\n"
    if cmd == "maximally-generated":
        systems = enumeration.maximally_generated(pipe.store(Kind.ALL))
        lines = ["{" + ",".join(f"({a},{b})" for a, b in t.pairs) + "}"
                 for t in systems]
        return "\n".join(lines) + "\n"
    if cmd == "list":
        return report.all_transfers_text(pipe.store(args.kind))
    if cmd == "dictionary":
        return report.subgroup_dictionary(lattice)
    if cmd == "classify":
        return _classify_report(lattice, args.system)
    if cmd in ("basis", "dual", "hull", "core", "leftset"):
        t = rubin.closure(_parse_system(args.system, lattice).mask, lattice)
        if cmd == "basis":
            picked = rubin.find_basis(t)
            return "{" + ",".join(f"({a},{b})" for a, b in
                                  (lattice.edges[k] for k in picked)) + "}\n"
        if cmd == "dual":
            out = classify.dual(t)
        elif cmd == "hull":
            out = classify.saturated_hull(t)
        elif cmd == "core":
            out = classify.cosaturated_core(t)
        else:
            ks = sorted(classify.left_set(t))
            return "{" + ",".join(f"({a},{b})" for a, b in
                                  (lattice.edges[k] for k in ks)) + "}\n"
        return "{" + ",".join(f"({a},{b})" for a, b in out.pairs) + "}\n"
    if cmd == "model-count":
        c = pipe.scan.counts()
        return ("#Premodel structures=%d\n#Composition closed structures=%d\n"
                "#Quillen structures=%d\n#Weak equivalence types=%d\n"
                "#Compatible pairs=%d\n"
                % (c["premodel"], c["cclosed"], c["quillen"], c["wetypes"],
                   c["compatible"]))
    if cmd == "model-check":
        af = rubin.closure(_parse_system(args.af, lattice).mask, lattice)
        f = rubin.closure(_parse_system(args.f, lattice).mask, lattice)
        return f"{model.model_check(af, f)}\n"
    if cmd == "compatible":
        tm = rubin.closure(_parse_system(args.m, lattice).mask, lattice)
        ta = rubin.closure(_parse_system(args.a, lattice).mask, lattice)
        return f"{model.is_compatible(tm, ta)}\n"
    if cmd == "intervals":
        pairs = model.intervals(pipe.store(Kind.ALL))
        return "\n".join(f"{i},{j}" for i, j in pairs) + "\n"
    if cmd == "sage-poset":
        which = args.which.upper()
        if which == "TRANSFER":
            return report.sage_poset(pipe.store(Kind.ALL), "TRANSFER") + "\n"
        return report.sage_poset(pipe.store(Kind.ALL), which, scan=pipe.scan) + "\n"
    if cmd == "tikz":
        t = _parse_system(args.system, lattice)
        return report.edges_to_tikz(t.mask, lattice)
    if cmd == "validate":
        return "OK\n"
    if cmd == "export":
        return serialize(lattice) + "\n"
    if cmd == "bench":
        t0 = time.perf_counter()
        store = pipe.store(Kind.ALL)
        dt = time.perf_counter() - t0
        print(f"enumerated in {dt:.1f}s", file=sys.stderr)
        return f"{len(store)}\n"
    raise LatticeError(f"unknown command {cmd}")


def _classify_report(lattice, text):
    t = rubin.closure(_parse_system(text, lattice).mask, lattice)
    basis = rubin.find_basis(t)
    f = classify.minimal_fibrant_subgroup(t)
    fmt = lambda pairs: "{" + ",".join(f"({a},{b})" for a, b in pairs) + "}"
    lines = [
        "system=" + fmt(t.pairs),
        f"saturated={classify.is_saturated(t)}",
        f"cosaturated={classify.is_cosaturated(t)}",
        f"flat={classify.is_flat(t)}",
        f"minimal fibrant subgroup={f} ({lattice.node_names[f]})",
        "basis=" + fmt(lattice.edges[k] for k in basis),
        "hull=" + fmt(classify.saturated_hull(t).pairs),
        "core=" + fmt(classify.cosaturated_core(t).pairs),
        "dual=" + fmt(classify.dual(t).pairs),
        "left set=" + fmt(lattice.edges[k] for k in sorted(classify.left_set(t))),
    ]
    return "\n".join(lines) + "\n"


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        out = run(args)
    except (LatticeError, groups.GroupError, enumeration.MemoryCapExceeded,
            model.PreconditionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
