#!/usr/bin/env python3
"""Reproduce the four worked configurations end to end.

For each config file: component table, module relations, both signature
computations, unitarizability criteria, Casimir scalars, and an SVG of the
fundamental domain next to this script's output directory.

Usage: python scripts/reproduce_examples.py [outdir]
"""

import sys
from pathlib import Path

from vertexmod.configfile import parse
from vertexmod.render import render_ascii, render_svg
from vertexmod.representation import balanced_words, build_module, casimir, verify_relations
from vertexmod.topology import components
from vertexmod.unitarity import (
    signature_coloring,
    signature_direct,
    unitarizability_report,
)

CONFIGS = ["example1_d4.cfg", "example2.cfg", "example3.cfg", "example4.cfg"]


def analyze(path: Path, outdir: Path) -> None:
    print(f"\n=== {path.name} ===")
    cf = parse(path.read_text())
    cfg = cf.configuration()
    comps = components(cfg)
    print(f"period ({cf.m},{cf.n}); {len(cfg.edges)} supported edges; "
          f"{len(comps)} components")
    for comp in comps:
        if not comp.finite:
            ws = comp.sorted_weights()
            print(f"  [{comp.id}] infinite, weights {ws[0]}..{ws[-1]} in window")
            continue
        rep = build_module(cfg, comp)
        rel = verify_relations(rep)
        direct = signature_direct(cfg, comp)
        coloring = signature_coloring(cfg, comp)
        unit = unitarizability_report(cfg, comp)
        words = balanced_words(cfg.lat.m, cfg.lat.n)
        scalars = {str(casimir(rep, w).scalar) for w in words}
        sig = "{%d, %d}" % direct
        sigc = "{%d, %d}" % coloring
        print(f"  [{comp.id}] dim {comp.dim}, "
              f"{'contractible' if comp.contractible else 'incontractible'}; "
              f"relations {'ok' if rel.ok else 'FAIL'}; "
              f"signature {sig} (direct) {sigc} (coloring); "
              f"unitarizable {unit.verdict}; casimir {scalars}")
        svg = outdir / f"{path.stem}_c{comp.id}.svg"
        svg.write_text(render_svg(cfg, comp))
        print(f"      wrote {svg}")
    biggest = max((c for c in comps if c.finite), key=lambda c: c.dim, default=None)
    print(render_ascii(cfg, biggest))


def main() -> int:
    outdir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("out")
    outdir.mkdir(exist_ok=True)
    config_dir = Path(__file__).resolve().parent.parent / "configs"
    for name in CONFIGS:
        analyze(config_dir / name, outdir)
    return 0


if __name__ == "__main__":
    sys.exit(main())
