#!/usr/bin/env python3
"""Print the solved skew-derivation bases of the catalog's quadratic algebras.

Usage: python scripts/derivation_tables.py [id ...]
Defaults to g4, g5 and the 2n+2 family for n = 1..3.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from liequad import catalog
from liequad.derivations import derivation_space


def show(id, **params):
    q = catalog.build(id, **params)
    ds = derivation_space(q.algebra, "skew", q.form)
    tag = id + (f"[{params}]" if params else "")
    print(f"== {tag}: skew-derivation space of dimension {ds.dim}")
    labels = q.algebra.labels
    bk = q.algebra.backend
    for k, m in enumerate(ds.basis, start=1):
        print(f"D{k}:")
        for lab, row in zip(labels, m.entries):
            print(f"  {lab:>4} | " + " ".join(f"{bk.format(x):>5}" for x in row))
    print()


def main() -> int:
    ids = sys.argv[1:]
    if ids:
        for id in ids:
            show(id)
        return 0
    show("g4")
    show("g5")
    for n in (1, 2, 3):
        show("g2n2", n=n)
    return 0


if __name__ == "__main__":
    sys.exit(main())
