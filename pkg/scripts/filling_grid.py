"""Build filling pairs for every compatible decomposition on a (genus, punctures, n) grid."""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from sqtiled.applications import (
    FillingPairError,
    build_filling_pair,
    compatible_decompositions,
    min_filling_intersections,
)


@dataclass
class GridConfig:
    max_genus: int = 4
    max_punctures: int = 3
    extra: int = 4
    max_polygons: int = 6


def run(cfg: GridConfig) -> int:
    built = infeasible = 0
    for g in range(1, cfg.max_genus + 1):
        for p in range(cfg.max_punctures + 1):
            lo = min_filling_intersections(g, p)
            for n in range(lo, lo + cfg.extra + 1):
                for d in compatible_decompositions(g, p, n, cfg.max_polygons):
                    try:
                        fp = build_filling_pair(d)
                        built += 1
                    except FillingPairError as exc:
                        infeasible += 1
                        print(f"g={g} p={p} n={n} {list(d.polygons)}: {exc}")
                        continue
                    print(f"g={g} p={p} n={n} {list(fp.regions)} punctures in {list(fp.punctures)}")
    print(f"built {built}, infeasible {infeasible}")
    return 1 if infeasible else 0


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(GridConfig()).items():
        p.add_argument("--" + name.replace("_", "-"), type=int, default=default)
    a = p.parse_args()
    raise SystemExit(run(GridConfig(**vars(a))))


if __name__ == "__main__":
    main()
