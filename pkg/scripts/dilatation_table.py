"""Dilatations of T_a T_b^-1 on the filling pair of a minimal 1,1 surface, genus by genus.

For each genus the intersection number is the square count of the chosen
construction; the hyperelliptic two-zero component gives the largest, 4g-2.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from sqtiled.applications import thurston_dilatation
from sqtiled.planner import construct
from sqtiled.strata import ComponentLabel, StratumSpec


@dataclass
class TableConfig:
    max_genus: int = 12
    word: str = "a1,b-1"


def run(cfg: TableConfig) -> None:
    print("genus\tsurface\tn\ttrace\tlog_lambda")
    for g in range(2, cfg.max_genus + 1):
        rows = [(StratumSpec([2 * g - 2]), ComponentLabel.HYP), (StratumSpec([g - 1, g - 1]), ComponentLabel.HYP)]
        if g >= 3:
            rows.append((StratumSpec([2 * g - 2]), ComponentLabel.ODD))
        for s, c in rows:
            o, _ = construct(s, c)
            d = thurston_dilatation(cfg.word, o.n)
            print(f"{g}\t{s} {c.short}\t{o.n}\t{d.trace}\t{d.translation_length:.6f}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-genus", type=int, default=TableConfig.max_genus)
    p.add_argument("--word", default=TableConfig.word)
    a = p.parse_args()
    run(TableConfig(a.max_genus, a.word))


if __name__ == "__main__":
    main()
