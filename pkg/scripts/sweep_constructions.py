"""Construct and verify a minimal 1,1 surface for every component up to a total order.

Writes one JSON line per (stratum, component) with the surface and its recipe.
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import dataclass

from sqtiled.classify import classify, is_one_one
from sqtiled.planner import construct
from sqtiled.strata import all_strata, components_of, min_squares_11


@dataclass
class SweepConfig:
    max_total: int = 20
    out: str | None = None


def run(cfg: SweepConfig) -> int:
    t = time.time()
    lines, bad = [], 0
    for s in all_strata(cfg.max_total):
        for c in components_of(s):
            o, recipe = construct(s, c)
            got_s, got_c = classify(o)
            ok = got_s.zero_orders == s.zero_orders and got_c is c and is_one_one(o) and o.n == min_squares_11(s, c)
            bad += not ok
            rec = {"stratum": str(s), "component": c.value, "squares": o.n, "ok": ok, **o.to_record()}
            rec["recipe"] = json.loads(recipe.to_json())
            lines.append(json.dumps(rec))
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    print(f"{len(lines)} components, {bad} failures, {time.time() - t:.1f}s")
    return 1 if bad else 0


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-total", type=int, default=SweepConfig.max_total)
    p.add_argument("--out")
    a = p.parse_args()
    raise SystemExit(run(SweepConfig(a.max_total, a.out)))


if __name__ == "__main__":
    main()
