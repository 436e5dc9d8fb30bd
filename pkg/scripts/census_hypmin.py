"""Census check that hyperelliptic 1,1 surfaces need 4g-4 or 4g-2 squares."""

from __future__ import annotations

import argparse
import os
import time
from dataclasses import dataclass, field

from sqtiled.census import verify_bound
from sqtiled.strata import ComponentLabel, StratumSpec


@dataclass
class HypminConfig:
    strata: list[str] = field(default_factory=lambda: ["2", "1,1", "4", "2,2"])
    jobs: int = 1
    census_witness: bool = False


def run(cfg: HypminConfig) -> int:
    failed = 0
    for text in cfg.strata:
        t = time.time()
        rep = verify_bound(StratumSpec.parse(text), ComponentLabel.HYP, cfg.jobs, cfg.census_witness)
        print("\n".join(rep.lines()) + f"\n  {'holds' if rep.holds else 'FAILS'} ({time.time() - t:.1f}s)")
        failed += not rep.holds
    return 1 if failed else 0


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--strata", nargs="*", default=HypminConfig().strata)
    p.add_argument("--jobs", type=int, default=int(os.environ.get("SQTILED_JOBS", "1")))
    p.add_argument("--census-witness", action="store_true", help="find the witness by census too")
    a = p.parse_args()
    raise SystemExit(run(HypminConfig(a.strata, a.jobs, a.census_witness)))


if __name__ == "__main__":
    main()
