"""Strata of Abelian differentials and their connected components."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable


class ComponentLabel(str, Enum):
    HYP = "hyperelliptic"
    ODD = "odd"
    EVEN = "even"
    NONHYP = "nonhyperelliptic"
    CONNECTED = "connected"

    @property
    def short(self) -> str:
        return _SHORT[self]

    @classmethod
    def parse(cls, text: str) -> ComponentLabel:
        t = text.strip().lower()
        for lab in cls:
            if t in (lab.value, lab.short):
                return lab
        raise ValueError(f"unknown component label {text!r}")

    def __str__(self) -> str:
        return self.value


_SHORT = {
    ComponentLabel.HYP: "hyp",
    ComponentLabel.ODD: "odd",
    ComponentLabel.EVEN: "even",
    ComponentLabel.NONHYP: "nonhyp",
    ComponentLabel.CONNECTED: "connected",
}


@dataclass(frozen=True, order=True)
class StratumSpec:
    """Zero orders (sorted, descending) plus a count of marked points."""

    zero_orders: tuple[int, ...]
    marked_points: int = 0

    def __init__(self, zero_orders: Iterable[int], marked_points: int = 0):
        orders = tuple(sorted((int(k) for k in zero_orders), reverse=True))
        if any(k < 1 for k in orders):
            raise ValueError("zero orders must be positive; use marked_points for order 0")
        if sum(orders) % 2:
            raise ValueError(f"total order {sum(orders)} is odd")
        if marked_points < 0:
            raise ValueError("negative marked point count")
        object.__setattr__(self, "zero_orders", orders)
        object.__setattr__(self, "marked_points", int(marked_points))

    @classmethod
    def parse(cls, text: str) -> StratumSpec:
        """Accepts ``"6,2"``, ``"4,0,0"`` or ``"H(6,2)"``."""
        t = text.strip()
        if t.upper().startswith("H(") and t.endswith(")"):
            t = t[2:-1]
        vals = [int(x) for x in t.replace(" ", "").split(",") if x != ""]
        if not vals:
            raise ValueError("empty stratum")
        return cls([k for k in vals if k > 0], sum(1 for k in vals if k == 0))

    @property
    def genus(self) -> int:
        return sum(self.zero_orders) // 2 + 1

    @property
    def num_zeros(self) -> int:
        return len(self.zero_orders)

    def without_marked(self) -> StratumSpec:
        return StratumSpec(self.zero_orders)

    def with_marked(self, marked: int) -> StratumSpec:
        return StratumSpec(self.zero_orders, marked)

    def all_even(self) -> bool:
        return all(k % 2 == 0 for k in self.zero_orders)

    def __str__(self) -> str:
        vals = list(self.zero_orders) + [0] * self.marked_points
        return "H(" + ",".join(map(str, vals)) + ")"

    def cli_string(self) -> str:
        vals = list(self.zero_orders) + [0] * self.marked_points
        return ",".join(map(str, vals))


def components_of(s: StratumSpec) -> list[ComponentLabel]:
    """Connected components of the stratum, ignoring marked points."""
    zs = s.zero_orders
    g = s.genus
    H, O, E = ComponentLabel.HYP, ComponentLabel.ODD, ComponentLabel.EVEN
    if g == 1:
        return [ComponentLabel.CONNECTED]
    if g == 2:
        return [H]
    single = len(zs) == 1
    double_eq = len(zs) == 2 and zs[0] == zs[1]
    if g == 3:
        if zs in ((4,), (2, 2)):
            return [H, O]
        return [ComponentLabel.CONNECTED]
    if single or (double_eq and zs[0] % 2 == 0):
        return [H, E, O]
    if double_eq:
        return [H, ComponentLabel.NONHYP]
    if s.all_even():
        return [E, O]
    return [ComponentLabel.CONNECTED]


def check_admissible(s: StratumSpec, c: ComponentLabel) -> None:
    comps = components_of(s)
    if c not in comps:
        raise ValueError(
            f"component does not exist: {c.value} in {s} (components: "
            + ", ".join(x.value for x in comps) + ")"
        )


def min_squares(s: StratumSpec) -> int:
    """Euler-characteristic lower bound 2g + n - 2, marked points included."""
    return 2 * s.genus + s.num_zeros - 2 + s.marked_points


def min_squares_11(s: StratumSpec, c: ComponentLabel) -> int:
    """Fewest squares of a one-cylinder-each-way origami in the component.

    Hyperelliptic 1,1 surfaces need 4g-4 (one zero) or 4g-2 (two zeros)
    squares, which forces marked points; requesting more marked points than
    that raises the count to the Euler bound.
    """
    check_admissible(s, c)
    g = s.genus
    if c is ComponentLabel.HYP and g >= 2:
        base = 4 * g - 4 if s.num_zeros == 1 else 4 * g - 2
        return max(base, min_squares(s))
    # a torus needs a square, which brings one regular vertex
    return max(min_squares(s), 1)


def forced_marked_points(s: StratumSpec, c: ComponentLabel) -> int:
    """Marked points carried by a minimal 1,1 surface of the component."""
    return min_squares_11(s, c) - min_squares(s.without_marked())


def strata_with_total(total: int) -> list[StratumSpec]:
    """All strata (no marked points) with zero orders summing to ``total``."""
    out: list[StratumSpec] = []

    def rec(rem: int, cap: int, acc: list[int]) -> None:
        if rem == 0:
            out.append(StratumSpec(acc))
            return
        for k in range(min(rem, cap), 0, -1):
            acc.append(k)
            rec(rem - k, k, acc)
            acc.pop()

    rec(total, total, [])
    return out


def all_strata(max_total: int, min_genus: int = 2) -> list[StratumSpec]:
    out = []
    for t in range(2 * (min_genus - 1), max_total + 1, 2):
        out.extend(strata_with_total(t))
    return out


def zero_counter(s: StratumSpec) -> Counter:
    return Counter(s.zero_orders)
