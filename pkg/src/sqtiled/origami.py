"""Origamis (pairs of permutations) and the two-row one-cylinder encoding."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Sequence

from .perm import (
    Permutation,
    canonical_form,
    commutator,
    compose,
    conjugate,
    cycles,
    inverse,
    is_single_cycle,
    is_transitive,
    parse_cycles,
    to_cycle_string,
)
from .strata import StratumSpec


@dataclass(frozen=True)
class Origami:
    """Squares 0..n-1; ``h`` sends a square to its right neighbour, ``v`` to its top one."""

    h: Permutation
    v: Permutation

    def __post_init__(self) -> None:
        if self.h.n != self.v.n:
            raise ValueError("h and v have different degrees")
        if not is_transitive(self.h, self.v):
            raise ValueError("h and v do not act transitively (surface disconnected)")

    @classmethod
    def from_images(cls, h: Sequence[int], v: Sequence[int]) -> Origami:
        return cls(Permutation(h), Permutation(v))

    @property
    def n(self) -> int:
        return self.h.n

    def relabel(self, s: Permutation) -> Origami:
        return Origami(conjugate(self.h, s), conjugate(self.v, s))

    def canonical(self) -> Origami:
        h, v = canonical_form(self.h, self.v)
        return Origami(h, v)

    def commutator(self) -> Permutation:
        return commutator(self.h, self.v)

    def corner(self) -> Permutation:
        """v⁻¹h⁻¹vh: its cycles are the vertices, read at top-right corners."""
        h, v = self.h, self.v
        return compose(inverse(v), compose(inverse(h), compose(v, h)))

    def to_record(self) -> dict:
        return {"n": self.n, "h": list(self.h.images), "v": list(self.v.images)}

    def to_json(self) -> str:
        return json.dumps(self.to_record())

    @classmethod
    def from_record(cls, rec: dict) -> Origami:
        o = cls.from_images(rec["h"], rec["v"])
        if "n" in rec and rec["n"] != o.n:
            raise ValueError("record n does not match permutation degree")
        return o

    def to_cycles_string(self) -> str:
        return f"r={to_cycle_string(self.h)} u={to_cycle_string(self.v)}"

    @classmethod
    def from_cycles_string(cls, text: str, n: int | None = None) -> Origami:
        m = re.fullmatch(r"\s*r=(\S*)\s+u=(\S*)\s*", text)
        if not m:
            raise ValueError(f"expected 'r=(...) u=(...)', got {text!r}")
        r_txt, u_txt = m.groups()
        if n is None:
            pts = [int(x) for x in re.findall(r"\d+", r_txt + " " + u_txt)]
            n = max(pts) if pts else 1
        return cls(parse_cycles(r_txt, n), parse_cycles(u_txt, n))


def stratum_of(o: Origami) -> StratumSpec:
    lens = [len(c) for c in cycles(o.commutator())]
    return StratumSpec([ell - 1 for ell in lens if ell > 1], sum(1 for ell in lens if ell == 1))


@dataclass(frozen=True)
class Representative:
    """Two-row symbol array of a surface with one horizontal cylinder of height one.

    Row ``top`` is ``0, 1, ..., N``; ``bottom`` is a rearrangement ending in 0.
    Square ``i`` (1..N, left to right) carries top label ``i`` and bottom label
    ``bottom[i-1]``; equal labels are glued.
    """

    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __init__(self, top: Sequence[int], bottom: Sequence[int] | None = None):
        if bottom is None:
            bottom, top = top, range(len(top))
        t, b = tuple(int(x) for x in top), tuple(int(x) for x in bottom)
        if len(t) != len(b) or len(t) < 2:
            raise ValueError("rows must have equal length of at least 2")
        if sorted(t) != sorted(b) or len(set(t)) != len(t):
            raise ValueError("rows must use the same symbols, each once")
        if t[0] != b[-1]:
            raise ValueError("first top symbol must equal last bottom symbol")
        if t != tuple(range(len(t))):
            raise ValueError("top row must be 0,1,...,N (canonical labeling)")
        object.__setattr__(self, "top", t)
        object.__setattr__(self, "bottom", b)

    @classmethod
    def from_bottom(cls, bottom: Sequence[int]) -> Representative:
        return cls(range(len(bottom)), bottom)

    @property
    def n(self) -> int:
        return len(self.top) - 1

    def monodromy(self) -> dict[int, int]:
        """The positional map m (symbol -> symbol, 1-indexed) with zeros removed."""
        return {i: self.bottom[i - 1] for i in range(1, self.n + 1)}

    def is_normal_form(self) -> bool:
        """Top row starts 0,1,2 and bottom row starts with 2; the torus is allowed."""
        if self.n == 1:
            return True
        return self.n >= 2 and self.bottom[0] == 2

    def to_rows(self) -> str:
        return " ".join(map(str, self.top)) + "\n" + " ".join(map(str, self.bottom))

    @classmethod
    def parse(cls, text: str) -> Representative:
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        if len(lines) != 2:
            raise ValueError("two-row format needs exactly two non-empty lines")
        top, bottom = ([int(x) for x in ln.split()] for ln in lines)
        return cls(top, bottom)

    def __str__(self) -> str:
        return self.to_rows()


def from_m(m: dict[int, int] | Sequence[int]) -> Representative:
    """Representative from the 1-indexed monodromy (m[i] = bottom label of square i)."""
    if isinstance(m, dict):
        n = len(m)
        bottom = [m[i] for i in range(1, n + 1)]
    else:
        bottom = list(m)
    return Representative.from_bottom(bottom + [0])


def from_representative(rep: Representative) -> Origami:
    n = rep.n
    h = Permutation([(i + 1) % n for i in range(n)])
    # square i (zero-indexed) has bottom label bottom[i]; the square below it
    # is the one whose top label is that symbol
    below = [rep.bottom[i] - 1 for i in range(n)]
    v = inverse(Permutation(below))
    return Origami(h, v)


def to_representative(o: Origami, start: int = 0) -> Representative:
    """Read the surface as a representative, starting the row at square ``start``."""
    if not is_single_cycle(o.h):
        raise ValueError("surface does not have a single horizontal cylinder of height one")
    n = o.n
    pos = [0] * n
    x = start
    order = []
    for p in range(n):
        pos[x] = p + 1
        order.append(x)
        x = o.h(x)
    vinv = inverse(o.v)
    bottom = [pos[vinv(sq)] for sq in order]
    return Representative.from_bottom(bottom + [0])


def normal_form_starts(o: Origami) -> list[int]:
    """Start squares whose representative is in normal form."""
    if o.n == 1:
        return [0]
    vinv = inverse(o.v)
    return [s for s in range(o.n) if vinv(s) == o.h(s)]
