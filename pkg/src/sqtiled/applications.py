"""Filling pairs with prescribed complementary polygons, and Thurston dilatations.

The core curves of the two cylinders of a 1,1 origami with n squares meet n
times, always with the same sign, and cut the surface into polygons: a zero of
order k becomes a 4(k+1)-gon. So a filling pair with a given polygon list is a
1,1 origami in the matching stratum, order-0 zeros included.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .classify import is_one_one, ribbon_boundaries
from .combinators import TORUS, concat
from .origami import Origami, Representative, from_representative, to_representative
from .planner import PlannerError, construct
from .strata import ComponentLabel, StratumSpec, components_of, min_squares_11


class FillingPairError(ValueError):
    pass


def min_filling_intersections(g: int, p: int) -> int:
    """Least intersection number of a filling pair on a genus-g surface with p punctures."""
    if g < 0 or p < 0:
        raise ValueError("genus and puncture count must be non-negative")
    if g == 0:
        if p < 4:
            raise ValueError(f"no filling pair on the sphere with {p} punctures")
        return p - 2 if p % 2 == 0 else p - 1
    if g == 2:
        return 4 if p <= 2 else 2 * g + p - 2
    if p == 0:
        return 2 * g - 1
    return 2 * g + p - 2


@dataclass(frozen=True)
class CompatibleDecomposition:
    """A list of 4k-gons cutting a genus-g surface with p punctures along n crossings."""

    polygons: tuple[int, ...]
    genus: int
    punctures: int
    intersections: int

    def __init__(self, polygons: Sequence[int], genus: int, punctures: int, intersections: int):
        object.__setattr__(self, "polygons", tuple(sorted(polygons, reverse=True)))
        object.__setattr__(self, "genus", genus)
        object.__setattr__(self, "punctures", punctures)
        object.__setattr__(self, "intersections", intersections)

    def problems(self) -> list[str]:
        g, p, n = self.genus, self.punctures, self.intersections
        out = []
        if any(s < 4 or s % 4 for s in self.polygons):
            out.append(f"side counts must be positive multiples of 4: {list(self.polygons)}")
            return out
        m = n + 2 - 2 * g
        if len(self.polygons) != m:
            out.append(f"need n+2-2g = {m} regions, got {len(self.polygons)}")
        excess = sum(s // 4 - 1 for s in self.polygons)
        if excess != 2 * g - 2:
            out.append(f"sum of (k-1) is {excess}, must be 2g-2 = {2 * g - 2}")
        try:
            lo = min_filling_intersections(g, p)
        except ValueError as exc:
            out.append(str(exc))
        else:
            if n < lo:
                out.append(f"n = {n} is below the minimum {lo} for genus {g} with {p} punctures")
        if p > len(self.polygons):
            out.append(f"{p} punctures need {p} distinct regions, only {len(self.polygons)}")
        return out

    def validate(self) -> None:
        bad = self.problems()
        if bad:
            raise FillingPairError("invalid decomposition: " + "; ".join(bad))

    @property
    def stratum(self) -> StratumSpec:
        orders = [s // 4 - 1 for s in self.polygons]
        return StratumSpec([k for k in orders if k > 0], orders.count(0))


@dataclass(frozen=True)
class FillingPairSurface:
    origami: Origami
    regions: tuple[int, ...]
    punctures: tuple[int, ...]  # region index of each puncture
    orientation: str = "horizontal core rightward, vertical core upward; every crossing positive"

    @property
    def intersections(self) -> int:
        return self.origami.n


def _default_component(s: StratumSpec) -> ComponentLabel:
    comps = components_of(s)
    for pref in (ComponentLabel.ODD, ComponentLabel.NONHYP, ComponentLabel.CONNECTED, ComponentLabel.EVEN):
        if pref in comps:
            return pref
    return comps[0]


def _torus_chain(n: int) -> Representative:
    rep = TORUS
    for _ in range(n - 1):
        rep = concat(rep, TORUS)
    return rep


def filling_origami(d: CompatibleDecomposition) -> Origami:
    """The 1,1 origami whose core curves realise ``d`` (punctures not yet placed)."""
    s = d.stratum
    g = d.genus
    if g == 1:
        return from_representative(_torus_chain(d.intersections))
    if g == 2:
        c = ComponentLabel.HYP
    elif g >= 3:
        c = _default_component(s)
    else:
        raise FillingPairError("filling pairs from origamis need genus at least 1")
    least = min_squares_11(s.without_marked(), c)
    if least > d.intersections:
        raise FillingPairError(
            f"infeasible decomposition {list(d.polygons)}: 1,1 surfaces in {s.without_marked()} "
            f"{c.value} need at least {least} squares, not {d.intersections}"
        )
    try:
        o, _ = construct(s, c)
    except PlannerError as exc:
        raise FillingPairError(f"infeasible decomposition {list(d.polygons)}: {exc}") from exc
    return o


def place_punctures(regions: Sequence[int], p: int) -> tuple[int, ...]:
    """Largest regions first; ties keep diagram order."""
    if p > len(regions):
        raise FillingPairError(f"cannot place {p} punctures in {len(regions)} regions")
    order = sorted(range(len(regions)), key=lambda i: (-regions[i], i))
    return tuple(order[:p])


def build_filling_pair(d: CompatibleDecomposition) -> FillingPairSurface:
    d.validate()
    o = filling_origami(d)
    if not is_one_one(o):
        raise FillingPairError("construction is not a 1,1 surface")
    if o.n != d.intersections:
        raise FillingPairError(f"{o.n} squares, expected {d.intersections} intersections")
    regions = tuple(ribbon_boundaries(o))
    if Counter(regions) != Counter(d.polygons):
        raise FillingPairError(f"regions {list(regions)} do not match {list(d.polygons)}")
    return FillingPairSurface(o, regions, place_punctures(regions, d.punctures))


def compatible_decompositions(g: int, p: int, n: int, max_polygons: int | None = None) -> Iterator[CompatibleDecomposition]:
    """Every polygon multiset compatible with (g, p, n)."""
    m = n + 2 - 2 * g
    if m < 1 or (max_polygons is not None and m > max_polygons) or p > m:
        return

    def parts(total: int, count: int, cap: int) -> Iterator[tuple[int, ...]]:
        if count == 0:
            if total == 0:
                yield ()
            return
        for k in range(min(total, cap), -1, -1):
            for rest in parts(total - k, count - 1, k):
                yield (k,) + rest

    for ks in parts(2 * g - 2, m, 2 * g - 2):
        d = CompatibleDecomposition([4 * (k + 1) for k in ks], g, p, n)
        if not d.problems():
            yield d


# ------------------------------------------------------------ Thurston construction

@dataclass(frozen=True)
class Dilatation:
    matrix: tuple[tuple[int, int], tuple[int, int]]
    trace: int
    pseudo_anosov: bool
    dilatation: float
    translation_length: float

    def line(self) -> str:
        (a, b), (c, e) = self.matrix
        return (
            f"matrix=[[{a},{b}],[{c},{e}]] trace={self.trace} "
            f"pseudo_anosov={'yes' if self.pseudo_anosov else 'no'} "
            f"lambda={self.dilatation:.12g} log_lambda={self.translation_length:.12g}"
        )


def parse_word(text: str) -> list[tuple[str, int]]:
    """``"a1,b-1,a2"`` -> [("a", 1), ("b", -1), ("a", 2)]."""
    out = []
    for tok in text.replace(" ", "").split(","):
        if not tok:
            continue
        name, exp = tok[0].lower(), tok[1:] or "1"
        if name not in "ab":
            raise ValueError(f"twist must be a or b, got {tok!r}")
        out.append((name, int(exp)))
    if not out:
        raise ValueError("empty word")
    return out


def _mul(x, y):
    return (
        (x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
        (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]),
    )


def twist_matrix(name: str, exponent: int, n: int):
    """Affine action of a power of a core-curve twist on a 1,1 origami with n squares."""
    if name == "a":
        return ((1, n * exponent), (0, 1))
    return ((1, 0), (-n * exponent, 1))


def thurston_dilatation(word: Sequence[tuple[str, int]] | str, n: int) -> Dilatation:
    if n < 1:
        raise ValueError("intersection number must be at least 1")
    if isinstance(word, str):
        word = parse_word(word)
    if not word:
        raise ValueError("empty word")
    mat = ((1, 0), (0, 1))
    for name, exp in word:
        mat = _mul(mat, twist_matrix(name, exp, n))
    if mat == ((1, 0), (0, 1)):
        raise ValueError("word is the identity")
    tr = mat[0][0] + mat[1][1]
    t = abs(tr)
    pa = t > 2
    lam = (t + math.sqrt(t * t - 4)) / 2 if pa else 1.0
    return Dilatation(mat, tr, pa, lam, math.log(lam))


def filling_pair_intersection(o: Origami) -> int:
    """Crossings of the two core curves of a 1,1 origami: one per square."""
    if not is_one_one(o):
        raise ValueError("not a 1,1 surface")
    return o.n


def to_rows(o: Origami) -> str:
    return to_representative(o).to_rows()
