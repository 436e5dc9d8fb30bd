"""Cylinders, filling-pair boundaries, hyperellipticity and component classification."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Literal

from .origami import Origami, stratum_of
from .perm import Permutation, cycles, inverse
from .strata import ComponentLabel, StratumSpec, components_of, min_squares_11

Direction = Literal["horizontal", "vertical"]


@dataclass(frozen=True)
class Cylinder:
    circumference: int
    height: int
    rows: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CylinderDecomposition:
    direction: str
    cylinders: tuple[Cylinder, ...]

    def __len__(self) -> int:
        return len(self.cylinders)


def cylinder_decomposition(o: Origami, direction: Direction = "horizontal") -> CylinderDecomposition:
    """Merge rows (cycles of h) or columns (cycles of v) across singularity-free boundaries."""
    if direction == "horizontal":
        along, across = o.h, o.v
    elif direction == "vertical":
        along, across = o.v, o.h
    else:
        raise ValueError(f"unknown direction {direction!r}")
    corner = o.corner().images
    strips = cycles(along)
    owner = {}
    for idx, s in enumerate(strips):
        for x in s:
            owner[x] = idx
    parent = list(range(len(strips)))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for idx, s in enumerate(strips):
        if all(corner[x] == x for x in s):
            a, b = find(idx), find(owner[across(s[0])])
            if a != b:
                parent[a] = b
    groups: dict[int, list[int]] = {}
    for idx in range(len(strips)):
        groups.setdefault(find(idx), []).append(idx)
    cyls = []
    for members in groups.values():
        rows = tuple(strips[i] for i in members)
        cyls.append(Cylinder(len(rows[0]), len(rows), rows))
    cyls.sort(key=lambda c: min(min(r) for r in c.rows))
    return CylinderDecomposition(direction, tuple(cyls))


def is_one_one(o: Origami) -> bool:
    return (
        len(cylinder_decomposition(o, "horizontal")) == 1
        and len(cylinder_decomposition(o, "vertical")) == 1
    )


# half-edge directions in counterclockwise order around a square centre
_E, _N, _W, _S = 0, 1, 2, 3


def ribbon_boundaries(o: Origami, require_one_one: bool = True) -> list[int]:
    """Side counts of the complementary regions of the horizontal/vertical dual graph.

    For a 1,1 origami this graph is the filling pair diagram of the two core
    curves. Faces are traced directly on the ribbon graph (rotation at each
    square is E, N, W, S), without reference to the commutator.
    """
    if require_one_one and not is_one_one(o):
        raise ValueError("not a 1,1 surface: filling pair diagram undefined")
    n = o.n
    h, v = o.h.images, o.v.images
    hinv, vinv = inverse(o.h).images, inverse(o.v).images

    def across(sq: int, d: int) -> tuple[int, int]:
        if d == _E:
            return h[sq], _W
        if d == _W:
            return hinv[sq], _E
        if d == _N:
            return v[sq], _S
        return vinv[sq], _N

    seen = [[False] * 4 for _ in range(n)]
    sides = []
    for sq in range(n):
        for d in range(4):
            if seen[sq][d]:
                continue
            length = 0
            cur = (sq, d)
            while not seen[cur[0]][cur[1]]:
                seen[cur[0]][cur[1]] = True
                length += 1
                nsq, nd = across(*cur)
                cur = (nsq, (nd + 1) % 4)
            sides.append(length)
    return sorted(sides, reverse=True)


def stratum_from_ribbon(o: Origami, require_one_one: bool = True) -> StratumSpec:
    sides = ribbon_boundaries(o, require_one_one)
    if any(s % 4 for s in sides):
        raise AssertionError(f"boundary side counts not divisible by 4: {sides}")
    orders = [s // 4 - 1 for s in sides]
    return StratumSpec([k for k in orders if k > 0], orders.count(0))


def genus_of(o: Origami) -> int:
    return stratum_of(o).genus


def hyperelliptic_involution(o: Origami) -> Permutation | None:
    """The rotation by π with 2g+2 fixed points, if the surface has one."""
    g = genus_of(o)
    for sigma in _rotations(o):
        if _fixed_point_count(o, sigma) == 2 * g + 2:
            return sigma
    return None


def _rotations(o: Origami):
    """All involutions σ with σhσ⁻¹ = h⁻¹ and σvσ⁻¹ = v⁻¹."""
    n = o.n
    h, v = o.h.images, o.v.images
    hinv, vinv = inverse(o.h).images, inverse(o.v).images
    for target in range(n):
        sigma = [-1] * n
        sigma[0] = target
        stack = [0]
        ok = True
        while stack and ok:
            x = stack.pop()
            sx = sigma[x]
            for y, sy in ((h[x], hinv[sx]), (v[x], vinv[sx]), (hinv[x], h[sx]), (vinv[x], v[sx])):
                if sigma[y] < 0:
                    sigma[y] = sy
                    stack.append(y)
                elif sigma[y] != sy:
                    ok = False
                    break
        if not ok or sorted(sigma) != list(range(n)):
            continue
        if any(sigma[sigma[i]] != i for i in range(n)):
            continue
        yield Permutation(sigma)


def _vertex_action(o: Origami, sigma: Permutation) -> tuple[list[tuple[int, ...]], dict[int, int]]:
    """Corner cycles and the induced map on them (index -> index)."""
    vert = cycles(o.corner())
    where = {}
    for idx, c in enumerate(vert):
        for x in c:
            where[x] = idx
    # the top-right corner of i goes to the bottom-left corner of σ(i),
    # which is the top-right corner of h⁻¹v⁻¹σ(i)
    hinv, vinv = inverse(o.h), inverse(o.v)
    act = {idx: where[hinv(vinv(sigma(c[0])))] for idx, c in enumerate(vert)}
    return vert, act


def _fixed_point_count(o: Origami, sigma: Permutation) -> int:
    n = o.n
    centres = sum(1 for i in range(n) if sigma(i) == i)
    vert_edges = sum(1 for i in range(n) if sigma(i) == o.h(i))
    horiz_edges = sum(1 for i in range(n) if sigma(i) == o.v(i))
    _, act = _vertex_action(o, sigma)
    vertices = sum(1 for a, b in act.items() if a == b)
    return centres + vert_edges + horiz_edges + vertices


def is_hyperelliptic(o: Origami) -> bool:
    if genus_of(o) < 2:
        raise ValueError("hyperellipticity is defined here for genus at least 2")
    return hyperelliptic_involution(o) is not None


def _in_hyp_component(o: Origami, s: StratumSpec) -> bool:
    sigma = hyperelliptic_involution(o)
    if sigma is None:
        return False
    if s.num_zeros == 2:
        # the involution must exchange the two zeros
        vert, act = _vertex_action(o, sigma)
        zeros = [i for i, c in enumerate(vert) if len(c) > 1]
        return act[zeros[0]] == zeros[1]
    return True


def classify(o: Origami) -> tuple[StratumSpec, ComponentLabel]:
    s = stratum_of(o)
    comps = components_of(s)
    if len(comps) == 1:
        return s, comps[0]
    if ComponentLabel.HYP in comps and _in_hyp_component(o, s):
        return s, ComponentLabel.HYP
    if s.all_even():
        from .spin import spin_parity

        return s, ComponentLabel.ODD if spin_parity(o) else ComponentLabel.EVEN
    return s, ComponentLabel.NONHYP


@dataclass(frozen=True)
class Report:
    stratum: StratumSpec
    component: ComponentLabel
    h_cylinders: int
    v_cylinders: int
    squares: int
    minimal: bool

    def line(self) -> str:
        return (
            f"stratum={self.stratum} component={self.component.value} "
            f"cylinders={self.h_cylinders},{self.v_cylinders} squares={self.squares} "
            f"minimal={'yes' if self.minimal else 'no'}"
        )


def report(o: Origami) -> Report:
    s, c = classify(o)
    hc = len(cylinder_decomposition(o, "horizontal"))
    vc = len(cylinder_decomposition(o, "vertical"))
    minimal = hc == 1 and vc == 1 and o.n == min_squares_11(s, c)
    return Report(s, c, hc, vc, o.n, minimal)


def zero_multiset(o: Origami) -> Counter:
    return Counter(stratum_of(o).zero_orders)
