"""Parity of the spin structure of an origami whose zeros all have even order.

Homology is generated by closed walks through square centres along the dual
graph. Every walk is realised as an immersed curve: inside a square each
passage is an arc between two points on the sides it crosses, and each crossing
of an edge gets its own position along that edge, so all curves are in general
position simultaneously. Two arcs in a square meet an odd number of times iff
their endpoints interleave on the square's boundary.

For an immersed curve with c transverse self-crossings and turning number w the
quadratic form is w + c + 1 (mod 2); for embedded curves this is the usual
``index + 1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .origami import Origami, stratum_of
from .perm import inverse

E, N, W, S = 0, 1, 2, 3
MOVE_NAMES = "ENWS"


@dataclass(frozen=True)
class CycleWithIndex:
    """Reduced closed walk: start square and moves in E/N/W/S (0..3)."""

    start: int
    moves: tuple[int, ...]
    index: int
    squares: tuple[int, ...] = field(repr=False)

    def word(self) -> str:
        return "".join(MOVE_NAMES[d] for d in self.moves)


def _step_tables(o: Origami):
    h, v = o.h.images, o.v.images
    hinv, vinv = inverse(o.h).images, inverse(o.v).images
    return (h, v, hinv, vinv)


def _step(tables, sq: int, d: int) -> int:
    h, v, hinv, vinv = tables
    return (h, v, hinv, vinv)[d][sq]


def _reduce(start: int, moves: list[int], tables) -> tuple[int, list[int]]:
    """Free reduction followed by cyclic reduction of a closed walk."""
    stack: list[int] = []
    for d in moves:
        if stack and (stack[-1] - d) % 4 == 2:
            stack.pop()
        else:
            stack.append(d)
    lo, hi = 0, len(stack)
    while hi - lo >= 2 and (stack[lo] - stack[hi - 1]) % 4 == 2:
        start = _step(tables, start, stack[lo])
        lo += 1
        hi -= 1
    return start, stack[lo:hi]


def turning_number(moves: tuple[int, ...] | list[int]) -> int:
    if not moves:
        raise ValueError("empty walk")
    total = 0
    for a, b in zip(moves, list(moves[1:]) + [moves[0]]):
        t = (b - a) % 4
        if t == 2:
            raise ValueError("walk is not reduced (U-turn)")
        total += {0: 0, 1: 1, 3: -1}[t]
    if total % 4:
        raise AssertionError("turning of a closed walk must be a whole number of turns")
    return total // 4


def make_cycle(o: Origami, start: int, moves: list[int] | str) -> CycleWithIndex:
    """Reduce a closed walk and attach its turning number."""
    tables = _step_tables(o)
    if isinstance(moves, str):
        moves = [MOVE_NAMES.index(c) for c in moves]
    sq = start
    for d in moves:
        sq = _step(tables, sq, d)
    if sq != start:
        raise ValueError("walk does not close up")
    start, red = _reduce(start, list(moves), tables)
    if not red:
        raise ValueError("walk reduces to the trivial loop")
    squares = [start]
    for d in red[:-1]:
        squares.append(_step(tables, squares[-1], d))
    return CycleWithIndex(start, tuple(red), turning_number(red), tuple(squares))


def cycle_basis(o: Origami) -> list[CycleWithIndex]:
    """Fundamental cycles of a BFS spanning tree of the dual graph (n+1 of them)."""
    tables = _step_tables(o)
    n = o.n
    parent: list[tuple[int, int] | None] = [None] * n  # (previous square, move into this one)
    seen = [False] * n
    seen[0] = True
    tree_edges = set()
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for d in range(4):
            y = _step(tables, x, d)
            if not seen[y]:
                seen[y] = True
                parent[y] = (x, d)
                edge = (x, d) if d in (E, N) else (y, (d + 2) % 4)
                tree_edges.add(edge)
                queue.append(y)

    def path_from_root(x: int) -> list[int]:
        out = []
        while parent[x] is not None:
            px, d = parent[x]
            out.append(d)
            x = px
        return out[::-1]

    basis = []
    for x in range(n):
        for d in (E, N):
            if (x, d) in tree_edges:
                continue
            y = _step(tables, x, d)
            back = [(m + 2) % 4 for m in reversed(path_from_root(y))]
            basis.append(make_cycle(o, 0, path_from_root(x) + [d] + back))
    return basis


def _edge_of(tables, sq: int, d: int) -> tuple[int, int]:
    """(kind, id) of the edge crossed leaving ``sq`` in direction ``d``.

    kind 0: vertical edge on the right of square id; kind 1: horizontal edge on top.
    """
    h, v, hinv, vinv = tables
    if d == E:
        return (0, sq)
    if d == W:
        return (0, hinv[sq])
    if d == N:
        return (1, sq)
    return (1, vinv[sq])


def _perimeter(side: int, t: float) -> float:
    """Position on a square's boundary, counterclockwise from the bottom-left corner."""
    if side == S:
        return t
    if side == E:
        return 1.0 + t
    if side == N:
        return 3.0 - t
    return 4.0 - t


def _crossing_data(o: Origami, curves: list[CycleWithIndex]):
    """Per-curve self-crossing parity and the pairwise crossing parity matrix."""
    tables = _step_tables(o)
    # every edge crossing gets a distinct position on its edge; ties are broken
    # by curve order then crossing order, i.e. later curves are pushed off
    # slightly further, which is a generic perturbation
    crossings: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for ci, c in enumerate(curves):
        for j, (sq, d) in enumerate(zip(c.squares, c.moves)):
            crossings.setdefault(_edge_of(tables, sq, d), []).append((ci, j))
    offset: dict[tuple[int, int], float] = {}
    for lst in crossings.values():
        k = len(lst)
        for r, key in enumerate(lst):
            offset[key] = (r + 1) / (k + 1)
    chords: dict[int, list[tuple[int, float, float]]] = {}
    for ci, c in enumerate(curves):
        L = len(c.moves)
        for j in range(L):
            sq = c.squares[j]
            d_in, d_out = c.moves[j - 1], c.moves[j]
            # position along an edge is the same coordinate seen from both sides
            p = _perimeter((d_in + 2) % 4, offset[(ci, (j - 1) % L)])
            q = _perimeter(d_out, offset[(ci, j)])
            chords.setdefault(sq, []).append((ci, min(p, q), max(p, q)))
    k = len(curves)
    self_x = np.zeros(k, dtype=np.uint8)
    gram = np.zeros((k, k), dtype=np.uint8)
    for lst in chords.values():
        for a in range(len(lst)):
            ca, p1, p2 = lst[a]
            for b in range(a + 1, len(lst)):
                cb, q1, q2 = lst[b]
                if (p1 < q1 < p2) != (p1 < q2 < p2):
                    if ca == cb:
                        self_x[ca] ^= 1
                    else:
                        gram[ca, cb] ^= 1
                        gram[cb, ca] ^= 1
    return self_x, gram


def _require_even(o: Origami) -> None:
    s = stratum_of(o)
    if not s.all_even():
        raise ValueError(f"quadratic form undefined: {s} has a zero of odd order")


def omega(o: Origami, c: CycleWithIndex) -> int:
    """Value of the quadratic form on the class of ``c``."""
    _require_even(o)
    self_x, _ = _crossing_data(o, [c])
    return (c.index + 1 + int(self_x[0])) % 2


def intersection_mod2(o: Origami, a: CycleWithIndex, b: CycleWithIndex) -> int:
    _, gram = _crossing_data(o, [a, b])
    return int(gram[0, 1])


@dataclass(frozen=True)
class QuadraticSpace:
    basis: tuple[CycleWithIndex, ...]
    omega: np.ndarray
    gram: np.ndarray


def quadratic_space(o: Origami) -> QuadraticSpace:
    _require_even(o)
    basis = cycle_basis(o)
    self_x, gram = _crossing_data(o, basis)
    idx = np.array([c.index for c in basis], dtype=np.int64)
    om = ((idx + 1 + self_x) % 2).astype(np.uint8)
    return QuadraticSpace(tuple(basis), om, gram)


def _q(vec: np.ndarray, om: np.ndarray, gram: np.ndarray) -> int:
    """Quadratic form on a GF(2) combination of basis cycles."""
    sel = np.flatnonzero(vec)
    val = int(om[sel].sum())
    sub = gram[np.ix_(sel, sel)]
    val += int(np.triu(sub, 1).sum())
    return val % 2


def _form(x: np.ndarray, y: np.ndarray, gram: np.ndarray) -> int:
    return int(x.astype(np.int64) @ gram.astype(np.int64) @ y.astype(np.int64)) % 2


def arf_invariant(om: np.ndarray, gram: np.ndarray) -> tuple[int, int]:
    """Arf invariant and rank of a quadratic form given on a spanning set.

    Symplectic Gram-Schmidt over GF(2): take the first remaining vector with a
    partner, split off the hyperbolic pair, repeat. The leftover vectors span
    the radical, on which the form must vanish.
    """
    k = len(om)
    vecs = [np.eye(k, dtype=np.uint8)[i] for i in range(k)]
    arf = 0
    rank = 0
    while True:
        pair = None
        for i in range(len(vecs)):
            for j in range(i + 1, len(vecs)):
                if _form(vecs[i], vecs[j], gram):
                    pair = (i, j)
                    break
            if pair:
                break
        if pair is None:
            break
        i, j = pair
        a, b = vecs[i], vecs[j]
        arf ^= _q(a, om, gram) & _q(b, om, gram)
        rank += 2
        rest = []
        for t, x in enumerate(vecs):
            if t in (i, j):
                continue
            xa, xb = _form(x, a, gram), _form(x, b, gram)
            y = x.copy()
            if xb:
                y ^= a
            if xa:
                y ^= b
            rest.append(y)
        vecs = rest
    for x in vecs:
        if x.any() and _q(x, om, gram):
            raise AssertionError("quadratic form does not vanish on the radical")
    return arf, rank


def spin_parity(o: Origami) -> int:
    """1 for odd spin structure, 0 for even."""
    s = stratum_of(o)
    _require_even(o)
    if s.genus < 2:
        raise ValueError("spin parity is computed for genus at least 2")
    space = quadratic_space(o)
    arf, rank = arf_invariant(space.omega, space.gram)
    if rank != 2 * s.genus:
        raise AssertionError(f"intersection form has rank {rank}, expected {2 * s.genus}")
    return arf
