"""Permutations of {0..n-1} and the small amount of group theory origamis need."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{0, ..., n-1}`` stored as its image tuple."""

    images: tuple[int, ...]

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(x) for x in images)
        n = len(imgs)
        if n < 1:
            raise ValueError("a permutation needs degree at least 1")
        if sorted(imgs) != list(range(n)):
            raise ValueError(f"not a bijection of 0..{n - 1}: {list(imgs)}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(range(n))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> Permutation:
        """Build from zero-indexed cycles; unlisted points are fixed."""
        imgs = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            for a in cyc:
                if not 0 <= a < n or a in seen:
                    raise ValueError(f"bad or repeated point {a} in cycles")
                seen.add(a)
            for i, a in enumerate(cyc):
                imgs[a] = cyc[(i + 1) % len(cyc)]
        return cls(imgs)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __len__(self) -> int:
        return len(self.images)

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def __str__(self) -> str:
        return to_cycle_string(self)


def _check_degree(*perms: Permutation) -> int:
    n = perms[0].n
    for p in perms[1:]:
        if p.n != n:
            raise ValueError(f"degree mismatch: {n} vs {p.n}")
    return n


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return p∘q, i.e. ``i -> p(q(i))``."""
    _check_degree(p, q)
    pi = p.images
    return Permutation(pi[j] for j in q.images)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * p.n
    for i, j in enumerate(p.images):
        inv[j] = i
    return Permutation(inv)


def commutator(h: Permutation, v: Permutation) -> Permutation:
    """h∘v∘h⁻¹∘v⁻¹."""
    _check_degree(h, v)
    return compose(h, compose(v, compose(inverse(h), inverse(v))))


def conjugate(p: Permutation, s: Permutation) -> Permutation:
    """s∘p∘s⁻¹: relabel each point i as s(i)."""
    return compose(s, compose(p, inverse(s)))


def cycles(p: Permutation) -> list[tuple[int, ...]]:
    """Disjoint cycles, fixed points included, each starting at its smallest point."""
    seen = [False] * p.n
    out = []
    for start in range(p.n):
        if seen[start]:
            continue
        cyc = []
        i = start
        while not seen[i]:
            seen[i] = True
            cyc.append(i)
            i = p.images[i]
        out.append(tuple(cyc))
    return out


def cycle_type(p: Permutation) -> list[int]:
    return sorted(len(c) for c in cycles(p))


def is_single_cycle(p: Permutation) -> bool:
    return len(cycles(p)) == 1


def orbits(gens: Sequence[Permutation]) -> list[list[int]]:
    """Orbits of the group generated by ``gens``."""
    n = _check_degree(*gens)
    seen = [False] * n
    out = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = True
        stack, orb = [s], [s]
        while stack:
            x = stack.pop()
            for g in gens:
                for y in (g.images[x],):
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
                        orb.append(y)
        out.append(sorted(orb))
    return out


def is_transitive(h: Permutation, v: Permutation) -> bool:
    return len(orbits([h, v])) == 1


def _bfs_relabel(h: tuple[int, ...], v: tuple[int, ...], start: int) -> tuple[int, ...]:
    n = len(h)
    label = [-1] * n
    order = [start]
    label[start] = 0
    k = 0
    while k < len(order):
        x = order[k]
        k += 1
        for y in (h[x], v[x]):
            if label[y] < 0:
                label[y] = len(order)
                order.append(y)
    if len(order) != n:
        raise ValueError("pair is not transitive")
    return tuple(label[h[x]] for x in order) + tuple(label[v[x]] for x in order)


def canonical_form(h: Permutation, v: Permutation) -> tuple[Permutation, Permutation]:
    """Normal form of (h, v) under simultaneous conjugation.

    Each start square induces a breadth-first relabeling (h before v); the
    lexicographically least resulting pair of image sequences is returned.
    Every conjugacy-invariant relabeling is reached from some start square,
    so two transitive pairs are conjugate iff their forms agree.
    """
    n = _check_degree(h, v)
    hi, vi = h.images, v.images
    best = min(_bfs_relabel(hi, vi, s) for s in range(n))
    return Permutation(best[:n]), Permutation(best[n:])


def canonical_key(h: Permutation, v: Permutation) -> tuple[int, ...]:
    """Hashable version of :func:`canonical_form`."""
    hi, vi = h.images, v.images
    return min(_bfs_relabel(hi, vi, s) for s in range(len(hi)))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int | None = None, one_indexed: bool = True) -> Permutation:
    """Parse cycle notation such as ``"(1,3)(2)"``.

    Fixed points may be omitted only when ``n`` is given.
    """
    text = text.strip()
    if text in ("", "()"):
        if n is None:
            raise ValueError("degree required for the identity")
        return Permutation.identity(n)
    stripped = _CYCLE_RE.sub("", text).strip()
    if stripped:
        raise ValueError(f"unparseable cycle notation: {text!r}")
    cyc_list = []
    for body in _CYCLE_RE.findall(text):
        items = [s for s in re.split(r"[,\s]+", body.strip()) if s]
        cyc = [int(s) - (1 if one_indexed else 0) for s in items]
        if cyc:
            cyc_list.append(cyc)
    points = [a for c in cyc_list for a in c]
    if n is None:
        n = len(points)
        if sorted(points) != list(range(n)):
            raise ValueError("fixed points elided; pass the degree explicitly")
    return Permutation.from_cycles(cyc_list, n)


def to_cycle_string(p: Permutation, one_indexed: bool = True, fixed: bool = True) -> str:
    off = 1 if one_indexed else 0
    parts = []
    for c in cycles(p):
        if len(c) == 1 and not fixed:
            continue
        parts.append("(" + ",".join(str(a + off) for a in c) + ")")
    return "".join(parts) if parts else "()"
