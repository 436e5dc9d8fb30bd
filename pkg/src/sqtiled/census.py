"""Exhaustive enumeration of origamis up to simultaneous conjugation.

``h`` runs over one permutation per cycle type, ``v`` over the symmetric group
(or, under the one-cylinder-each-way filter, over permutations whose cycles all
have the same length, since a cylinder of height k is k equal rows). Classes
are deduplicated by canonical key. Work is split into shards by the cycle type
of ``h`` and the value ``v(0)``; shards are independent and the merged output
is sorted, so it does not depend on the number of workers.
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .classify import classify, cylinder_decomposition, is_one_one
from .origami import Origami, stratum_of
from .perm import Permutation, canonical_key, cycle_type, is_transitive
from .strata import ComponentLabel, StratumSpec, min_squares_11

FULL_BUDGET = 8
FILTERED_BUDGET = 12


class BudgetExceeded(ValueError):
    pass


@dataclass(frozen=True)
class CensusQuery:
    n: int
    stratum: StratumSpec | None = None
    component: ComponentLabel | None = None
    one_one: bool = False
    count_only: bool = False
    # compare zero orders only; marked points are whatever the surface has
    ignore_marked: bool = True
    budget: int | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("census needs n >= 1")
        limit = self.budget or (FILTERED_BUDGET if self.one_one else FULL_BUDGET)
        if self.n > limit:
            raise BudgetExceeded(
                f"n={self.n} exceeds the census budget {limit} "
                f"({'one-cylinder' if self.one_one else 'full'} sweep)"
            )


def partitions(n: int, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for k in range(min(n, cap), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def perm_of_type(ctype: tuple[int, ...]) -> Permutation:
    """The permutation with consecutive cycles (0..k1-1)(k1..k1+k2-1)..."""
    images, base = [], 0
    for k in ctype:
        images.extend(base + (i + 1) % k for i in range(k))
        base += k
    return Permutation(images)


def perms_with_cycle_length(n: int, k: int, first: int | None = None) -> Iterator[tuple[int, ...]]:
    """All permutations of 0..n-1 whose cycles all have length k.

    ``first`` pins the image of 0.
    """
    if n % k:
        return
    img = [-1] * n

    def rec(free: list[int]) -> Iterator[tuple[int, ...]]:
        if not free:
            yield tuple(img)
            return
        a, rest = free[0], free[1:]
        for tail in itertools.permutations(rest, k - 1):
            if a == 0 and first is not None:
                if (tail[0] if tail else 0) != first:
                    continue
            cyc = (a,) + tail
            for i in range(k):
                img[cyc[i]] = cyc[(i + 1) % k]
            left = [x for x in rest if x not in tail]
            yield from rec(left)
        for x in free:
            img[x] = -1

    yield from rec(list(range(n)))


def _all_perms(n: int, first: int) -> Iterator[tuple[int, ...]]:
    rest = [x for x in range(n) if x != first]
    for tail in itertools.permutations(rest):
        yield (first,) + tail


def _h_types(q: CensusQuery) -> list[tuple[int, ...]]:
    if q.one_one:
        return [(q.n // k,) * k for k in range(1, q.n + 1) if q.n % k == 0]
    return list(partitions(q.n))


@dataclass(frozen=True)
class Shard:
    h_type: tuple[int, ...]
    first: int


def shards(q: CensusQuery) -> list[Shard]:
    return [Shard(t, a) for t in _h_types(q) for a in range(q.n)]


def _target_commutator_type(q: CensusQuery) -> list[int] | None:
    if q.stratum is None or q.ignore_marked:
        return None
    s = q.stratum
    return sorted([k + 1 for k in s.zero_orders] + [1] * s.marked_points)


def _nonfixed_type(q: CensusQuery) -> list[int] | None:
    if q.stratum is None:
        return None
    return sorted(k + 1 for k in q.stratum.zero_orders)


def _matches(q: CensusQuery, o: Origami) -> bool:
    if q.one_one and not is_one_one(o):
        return False
    if q.stratum is not None:
        s = stratum_of(o)
        if q.ignore_marked:
            if s.zero_orders != q.stratum.zero_orders:
                return False
        elif s != q.stratum:
            return False
    if q.component is not None:
        if classify(o)[1] is not q.component:
            return False
    return True


def run_shard(q: CensusQuery, shard: Shard) -> set[tuple[int, ...]]:
    n = q.n
    h = perm_of_type(shard.h_type)
    hi = h.images
    hinv = [0] * n
    for i, x in enumerate(hi):
        hinv[x] = i
    exact = _target_commutator_type(q)
    nonfixed = _nonfixed_type(q)
    if q.one_one:
        vs: Iterator[tuple[int, ...]] = itertools.chain.from_iterable(
            perms_with_cycle_length(n, k, shard.first) for k in range(1, n + 1) if n % k == 0
        )
    else:
        vs = _all_perms(n, shard.first)
    found: set[tuple[int, ...]] = set()
    for vi in vs:
        if nonfixed is not None or exact is not None:
            vinv = [0] * n
            for i, x in enumerate(vi):
                vinv[x] = i
            # h v h⁻¹ v⁻¹
            comm = [hi[vi[hinv[vinv[x]]]] for x in range(n)]
            ct = cycle_type(Permutation(comm))
            if exact is not None and ct != exact:
                continue
            if nonfixed is not None and [c for c in ct if c > 1] != nonfixed:
                continue
        v = Permutation(vi)
        if not is_transitive(h, v):
            continue
        o = Origami(h, v)
        if not _matches(q, o):
            continue
        found.add(canonical_key(h, v))
    return found


def _run_shard_args(args) -> set[tuple[int, ...]]:
    return run_shard(*args)


def _decode(key: tuple[int, ...]) -> Origami:
    n = len(key) // 2
    return Origami.from_images(key[:n], key[n:])


def enumerate_classes(q: CensusQuery, jobs: int = 1) -> list[Origami]:
    """One canonical representative per conjugacy class matching the query, sorted."""
    work = shards(q)
    keys: set[tuple[int, ...]] = set()
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_run_shard_args, [(q, s) for s in work], chunksize=1):
                keys |= part
    else:
        for s in work:
            keys |= run_shard(q, s)
    return [_decode(k) for k in sorted(keys)]


def count(q: CensusQuery, jobs: int = 1) -> int:
    return len(enumerate_classes(q, jobs))


def naive_classes(n: int) -> set[tuple[int, ...]]:
    """All transitive pairs over S_n x S_n, deduplicated. Only for tiny n."""
    out = set()
    for hi in itertools.permutations(range(n)):
        h = Permutation(hi)
        for vi in itertools.permutations(range(n)):
            v = Permutation(vi)
            if is_transitive(h, v):
                out.add(canonical_key(h, v))
    return out


BucketKey = tuple[str, str, int, int]


def buckets(origamis: list[Origami]) -> Counter:
    """Counts per (stratum, component, horizontal cylinders, vertical cylinders)."""
    out: Counter = Counter()
    for o in origamis:
        s, c = classify(o)
        hc = len(cylinder_decomposition(o, "horizontal"))
        vc = len(cylinder_decomposition(o, "vertical"))
        out[(str(s), c.value, hc, vc)] += 1
    return out


def summary_table(counts: Counter) -> str:
    lines = ["stratum\tcomponent\tcyl_h\tcyl_v\tcount"]
    for (s, c, hc, vc), k in sorted(counts.items()):
        lines.append(f"{s}\t{c}\t{hc}\t{vc}\t{k}")
    return "\n".join(lines)


@dataclass
class BoundReport:
    stratum: StratumSpec
    component: ComponentLabel
    bound: int
    counts_below: dict[int, int] = field(default_factory=dict)
    witness: Origami | None = None
    witness_from: str = ""

    @property
    def holds(self) -> bool:
        return all(k == 0 for k in self.counts_below.values()) and self.witness is not None

    def lines(self) -> list[str]:
        out = [f"{self.stratum} {self.component.value}: bound {self.bound}"]
        for n, k in sorted(self.counts_below.items()):
            out.append(f"  n={n}: {k} one-cylinder surfaces in the component")
        out.append(
            f"  n={self.bound}: witness {'found' if self.witness else 'missing'}"
            + (f" ({self.witness_from})" if self.witness_from else "")
        )
        return out


def verify_bound(
    stratum: StratumSpec,
    component: ComponentLabel = ComponentLabel.HYP,
    jobs: int = 1,
    search_witness: bool = True,
    start: int = 1,
) -> BoundReport:
    """Check that no 1,1 origami of the component has fewer than the minimal number of squares.

    The witness at the bound comes from the census when ``search_witness`` is
    set, and otherwise from the hyperelliptic family.
    """
    if component is not ComponentLabel.HYP:
        raise ValueError("bound verification covers hyperelliptic components")
    bound = min_squares_11(stratum, component)
    rep = BoundReport(stratum, component, bound)
    # surfaces of genus g need at least 2g-1 squares; nothing smaller to check
    for n in range(max(start, 1), bound):
        q = CensusQuery(n, stratum, component, one_one=True, budget=max(n, FILTERED_BUDGET))
        rep.counts_below[n] = count(q, jobs)
    if search_witness:
        q = CensusQuery(bound, stratum, component, one_one=True, budget=max(bound, FILTERED_BUDGET))
        hits = enumerate_classes(q, jobs)
        if hits:
            rep.witness, rep.witness_from = hits[0], "census"
    else:
        from .catalog import hyperelliptic_rep
        from .origami import from_representative

        which = "single" if stratum.num_zeros == 1 else "double"
        o = from_representative(hyperelliptic_rep(stratum.genus, which))
        s, c = classify(o)
        if is_one_one(o) and o.n == bound and s.zero_orders == stratum.zero_orders and c is component:
            rep.witness, rep.witness_from = o, "hyperelliptic family"
    return rep
