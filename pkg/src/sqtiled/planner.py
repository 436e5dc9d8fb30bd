"""Turn a (stratum, component) request into a replayable construction recipe.

Hyperelliptic components come straight from the hyperelliptic families. Every
other component is a concatenation of blocks: small catalogued surfaces, swap
concatenations of two odd-spin surfaces, and gadget extensions of either. The
zero multiset is partitioned into blocks by a memoised depth-first search; for
spin components the parities must satisfy Σε + (b-1) ≡ target.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .catalog import emit
from .classify import classify, is_one_one
from .combinators import (
    TORUS,
    add_marked_point,
    bottom_leaving_zero,
    concat,
    h11_gadget,
    left_swap_concat,
    order2_gadget,
    right_swap_concat,
)
from .origami import Origami, Representative, from_representative, stratum_of
from .strata import (
    ComponentLabel,
    StratumSpec,
    check_admissible,
    forced_marked_points,
    min_squares_11,
)

H, O, E, NH, C = (
    ComponentLabel.HYP,
    ComponentLabel.ODD,
    ComponentLabel.EVEN,
    ComponentLabel.NONHYP,
    ComponentLabel.CONNECTED,
)

# a fragment is a tuple of (op, arg) pairs; the first op is always "emit"
Fragment = tuple[tuple[str, str], ...]


class PlannerError(RuntimeError):
    pass


@dataclass(frozen=True)
class Step:
    op: str
    arg: str
    stratum: str
    component: str
    squares: int

    def describe(self) -> str:
        what = f"{self.op} {self.arg}".strip()
        return f"{what:<28} -> {self.stratum} {self.component} ({self.squares} squares)"


@dataclass(frozen=True)
class Recipe:
    """Blocks built independently, concatenated left to right, then marked points."""

    blocks: tuple[tuple[Step, ...], ...]
    joins: tuple[Step, ...]
    finish: tuple[Step, ...] = field(default=())

    def steps(self) -> list[Step]:
        out = [s for b in self.blocks for s in b]
        return out + list(self.joins) + list(self.finish)

    def to_text(self) -> str:
        lines = []
        for i, b in enumerate(self.blocks):
            lines.append(f"block {i + 1}:")
            lines += ["  " + s.describe() for s in b]
        for s in list(self.joins) + list(self.finish):
            lines.append(s.describe())
        return "\n".join(lines)

    def to_json(self) -> str:
        def enc(s: Step) -> dict:
            return s.__dict__.copy()

        return json.dumps(
            {
                "blocks": [[enc(s) for s in b] for b in self.blocks],
                "joins": [enc(s) for s in self.joins],
                "finish": [enc(s) for s in self.finish],
            }
        )


def _apply(op: str, arg: str, cur: Representative | None) -> Representative:
    if op == "emit":
        return emit(arg)
    if op == "torus":
        return TORUS if cur is None else concat(cur, TORUS)
    assert cur is not None
    if op == "rswap":
        return right_swap_concat(cur, emit(arg))
    if op == "lswap":
        return left_swap_concat(cur, emit(arg))
    if op == "gadget2":
        return order2_gadget(cur)
    if op == "h11":
        return h11_gadget(cur)
    if op == "split":
        return add_marked_point(cur, int(arg))
    raise PlannerError(f"unknown recipe op {op!r}")


def _record(op: str, arg: str, rep: Representative) -> Step:
    s, c = classify(from_representative(rep))
    return Step(op, arg, str(s), c.value, rep.n)


def _check_step(step: Step, rep: Representative) -> None:
    got = _record(step.op, step.arg, rep)
    if got != step:
        raise PlannerError(f"replay mismatch at {step.describe()}: got {got.describe()}")


def replay(recipe: Recipe, check: bool = True) -> Representative:
    reps = []
    for block in recipe.blocks:
        cur = None
        for st in block:
            cur = _apply(st.op, st.arg, cur)
            if check:
                _check_step(st, cur)
        reps.append(cur)
    cur = reps[0]
    for st, nxt in zip(recipe.joins, reps[1:]):
        cur = concat(cur, nxt)
        if check:
            _check_step(st, cur)
    for st in recipe.finish:
        cur = _apply(st.op, st.arg, cur)
        if check:
            _check_step(st, cur)
    return cur


# ------------------------------------------------------------------- blocks

def _odd_key(order: int) -> str:
    return f"odd:{order}"


def _odd_pair_fragments(a: int, b: int) -> list[Fragment]:
    """Ways to build H(a,b), a >= b both odd, as one 1,1 block."""
    a, b = max(a, b), min(a, b)
    out: list[Fragment] = []
    if b == 1:
        if a == 3:
            out += [(("emit", "exc:(3,1)"),), (("emit", "exc:(3,1)-bottom1"),)]
        elif a == 5:
            out.append((("emit", "exc:(5,1)"),))
        elif a >= 7:
            out.append((("emit", f"odd1:{(a - 1) // 2}"),))
        return out
    if a == b:
        if b == 3:
            out.append((("emit", "exc:nonhyp(3,3)"),))
        else:
            s = (b - 1) // 2
            for j in range(1, s):
                out.append((("emit", _odd_key(4 * j + 2)), ("rswap", _odd_key(4 * (s - j)))))
        return out
    if a == b + 2:
        s = (a - 1) // 2
        for j in range(1, s):
            out.append((("emit", _odd_key(4 * j)), ("rswap", _odd_key(4 * (s - j)))))
        out.append((("emit", f"bottom-pair:{(b - 1) // 2}"),))
        return out
    j = (b - 1) // 2
    d = a - b
    # the second factor is H^odd(4k) or H^odd(4k+2) according to a - b mod 4
    out.append((("emit", _odd_key(4 * j + 2)), ("lswap", _odd_key(d))))
    return out


@lru_cache(maxsize=None)
def _build(fragment: Fragment) -> Representative:
    cur = None
    for op, arg in fragment:
        cur = _apply(op, arg, cur)
    return cur


@lru_cache(maxsize=None)
def _bottom_order(fragment: Fragment) -> int:
    return bottom_leaving_zero(_build(fragment))


def block_options(zs: tuple[int, ...]) -> list[tuple[int | None, Fragment]]:
    """(parity or None, fragment) pairs realising the zero multiset ``zs`` as one block."""
    zs = tuple(sorted(zs, reverse=True))
    out: list[tuple[int | None, Fragment]] = []
    n = len(zs)
    evens = all(z % 2 == 0 for z in zs)
    if evens:
        exc = {
            (2, 2): [(1, "odd(2,2)")],
            (2, 2, 2): [(1, "odd(2,2,2)"), (0, "even(2,2,2)")],
            (2, 2, 2, 2): [(0, "even(2,2,2,2)")],
            (4, 2): [(1, "odd(4,2)"), (0, "even(4,2)")],
            (4, 2, 2): [(0, "even(4,2,2)")],
            (4, 4): [(0, "even(4,4)")],
            (6, 2): [(0, "even(6,2)")],
        }
        for par, key in exc.get(zs, []):
            out.append((par, (("emit", f"exc:{key}"),)))
        if n == 1 and zs[0] >= 4:
            out.append((1, (("emit", f"odd:{zs[0]}"),)))
            if zs[0] >= 6:
                out.append((0, (("emit", f"even:{zs[0]}"),)))
        if n == 2 and zs[1] == 2 and zs[0] >= 6:
            k = zs[0] // 2
            out.append((1, (("emit", f"2odd:{k}"),)))
            if k >= 4:
                out.append((0, (("emit", f"2even:{k}"),)))
        return out
    odd = [z for z in zs if z % 2]
    even = [z for z in zs if z % 2 == 0]
    exc_mixed = {
        (2, 1, 1): "(2,1,1)",
        (4, 1, 1): "(4,1,1)",
        (2, 2, 1, 1): "(2,2,1,1)",
        (2, 1, 1, 1, 1): "(2,1,1,1,1)",
        (3, 2, 1): "(3,1,2)",
        (1, 1, 1, 1): "(1,1,1,1)",
        (1, 1, 1, 1, 1, 1): "(1,1,1,1,1,1)",
        (3, 1, 1, 1): "(3,1,1,1)",
    }
    if zs in exc_mixed:
        out.append((None, (("emit", f"exc:{exc_mixed[zs]}"),)))
    if not even and len(odd) == 2:
        out += [(None, f) for f in _odd_pair_fragments(*odd)]
    if not even and len(odd) == 4 and odd[1:] == [1, 1, 1] and odd[0] >= 5:
        a = odd[0]
        if a % 4 == 3 and a >= 7:
            out.append((None, (("emit", f"4k+3,1,1,1:{(a - 3) // 4}"),)))
        elif a % 4 == 1 and a >= 9:
            out.append((None, (("emit", f"4k+1,1,1,1:{(a - 1) // 4}"),)))
        out += [(None, f + (("h11", ""),)) for f in _odd_pair_fragments(a - 2, 1)]
    if len(even) == 1 and odd == [1, 1]:
        e = even[0]
        if e % 4 == 2 and e >= 6:
            out.append((None, (("emit", f"4k+2,1,1:{(e - 2) // 4}"),)))
        elif e % 4 == 0 and e >= 8:
            out.append((None, (("emit", f"4k,1,1:{e // 4}"),)))
    if even == [2] and len(odd) == 2:
        x, y = odd
        for base, lift in (((x - 2, y), x - 2), ((x, y - 2), y - 2)):
            if min(base) < 1:
                continue
            for f in _odd_pair_fragments(*base):
                if _bottom_order(f) == lift:
                    out.append((None, f + (("gadget2", ""),)))
    return out


def _sub_multisets(rem: Counter, first: int, max_size: int) -> Iterator[tuple[int, ...]]:
    """Sub-multisets of ``rem`` that contain ``first``, smallest first."""
    rest = rem.copy()
    rest[first] -= 1
    keys = sorted((k for k in rest if rest[k] > 0), reverse=True)

    def rec(i: int, budget: int) -> Iterator[list[int]]:
        if i == len(keys):
            yield []
            return
        k = keys[i]
        for c in range(0, min(rest[k], budget) + 1):
            for tail in rec(i + 1, budget - c):
                yield [k] * c + tail

    subs = [tuple(sorted([first] + s, reverse=True)) for s in rec(0, max_size - 1)]
    subs.sort(key=lambda t: (len(t), [-x for x in t]))
    return iter(subs)


@lru_cache(maxsize=None)
def _partition(rem: tuple[int, ...], need: int | None) -> tuple | None:
    """Block list covering ``rem``; if ``need`` is set, Σ(ε+1) ≡ need (mod 2)."""
    if not rem:
        return () if need in (None, 0) else None
    counter = Counter(rem)
    first = rem[0]
    spin = need is not None
    for sub in _sub_multisets(counter, first, 6):
        opts = block_options(sub)
        if not opts:
            continue
        left = counter - Counter(sub)
        left_t = tuple(sorted(left.elements(), reverse=True))
        for par, frag in opts:
            if spin:
                if par is None:
                    continue
                tail = _partition(left_t, (need - par - 1) % 2)
            else:
                tail = _partition(left_t, None)
            if tail is not None:
                return ((sub, par, frag),) + tail
    return None


def plan_blocks(s: StratumSpec, c: ComponentLabel) -> tuple:
    zs = s.zero_orders
    if c in (O, E):
        target = 1 if c is O else 0
        res = _partition(zs, (target + 1) % 2)
    else:
        res = _partition(zs, None)
    if res is None:
        raise PlannerError(f"no block partition found for {s} {c.value}")
    # larger zeros first, odd parity before even on ties
    return tuple(sorted(res, key=lambda b: ([-z for z in b[0]], -(b[1] or 0))))


def _hyp_fragment(s: StratumSpec) -> Fragment:
    g = s.genus
    return (("emit", f"hyp-single:{g}" if s.num_zeros == 1 else f"hyp-double:{g}"),)


def construct(s: StratumSpec, c: ComponentLabel | str) -> tuple[Origami, Recipe]:
    """A minimal 1,1 origami in component ``c`` of ``s`` and the recipe producing it."""
    if isinstance(c, str):
        c = ComponentLabel.parse(c)
    check_admissible(s, c)
    if s.genus == 1:
        return _torus_construct(s)
    base = s.without_marked()
    if c is H:
        frags = [_hyp_fragment(base)]
    else:
        frags = [frag for _, _, frag in plan_blocks(base, c)]
    blocks = []
    reps = []
    for frag in frags:
        cur = None
        steps = []
        for op, arg in frag:
            cur = _apply(op, arg, cur)
            steps.append(_record(op, arg, cur))
        blocks.append(tuple(steps))
        reps.append(cur)
    cur = reps[0]
    joins = []
    for nxt in reps[1:]:
        cur = concat(cur, nxt)
        joins.append(_record("concat", "", cur))
    finish = []
    forced = forced_marked_points(base, c)
    if s.marked_points:
        if s.marked_points < forced:
            raise PlannerError(
                f"infeasible: minimal 1,1 surfaces in {base} {c.value} carry {forced} marked points"
            )
        for _ in range(s.marked_points - forced):
            if cur.is_normal_form():
                cur = concat(cur, TORUS)
                finish.append(_record("torus", "", cur))
            else:
                sym = _split_symbol(cur)
                cur = add_marked_point(cur, sym)
                finish.append(_record("split", str(sym), cur))
    o = from_representative(cur)
    _verify(o, s, c)
    return o, Recipe(tuple(blocks), tuple(joins), tuple(finish))


def _torus_construct(s: StratumSpec) -> tuple[Origami, Recipe]:
    cur = TORUS
    steps = [_record("torus", "", cur)]
    for _ in range(s.marked_points - 1):
        cur = concat(cur, TORUS)
        steps.append(_record("torus", "", cur))
    o = from_representative(cur)
    _verify(o, s, ComponentLabel.CONNECTED)
    return o, Recipe((tuple(steps),), ())


def _split_symbol(rep: Representative) -> int:
    """First side label, trying 3 first, whose splitting keeps the surface 1,1."""
    order = [3] + [x for x in range(1, rep.n + 1) if x != 3]
    for sym in order:
        if sym <= rep.n and is_one_one(from_representative(add_marked_point(rep, sym))):
            return sym
    raise PlannerError("no side split keeps the surface 1,1")


def _verify(o: Origami, s: StratumSpec, c: ComponentLabel) -> None:
    got_s, got_c = classify(o)
    problems = []
    if got_s.zero_orders != s.zero_orders:
        problems.append(f"stratum {got_s} != {s}")
    if s.marked_points and got_s.marked_points != s.marked_points:
        problems.append(f"marked points {got_s.marked_points} != {s.marked_points}")
    if got_c is not c:
        problems.append(f"component {got_c.value} != {c.value}")
    if not is_one_one(o):
        problems.append("not 1,1")
    if o.n != min_squares_11(s, c):
        problems.append(f"{o.n} squares != {min_squares_11(s, c)}")
    if problems:
        raise PlannerError("construction failed verification: " + "; ".join(problems))


# ------------------------------------------------------------ search fallback

def find_11_search(s: StratumSpec, c: ComponentLabel | str, n: int) -> Origami | None:
    """Backtracking search for a 1,1 origami with n squares in (s, c).

    h is the n-cycle i -> i+1 and the vertical map m = v⁻¹ is assigned square
    by square. A vertex cycle of the corner map c = m h⁻¹ m⁻¹ h is closed as
    soon as the needed values of m are known; closed cycles are checked
    against the target multiset of cycle lengths. Surfaces whose horizontal
    cylinder has height above one are not reached.
    """
    if isinstance(c, str):
        c = ComponentLabel.parse(c)
    check_admissible(s, c)
    g = s.genus
    marked = n - (2 * g + s.num_zeros - 2)
    if marked < 0:
        return None
    target = Counter([k + 1 for k in s.zero_orders] + [1] * marked)
    want = StratumSpec(s.zero_orders, marked)
    hn = [(i + 1) % n for i in range(n)]
    hinv = [(i - 1) % n for i in range(n)]
    m = [-1] * n
    minv = [-1] * n
    cval = [-1] * n  # corner map where known
    cinv = [-1] * n
    closed: Counter = Counter()

    def new_corners(i: int) -> list[tuple[int, int]]:
        # c(x) = m(h⁻¹(m⁻¹(h(x)))) becomes known when its last ingredient is set
        out = []
        y = m[i]
        x = hinv[y]  # m⁻¹(h(x)) = i
        if m[hinv[i]] >= 0:
            out.append((x, m[hinv[i]]))
        if m[hn[i]] >= 0 or hn[i] == i:
            z = m[hn[i]]
            x2 = hinv[z] if z >= 0 else -1
            # h⁻¹(m⁻¹(h(x2))) = i  <=>  m⁻¹(h(x2)) = h(i)
            if x2 >= 0 and (x2, m[i]) not in out:
                out.append((x2, m[i]))
        return [(a, b) for a, b in out if cval[a] < 0]

    def chain_through(x: int) -> tuple[int, bool]:
        y = x
        while cinv[y] >= 0 and cinv[y] != x:
            y = cinv[y]
        if cinv[y] == x:
            # x lies on a closed cycle
            length, z = 1, cval[x]
            while z != x:
                length += 1
                z = cval[z]
            return length, True
        length, z = 1, y
        while cval[z] >= 0:
            z = cval[z]
            length += 1
        return length, False

    maxlen = max(target)

    def rec(i: int) -> Origami | None:
        if i == n:
            o = Origami.from_images(hn, _inverse(m))
            if stratum_of(o) != want or not is_one_one(o):
                return None
            return o if classify(o)[1] is c else None
        for y in range(n):
            if minv[y] >= 0:
                continue
            m[i], minv[y] = y, i
            added = []
            ok = True
            for a, b in new_corners(i):
                if cval[a] >= 0 or cinv[b] >= 0:
                    continue
                cval[a], cinv[b] = b, a
                added.append(a)
                length, is_cycle = chain_through(a)
                if is_cycle:
                    closed[length] += 1
                    added[-1] = (a, length)
                    if closed[length] > target[length]:
                        ok = False
                        break
                else:
                    added[-1] = (a, 0)
                    if length > maxlen:
                        ok = False
                        break
            if ok:
                hit = rec(i + 1)
                if hit is not None:
                    return hit
            for a, length in reversed(added):
                if length:
                    closed[length] -= 1
                cinv[cval[a]] = -1
                cval[a] = -1
            m[i], minv[y] = -1, -1
        return None

    return rec(0)


def _inverse(p: list[int]) -> list[int]:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return out
