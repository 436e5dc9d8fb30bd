"""Closed-form families and sporadic tables of minimal 1,1 representatives.

Every emission is checked against its advertised stratum, component, cylinder
structure and square count before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .classify import classify, is_one_one
from .origami import Representative, from_representative
from .strata import ComponentLabel, StratumSpec, min_squares_11

H, O, E, NH, C = (
    ComponentLabel.HYP,
    ComponentLabel.ODD,
    ComponentLabel.EVEN,
    ComponentLabel.NONHYP,
    ComponentLabel.CONNECTED,
)


@dataclass(frozen=True)
class CatalogEntry:
    stratum: StratumSpec
    component: ComponentLabel
    tag: str
    rep: Representative

    @property
    def normal_form(self) -> bool:
        return self.rep.is_normal_form()

    @property
    def squares(self) -> int:
        return self.rep.n


class CatalogError(ValueError):
    pass


def validate(rep: Representative, stratum: StratumSpec, component: ComponentLabel, tag: str) -> CatalogEntry:
    """Hard check that ``rep`` is a minimal 1,1 surface in the given component."""
    o = from_representative(rep)
    s, c = classify(o)
    problems = []
    if s.zero_orders != stratum.zero_orders:
        problems.append(f"stratum {s} != {stratum}")
    if c is not component:
        problems.append(f"component {c.value} != {component.value}")
    if not is_one_one(o):
        problems.append("not 1,1")
    if rep.n != min_squares_11(stratum, component):
        problems.append(f"{rep.n} squares, expected {min_squares_11(stratum, component)}")
    if problems:
        raise CatalogError(f"{tag}: " + "; ".join(problems) + f"; bottom={list(rep.bottom)}")
    return CatalogEntry(stratum, component, tag, rep)


def _rep(bottom: list[int]) -> Representative:
    return Representative.from_bottom(bottom)


# ---------------------------------------------------------------- hyperelliptic

def _hyp_single_bottom(g: int) -> list[int]:
    first = [4 * g - 4]
    for j in range(1, g - 1):
        first += [4 * g - 2 * j - 4, 4 * g - 2 * j - 3]
    first.append(2 * g - 1)
    second = []
    for i in range(g - 1, 0, -1):
        second += [2 * i - 1, 2 * i]
    return first + second + [0]


def _hyp_double_bottom(g: int) -> list[int]:
    first = [4 * g - 2]
    for j in range(1, g):
        first += [4 * g - 2 * j - 2, 4 * g - 2 * j - 1]
    first.append(2 * g - 1)
    second = []
    for i in range(g - 1, 0, -1):
        second += [2 * i - 1, 2 * i]
    return first + second + [0]


def hyperelliptic_rep(g: int, which: str = "single") -> Representative:
    """Hyperelliptic 1,1 surface: H(2g-2) ("single") or H(g-1,g-1) ("double")."""
    if g < 2:
        raise CatalogError("hyperelliptic families need genus at least 2")
    if which == "single":
        return _hyp_single_bottom_rep(g)
    if which == "double":
        return _hyp_double_bottom_rep(g)
    raise CatalogError(f"unknown hyperelliptic family {which!r}")


@lru_cache(maxsize=None)
def _hyp_single_bottom_rep(g: int) -> Representative:
    rep = _rep(_hyp_single_bottom(g))
    validate(rep, StratumSpec([2 * g - 2]), H, f"hyp-single g={g}")
    return rep


@lru_cache(maxsize=None)
def _hyp_double_bottom_rep(g: int) -> Representative:
    rep = _rep(_hyp_double_bottom(g))
    validate(rep, StratumSpec([g - 1, g - 1]), H, f"hyp-double g={g}")
    return rep


# --------------------------------------------------------- single even zero

def _oddmin_bottom(g: int) -> list[int]:
    if g == 3:
        return [2, 5, 4, 1, 3, 0]
    b = [2, 5, 4, 7, 3]
    for c in range(5, 2 * g - 3):
        b.append(c + 4 if c % 2 else c)
    b += [1, 2 * g - 2, 0]
    return b


def _evenmin_bottom(g: int) -> list[int]:
    if g == 4:
        return [2, 7, 6, 5, 3, 1, 4, 0]
    b = [2, 7, 6, 5, 3, 9, 4]
    for c in range(7, 2 * g - 3):
        b.append(c + 4 if c % 2 else c)
    b += [1, 2 * g - 2, 0]
    return b


@lru_cache(maxsize=None)
def even_zero_base(order: int, parity: str | ComponentLabel) -> Representative:
    """Minimal 1,1 surface in H^odd(order) or H^even(order), order = 2g-2."""
    par = ComponentLabel.parse(parity) if isinstance(parity, str) else parity
    if order < 4 or order % 2:
        raise CatalogError("a single even zero of order at least 4 is required")
    g = order // 2 + 1
    if par is O:
        bottom = _oddmin_bottom(g)
    elif par is E:
        if order < 6:
            raise CatalogError("component does not exist: H(4) has no even component")
        bottom = _evenmin_bottom(g)
    else:
        raise CatalogError(f"parity must be odd or even, got {par.value}")
    rep = _rep(bottom)
    validate(rep, StratumSpec([order]), par, f"{par.value}({order})")
    return rep


# ------------------------------------------------------------ sporadic tables

EXCEPTIONAL: dict[str, tuple[list[int], tuple[int, ...], ComponentLabel]] = {
    "even(4,4)": ([2, 10, 7, 5, 8, 1, 9, 6, 4, 3, 0], (4, 4), E),
    "odd(2,2)": ([2, 4, 6, 3, 1, 5, 0], (2, 2), O),
    "odd(2,2,2)": ([2, 8, 6, 9, 4, 1, 3, 5, 7, 0], (2, 2, 2), O),
    "even(2,2,2)": ([2, 9, 8, 7, 6, 3, 5, 1, 4, 0], (2, 2, 2), E),
    "even(2,2,2,2)": ([2, 5, 4, 1, 12, 3, 10, 7, 11, 9, 6, 8, 0], (2, 2, 2, 2), E),
    "odd(4,2)": ([2, 5, 8, 3, 6, 4, 1, 7, 0], (4, 2), O),
    "even(4,2)": ([2, 4, 1, 8, 7, 5, 3, 6, 0], (4, 2), E),
    "even(4,2,2)": ([2, 8, 5, 3, 1, 10, 9, 6, 4, 11, 7, 0], (4, 2, 2), E),
    "even(6,2)": ([2, 10, 9, 8, 6, 3, 5, 1, 4, 7, 0], (6, 2), E),
    "nonhyp(3,3)": ([2, 8, 6, 5, 7, 4, 1, 3, 0], (3, 3), NH),
    "(3,1)": ([2, 5, 1, 6, 4, 3, 0], (3, 1), C),
    "(5,1)": ([2, 4, 7, 3, 1, 8, 6, 5, 0], (5, 1), C),
    "(1,1,1,1)": ([2, 6, 5, 3, 1, 8, 4, 7, 0], (1, 1, 1, 1), C),
    "(1,1,1,1,1,1)": ([2, 8, 1, 5, 11, 7, 3, 10, 6, 12, 9, 4, 0], (1, 1, 1, 1, 1, 1), C),
    "(3,1,1,1)": ([2, 10, 6, 5, 1, 8, 4, 7, 3, 9, 0], (3, 1, 1, 1), C),
    "(2,1,1,1,1)": ([2, 7, 11, 6, 3, 9, 5, 1, 8, 4, 10, 0], (2, 1, 1, 1, 1), C),
    "(3,1,2)": ([2, 6, 8, 3, 7, 4, 1, 9, 5, 0], (3, 2, 1), C),
    "(2,2,1,1)": ([2, 4, 9, 7, 3, 8, 5, 1, 10, 6, 0], (2, 2, 1, 1), C),
    "(2,1,1)": ([2, 6, 4, 1, 7, 5, 3, 0], (2, 1, 1), C),
    "(4,1,1)": ([2, 7, 4, 1, 9, 5, 8, 6, 3, 0], (4, 1, 1), C),
    "(3,1)-bottom1": ([2, 6, 5, 1, 4, 3, 0], (3, 1), C),
}


@lru_cache(maxsize=None)
def exceptional_entry(key: str) -> CatalogEntry:
    if key not in EXCEPTIONAL:
        raise CatalogError(f"unknown exceptional key {key!r}")
    bottom, zeros, comp = EXCEPTIONAL[key]
    return validate(_rep(bottom), StratumSpec(zeros), comp, key)


def exceptional(key: str) -> Representative:
    return exceptional_entry(key).rep


# ------------------------------------------------------------------ families

def _two_odd_bottom(k: int) -> list[int]:
    if k == 3:
        return [2, 5, 4, 6, 3, 8, 10, 7, 1, 9, 0]
    b = [2, 5, 4, 7, 3]
    for c in range(5, 2 * k - 3):
        b.append(c + 4 if c % 2 else c)
    b.append(2 * k)
    return b + [2 * k - 2, 2 * k + 2, 2 * k + 4, 2 * k + 1, 1, 2 * k + 3, 0]


def _two_even_bottom(k: int) -> list[int]:
    if k == 4:
        return [2, 7, 6, 5, 3, 8, 4, 10, 12, 9, 1, 11, 0]
    b = [2, 7, 6, 5, 3, 9, 4]
    for c in range(7, 2 * k - 3):
        b.append(c + 4 if c % 2 else c)
    b.append(2 * k)
    return b + [2 * k - 2, 2 * k + 2, 2 * k + 4, 2 * k + 1, 1, 2 * k + 3, 0]


def _odd_one_bottom(k: int) -> list[int]:
    """H(2k+1, 1): a sporadic pattern at k = 3, the general one from k = 4."""
    if k == 3:
        return [2, 5, 4, 9, 3, 8, 6, 1, 10, 7, 0]
    b = [2, 5, 4, 7, 3]
    for c in range(5, 2 * k - 3):
        b.append(c + 4 if c % 2 else c)
    b.append(2 * k + 3)
    return b + [2 * k - 2, 2 * k + 2, 2 * k, 1, 2 * k + 4, 2 * k + 1, 0]


def _three_mod4_bottom(k: int) -> list[int]:
    """H(4k+3,1,1,1)."""
    b = [2, 4 * k + 10, 4 * k + 6, 4 * k + 5, 1]
    for c in range(5, 4 * k + 4):
        b.append(c - 1 if c % 2 else c - 3)
    return b + [4 * k + 1, 4 * k + 8, 4 * k + 4, 4 * k + 7, 4 * k + 3, 4 * k + 9, 0]


def _one_mod4_bottom(k: int) -> list[int]:
    """H(4k+1,1,1,1)."""
    b = [2, 4 * k + 8, 4 * k + 5, 4 * k + 4, 1]
    for c in range(5, 4 * k + 1):
        b.append(c - 1 if c % 2 else c - 3)
    return b + [4 * k + 3, 4 * k - 1, 4 * k + 2, 4 * k + 6, 4 * k + 1, 4 * k, 4 * k + 7, 0]


def _two_mod4_ones_bottom(k: int) -> list[int]:
    """H(4k+2,1,1)."""
    b = [2, 6, 4, 1]
    for c in range(4, 4 * k + 3):
        b.append(c + 2 if c % 2 else c + 4)
    return b + [4 * k + 5, 4 * k + 7, 5, 3, 0]


def _zero_mod4_ones_bottom(k: int) -> list[int]:
    """H(4k,1,1)."""
    b = [2, 7, 4, 1]
    for c in range(4, 4 * k):
        b.append(c + 3 if c % 2 else c + 5)
    return b + [4 * k + 5, 5, 4 * k + 4, 6, 3, 0]


def _bottom_pair_bottom(k: int) -> list[int]:
    """H(2k+3, 2k+1) leaving the order-(2k+1) zero at the bottom."""
    if k == 1:
        return [2, 6, 4, 10, 8, 3, 1, 9, 7, 5, 0]
    b = [2, 6, 4, 10, 8, 3, 12, 9, 7, 5]
    for c in range(10, 4 * k + 4):
        b.append(c if c % 2 else c + 4)
    return b + [1, 4 * k + 5, 0]


@dataclass(frozen=True)
class Family:
    name: str
    min_k: int
    builder: object
    stratum: object  # k -> zero orders
    component: ComponentLabel
    description: str


FAMILIES: dict[str, Family] = {
    f.name: f
    for f in [
        Family("2odd", 3, _two_odd_bottom, lambda k: (2 * k, 2), O, "H^odd(2k,2)"),
        Family("2even", 4, _two_even_bottom, lambda k: (2 * k, 2), E, "H^even(2k,2)"),
        Family("odd1", 3, _odd_one_bottom, lambda k: (2 * k + 1, 1), C, "H(2k+1,1)"),
        Family("4k+3,1,1,1", 1, _three_mod4_bottom, lambda k: (4 * k + 3, 1, 1, 1), C, "H(4k+3,1,1,1)"),
        Family("4k+1,1,1,1", 2, _one_mod4_bottom, lambda k: (4 * k + 1, 1, 1, 1), C, "H(4k+1,1,1,1)"),
        Family("4k+2,1,1", 1, _two_mod4_ones_bottom, lambda k: (4 * k + 2, 1, 1), C, "H(4k+2,1,1)"),
        Family("4k,1,1", 2, _zero_mod4_ones_bottom, lambda k: (4 * k, 1, 1), C, "H(4k,1,1)"),
        Family("bottom-pair", 1, _bottom_pair_bottom, lambda k: (2 * k + 3, 2 * k + 1), C,
               "H(2k+3,2k+1), order 2k+1 leaving at the bottom"),
    ]
}


@lru_cache(maxsize=None)
def family_entry(family: str, k: int) -> CatalogEntry:
    if family not in FAMILIES:
        raise CatalogError(f"unknown family {family!r}")
    fam = FAMILIES[family]
    if k < fam.min_k:
        raise CatalogError(f"family {family} is defined for k >= {fam.min_k}, got {k}")
    rep = _rep(fam.builder(k))
    return validate(rep, StratumSpec(fam.stratum(k)), fam.component, f"{family} k={k}")


def family_rep(family: str, k: int) -> Representative:
    return family_entry(family, k).rep


def list_keys() -> list[str]:
    keys = ["hyp-single:g", "hyp-double:g", "odd:order", "even:order"]
    keys += [f"{name}:k (k>={f.min_k}, {f.description})" for name, f in FAMILIES.items()]
    keys += [f"exc:{k}" for k in EXCEPTIONAL]
    return keys


def emit(key: str) -> Representative:
    """Look up ``family:param`` or ``exc:name`` keys as printed by :func:`list_keys`."""
    kind, _, arg = key.partition(":")
    if kind == "exc":
        return exceptional(arg)
    if not arg:
        raise CatalogError(f"key {key!r} needs a parameter")
    p = int(arg)
    if kind == "hyp-single":
        return hyperelliptic_rep(p, "single")
    if kind == "hyp-double":
        return hyperelliptic_rep(p, "double")
    if kind in ("odd", "even"):
        return even_zero_base(p, kind)
    return family_rep(kind, p)


def printed_tables() -> list[tuple[list[int], tuple[int, ...], ComponentLabel]]:
    """Every literally printed representative, with its claimed stratum and component."""
    out = [
        ([4, 3, 1, 2, 0], (2,), H),
        ([2, 5, 4, 1, 3, 0], (4,), O),
        ([2, 7, 6, 5, 3, 1, 4, 0], (6,), E),
        ([2, 5, 4, 6, 3, 8, 10, 7, 1, 9, 0], (6, 2), O),
        ([2, 7, 6, 5, 3, 8, 4, 10, 12, 9, 1, 11, 0], (8, 2), E),
        ([2, 5, 4, 6, 3, 7, 10, 9, 1, 8, 0], (4, 4), O),
        ([2, 5, 4, 9, 3, 8, 6, 1, 10, 7, 0], (7, 1), C),
        ([2, 6, 4, 10, 8, 3, 1, 9, 7, 5, 0], (5, 3), C),
    ]
    out += [(b, z, c) for b, z, c in EXCEPTIONAL.values()]
    return out
