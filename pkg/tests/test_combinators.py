import pytest

from sqtiled.catalog import emit, even_zero_base, family_rep
from sqtiled.classify import classify, is_one_one
from sqtiled.combinators import (
    H11_WIRING,
    TORUS,
    CombinatorError,
    add_marked_point,
    add_marked_points,
    bottom_leaving_zero,
    concat,
    concat_algebraic,
    h11_gadget,
    left_swap_concat,
    order2_gadget,
    predict_parity,
    right_swap_concat,
    search_h11_wiring,
)
from sqtiled.origami import Representative, from_representative, stratum_of
from sqtiled.spin import spin_parity
from sqtiled.strata import ComponentLabel as C
from sqtiled.strata import StratumSpec

ODD4 = Representative.from_bottom([2, 5, 4, 1, 3, 0])


def cls(rep):
    return classify(from_representative(rep))


def same_surface(a, b):
    return from_representative(a).canonical() == from_representative(b).canonical()


def test_concat_of_two_odd4():
    out = concat(ODD4, ODD4)
    assert list(out.bottom) == [2, 5, 4, 6, 3, 7, 10, 9, 1, 8, 0]
    assert cls(out) == (StratumSpec([4, 4]), C.ODD)


def test_concat_matches_algebraic_form():
    a, b = ODD4, even_zero_base(6, "even")
    alg = concat_algebraic(from_representative(a), from_representative(b))
    assert alg.canonical() == from_representative(concat(a, b)).canonical()


def test_concat_needs_normal_form():
    with pytest.raises(CombinatorError):
        concat(Representative.from_bottom([4, 3, 1, 2, 0]), ODD4)


def test_parity_prediction():
    assert predict_parity(1, 1) == 1
    assert predict_parity(0, 0) == 1
    assert predict_parity(1, 0) == 0
    assert predict_parity(1, 1, 1) == 1
    assert predict_parity(0, 1, 1) == 0


@pytest.mark.parametrize("left,right", [("odd:4", "odd:6"), ("even:6", "odd:4"), ("even:8", "even:6")])
def test_concat_parity(left, right):
    a, b = emit(left), emit(right)
    out = from_representative(concat(a, b))
    eps = spin_parity(from_representative(a))
    eta = spin_parity(from_representative(b))
    assert spin_parity(out) == predict_parity(eps, eta)


def test_swaps():
    r = right_swap_concat(ODD4, ODD4)
    assert list(r.bottom) == [2, 5, 4, 7, 3, 10, 6, 9, 1, 8, 0]
    assert cls(r)[0] == StratumSpec([5, 3])
    assert cls(right_swap_concat(emit("odd:6"), ODD4)) == (StratumSpec([5, 5]), C.NONHYP)
    assert cls(left_swap_concat(emit("odd:6"), ODD4))[0] == StratumSpec([7, 3])


def test_order2_gadget_anchors():
    assert same_surface(order2_gadget(ODD4), family_rep("2odd", 3))
    for k in range(4, 9):
        assert same_surface(order2_gadget(even_zero_base(2 * k - 2, "odd")), family_rep("2odd", k))
    assert same_surface(order2_gadget(even_zero_base(6, "even")), family_rep("2even", 4))


def test_bottom_leaving_zero():
    assert bottom_leaving_zero(family_rep("bottom-pair", 1)) == 3
    assert bottom_leaving_zero(family_rep("odd1", 4)) == 9
    assert bottom_leaving_zero(ODD4) == 4


def test_marked_points():
    out = add_marked_point(ODD4, 3)
    assert stratum_of(from_representative(out)) == StratumSpec([4], 1)
    more = add_marked_points(ODD4, 3)
    o = from_representative(more)
    assert is_one_one(o) and stratum_of(o) == StratumSpec([4], 3)
    t = concat(ODD4, TORUS)
    assert stratum_of(from_representative(t)) == StratumSpec([4], 1)
    with pytest.raises(CombinatorError):
        add_marked_point(ODD4, 0)


def test_h11_wiring_is_reproducible():
    samples = [family_rep("odd1", k) for k in (3, 4)] + [emit("exc:(3,1)")]
    assert search_h11_wiring(samples) == H11_WIRING


@pytest.mark.parametrize("k", range(3, 9))
def test_h11_gadget(k):
    out = h11_gadget(family_rep("odd1", k))
    o = from_representative(out)
    assert stratum_of(o) == StratumSpec([2 * k + 3, 1, 1, 1])
    assert is_one_one(o)
    assert o.n == family_rep("odd1", k).n + 6


def test_h11_gadget_input_check():
    with pytest.raises(CombinatorError):
        h11_gadget(ODD4)
