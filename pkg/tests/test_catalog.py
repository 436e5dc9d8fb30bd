import pytest

from sqtiled.catalog import (
    EXCEPTIONAL,
    FAMILIES,
    CatalogError,
    emit,
    even_zero_base,
    exceptional,
    family_entry,
    hyperelliptic_rep,
    list_keys,
    printed_tables,
    validate,
)
from sqtiled.classify import classify, is_one_one
from sqtiled.origami import Representative, from_representative
from sqtiled.strata import ComponentLabel as C
from sqtiled.strata import StratumSpec, min_squares_11


@pytest.mark.parametrize("bottom,zeros,comp", printed_tables(), ids=lambda x: str(x))
def test_printed_tables_classify_as_claimed(bottom, zeros, comp):
    o = from_representative(Representative.from_bottom(bottom))
    s, c = classify(o)
    assert s.zero_orders == tuple(sorted(zeros, reverse=True))
    assert c is comp
    assert is_one_one(o)
    assert o.n == min_squares_11(s, c)


@pytest.mark.parametrize("g", range(2, 9))
def test_hyperelliptic_families(g):
    single = from_representative(hyperelliptic_rep(g, "single"))
    double = from_representative(hyperelliptic_rep(g, "double"))
    assert classify(single)[0].zero_orders == (2 * g - 2,)
    assert classify(double)[0].zero_orders == (g - 1, g - 1)
    assert single.n == 4 * g - 4 and double.n == 4 * g - 2
    assert classify(single)[1] is C.HYP and classify(double)[1] is C.HYP


@pytest.mark.parametrize("order", range(4, 25, 2))
def test_single_zero_spin_bases(order):
    for par, lab in (("odd", C.ODD), ("even", C.EVEN)):
        if par == "even" and order < 6:
            continue
        o = from_representative(even_zero_base(order, par))
        assert classify(o) == (StratumSpec([order]), lab)
        assert o.n == order + 1


def test_even_base_at_genus_five():
    # the general even pattern already works at genus five
    o = from_representative(even_zero_base(8, "even"))
    assert classify(o)[1] is C.EVEN and o.n == 9


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_families_validate(name):
    fam = FAMILIES[name]
    for k in range(fam.min_k, fam.min_k + 6):
        entry = family_entry(name, k)
        assert entry.rep.is_normal_form()


def test_family_below_range_rejected():
    with pytest.raises(CatalogError):
        family_entry("2odd", 1)


def test_validate_rejects_wrong_claim():
    rep = Representative.from_bottom([2, 5, 4, 1, 3, 0])
    with pytest.raises(ValueError, match="component does not exist"):
        validate(rep, StratumSpec([4]), C.EVEN, "bogus")
    with pytest.raises(CatalogError):
        validate(rep, StratumSpec([4]), C.HYP, "bogus")


def test_emit_keys():
    assert emit("odd:4") == Representative.from_bottom([2, 5, 4, 1, 3, 0])
    assert emit("exc:nonhyp(3,3)") == exceptional("nonhyp(3,3)")
    assert emit("hyp-single:2") == hyperelliptic_rep(2)
    assert len(list_keys()) == 4 + len(FAMILIES) + len(EXCEPTIONAL)
    with pytest.raises(CatalogError):
        emit("odd")
