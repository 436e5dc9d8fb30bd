import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sqtiled.classify import (
    classify,
    cylinder_decomposition,
    hyperelliptic_involution,
    is_hyperelliptic,
    is_one_one,
    report,
    ribbon_boundaries,
    stratum_from_ribbon,
)
from sqtiled.origami import (
    Origami,
    Representative,
    from_m,
    from_representative,
    normal_form_starts,
    stratum_of,
    to_representative,
)
from sqtiled.perm import Permutation, conjugate, is_transitive
from sqtiled.strata import ComponentLabel as C
from sqtiled.strata import StratumSpec

ODD4 = Representative.from_bottom([2, 5, 4, 1, 3, 0])


def test_representative_encoding():
    o = from_representative(ODD4)
    assert o.n == 5
    assert o.h.images == (1, 2, 3, 4, 0)
    assert stratum_of(o) == StratumSpec([4])
    assert to_representative(o) == ODD4
    assert ODD4.is_normal_form()
    assert ODD4.to_rows() == "0 1 2 3 4 5\n2 5 4 1 3 0"
    assert Representative.parse(ODD4.to_rows()) == ODD4


def test_from_m_matches_rows():
    assert from_m({1: 2, 2: 5, 3: 4, 4: 1, 5: 3}) == ODD4


def test_serialisations_round_trip():
    o = from_representative(ODD4)
    assert Origami.from_record(o.to_record()) == o
    assert Origami.from_cycles_string(o.to_cycles_string()) == o


def test_intransitive_rejected():
    with pytest.raises(ValueError):
        Origami(Permutation([1, 0, 2]), Permutation([1, 0, 2]))


def test_torus():
    t = Origami(Permutation([0]), Permutation([0]))
    assert stratum_of(t) == StratumSpec([], 1)
    assert classify(t) == (StratumSpec([], 1), C.CONNECTED)
    assert is_one_one(t)


def test_cylinders_of_an_l_shape():
    # rows {0,1} and {2}; square 2 sits on square 0
    o = Origami.from_images([1, 0, 2], [2, 1, 0])
    assert len(cylinder_decomposition(o, "horizontal")) == 2
    assert len(cylinder_decomposition(o, "vertical")) == 2
    assert stratum_of(o) == StratumSpec([2])


def test_ribbon_boundary_of_odd4():
    assert ribbon_boundaries(from_representative(ODD4)) == [20]


def test_report_line():
    assert report(from_representative(ODD4)).line() == (
        "stratum=H(4) component=odd cylinders=1,1 squares=5 minimal=yes"
    )


def test_hyperelliptic_detection():
    h2 = from_representative(Representative.from_bottom([4, 3, 1, 2, 0]))
    assert is_hyperelliptic(h2)
    sigma = hyperelliptic_involution(h2)
    assert sigma is not None
    assert not is_hyperelliptic(from_representative(ODD4))
    assert classify(h2) == (StratumSpec([2], 1), C.HYP)


def test_nonhyp_33_needs_zero_swap():
    o = from_representative(Representative.from_bottom([2, 8, 6, 5, 7, 4, 1, 3, 0]))
    assert classify(o) == (StratumSpec([3, 3]), C.NONHYP)


def test_normal_form_starts():
    o = from_representative(ODD4)
    assert 0 in normal_form_starts(o)


@st.composite
def one_cylinder(draw):
    n = draw(st.integers(2, 11))
    bottom = draw(st.permutations(list(range(1, n + 1))))
    return Representative.from_bottom(list(bottom) + [0])


@given(one_cylinder(), st.data())
@settings(max_examples=150, deadline=None)
def test_stratum_invariant_under_relabelling(rep, data):
    o = from_representative(rep)
    s = Permutation(data.draw(st.permutations(list(range(o.n)))))
    o2 = Origami(conjugate(o.h, s), conjugate(o.v, s))
    assert stratum_of(o2) == stratum_of(o)
    assert o2.canonical() == o.canonical()


@given(one_cylinder())
@settings(max_examples=150, deadline=None)
def test_ribbon_agrees_with_commutator(rep):
    o = from_representative(rep)
    if is_one_one(o):
        assert stratum_from_ribbon(o) == stratum_of(o)
