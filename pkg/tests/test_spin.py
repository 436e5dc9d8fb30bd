import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sqtiled.catalog import even_zero_base
from sqtiled.origami import Origami, Representative, from_representative, stratum_of
from sqtiled.perm import Permutation, conjugate
from sqtiled.spin import (
    arf_invariant,
    cycle_basis,
    intersection_mod2,
    make_cycle,
    omega,
    quadratic_space,
    spin_parity,
    turning_number,
)


def surf(bottom):
    return from_representative(Representative.from_bottom(bottom))


def test_turning_numbers():
    assert turning_number([0]) == 0
    assert turning_number([0, 1, 2, 3]) == 1
    assert turning_number([0, 3, 2, 1]) == -1
    with pytest.raises(ValueError):
        turning_number([0, 2])


def test_core_curves_have_zero_index_and_meet_once_per_square():
    o = surf([2, 5, 4, 1, 3, 0])
    horiz = make_cycle(o, 0, "E" * 5)
    assert horiz.index == 0
    assert omega(o, horiz) == 1
    # the vertical core curve runs through all squares
    vert = make_cycle(o, 0, "N" * 5)
    assert intersection_mod2(o, horiz, vert) == 5 % 2


def test_arf_of_standard_forms():
    gram = np.array([[0, 1], [1, 0]], dtype=np.uint8)
    assert arf_invariant(np.array([1, 1], dtype=np.uint8), gram) == (1, 2)
    assert arf_invariant(np.array([0, 1], dtype=np.uint8), gram) == (0, 2)
    assert arf_invariant(np.array([0, 0], dtype=np.uint8), gram) == (0, 2)


def test_basis_size_and_rank():
    o = surf([2, 7, 6, 5, 3, 1, 4, 0])
    basis = cycle_basis(o)
    assert len(basis) == o.n + 1
    q = quadratic_space(o)
    _, rank = arf_invariant(q.omega, q.gram)
    assert rank == 2 * stratum_of(o).genus


@pytest.mark.parametrize(
    "bottom,parity",
    [
        ([2, 5, 4, 1, 3, 0], 1),
        ([2, 7, 6, 5, 3, 1, 4, 0], 0),
        ([2, 5, 4, 6, 3, 8, 10, 7, 1, 9, 0], 1),
        ([2, 7, 6, 5, 3, 8, 4, 10, 12, 9, 1, 11, 0], 0),
        ([2, 5, 4, 6, 3, 7, 10, 9, 1, 8, 0], 1),
    ],
)
def test_known_parities(bottom, parity):
    assert spin_parity(surf(bottom)) == parity


def test_odd_zero_rejected():
    with pytest.raises(ValueError):
        spin_parity(surf([2, 5, 1, 6, 4, 3, 0]))


def test_h2_is_odd():
    # genus two: the hyperelliptic component has odd parity
    assert spin_parity(surf([4, 3, 1, 2, 0])) == 1


@given(st.sampled_from([(6, "odd"), (6, "even"), (8, "odd"), (8, "even"), (10, "even")]), st.data())
@settings(max_examples=30, deadline=None)
def test_parity_invariant_under_relabelling(key, data):
    order, par = key
    o = from_representative(even_zero_base(order, par))
    s = Permutation(data.draw(st.permutations(list(range(o.n)))))
    o2 = Origami(conjugate(o.h, s), conjugate(o.v, s))
    assert spin_parity(o2) == spin_parity(o) == (1 if par == "odd" else 0)
