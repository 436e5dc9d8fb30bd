import pytest

from sqtiled.strata import (
    ComponentLabel as C,
    StratumSpec,
    all_strata,
    check_admissible,
    components_of,
    forced_marked_points,
    min_squares,
    min_squares_11,
)


def test_parse_forms():
    assert StratumSpec.parse("6,2") == StratumSpec([2, 6])
    assert StratumSpec.parse("H(4,0,0)") == StratumSpec([4], 2)
    assert str(StratumSpec([4], 2)) == "H(4,0,0)"
    assert StratumSpec.parse("4,0,0").cli_string() == "4,0,0"
    with pytest.raises(ValueError):
        StratumSpec.parse("3")


@pytest.mark.parametrize(
    "orders,comps",
    [
        ((2,), [C.HYP]),
        ((1, 1), [C.HYP]),
        ((4,), [C.HYP, C.ODD]),
        ((2, 2), [C.HYP, C.ODD]),
        ((3, 1), [C.CONNECTED]),
        ((6,), [C.HYP, C.EVEN, C.ODD]),
        ((3, 3), [C.HYP, C.NONHYP]),
        ((4, 4), [C.HYP, C.EVEN, C.ODD]),
        ((4, 2), [C.EVEN, C.ODD]),
        ((5, 1), [C.CONNECTED]),
    ],
)
def test_components(orders, comps):
    assert components_of(StratumSpec(orders)) == comps


def test_inadmissible_component_message():
    with pytest.raises(ValueError, match="component does not exist"):
        check_admissible(StratumSpec([4]), C.EVEN)


def test_square_bounds():
    assert min_squares(StratumSpec([4])) == 5
    assert min_squares_11(StratumSpec([2]), C.HYP) == 4
    assert min_squares_11(StratumSpec([1, 1]), C.HYP) == 6
    assert min_squares_11(StratumSpec([4]), C.HYP) == 8
    assert min_squares_11(StratumSpec([2, 2]), C.HYP) == 10
    assert min_squares_11(StratumSpec([4]), C.ODD) == 5
    assert forced_marked_points(StratumSpec([2]), C.HYP) == 1
    assert forced_marked_points(StratumSpec([1, 1]), C.HYP) == 2
    # more marked points than forced: Euler bound again
    assert min_squares_11(StratumSpec([2], 3), C.HYP) == 6


def test_strata_listing():
    # every partition of 2, 4 and 6
    assert len(all_strata(6)) == 2 + 5 + 11
