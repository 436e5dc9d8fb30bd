import json

import pytest

from sqtiled.classify import classify, is_one_one
from sqtiled.origami import from_representative, to_representative
from sqtiled.planner import PlannerError, construct, find_11_search, plan_blocks, replay
from sqtiled.strata import ComponentLabel as C
from sqtiled.strata import StratumSpec, all_strata, components_of, min_squares_11


def test_odd4_is_the_printed_surface():
    o, recipe = construct(StratumSpec([4]), C.ODD)
    assert list(to_representative(o).bottom) == [2, 5, 4, 1, 3, 0]
    assert "odd:4" in recipe.to_text()


@pytest.mark.parametrize(
    "orders,comp",
    [((6, 2), C.EVEN), ((3, 3), C.NONHYP), ((5, 1, 1, 1), C.CONNECTED), ((2, 2, 2, 2), C.ODD), ((8,), C.HYP)],
)
def test_construct_and_replay(orders, comp):
    s = StratumSpec(orders)
    o, recipe = construct(s, comp)
    assert classify(o)[1] is comp
    assert o.n == min_squares_11(s, comp)
    assert from_representative(replay(recipe)) == o
    json.loads(recipe.to_json())


def test_marked_points_requests():
    o, _ = construct(StratumSpec([4], 2), C.ODD)
    assert classify(o)[0] == StratumSpec([4], 2) and o.n == 7
    o, _ = construct(StratumSpec([2], 3), C.HYP)
    assert classify(o)[0] == StratumSpec([2], 3) and o.n == 6
    with pytest.raises(PlannerError, match="infeasible"):
        construct(StratumSpec([1, 1], 1), C.HYP)


def test_genus_one():
    o, _ = construct(StratumSpec([], 3), C.CONNECTED)
    assert o.n == 3 and is_one_one(o)


def test_inadmissible():
    with pytest.raises(ValueError, match="component does not exist"):
        construct(StratumSpec([4]), C.EVEN)


def test_block_partition_is_deterministic():
    s = StratumSpec([6, 4, 2, 2])
    assert plan_blocks(s, C.EVEN) == plan_blocks(s, C.EVEN)


@pytest.mark.parametrize("total", [2, 4, 6, 8, 10])
def test_small_sweep(total):
    for s in all_strata(total):
        if sum(s.zero_orders) != total:
            continue
        for c in components_of(s):
            o, _ = construct(s, c)
            got_s, got_c = classify(o)
            assert got_s.zero_orders == s.zero_orders and got_c is c
            assert is_one_one(o) and o.n == min_squares_11(s, c)


def test_search_agrees_with_bounds():
    assert find_11_search(StratumSpec([2]), C.HYP, 3) is None
    assert find_11_search(StratumSpec([2]), C.HYP, 4) is not None
    assert find_11_search(StratumSpec([1, 1]), C.HYP, 5) is None
    assert find_11_search(StratumSpec([1, 1]), C.HYP, 6) is not None
    assert find_11_search(StratumSpec([4]), C.ODD, 5) is not None
