import pytest

from sqtiled.catalog import EXCEPTIONAL, emit, even_zero_base, hyperelliptic_rep
from sqtiled.census import (
    BudgetExceeded,
    CensusQuery,
    buckets,
    count,
    enumerate_classes,
    naive_classes,
    perms_with_cycle_length,
    verify_bound,
)
from sqtiled.classify import classify, is_one_one, stratum_from_ribbon
from sqtiled.origami import from_representative, stratum_of
from sqtiled.perm import canonical_key
from sqtiled.strata import ComponentLabel as C
from sqtiled.strata import StratumSpec

# classes of transitive pairs in S_n up to simultaneous conjugation
KNOWN_TOTALS = {1: 1, 2: 3, 3: 7, 4: 26, 5: 97, 6: 624}


@pytest.mark.parametrize("n", sorted(KNOWN_TOTALS))
def test_totals(n):
    assert count(CensusQuery(n)) == KNOWN_TOTALS[n]


@pytest.mark.parametrize("n", range(1, 6))
def test_matches_naive_enumeration(n):
    got = {canonical_key(o.h, o.v) for o in enumerate_classes(CensusQuery(n))}
    assert got == naive_classes(n)


def test_torus_only_at_one_square():
    (o,) = enumerate_classes(CensusQuery(1))
    assert o.n == 1


def test_uniform_cycle_generator():
    assert len(list(perms_with_cycle_length(6, 3))) == 40
    assert len(list(perms_with_cycle_length(5, 5))) == 24
    assert all(p[0] == 2 for p in perms_with_cycle_length(5, 5, first=2))


def test_h2_and_h11_bounds():
    h2 = StratumSpec([2])
    h11 = StratumSpec([1, 1])
    assert count(CensusQuery(3, h2, one_one=True)) == 0
    found = enumerate_classes(CensusQuery(4, h2, one_one=True))
    assert len(found) >= 1
    printed = from_representative(hyperelliptic_rep(2)).canonical()
    assert printed in [o.canonical() for o in found]
    for n in range(1, 6):
        assert count(CensusQuery(n, h11, one_one=True)) == 0
    assert count(CensusQuery(6, h11, one_one=True)) >= 1


def test_verify_bound_small():
    rep = verify_bound(StratumSpec([2]))
    assert rep.holds and rep.bound == 4
    assert rep.counts_below == {1: 0, 2: 0, 3: 0}


def test_catalog_entries_in_their_buckets():
    reps = [emit("odd:4"), even_zero_base(6, "even"), emit("exc:odd(2,2)"), emit("exc:(3,1)"), emit("exc:(2,1,1)")]
    for rep in reps:
        o = from_representative(rep)
        s, c = classify(o)
        q = CensusQuery(o.n, s, c, one_one=True)
        assert o.canonical() in [x.canonical() for x in enumerate_classes(q)]


def test_bucket_classification_two_ways():
    found = enumerate_classes(CensusQuery(6, one_one=True))
    assert found
    for o in found:
        assert is_one_one(o)
        assert stratum_from_ribbon(o) == stratum_of(o)
    table = buckets(found)
    assert sum(table.values()) == len(found)


def test_job_count_does_not_change_output():
    q = CensusQuery(5)
    assert enumerate_classes(q, jobs=1) == enumerate_classes(q, jobs=2)


def test_budget():
    with pytest.raises(BudgetExceeded):
        CensusQuery(9)
    with pytest.raises(ValueError):
        CensusQuery(0)
