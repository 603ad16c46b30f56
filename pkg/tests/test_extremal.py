"""Tests for the tree family, inequality checks, and the ratio search."""

import json
import random
from fractions import Fraction

import pytest

from noninv.endo import (EndoMap, compose, degree, is_bijection, is_constant,
                         iterate)
from noninv.extremal import (RatioWitness, all_tables, build_tree_map,
                             canonical_table, check_theorem3_bound,
                             check_theorem7, exhaustive_ratio_search,
                             padded_family_map, prop1_exact_degrees,
                             random_endomap, ratio_bound_report,
                             stratified_degree, tree_branching, tree_size,
                             tree_spec)


def test_tree_branching_and_size():
    assert tree_branching(5, 2) == (5, 2, 2)
    assert tree_branching(10, 2) == (10, 3, 3)
    assert tree_branching(16, 3) == (16, 4, 2, 2)
    # 1 + 5 + 10, then a length-2 path below each of the 10 leaves
    assert tree_size(5, 2) == 36
    assert tree_size(10, 2) == 131
    assert tree_spec(5, 2).branching == (5, 2, 1, 1)
    with pytest.raises(ValueError):
        tree_branching(1, 2)
    with pytest.raises(ValueError):
        tree_branching(5, 1)


def test_tree_map_structure():
    f = build_tree_map(5, 2)
    assert f.n == 36
    assert f.table[0] == 0  # root is the unique fixed point
    assert sum(1 for i, v in enumerate(f.table) if i == v) == 1
    # every non-root vertex reaches the root in at most depth steps
    depth = 2 + 2
    assert iterate(f, depth).table == (0,) * 36


def test_frozen_degrees_b5_k2():
    deg_f, deg_fk = prop1_exact_degrees(5, 2)
    assert deg_f == Fraction(19, 9)
    assert deg_fk == Fraction(143, 18)


def test_frozen_degrees_b10_k2():
    deg_f, deg_fk = prop1_exact_degrees(10, 2)
    assert deg_f == Fraction(301, 131)
    assert deg_fk == Fraction(1831, 131)


@pytest.mark.parametrize("b,k", [(2, 2), (3, 2), (7, 2), (4, 3), (9, 3),
                                 (16, 3), (17, 4), (30, 4)])
def test_engine_matches_stratified(b, k):
    # prop1_exact_degrees raises internally on any mismatch
    deg_f, deg_fk = prop1_exact_degrees(b, k)
    assert 1 < deg_f <= deg_fk


def test_stratified_matches_engine_for_other_iterates():
    spec = tree_spec(7, 2)
    f = build_tree_map(7, 2)
    for r in range(1, 7):
        assert stratified_degree(spec, r) == degree(iterate(f, r))
    # beyond the depth the iterate is constant
    assert stratified_degree(spec, 40) == f.n
    with pytest.raises(ValueError):
        stratified_degree(spec, 0)


def test_k2_trends():
    rows = []
    for b in (5, 10, 100, 1000):
        spec = tree_spec(b, 2)
        d1 = stratified_degree(spec, 1)
        d2 = stratified_degree(spec, 2)
        rows.append((float(d1), float(d2) / spec.size ** 0.5))
    base = [r[0] for r in rows]
    ratio = [r[1] for r in rows]
    assert base == sorted(base) and base[-1] < 3
    assert ratio == sorted(ratio, reverse=True) and ratio[-1] > 1


def test_padded_family():
    f = padded_family_map(40, 2)
    assert f.n == 40
    assert f.table[:36] == build_tree_map(5, 2).table
    assert f.table[36:] == (36, 37, 38, 39)
    # b = 7 fills all 50 points, no padding left over
    assert padded_family_map(50, 2).table == build_tree_map(7, 2).table
    with pytest.raises(ValueError):
        padded_family_map(5, 2)


def test_composition_inequality_exhaustive_n3():
    equalities = 0
    for tf in all_tables(3):
        f = EndoMap.from_table(tf)
        for tg in all_tables(3):
            g = EndoMap.from_table(tg)
            holds, equal = check_theorem7(f, g)
            assert holds
            if equal:
                equalities += 1
                assert is_constant(f) and is_bijection(g)
    # 3 constants times 6 bijections
    assert equalities == 18


def test_composition_inequality_edge_pairs():
    const = EndoMap.from_table((2, 2, 2, 2))
    cyc = EndoMap.from_table((1, 2, 3, 0))
    assert check_theorem7(const, cyc) == (True, True)
    assert check_theorem7(cyc, const) == (True, False)
    ident = EndoMap.from_table((0, 1, 2, 3))
    assert check_theorem7(ident, ident) == (True, False)


def test_iterate_inequality_exhaustive_small():
    for n in (1, 2, 3, 4):
        for t in all_tables(n):
            f = EndoMap.from_table(t)
            d1 = degree(f)
            for k in (1, 2, 3, 4):
                assert check_theorem3_bound(f, k)
                # iterating can only lose invertibility
                assert degree(iterate(f, k)) >= d1
    with pytest.raises(ValueError):
        check_theorem3_bound(EndoMap.from_table((0,)), 0)


def test_iterate_inequality_on_collapse_example():
    # deg(f)=5/3, f^2 constant: 3^2 = 9 <= (5/3)^3 * 3 = 125/9 barely fails
    # to be tight but the squared ratio 27/25 exceeds 1
    f = EndoMap.from_table((1, 2, 2))
    assert degree(f) == Fraction(5, 3)
    assert degree(iterate(f, 2)) == 3
    assert check_theorem3_bound(f, 2)
    assert Fraction(3) / Fraction(5, 3) ** 2 == Fraction(27, 25)


def test_ratio_search_finds_collapse_maximum():
    w = exhaustive_ratio_search(3, 2, 2)
    assert w.ratio_pow == Fraction(27, 25)
    assert w.gamma == 2
    assert w.recompute()
    # the reported map really achieves the ratio
    f = w.map
    assert degree(iterate(f, 2)) / degree(f) ** 2 == Fraction(27, 25)


def test_ratio_search_gamma_forms_agree():
    a = exhaustive_ratio_search(3, 2, (3, 2))
    b = exhaustive_ratio_search(3, 2, Fraction(3, 2))
    assert a.gamma == b.gamma == Fraction(3, 2)
    assert a.ratio_pow == b.ratio_pow
    assert a.map.table == b.map.table
    with pytest.raises(ValueError):
        exhaustive_ratio_search(3, 2, Fraction(1, 3))


def test_ratio_search_trivial_domain():
    w = exhaustive_ratio_search(1, 3, 2)
    assert w.ratio_pow == 1
    assert w.map.table == (0,)


def test_ratio_search_four_point_oracle():
    # direct maximum over all 4^4 tables
    best = Fraction(0)
    for t in all_tables(4):
        f = EndoMap.from_table(t)
        best = max(best, degree(iterate(f, 2)) / degree(f) ** 2)
    w = exhaustive_ratio_search(4, 2, 2)
    assert w.ratio_pow == best == Fraction(10, 9)


def test_ratio_search_canonical_and_parallel_agree():
    full = exhaustive_ratio_search(4, 2, 2)
    canon = exhaustive_ratio_search(4, 2, 2, canonical=True)
    par = exhaustive_ratio_search(4, 2, 2, workers=2)
    assert canon.ratio_pow == full.ratio_pow
    assert par.ratio_pow == full.ratio_pow
    assert par.map.table == full.map.table


def test_ratio_search_budget_guard():
    with pytest.raises(ValueError, match="budget"):
        exhaustive_ratio_search(8, 2, 2)
    with pytest.raises(ValueError):
        exhaustive_ratio_search(0, 2, 2)


def test_witness_json_shape():
    w = exhaustive_ratio_search(3, 2, 2)
    obj = w.to_json()
    assert obj["map"] == {"n": 3, "table": [0, 0, 1]}
    assert obj["k"] == 2
    assert obj["gamma"] == [2, 0]
    assert obj["ratio_pow"] == [27, 25]
    assert obj["ratio_decimal"] == "1.08"
    json.dumps(obj)  # serializable as-is


def test_canonical_table_is_relabeling_invariant():
    assert canonical_table((1, 2, 2)) == (0, 0, 1)
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randrange(2, 6)
        t = tuple(rng.randrange(n) for _ in range(n))
        sigma = list(range(n))
        rng.shuffle(sigma)
        rel = [0] * n
        for i in range(n):
            rel[sigma[i]] = sigma[t[i]]
        assert canonical_table(tuple(rel)) == canonical_table(t)
        c = canonical_table(t)
        assert canonical_table(c) == c


def test_random_endomap_is_seeded():
    a = random_endomap(9, rng_seed=42)
    b = random_endomap(9, rng_seed=42)
    assert a.table == b.table
    assert a.n == 9


def test_ratio_bound_report():
    rows = ratio_bound_report([3, 5, 36, 131], 2)
    assert [r["method"] for r in rows] == ["exhaustive", "exhaustive",
                                           "tree-family", "tree-family"]
    assert all(r["bound_holds"] for r in rows)
    assert all(r["normalized"] <= 1 + 1e-12 for r in rows)
    assert all(r["in_band"] for r in rows)
    # default gamma at k=2 is 3/2, so the n=3 row matches the direct search
    w = exhaustive_ratio_search(3, 2, Fraction(3, 2))
    assert rows[0]["ratio_decimal"] == pytest.approx(w.ratio_decimal)
