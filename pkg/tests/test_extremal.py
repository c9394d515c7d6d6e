import itertools
from math import comb

import pytest

from oracles import atlas, naive_has_packing, naive_triangles, nx_edges
from turanlab import (
    ForbiddenFamily,
    ForbiddenPath,
    InvalidParameterError,
    canonical_form,
    complete,
    disjoint_union,
    empty,
    exact_generalized_turan,
    extremal_construction,
    formula_value,
    stability_probe,
    turan,
    verify_alon_shikhelman,
    verify_erdos_gallai,
    verify_furedi_gunderson,
    verify_key_lemma,
    verify_main_theorem,
)
from turanlab.extremal import clear_memo, objective_value, parse_objective, revalidate


def atlas_ex(n, t, m):
    best = 0
    for h in atlas(n):
        edges = nx_edges(h)
        if not naive_has_packing(n, edges, t, m):
            best = max(best, naive_triangles(n, edges))
    return best


def test_formula_value_direct():
    for ell in range(1, 6):
        for n in range(ell + 1, 61):
            want = ell * ((n - ell) ** 2 // 4) + (n - ell) * comb(ell, 2) + comb(ell, 3)
            assert formula_value(ell, n) == want
    assert formula_value(1, 11) == 25


def test_objectives():
    assert parse_objective("cycles:5") == "cycles:5"
    with pytest.raises(InvalidParameterError):
        parse_objective("cliques")
    with pytest.raises(InvalidParameterError):
        parse_objective("cycles:2")
    k4 = complete(4)
    assert objective_value(k4, "triangles") == 4
    assert objective_value(k4, "edges") == 6
    assert objective_value(k4, "edges_plus_triangles") == 10
    assert objective_value(k4, "cycles:4") == 3
    clear_memo()


def test_two_triangles_against_atlas():
    # frozen from the atlas/brute-force oracle
    assert [atlas_ex(n, 2, 3) for n in range(4, 8)] == [4, 10, 10, 13]
    for n, want in zip(range(4, 8), [4, 10, 10, 13]):
        rec = exact_generalized_turan(n, "triangles", ForbiddenFamily(2, 3))
        assert rec.value == want
        assert revalidate(rec)


def test_k5_plus_isolated_is_extremal_at_six():
    rec = exact_generalized_turan(6, "triangles", ForbiddenFamily(2, 3))
    assert rec.value == 10
    assert canonical_form(disjoint_union(complete(5), empty(1))) in rec.extremal_graphs
    assert rec.census_size == 130
    assert len(rec.extremal_graphs) == len(rec.graphs) == 3


def test_record_serialisation():
    rec = exact_generalized_turan(5, "edges", ForbiddenPath(4))
    assert rec.value == 4
    d = rec.to_dict()
    assert d["forbidden"] == "P4" and d["objective"] == "edges"
    assert len(d["extremal_graph6"]) == len(d["extremal_graphs"])
    assert d["extremal_graphs"] == sorted(d["extremal_graphs"])


def test_main_theorem_small_window():
    rep = verify_main_theorem(1, 1, range(4, 8))
    assert rep.passed
    vals = [r["value"] for r in rep.rows]
    assert vals == [4, 10, 10, 13]
    assert [r["formula_value"] for r in rep.rows] == [2, 4, 6, 9]
    assert rep.onset is None
    assert any("n=4: exact 4 vs formula 2" in note for note in rep.notes)
    assert all(r["construction_free"] and r["lower_bound_holds"] for r in rep.rows)
    with pytest.raises(InvalidParameterError):
        verify_main_theorem(0, 1, [5])


def test_key_lemma():
    rep = verify_key_lemma(1, range(3, 8))
    assert rep.passed and rep.onset == 3
    assert all(r["equality"] and r["unique_is_turan"] for r in rep.rows)
    rep = verify_key_lemma(2, [5, 6])
    assert rep.rows[0]["value"] == 11 and rep.rows[0]["bound"] == 6
    assert rep.rows[0]["violation"]
    assert any("11 > 6" in note for note in rep.notes)


def test_k4_pendant_witness():
    g = complete(4)
    g = type(g).from_edges(5, list(g.edges()) + [(3, 4)])
    assert objective_value(g, "edges_plus_triangles") == 11
    assert ForbiddenFamily(1, 5).is_free(g)


def test_erdos_gallai():
    rep = verify_erdos_gallai(range(3, 6), range(4, 8))
    assert rep.passed
    five = [r for r in rep.rows if r["k"] == 4 and r["n"] == 5]
    assert five[0]["value"] == 4
    with pytest.raises(InvalidParameterError):
        verify_erdos_gallai([1], [4])


def test_furedi_gunderson():
    rep = verify_furedi_gunderson(2, range(6, 9))
    assert rep.passed
    assert [r["value"] for r in rep.rows] == [9, 12, 16]
    assert all(r["turan_attains"] for r in rep.rows)
    with pytest.raises(InvalidParameterError):
        verify_furedi_gunderson(2, [5])


def test_alon_shikhelman():
    rep = verify_alon_shikhelman(2, range(7, 9))
    assert rep.passed
    assert [r["left"] for r in rep.rows] == [8, 8]
    assert all(r["holds"] and r["bondy_simonovits_holds"] for r in rep.rows)
    with pytest.raises(InvalidParameterError):
        verify_alon_shikhelman(1, [7])


def test_stability_probe():
    rep = stability_probe(2, 8, 0)
    row = rep.rows[0]
    assert row["considered"] == 1 and row["max_distance"] == 0
    rep = stability_probe(2, 8, 6)
    assert rep.rows[0]["considered"] == 354 and rep.rows[0]["max_distance"] == 4
    assert sum(rep.rows[0]["distance_histogram"].values()) == 354


def test_custom_census_is_used():
    calls = []

    def census(n, forbidden=None):
        calls.append(n)
        return [turan(2, n), extremal_construction(1, n)]

    rec = exact_generalized_turan(6, "triangles", ForbiddenFamily(2, 3), census)
    assert calls == [6] and rec.value == formula_value(1, 6)


def test_brute_force_small_turan_numbers():
    # every labelled graph on 5 vertices, checked by hand-rolled search
    pairs = list(itertools.combinations(range(5), 2))
    best = 0
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        if not naive_has_packing(5, edges, 1, 3):
            best = max(best, len(edges))
    assert best == exact_generalized_turan(5, "edges", ForbiddenFamily(1, 3)).value == 6


def test_mantel_and_trivial_cases():
    for n in range(3, 9):
        assert exact_generalized_turan(n, "edges", ForbiddenFamily(1, 3)).value == n * n // 4
    for n in range(2, 8):
        assert exact_generalized_turan(n, "edges", ForbiddenPath(2)).value == 0
    rec = exact_generalized_turan(4, "triangles", ForbiddenFamily(2, 3))
    assert rec.value == 4 and rec.extremal_graphs == [canonical_form(complete(4))]
    rep = verify_erdos_gallai([4], [5])
    assert rep.rows[0]["value"] <= 5
