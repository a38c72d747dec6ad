"""Family specs, generators, closed forms, tree classes, pair realization."""

import pytest
from hypothesis import given, settings

from idrd import idn, idrdn, ir2dn, tree_idn, tree_idrdn
from idrd.families import (
    KINDS,
    FamilySpec,
    TreeClass,
    admissible_interval,
    classify_tree,
    formula_idrdn,
    generate,
    parse_family_spec,
    realize,
)

from conftest import cycle_graph, double_star, path_graph, star_graph, trees

from oracles import tree_certificate


def certificate(g):
    return tree_certificate(g.n, g.edges)


# ---------------------------------------------------------------------------
# specs and parsing
# ---------------------------------------------------------------------------


def test_spec_text_round_trips_through_parse():
    specs = [
        FamilySpec("path", (7,)),
        FamilySpec("complete_multipartite", (2, 2, 5)),
        FamilySpec("subdivided_double_star", (2, 3)),
        FamilySpec("corona_of_star", (4,)),
    ]
    for spec in specs:
        assert parse_family_spec(spec.text()) == spec
    assert FamilySpec("complete_multipartite", (2, 2, 5)).text() == "kpartite:2,2,5"


def test_parse_accepts_short_and_long_names():
    assert parse_family_spec("kpartite:1,4") == FamilySpec(
        "complete_multipartite", (1, 4))
    assert parse_family_spec("complete_multipartite:1,4") == FamilySpec(
        "complete_multipartite", (1, 4))
    assert parse_family_spec(" Path:5 ") == FamilySpec("path", (5,))


def test_parse_rejects_malformed_specs():
    with pytest.raises(ValueError, match="must look like"):
        parse_family_spec("path")
    with pytest.raises(ValueError, match="unknown family kind"):
        parse_family_spec("wheel:5")
    with pytest.raises(ValueError, match="must be integers"):
        parse_family_spec("path:x")
    with pytest.raises(ValueError, match="must be integers"):
        parse_family_spec("path:")


def test_spec_validation():
    with pytest.raises(ValueError, match="unknown family kind"):
        FamilySpec("wheel", (5,))
    with pytest.raises(ValueError, match="order must be >= 3"):
        FamilySpec("cycle", (2,))
    with pytest.raises(ValueError, match="takes 1 parameter"):
        FamilySpec("path", (3, 4))
    with pytest.raises(ValueError, match="non-negative"):
        FamilySpec("path", (-3,))
    with pytest.raises(ValueError, match="at least 2 part sizes"):
        FamilySpec("complete_multipartite", (4,))
    with pytest.raises(ValueError, match="sorted ascending"):
        FamilySpec("complete_multipartite", (2, 1))
    with pytest.raises(ValueError, match="part sizes must be >= 1"):
        FamilySpec("complete_multipartite", (0, 2))
    with pytest.raises(ValueError, match="1 <= r <= s"):
        FamilySpec("double_star", (2, 1))
    with pytest.raises(ValueError, match="1 <= r <= s"):
        FamilySpec("subdivided_double_star", (0, 2))
    with pytest.raises(ValueError, match="k >= 2j\\+1"):
        FamilySpec("subdivided_star", (4, 2))
    with pytest.raises(ValueError, match="star size must be >= 1"):
        FamilySpec("corona_of_star", (0,))


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------


def test_generate_golden_edge_lists():
    assert generate(FamilySpec("path", (4,))) == path_graph(4)
    assert generate(FamilySpec("cycle", (3,))) == cycle_graph(3)
    assert generate(FamilySpec("complete", (3,))) == cycle_graph(3)
    assert generate(FamilySpec("star", (3,))) == star_graph(3)
    assert generate(FamilySpec("double_star", (1, 2))) == double_star(1, 2)
    assert generate(FamilySpec("complete_multipartite", (1, 2))).edges == (
        (0, 1), (0, 2))
    assert generate(FamilySpec("subdivided_star", (5, 2))).edges == (
        (0, 1), (0, 3), (1, 2), (3, 4))
    assert generate(FamilySpec("subdivided_double_star", (1, 1))).edges == (
        (0, 2), (0, 3), (1, 2), (1, 5), (3, 4), (5, 6))
    assert generate(FamilySpec("corona_of_star", (1,))).edges == (
        (0, 1), (0, 2), (1, 3))


def test_generate_structural_properties():
    g = generate(FamilySpec("subdivided_star", (9, 3)))
    assert g.n == 9 and g.is_tree() and g.degree(0) == 9 - 1 - 3
    g = generate(FamilySpec("subdivided_double_star", (2, 4)))
    assert g.n == 2 * (2 + 4) + 3 and g.is_tree()
    g = generate(FamilySpec("corona_of_star", (3,)))
    assert g.n == 8 and g.is_tree()
    assert all(g.degree(v) >= 2 for v in range(4))
    assert all(g.degree(v) == 1 for v in range(4, 8))
    g = generate(FamilySpec("complete_multipartite", (2, 2, 5)))
    assert g.n == 9 and g.m == 2 * 2 + 2 * 5 + 2 * 5


def test_subdivided_double_star_one_one_is_a_path():
    g = generate(FamilySpec("subdivided_double_star", (1, 1)))
    assert certificate(g) == certificate(path_graph(7))


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------


def test_formula_values():
    assert formula_idrdn(FamilySpec("path", (9,))) == 9
    assert formula_idrdn(FamilySpec("path", (10,))) == 11
    assert formula_idrdn(FamilySpec("path", (1,))) == 2
    assert formula_idrdn(FamilySpec("cycle", (8,))) == 8
    assert formula_idrdn(FamilySpec("cycle", (11,))) == 12
    assert formula_idrdn(FamilySpec("complete", (5,))) == 3
    assert formula_idrdn(FamilySpec("complete_multipartite", (1, 4))) == 3
    assert formula_idrdn(FamilySpec("complete_multipartite", (2, 2, 5))) == 4
    assert formula_idrdn(FamilySpec("complete_multipartite", (3, 3))) == 6


def test_formula_unavailable_kinds_raise():
    for spec in (
        FamilySpec("star", (4,)),
        FamilySpec("double_star", (2, 3)),
        FamilySpec("subdivided_star", (5, 2)),
        FamilySpec("subdivided_double_star", (1, 1)),
        FamilySpec("corona_of_star", (3,)),
    ):
        with pytest.raises(ValueError, match="no closed form"):
            formula_idrdn(spec)
    with pytest.raises(ValueError, match="one-vertex complete"):
        formula_idrdn(FamilySpec("complete", (1,)))


def test_formula_agrees_with_the_solver():
    specs = [FamilySpec("path", (n,)) for n in range(1, 13)]
    specs += [FamilySpec("cycle", (n,)) for n in range(3, 13)]
    specs += [FamilySpec("complete", (n,)) for n in range(2, 8)]
    specs += [
        FamilySpec("complete_multipartite", p)
        for p in [(1, 1), (1, 4), (2, 3), (2, 2, 5), (3, 3, 3), (1, 2, 3, 4)]
    ]
    for spec in specs:
        assert formula_idrdn(spec) == idrdn(generate(spec))[0], spec.text()


# ---------------------------------------------------------------------------
# tree classification
# ---------------------------------------------------------------------------


def test_classify_named_examples():
    assert classify_tree(path_graph(7)) == TreeClass("F_family", (1, 1))
    assert classify_tree(path_graph(6)) == TreeClass("neither", None)
    assert classify_tree(path_graph(9)) == TreeClass("neither", None)
    assert classify_tree(path_graph(4)) == TreeClass("T_family", (4, 1))
    assert classify_tree(path_graph(5)) == TreeClass("T_family", (5, 2))
    assert classify_tree(path_graph(3)) == TreeClass("T_family", (3, 0))
    assert classify_tree(path_graph(2)) == TreeClass("T_family", (2, 0))
    assert classify_tree(star_graph(5)) == TreeClass("T_family", (6, 0))
    assert classify_tree(double_star(2, 2)) == TreeClass("neither", None)
    assert classify_tree(
        generate(FamilySpec("subdivided_star", (12, 4)))
    ) == TreeClass("T_family", (12, 4))
    assert classify_tree(
        generate(FamilySpec("subdivided_double_star", (2, 3)))
    ) == TreeClass("F_family", (2, 3))


def test_classify_rejects_non_trees_and_tiny_input():
    with pytest.raises(ValueError, match="not a tree"):
        classify_tree(cycle_graph(5))
    with pytest.raises(ValueError, match="order >= 2"):
        classify_tree(path_graph(1))


def test_classify_round_trips_generated_members():
    for k in range(2, 11):
        for j in range((k - 1) // 2 + 1):
            spec = FamilySpec("subdivided_star", (k, j))
            got = classify_tree(generate(spec))
            assert got.membership == "T_family"
            if (k, j) == (3, 1):
                assert got.parameters == (3, 0)
            else:
                assert got.parameters == (k, j)
    for r in range(1, 4):
        for s in range(r, 5):
            spec = FamilySpec("subdivided_double_star", (r, s))
            got = classify_tree(generate(spec))
            assert got == TreeClass("F_family", (r, s))


@settings(max_examples=100, deadline=None)
@given(trees(min_n=2, max_n=10))
def test_classification_recovers_an_isomorphic_tree(t):
    got = classify_tree(t)
    if got.membership == "T_family":
        rebuilt = generate(FamilySpec("subdivided_star", got.parameters))
        assert certificate(rebuilt) == certificate(t)
    elif got.membership == "F_family":
        rebuilt = generate(FamilySpec("subdivided_double_star", got.parameters))
        assert certificate(rebuilt) == certificate(t)
    else:
        assert got.parameters is None


def test_members_satisfy_the_gap_one_identity():
    for k in range(2, 15):
        for j in range((k - 1) // 2 + 1):
            g = generate(FamilySpec("subdivided_star", (k, j)))
            assert ir2dn(g)[0] == idn(g)[0] + 1, (k, j)
    for r in range(1, 6):
        for s in range(r, 6):
            g = generate(FamilySpec("subdivided_double_star", (r, s)))
            assert ir2dn(g)[0] == idn(g)[0] + 1, (r, s)


def test_gap_one_does_not_imply_membership():
    g = double_star(2, 2)
    assert ir2dn(g)[0] == idn(g)[0] + 1
    assert classify_tree(g).membership == "neither"


# ---------------------------------------------------------------------------
# realizing (idn, idrdn) pairs
# ---------------------------------------------------------------------------


def test_admissible_interval():
    assert admissible_interval(1) == (3, 3)
    assert admissible_interval(4) == (9, 12)


def test_realize_golden_cases():
    assert realize(1, 3).edges == ((0, 1),)
    assert realize(2, 5) == generate(FamilySpec("corona_of_star", (1,)))
    assert certificate(realize(2, 5)) == certificate(path_graph(4))
    assert realize(3, 7) == generate(FamilySpec("corona_of_star", (2,)))
    assert realize(3, 9).n == 8
    assert realize(4, 12).n == 2 * 4 + 1 + 2


def test_realize_rejects_inadmissible_pairs():
    for a, b in [(0, 3), (1, 2), (1, 4), (2, 4), (2, 7), (5, 10), (5, 16), (-1, 1)]:
        with pytest.raises(ValueError, match="inadmissible pair"):
            realize(a, b)
    with pytest.raises(ValueError, match=r"interval is \[5, 6\]"):
        realize(2, 7)


def test_realize_hits_both_targets_everywhere():
    for a in range(1, 6):
        lo, hi = admissible_interval(a)
        for b in range(lo, hi + 1):
            t = realize(a, b)
            assert t.is_tree()
            assert tree_idn(t) == a, (a, b)
            assert tree_idrdn(t) == b, (a, b)


def test_realize_trees_match_exact_solvers_on_small_pairs():
    for a in range(1, 4):
        lo, hi = admissible_interval(a)
        for b in range(lo, hi + 1):
            t = realize(a, b)
            assert idn(t)[0] == a
            assert idrdn(t)[0] == b
