from fractions import Fraction

import pytest

from resclose.dyadic import Dyadic
from resclose.families import FamilyKind, FamilySpec, clique_join, k_pendant_paths, pk, pk_lengths
from resclose.formulas import (
    PARAMETERLESS,
    FormulaError,
    TheoremCase,
    TheoremId,
    bound,
    cases,
    complete_value,
    cut_vertex_display_value,
    cut_vertex_intermediate_value,
    eq_mm_value,
    lemma_clique_join_value,
    matching_two_value,
    param_range,
    printed_matching_bound,
    star_value,
)
from resclose.graph import complete_graph, star_graph
from resclose.invariants import ParameterKind, all_parameters
from resclose.residual import link_residual_value


def test_complete_and_star():
    for n in range(2, 12):
        assert complete_value(n) == link_residual_value(complete_graph(n))
        assert star_value(n) == link_residual_value(star_graph(n))


def test_clique_join_lemma_branches():
    assert lemma_clique_join_value(1, [1, 3]) == 6
    assert lemma_clique_join_value(1, [2, 2]) == 7
    assert lemma_clique_join_value(2, [1, 2]).fraction_str() == "17/2"
    for n0, parts in [(1, [1, 3]), (1, [2, 2]), (2, [1, 2]), (3, [1, 1, 4]), (1, [1, 1, 1, 1])]:
        assert lemma_clique_join_value(n0, parts) == link_residual_value(clique_join(n0, parts))
    with pytest.raises(FormulaError):
        lemma_clique_join_value(0, [2, 2])
    with pytest.raises(FormulaError):
        lemma_clique_join_value(1, [4])


def test_eq_mm_with_zero_lengths():
    assert eq_mm_value([1, 1, 0]) == 5
    for a in ([0, 0, 2], [3, 0, 0, 0], [1, 1, 0, 0], [2, 2, 0]):
        assert eq_mm_value(a) == link_residual_value(k_pendant_paths(a))
    with pytest.raises(FormulaError):
        eq_mm_value([1, 0, 0])


def test_cut_vertex_display_vs_pendant_path_formula():
    # intermediate expression always agrees with the pendant-path formula
    for n in range(6, 15):
        for k in range(2, n - 2):
            mm = eq_mm_value(pk_lengths(n, k))
            assert cut_vertex_intermediate_value(n, k) == mm
    assert cut_vertex_display_value(8, 4) == Dyadic.parse("61/4")
    assert eq_mm_value(pk_lengths(8, 4)) == Dyadic.parse("57/4") == link_residual_value(pk(8, 4))
    # r >= 1 display agrees
    assert cut_vertex_display_value(9, 5) == eq_mm_value(pk_lengths(9, 5))


def test_matching_constant():
    assert matching_two_value(12, 5) - matching_two_value(12, 5, printed=True) == Fraction(1, 2)
    got = link_residual_value(clique_join(2, [1] * 3 + [7]))
    assert got == matching_two_value(12, 5)
    # 5*beta > 2n+3 selects the f(2) branch of the printed statement
    assert printed_matching_bound(18, 8, connected=True) == matching_two_value(18, 8, printed=True)
    assert bound(TheoremCase(TheoremId.MATCHING_CONNECTED, 18, 8)).bound == matching_two_value(18, 8)


def test_param_ranges():
    assert list(param_range(TheoremId.CUT_VERTICES, 9)) == [2, 3, 4, 5, 6]
    assert list(param_range(TheoremId.CHROMATIC, 3)) == [3]
    assert list(param_range(TheoremId.MATCHING, 8)) == [2, 3]
    assert list(param_range(TheoremId.TREE, 5)) == [0]
    assert cases(TheoremId.BIPARTITE, 3) == []
    assert TheoremCase(TheoremId.TREE, 6, 9).param == 0
    assert TheoremId.parse("CUT-VERTICES") is TheoremId.CUT_VERTICES
    with pytest.raises(FormulaError):
        bound(TheoremCase(TheoremId.CUT_VERTICES, 9, 7))


def test_known_bounds():
    res = bound(TheoremCase(TheoremId.CUT_VERTICES, 9, 5))
    assert res.bound == 16
    assert res.extremal == (FamilySpec(FamilyKind.H_GRAPH, (3, 3)),)
    res = bound(TheoremCase(TheoremId.CUT_VERTICES, 11, 6))
    assert res.bound == Dyadic.parse("49/2") and len(res.extremal) == 2
    assert bound(TheoremCase(TheoremId.CUT_VERTICES, 12, 7)).bound.decimal_str() == "27.375"
    assert bound(TheoremCase(TheoremId.MATCHING, 8, 3)).bound == Dyadic.parse("45/2")
    assert len(bound(TheoremCase(TheoremId.CONNECTIVITY, 9, 1)).extremal) == 2


def test_chromatic_top_is_complete_graph():
    for n in range(3, 31):
        assert bound(TheoremCase(TheoremId.CHROMATIC, n, n)).bound == complete_value(n)


def test_bipartite_equals_chromatic_two():
    for n in range(4, 31, 2):
        a = bound(TheoremCase(TheoremId.BIPARTITE, n)).bound
        assert a == bound(TheoremCase(TheoremId.CHROMATIC, n, 2)).bound


def _in_class_param(tid, case, params):
    table = {
        TheoremId.CONNECTIVITY: ParameterKind.CONNECTIVITY,
        TheoremId.INDEPENDENCE: ParameterKind.INDEPENDENCE,
        TheoremId.MATCHING: ParameterKind.MATCHING,
        TheoremId.MATCHING_CONNECTED: ParameterKind.MATCHING,
        TheoremId.CHROMATIC: ParameterKind.CHROMATIC,
        TheoremId.BIPARTITENESS: ParameterKind.BIPARTITENESS,
        TheoremId.CUT_EDGES: ParameterKind.CUT_EDGES,
        TheoremId.PENDANT_EDGES: ParameterKind.PENDANT_EDGES,
        TheoremId.CUT_VERTICES: ParameterKind.CUT_VERTICES,
    }
    kind = table.get(tid)
    return kind is None or params[kind] == case.param


@pytest.mark.parametrize("tid", [t for t in TheoremId if t not in PARAMETERLESS])
def test_extremal_members_attain_bound(tid):
    for n in range(5, 12):
        for case in cases(tid, n):
            res = bound(case)
            for spec in res.extremal:
                g = spec.build()
                assert g.order == n
                assert link_residual_value(g) == res.bound, (case, spec)
                assert _in_class_param(tid, case, all_parameters(g)), (case, spec)
