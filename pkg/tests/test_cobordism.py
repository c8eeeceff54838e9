import random

import pytest

from frontcalc.cobordism import (
    ArcSiteInvalid, CobordismTrace, Move, NotAdjacent, NotATree,
    NotCuspPair, NotIsolatedUnknot, OrientationClash, SurgeryPresentation,
    apply_presentation, apply_presentation_with_sites, birth, check_trace,
    check_trace_report, death, is_tree, leaf_pinch_order, pinch,
    presentation_graph, reduce_diagram, ruling_fillability,
    search_decomposable_filling, surgery, trace_from_text, trace_to_text,
)
from frontcalc.diagrams import FrontDiagram, L, R, X
from frontcalc.moves import random_shuffle, stabilize
from frontcalc.rulings import enumerate_rulings

from helpers import random_diagram, random_tree_presentation, tree_presentation

UNKNOT = FrontDiagram([L(1), R(1)])
TREFOIL = FrontDiagram([L(1), L(3), X(2), X(2), X(2), R(1), R(1)])


def test_pinch_splits_unknot():
    d = pinch(UNKNOT, 1, 1)
    assert list(d.events) == [L(1), R(1), L(1), R(1)]
    assert d.n_components == 2
    assert d.tb == UNKNOT.tb - 1


def test_pinch_site_checks():
    with pytest.raises(NotAdjacent):
        pinch(UNKNOT, 1, 2)
    with pytest.raises(NotAdjacent):
        pinch(UNKNOT, 5, 1)


def test_pinch_orientation_gate():
    # both trefoil strands at gap 2, levels 2, 3 run the same way
    with pytest.raises(OrientationClash):
        pinch(TREFOIL, 2, 2)
    merged = pinch(TREFOIL, 2, 2, orientable_only=False)
    assert surgery(merged, 2, 2).events == TREFOIL.events


def test_surgery_undoes_pinch():
    rng = random.Random(31)
    for _ in range(80):
        d = random_diagram(rng)
        sites = [(j, i) for j in range(d.n_events + 1)
                 for i in range(1, d.strand_counts[j])]
        if not sites:
            continue
        j, i = sites[rng.randrange(len(sites))]
        oriented = d.direction_at(j, i) != d.direction_at(j, i + 1)
        p = pinch(d, j, i, orientable_only=False)
        if oriented:
            # the saddle laws only speak about oriented pinches; a
            # reversing band can keep the component count
            assert p.tb == d.tb - 1
            assert abs(p.n_components - d.n_components) == 1
        else:
            assert abs(p.n_components - d.n_components) <= 1
        assert surgery(p, j, i).events == d.events


def test_surgery_needs_cusp_pair():
    with pytest.raises(NotCuspPair):
        surgery(TREFOIL, 0)
    with pytest.raises(NotCuspPair):
        surgery(FrontDiagram([L(1), R(1), L(1), R(1)]), 1, level=2)


def test_birth_death_roundtrip():
    d = birth(TREFOIL, 3, 5, orient="-")
    assert d.n_components == 2
    assert d.per_component.count((-1, 0)) >= 1
    c = d.component_at(4, 5)
    assert d.orientations[c] == "-"
    assert death(d, c) == TREFOIL


def test_death_requires_isolation():
    # the inner eye of a nested pair is isolated, the outer one is not
    d = FrontDiagram([L(1), L(2), R(2), R(1)])
    inner = d.component_at(2, 2)
    outer = 1 - inner
    assert death(d, inner).events == (L(1), R(1))
    with pytest.raises(NotIsolatedUnknot):
        death(d, outer)
    with pytest.raises(NotIsolatedUnknot):
        death(TREFOIL, 0)


def test_reduce_diagram_flattens_shuffles():
    for seed in range(10):
        messy = random_shuffle(UNKNOT, 40, seed=seed)
        reduced, applied = reduce_diagram(messy)
        assert list(reduced.events) == [L(1), R(1)]


def test_filling_of_unknot():
    tr = search_decomposable_filling(UNKNOT)
    assert tr is not None
    assert not tr.bottom.events and tr.top == UNKNOT
    assert tr.chi == 1 and tr.count("pinch") == 0
    assert check_trace(tr)


def test_filling_of_trefoil():
    tr = search_decomposable_filling(TREFOIL)
    assert tr is not None
    assert tr.chi == -TREFOIL.tb == -1
    assert tr.count("birth") + tr.count("death") - tr.count("pinch") \
        - tr.count("surgery") == tr.chi
    assert check_trace(tr)
    assert tr.orientable


def test_stabilized_unknot_has_no_filling():
    for sign in (1, -1):
        assert search_decomposable_filling(stabilize(UNKNOT, sign)) is None


def test_trace_text_roundtrip():
    tr = search_decomposable_filling(TREFOIL)
    text = trace_to_text(tr)
    back = trace_from_text(text)
    assert back.bottom == tr.bottom and back.top == tr.top
    assert [str(m) for m in back.moves] == [str(m) for m in tr.moves]
    assert check_trace(back)


def test_trace_text_rejects_garbage():
    from frontcalc.cobordism import CobordismError
    with pytest.raises(CobordismError):
        trace_from_text("not a trace")
    with pytest.raises(CobordismError):
        trace_from_text("trace v1\nbottom: L1 R1\norient: +\n")


def test_check_trace_report_flags_bad_moves():
    tr = CobordismTrace(UNKNOT, [Move("surgery", 0, 1)], UNKNOT)
    ok, detail = check_trace_report(tr)
    assert not ok and "move 0" in detail
    tr2 = CobordismTrace(UNKNOT, [], TREFOIL)
    ok2, detail2 = check_trace_report(tr2)
    assert not ok2 and "top" in detail2


def test_every_trefoil_ruling_is_fillable():
    for switches in enumerate_rulings(TREFOIL):
        tr = ruling_fillability(TREFOIL, switches)
        assert tr is not None, switches
        assert check_trace(tr)
        assert all(inv == (-1, 0) for inv in tr.bottom.per_component)


def test_presentation_validation():
    with pytest.raises(ArcSiteInvalid):
        SurgeryPresentation(TREFOIL, [])
    base = FrontDiagram([L(1), R(1), L(1), R(1)])
    with pytest.raises(ArcSiteInvalid):
        SurgeryPresentation(base, [(0, 1)])
    p = SurgeryPresentation(base, [(1, 1)])
    assert is_tree(p)
    assert apply_presentation(p).n_components == 1


def test_overlapping_arcs_rejected():
    base, sites = tree_presentation([(0, 1), (0, 2)])
    p = SurgeryPresentation(base, [sites[0], sites[0]])
    with pytest.raises(ArcSiteInvalid):
        apply_presentation_with_sites(p)


def test_presentation_graph_and_trees():
    base, sites = tree_presentation([(0, 1), (1, 2), (1, 3)])
    p = SurgeryPresentation(base, sites)
    g = presentation_graph(p)
    assert sorted(g["vertices"]) == [0, 1, 2, 3]
    assert len(g["edges"]) == 3 and not g["self_arcs"]
    assert is_tree(p)
    # dropping an arc disconnects the graph
    assert not is_tree(SurgeryPresentation(base, sites[:2]))
    with pytest.raises(NotATree):
        leaf_pinch_order(SurgeryPresentation(base, sites[:2]))


def test_tree_presentations_pinch_back():
    rng = random.Random(32)
    for _ in range(25):
        n = rng.randint(1, 5)
        base, sites = random_tree_presentation(n, rng)
        p = SurgeryPresentation(base, sites)
        assert is_tree(p)
        result, adj_sites = apply_presentation_with_sites(p)
        assert result.n_components == 1
        assert result.tb == -1
        # pinching the adjusted sites in reverse restores the base word
        d = result
        for j, lvl in reversed(adj_sites):
            d = pinch(d, j, lvl, orientable_only=False)
        assert d.events == base.events
        # the leaf order is a reordering of the same arcs
        assert sorted(leaf_pinch_order(p)) == sorted(sites)
