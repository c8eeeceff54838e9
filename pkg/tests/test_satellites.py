import random

import pytest

from frontcalc.diagrams import FrontDiagram, L, R, X
from frontcalc.moves import stabilize
from frontcalc.rulings import count_rulings
from frontcalc.satellites import (
    CompanionNotKnot, PatternError, PatternFront, UnknownPattern,
    builtin_pattern, k_copy, pattern_from_text, pattern_to_text, satellite,
)

from helpers import random_diagram

UNKNOT = FrontDiagram([L(1), R(1)])
TREFOIL = FrontDiagram([L(1), L(3), X(2), X(2), X(2), R(1), R(1)])


def test_pattern_validation():
    with pytest.raises(PatternError):
        PatternFront(0, [])
    with pytest.raises(PatternError):
        PatternFront(2, [R(1)])
    with pytest.raises(PatternError):
        PatternFront(1, [X(1)])


def test_builtin_patterns():
    assert builtin_pattern("identity", 3).strands == 3
    assert builtin_pattern("half_twist", 4).events == (X(1),) * 4
    assert builtin_pattern("whitehead").closure_cycles() == 1
    with pytest.raises(UnknownPattern):
        builtin_pattern("nope")
    with pytest.raises(UnknownPattern):
        builtin_pattern("stab_core", 0)


def test_closure_cycles():
    assert PatternFront(2, []).closure_cycles() == 2
    assert PatternFront(2, [X(1)]).closure_cycles() == 1
    assert PatternFront(3, [X(1), X(2)]).closure_cycles() == 1
    assert PatternFront(1, [L(1), R(2)]).closure_cycles() == 1


def test_pattern_text_roundtrip():
    p = builtin_pattern("whitehead")
    assert pattern_from_text(pattern_to_text(p)) == p
    with pytest.raises(PatternError):
        pattern_from_text("bad")


def test_k_copy_counts():
    d2 = k_copy(UNKNOT, 2)
    assert d2.n_components == 2
    assert d2.per_component == [(-1, 0), (-1, 0)]
    assert k_copy(TREFOIL, 1) is TREFOIL
    t2 = k_copy(TREFOIL, 2)
    assert t2.n_components == 2
    assert t2.per_component == [(1, 0), (1, 0)]
    # contact framing: each pair of copies links by the companion's tb
    assert t2.linking_number(0, 1) == TREFOIL.tb


def test_k_copy_framing_random():
    rng = random.Random(41)
    tested = 0
    while tested < 25:
        d = random_diagram(rng, max_width=4, max_events=12)
        if d.n_components != 1:
            continue
        tested += 1
        d2 = k_copy(d, 2)
        assert d2.n_components == 2
        assert d2.linking_number(0, 1) == d.tb
        assert d2.per_component == [(d.tb, d.rot)] * 2


def test_satellite_requires_knot():
    with pytest.raises(CompanionNotKnot):
        satellite(FrontDiagram([L(1), R(1), L(1), R(1)]),
                  builtin_pattern("identity", 2))


def test_identity_satellite_is_k_copy():
    for k in (1, 2, 3):
        res = satellite(TREFOIL, builtin_pattern("identity", k))
        assert res.diagram == k_copy(TREFOIL, k)
        assert res.companion_invariants == (1, 0)


def test_half_twist_satellite_of_unknot():
    res = satellite(UNKNOT, builtin_pattern("half_twist", 3))
    d = res.diagram
    assert d.n_components == 1
    assert (d.tb, d.rot) == (-1, 0)
    assert count_rulings(d) == 1


def test_stab_core_satellite_matches_stabilization():
    for sign in (1, -1):
        pat = builtin_pattern("stab_core", sign)
        res = satellite(TREFOIL, pat)
        s = stabilize(TREFOIL, sign)
        assert (res.diagram.tb, res.diagram.rot) == (s.tb, s.rot)
        assert count_rulings(res.diagram) == 0


def test_whitehead_satellite_of_unknot():
    res = satellite(UNKNOT, builtin_pattern("whitehead"))
    d = res.diagram
    assert d.n_components == 1
    assert d.rot == 0


def test_satellite_orientation_reversal_safe():
    rev = FrontDiagram(list(TREFOIL.events), ("-",))
    res = satellite(rev, builtin_pattern("half_twist", 1))
    assert res.diagram.n_components == 1
