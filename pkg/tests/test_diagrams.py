import random

import pytest

from frontcalc.diagrams import (
    Event, FrontDiagram, L, R, X, DiagramError, LevelOutOfBounds,
    NonzeroFinalStrands, OrientationMissing, classical_invariants,
    components, from_text, strand_counts, to_text, validate,
)

from helpers import random_diagram, random_word

UNKNOT = [L(1), R(1)]
TREFOIL = [L(1), L(3), X(2), X(2), X(2), R(1), R(1)]
STAB_PLUS = [L(1), L(2), R(1), R(1)]
STAB_MINUS = [L(1), L(1), R(2), R(1)]


def test_event_parsing_roundtrip():
    for token in ("L1", "R3", "X12"):
        assert str(Event.parse(token)) == token
    with pytest.raises(DiagramError):
        Event.parse("Q1")
    with pytest.raises(DiagramError):
        Event.parse("X")
    with pytest.raises(DiagramError):
        Event("L", 0)


def test_strand_counts():
    assert strand_counts(TREFOIL) == [0, 2, 4, 4, 4, 4, 2, 0]
    with pytest.raises(LevelOutOfBounds):
        strand_counts([L(1), X(2), R(1)])
    with pytest.raises(NonzeroFinalStrands):
        strand_counts([L(1)])


def test_orientation_count_checked():
    with pytest.raises(OrientationMissing):
        validate(UNKNOT, ("+", "-"))
    d = validate(UNKNOT, ("-",))
    assert d.orientations == ("-",)


def test_unknot_invariants():
    d = FrontDiagram(UNKNOT)
    assert (d.tb, d.rot) == (-1, 0)
    assert d.n_components == 1
    assert d.writhe == 0


def test_trefoil_invariants():
    d = FrontDiagram(TREFOIL)
    assert (d.tb, d.rot) == (1, 0)
    assert d.writhe == 3
    assert all(d.crossing_sign(i) == 1 for i in d.crossing_indices())


@pytest.mark.parametrize("word,rot", [(STAB_PLUS, 1), (STAB_MINUS, -1)])
def test_stabilized_unknot_invariants(word, rot):
    d = FrontDiagram(word)
    assert (d.tb, d.rot) == (-2, rot)


def test_rot_flips_with_orientation():
    plus = FrontDiagram(STAB_PLUS, ("+",))
    minus = FrontDiagram(STAB_PLUS, ("-",))
    assert plus.rot == -minus.rot == 1
    assert plus.tb == minus.tb


def test_unlink_per_component():
    d = FrontDiagram([L(1), R(1), L(1), R(1)])
    assert d.n_components == 2
    assert d.per_component == [(-1, 0), (-1, 0)]
    assert d.linking_number(0, 1) == 0


def test_linking_number_needs_distinct():
    d = FrontDiagram(UNKNOT)
    with pytest.raises(DiagramError):
        d.linking_number(0, 0)


def test_component_subdiagram_of_nested_unlink():
    d = FrontDiagram([L(1), L(2), R(2), R(1)])
    assert d.n_components == 2
    for c in range(2):
        sub = d.component_subdiagram(c)
        assert sub.events == (L(1), R(1))


def test_components_partition_segments():
    d = FrontDiagram(TREFOIL)
    parts = components(d)
    assert sorted(s for part in parts for s in part) == list(range(4))


def test_classical_invariants_record():
    inv = classical_invariants(FrontDiagram(TREFOIL))
    assert (inv.tb, inv.rot) == (1, 0)
    assert inv.per_component == ((1, 0),)


def test_text_roundtrip_fixed():
    d = FrontDiagram(TREFOIL, ("-",))
    assert from_text(to_text(d)) == d
    assert to_text(d).startswith("frontdiagram v1\n")


def test_text_rejects_garbage():
    with pytest.raises(DiagramError):
        from_text("nope")
    with pytest.raises(DiagramError):
        from_text("frontdiagram v1\nL1 R1\n")


def test_text_roundtrip_random():
    rng = random.Random(5)
    for _ in range(200):
        d = random_diagram(rng)
        assert from_text(to_text(d)) == d


def test_random_words_validate_and_decompose():
    rng = random.Random(6)
    for _ in range(200):
        d = random_diagram(rng)
        assert sum(len(c) > 0 for c in components(d)) == d.n_components
        assert len(d.per_component) == d.n_components
        # total tb differs from the per-component sum by twice the
        # pairwise linking
        lk = sum(d.linking_number(a, b)
                 for a in range(d.n_components)
                 for b in range(a + 1, d.n_components))
        assert d.tb == sum(t for t, _ in d.per_component) + 2 * lk
        assert d.rot == sum(r for _, r in d.per_component)


def test_cusp_direction_bookkeeping():
    rng = random.Random(7)
    for _ in range(100):
        d = random_diagram(rng)
        for idx, ev in enumerate(d.events):
            if ev.kind == "X":
                continue
            top, bot = d.cusp_segments(idx)
            assert (d.segment_direction[top]
                    == -d.segment_direction[bot])


def test_equality_and_hash():
    a = FrontDiagram(UNKNOT)
    b = FrontDiagram(list(UNKNOT))
    assert a == b and hash(a) == hash(b)
    assert a != FrontDiagram(UNKNOT, ("-",))
