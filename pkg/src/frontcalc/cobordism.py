"""Decomposable cobordisms between front diagrams.

Elementary moves, read bottom-to-top: a birth inserts a standard 2-cusp
unknot, a death removes an isolated one, a surgery removes an adjacent
right-cusp/left-cusp pair ")(" (reconnecting four arc ends into two
parallel strands), and a pinch inserts such a pair between two vertically
adjacent strands.  Pinch and surgery are the two readings of the same
saddle; each costs -1 of Euler characteristic, births and deaths +1.

A CobordismTrace records a move sequence from a bottom diagram to a top
one.  Traces may also contain isotopy steps (rewrites from the moves
module); they cost nothing and exist so that replay is exact, since the
slice search has to tidy up with Reidemeister moves between saddles and
deaths.  The trace file format marks them with ``isotopy`` lines.

The filling search runs top-down: it pinches, frees isolated unknot
components with a deterministic reduction (pattern removals plus the
commute moves that expose them), and kills them, recording the reverse
of everything; reaching the empty diagram yields a filling trace.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import moves as _moves
from .diagrams import (CROSSING, LEFT_CUSP, RIGHT_CUSP, DiagramError, Event,
                       FrontDiagram, L, R, from_text, to_text)
from .moves import (InapplicableRewrite, Rewrite, apply_rewrite, inverse,
                    rewritten, transfer_by_map)
from .rulings import count_rulings


class CobordismError(DiagramError):
    pass


class NotAdjacent(CobordismError):
    def __init__(self, index, level):
        super().__init__(f"no adjacent strand pair at {index}@{level}")


class OrientationClash(CobordismError):
    def __init__(self, index, level):
        super().__init__(
            f"strands at {index}@{level} run the same way; "
            f"orientable pinch needs opposite directions")


class NotCuspPair(CobordismError):
    def __init__(self, index):
        super().__init__(f"events {index}, {index + 1} are not a "
                         f"right-cusp/left-cusp pair at one level")


class NotIsolatedUnknot(CobordismError):
    def __init__(self, component, reason):
        super().__init__(f"component {component} is not an isolated "
                         f"standard unknot: {reason}")


class NotATree(CobordismError):
    pass


class ArcSiteInvalid(CobordismError):
    pass


# -- elementary moves ------------------------------------------------------

def pinch(diagram, index, level, orientable_only=True):
    """Insert a ")(" cusp pair between strands level, level+1 at ``index``.

    tb drops by exactly 1, the cusp count rises by 2, the writhe is
    unchanged, and the component count changes by one either way.
    """
    counts = diagram.strand_counts
    if not 0 <= index <= len(diagram.events):
        raise NotAdjacent(index, level)
    if not 1 <= level <= counts[index] - 1:
        raise NotAdjacent(index, level)
    if orientable_only:
        if (diagram.direction_at(index, level)
                == diagram.direction_at(index, level + 1)):
            raise OrientationClash(index, level)
    events = list(diagram.events)
    new = events[:index] + [R(level), L(level)] + events[index:]
    return rewritten(diagram, new, index, 0, 2)


def surgery(diagram, index, level=None):
    """Remove the adjacent ")(" pair at ``index``, ``index + 1``."""
    events = list(diagram.events)
    if not 0 <= index < len(events) - 1:
        raise NotCuspPair(index)
    a, b = events[index], events[index + 1]
    if not (a.kind == RIGHT_CUSP and b.kind == LEFT_CUSP
            and a.level == b.level):
        raise NotCuspPair(index)
    if level is not None and level != a.level:
        raise NotCuspPair(index)
    new = events[:index] + events[index + 2:]
    return rewritten(diagram, new, index, 2, 0)


def birth(diagram, index, level, orient="+"):
    """Insert a standard unknot [L, R] at word ``index``, position ``level``."""
    counts = diagram.strand_counts
    if not 0 <= index <= len(diagram.events):
        raise CobordismError(f"birth index {index} out of range")
    if not 1 <= level <= counts[index] + 1:
        raise CobordismError(f"birth level {level} out of range at {index}")
    events = list(diagram.events)
    new = events[:index] + [L(level), R(level)] + events[index:]
    d = rewritten(diagram, new, index, 0, 2)
    c = d.component_at(index + 1, level)
    if d.orientations[c] != orient:
        symbols = list(d.orientations)
        symbols[c] = orient
        d = FrontDiagram(new, symbols)
    return d


def death(diagram, component):
    """Remove an isolated standard 2-cusp unknot component.

    The component must consist of exactly one left and one right cusp,
    and no other event may touch its two strands anywhere between them
    (strands passing entirely above or below are fine).
    """
    own = diagram.component_events(component)
    if len(own) != 2:
        raise NotIsolatedUnknot(component, f"{len(own)} events, wanted 2")
    j_left, j_right = own
    ev_l, ev_r = diagram.events[j_left], diagram.events[j_right]
    if ev_l.kind != LEFT_CUSP or ev_r.kind != RIGHT_CUSP:
        raise NotIsolatedUnknot(component, "events are not a cusp pair")
    k = ev_l.level  # the pair occupies positions k, k+1 from here on
    new_events = list(diagram.events[:j_left])
    index_map = {i: i for i in range(j_left)}
    for idx in range(j_left + 1, j_right):
        ev = diagram.events[idx]
        l = ev.level
        if ev.kind == LEFT_CUSP:
            if l <= k:
                new_l, k = l, k + 2
            elif l >= k + 2:
                new_l = l - 2
            else:
                raise NotIsolatedUnknot(component,
                                        f"event {idx} opens inside the eye")
        else:
            if l + 1 <= k - 1:
                new_l = l
                if ev.kind == RIGHT_CUSP:
                    k -= 2
            elif l >= k + 2:
                new_l = l - 2
            else:
                raise NotIsolatedUnknot(component,
                                        f"event {idx} touches the eye")
        index_map[len(new_events)] = idx
        new_events.append(Event(ev.kind, new_l))
    for idx in range(j_right + 1, len(diagram.events)):
        index_map[len(new_events)] = idx
        new_events.append(diagram.events[idx])
    return transfer_by_map(diagram, new_events, index_map)


# -- traces ----------------------------------------------------------------

@dataclass(frozen=True)
class Move:
    kind: str                # birth | death | pinch | surgery | isotopy
    index: int = 0           # word index; component index for death
    level: int = 0
    orient: str = "+"        # birth only
    rewrite: Rewrite = None  # for isotopy moves

    def __str__(self):
        if self.kind == "isotopy":
            rw = self.rewrite
            return f"isotopy {rw.kind} {rw.index} {rw.level} {rw.variant}"
        if self.kind == "death":
            return f"death {self.index}"
        base = f"{self.kind} {self.index}@{self.level}"
        if self.kind == "birth" and self.orient == "-":
            base += " -"
        return base

    @staticmethod
    def parse(line):
        parts = line.split()
        kind = parts[0]
        if kind == "isotopy":
            rkind, ridx, rlvl = parts[1], int(parts[2]), int(parts[3])
            variant = parts[4] if len(parts) > 4 else ""
            return Move(kind, rewrite=Rewrite(rkind, ridx, rlvl, variant))
        if kind == "death":
            return Move(kind, int(parts[1]))
        if kind in ("birth", "pinch", "surgery"):
            idx, lvl = parts[1].split("@")
            orient = parts[2] if len(parts) > 2 else "+"
            return Move(kind, int(idx), int(lvl), orient)
        raise CobordismError(f"bad move line {line!r}")


def apply_move(diagram, move):
    if move.kind == "birth":
        return birth(diagram, move.index, move.level, move.orient)
    if move.kind == "death":
        return death(diagram, move.index)
    if move.kind == "pinch":
        return pinch(diagram, move.index, move.level)
    if move.kind == "surgery":
        return surgery(diagram, move.index, move.level)
    if move.kind == "isotopy":
        return apply_rewrite(diagram, move.rewrite)
    raise CobordismError(f"unknown move kind {move.kind!r}")


@dataclass
class CobordismTrace:
    bottom: FrontDiagram
    moves: list
    top: FrontDiagram

    @property
    def chi(self):
        births = sum(1 for m in self.moves if m.kind in ("birth", "death"))
        saddles = sum(1 for m in self.moves if m.kind in ("pinch", "surgery"))
        return births - saddles

    def count(self, kind):
        return sum(1 for m in self.moves if m.kind == kind)

    def replay(self):
        """Intermediate diagrams, from bottom to the replayed top."""
        out = [self.bottom]
        for m in self.moves:
            out.append(apply_move(out[-1], m))
        return out

    @property
    def orientable(self):
        d = self.bottom
        for m in self.moves:
            if m.kind == "pinch":
                if (d.direction_at(m.index, m.level)
                        == d.direction_at(m.index, m.level + 1)):
                    return False
            d = apply_move(d, m)
        return True


def check_trace(trace):
    ok, _report = check_trace_report(trace)
    return ok


def check_trace_report(trace):
    """Replay with full precondition checks; (ok, first-failure report)."""
    d = trace.bottom
    for n, m in enumerate(trace.moves):
        try:
            d = apply_move(d, m)
        except DiagramError as e:
            return False, f"move {n} ({m}) failed: {e}"
    if d != trace.top:
        return False, "replayed top differs from recorded top"
    return True, "ok"


TRACE_HEADER = "trace v1"


def trace_to_text(trace):
    lines = [TRACE_HEADER]
    lines.append("bottom: " + " ".join(str(e) for e in trace.bottom.events))
    lines.append("orient: " + " ".join(trace.bottom.orientations))
    for m in trace.moves:
        lines.append(str(m))
    lines.append("top: " + " ".join(str(e) for e in trace.top.events))
    lines.append("orient: " + " ".join(trace.top.orientations))
    return "\n".join(lines) + "\n"


def trace_from_text(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or lines[0] != TRACE_HEADER:
        raise CobordismError("missing 'trace v1' header")
    if len(lines) < 5 or not lines[1].startswith("bottom: "):
        raise CobordismError("missing bottom block")

    def block(word_line, orient_line):
        word = word_line.split(": ", 1)[1] if ": " in word_line else ""
        orient = orient_line.split(":", 1)[1].split()
        return FrontDiagram([Event.parse(t) for t in word.split()], orient)

    bottom = block(lines[1], lines[2])
    if not lines[-2].startswith("top:"):
        raise CobordismError("missing top block")
    top = block(lines[-2], lines[-1])
    mvs = [Move.parse(ln) for ln in lines[3:-2]]
    return CobordismTrace(bottom, mvs, top)


# -- deterministic reduction ----------------------------------------------

def _contraction_at(events, j):
    """A length-reducing rewrite at index j, if any."""
    if _moves._match_fish(events, j) is not None:
        return Rewrite("r1_remove", j)
    if _moves._match_pull(events, j) is not None:
        return Rewrite("r2_pull", j)
    return None


def _find_reducing_commutes(events, depth):
    """Breadth-first hunt for a commute sequence exposing a contraction.

    Returns (commute rewrites, contraction rewrite) or None.  Depth is
    small; words are compared structurally to avoid revisits.
    """
    start = tuple(events)
    frontier = [(start, [])]
    seen = {start}
    for _ in range(depth):
        nxt = []
        for word, path in frontier:
            lst = list(word)
            for j in range(len(lst) - 1):
                pair = _moves._commute_pair(lst[j], lst[j + 1])
                if pair is None:
                    continue
                new = lst[:j] + list(pair) + lst[j + 2:]
                key = tuple(new)
                if key in seen:
                    continue
                seen.add(key)
                npath = path + [Rewrite("commute", j)]
                for k in range(max(0, j - 2), min(len(new) - 2, j + 3)):
                    c = _contraction_at(new, k)
                    if c is not None:
                        return npath, c
                nxt.append((key, npath))
        frontier = nxt
    return None


def reduce_diagram(diagram, commute_depth=3):
    """Shrink a diagram by removals, using commutes only to enable them.

    Returns (reduced diagram, list of applied rewrites).  Deterministic;
    the word length strictly drops with every round, so this terminates.
    """
    applied = []
    d = diagram
    while True:
        events = list(d.events)
        rw = next((c for j in range(len(events))
                   if (c := _contraction_at(events, j)) is not None), None)
        if rw is not None:
            d = apply_rewrite(d, rw)
            applied.append(rw)
            continue
        found = _find_reducing_commutes(events, commute_depth)
        if found is None:
            return d, applied
        for rw in found[0] + [found[1]]:
            d = apply_rewrite(d, rw)
            applied.append(rw)


def _adjacent_eyes(diagram):
    """(index, level, component) for every adjacent [L, R] unknot eye."""
    out = []
    events = diagram.events
    for j in range(len(events) - 1):
        a, b = events[j], events[j + 1]
        if (a.kind == LEFT_CUSP and b.kind == RIGHT_CUSP
                and a.level == b.level):
            c = diagram.component_at(j + 1, a.level)
            if len(diagram.component_events(c)) == 2:
                out.append((j, a.level, c))
    return out


def _isolate_eye(diagram, component):
    """Commute an isolated eye's two cusps until adjacent.

    Returns (diagram, commute rewrites, index, level) or None.  The
    left cusp bubbles rightward past the disjoint events in between.
    """
    own = diagram.component_events(component)
    if len(own) != 2:
        return None
    j_left, j_right = own
    if (diagram.events[j_left].kind != LEFT_CUSP
            or diagram.events[j_right].kind != RIGHT_CUSP):
        return None
    d = diagram
    applied = []
    for j in range(j_left, j_right - 1):
        pair = _moves._commute_pair(d.events[j], d.events[j + 1])
        if pair is None:
            return None
        rw = Rewrite("commute", j)
        d = apply_rewrite(d, rw)
        applied.append(rw)
    level = d.events[j_right - 1].level
    if d.events[j_right].level != level:
        return None
    # commutes can renumber components; re-identify the eye in place
    return d, applied, j_right - 1, level, d.component_at(j_right, level)


# -- filling search --------------------------------------------------------

def _ruling_obstructed(diagram):
    """True if some component alone admits no normal ruling."""
    for c in range(diagram.n_components):
        if count_rulings(diagram.component_subdiagram(c)) == 0:
            return True
    return False


def _downward_cleanup(diagram):
    """Reduce, then kill every eye that can be made adjacent; repeat.

    Returns (diagram, downward record).  Record entries are pairs
    (upward Move, None); isotopy steps store the upward rewrite.
    """
    record = []
    d = diagram

    def note_rewrites(before, rewrites):
        b = before
        for rw in rewrites:
            record.append(Move("isotopy", rewrite=inverse(b, rw)))
            b = apply_rewrite(b, rw)
        return b

    while True:
        d2, rewrites = reduce_diagram(d)
        note_rewrites(d, rewrites)
        d = d2
        for c in range(d.n_components):
            iso = _isolate_eye(d, c)
            if iso is None:
                continue
            d_adj, commutes, idx, level, c_adj = iso
            note_rewrites(d, commutes)
            record.append(Move("birth", idx, level,
                               d_adj.orientations[c_adj]))
            d = death(d_adj, c_adj)
            break
        else:
            return d, record


def _pinch_sites(diagram, orientable_only=True):
    counts = diagram.strand_counts
    for j in range(len(diagram.events) + 1):
        for i in range(1, counts[j]):
            if orientable_only and (diagram.direction_at(j, i)
                                    == diagram.direction_at(j, i + 1)):
                continue
            yield j, i


_EXPLORE_KINDS = ("r3_triple", "r2_push")


def _exploratory_rewrites(diagram):
    for rw in _moves.applicable_rewrites(diagram):
        if rw.kind in _EXPLORE_KINDS:
            yield rw


def search_decomposable_filling(diagram, max_pinches=3, isotopy_budget=0):
    """Bounded top-down search for a decomposable filling.

    Iteratively deepens on the pinch count; ``isotopy_budget`` bounds the
    extra exploratory rewrites (triple-point and cusp-push moves) spent
    beyond the always-free deterministic reduction.  Returns a
    bottom-to-top CobordismTrace from the empty diagram, or None.
    Absence is not a proof: the search is diagram- and budget-dependent.
    """
    for pinches in range(max_pinches + 1):
        seen = set()
        found = _search_down(diagram, pinches, isotopy_budget, seen)
        if found is not None:
            down_moves, bottom = found
            top = diagram
            return CobordismTrace(bottom, list(reversed(down_moves)), top)
    return None


def _search_down(diagram, pinches_left, budget, seen):
    d, record = _downward_cleanup(diagram)
    if not d.events:
        return record, d
    if _ruling_obstructed(d):
        return None
    key = (d.events, d.orientations, pinches_left, budget)
    if key in seen:
        return None
    seen.add(key)
    if pinches_left > 0:
        for j, i in _pinch_sites(d):
            d2 = pinch(d, j, i)
            sub = _search_down(d2, pinches_left - 1, budget, seen)
            if sub is not None:
                deeper, bottom = sub
                return record + [Move("surgery", j, i)] + deeper, bottom
    if budget > 0:
        for rw in _exploratory_rewrites(d):
            d2 = apply_rewrite(d, rw)
            sub = _search_down(d2, pinches_left, budget - 1, seen)
            if sub is not None:
                deeper, bottom = sub
                up = Move("isotopy", rewrite=inverse(d, rw))
                return record + [up] + deeper, bottom
    return None


def ruling_fillability(diagram, switches, max_pinches=None):
    """Certify a normal ruling fillable by paired pinches, if possible.

    Pinch sites are restricted to adjacent strand pairs that the
    (descended) ruling pairs with each other; success is reaching a
    diagram each of whose components is a max-tb unknot (components may
    stay linked in the front, as they do for the trefoil: its tb rules
    out any filling by honestly split unknots).  Returns a trace whose
    bottom is the reached unlink, or None (absence within the bound
    means unknown, not unfillable).
    """
    from .rulings import ruling_pairings
    ruling_pairings(diagram, switches)   # reject invalid switch sets early
    if max_pinches is None:
        max_pinches = len(diagram.crossing_indices()) + diagram.n_components

    def is_max_tb_unlink(d):
        if any((tb, rot) != (-1, 0) for tb, rot in d.per_component):
            return False
        for c in range(d.n_components):
            reduced, _ = reduce_diagram(d.component_subdiagram(c))
            if len(reduced.events) != 2:
                return False
        return True

    def rec(d, sw, left):
        if is_max_tb_unlink(d):
            return [], d
        if left == 0:
            return None
        gaps = ruling_pairings(d, sw)
        for j, pairing in enumerate(gaps):
            for i0 in range(len(pairing) - 1):
                if pairing[i0] != i0 + 1:
                    continue
                try:
                    d2 = pinch(d, j, i0 + 1)
                except CobordismError:
                    continue
                sw2 = tuple(s if s < j else s + 2 for s in sw)
                sub = rec(d2, sw2, left - 1)
                if sub is not None:
                    deeper, bottom = sub
                    return [Move("surgery", j, i0 + 1)] + deeper, bottom
        return None

    found = next((f for depth in range(max_pinches + 1)
                  if (f := rec(diagram, tuple(switches), depth)) is not None),
                 None)
    if found is None:
        return None
    down_moves, bottom = found
    return CobordismTrace(bottom, list(reversed(down_moves)), diagram)


# -- surgery presentations -------------------------------------------------

@dataclass
class SurgeryPresentation:
    base: FrontDiagram       # a max-tb unlink
    arcs: list               # (word index of the ")(" pair, level) on base

    def __post_init__(self):
        for tb, rot in self.base.per_component:
            if (tb, rot) != (-1, 0):
                raise ArcSiteInvalid(
                    f"base component has (tb, rot) = ({tb}, {rot}), "
                    f"wanted the max-tb unknot (-1, 0)")
        for index, level in self.arcs:
            events = self.base.events
            if not (0 <= index < len(events) - 1
                    and events[index] == Event(RIGHT_CUSP, level)
                    and events[index + 1] == Event(LEFT_CUSP, level)):
                raise ArcSiteInvalid(f"no \")(\" pair at {index}@{level}")


def presentation_graph(p):
    """Incidence graph: vertices are base components, one edge per arc.

    Returns a dict with 'vertices', 'edges' (arc-ordered component
    pairs), and 'self_arcs' (arc positions whose ends meet the same
    component; these raise the genus and break tree-ness).
    """
    edges = []
    self_arcs = []
    for n, (index, level) in enumerate(p.arcs):
        right_top, _ = p.base.cusp_segments(index)
        left_top, _ = p.base.cusp_segments(index + 1)
        c1 = p.base.component_of_segment[right_top]
        c2 = p.base.component_of_segment[left_top]
        edges.append((c1, c2))
        if c1 == c2:
            self_arcs.append(n)
    return {"vertices": list(range(p.base.n_components)),
            "edges": edges, "self_arcs": self_arcs}


def is_tree(p):
    g = presentation_graph(p)
    n = len(g["vertices"])
    if g["self_arcs"] or len(g["edges"]) != n - 1:
        return False
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in g["edges"]:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def apply_presentation(p):
    d, _sites = apply_presentation_with_sites(p)
    return d


def apply_presentation_with_sites(p):
    """Perform the surgeries in arc-list order.

    Returns (result diagram, adjusted (index, level) per arc): the index
    each pair actually had when removed, so pinching the result at the
    adjusted sites in reverse order restores the base word exactly.
    """
    d = p.base
    removed = []
    sites = []
    for index, level in p.arcs:
        if any(abs(r - index) <= 1 for r in removed):
            raise ArcSiteInvalid(f"arc at {index}@{level} used twice")
        adj = index - 2 * sum(1 for r in removed if r < index)
        d = surgery(d, adj, level)
        removed.append(index)
        sites.append((adj, level))
    return d, sites


def leaf_pinch_order(p):
    """Arcs reordered so the last is always attached at a tree leaf.

    Reversing this order pinches the surgered diagram back to the
    unlink leaf-by-leaf.  Raises NotATree when the incidence graph is
    not a tree (self-arcs included).
    """
    if not is_tree(p):
        raise NotATree("presentation graph is not a tree")
    g = presentation_graph(p)
    degree = [0] * len(g["vertices"])
    for a, b in g["edges"]:
        degree[a] += 1
        degree[b] += 1
    remaining = set(range(len(p.arcs)))
    order = []
    while remaining:
        for n in sorted(remaining):
            a, b = g["edges"][n]
            if degree[a] == 1 or degree[b] == 1:
                order.append(n)
                remaining.discard(n)
                degree[a] -= 1
                degree[b] -= 1
                break
        else:
            raise NotATree("no leaf arc found")  # unreachable on trees
    return [p.arcs[n] for n in reversed(order)]
