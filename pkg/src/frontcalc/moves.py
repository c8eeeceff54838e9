"""Legendrian front rewrites on event words.

The move set generates front-generic Legendrian isotopies:

* ``commute``      - swap two adjacent events with disjoint level support
* ``r1_insert``    - grow a fish (cusp pair plus one crossing) on a strand
* ``r1_remove``    - remove a fish pattern
* ``r2_push``      - push a cusp through an adjacent strand (creates a
                     crossing pair between the cusp branches and the strand)
* ``r2_pull``      - the reverse of ``r2_push``
* ``r3_triple``    - triple-point (braid) relation on three crossings

Every rewrite preserves tb, rot, component count and ruling count; each
has an inverse in the set.  Tangencies of two plain strands are never
generated (they are not Legendrian isotopies), which is why crossing pairs
only appear and disappear next to cusps.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from .diagrams import (CROSSING, LEFT_CUSP, RIGHT_CUSP, DiagramError, Event,
                       FrontDiagram, L, R, X)


class InapplicableRewrite(DiagramError):
    def __init__(self, rewrite, reason=""):
        self.rewrite = rewrite
        super().__init__(f"rewrite {rewrite} does not apply: {reason}")


@dataclass(frozen=True)
class Rewrite:
    kind: str
    index: int          # word index (for r1_insert: the gap)
    level: int = 0      # strand level, where meaningful
    variant: str = ""   # 'above'/'below' for r1_insert, 'up'/'down' for r2_push

    def __str__(self):
        bits = [self.kind, str(self.index)]
        if self.level:
            bits.append(f"@{self.level}")
        if self.variant:
            bits.append(self.variant)
        return ":".join(bits)


KINDS = ("commute", "r1_insert", "r1_remove", "r2_push", "r2_pull",
         "r3_triple")


# -- local pattern machinery ----------------------------------------------

def _fish_words(level):
    """The two fish gadgets on a strand at ``level``: (below, above)."""
    i = level
    return ([L(i + 1), X(i), R(i + 1)], [L(i), X(i + 1), R(i)])


def _match_fish(events, j):
    """If events[j:j+3] is a fish, return (level, variant) else None."""
    if j + 3 > len(events):
        return None
    a, b, c = events[j:j + 3]
    if a.kind != LEFT_CUSP or b.kind != CROSSING or c.kind != RIGHT_CUSP:
        return None
    if a.level == c.level == b.level + 1:
        return (b.level, "below")
    if a.level == c.level == b.level - 1:
        return (b.level - 1, "above")
    return None


def _push_replacement(events, counts, j, variant):
    """Cusp-through-strand expansion of the single cusp event at j."""
    if j >= len(events):
        return None
    ev = events[j]
    m = counts[j]
    lvl = ev.level
    if ev.kind == LEFT_CUSP:
        if variant == "down" and lvl >= 2:
            return [L(lvl - 1), X(lvl), X(lvl - 1)]
        if variant == "up" and lvl <= m:
            return [L(lvl + 1), X(lvl), X(lvl + 1)]
    elif ev.kind == RIGHT_CUSP:
        if variant == "down" and lvl >= 2:
            return [X(lvl - 1), X(lvl), R(lvl - 1)]
        if variant == "up" and lvl <= m - 2:
            return [X(lvl + 1), X(lvl), R(lvl + 1)]
    return None


def _match_pull(events, j):
    """If events[j:j+3] is a pushed cusp, return its contraction."""
    if j + 3 > len(events):
        return None
    a, b, c = events[j:j + 3]
    if a.kind == LEFT_CUSP and b.kind == c.kind == CROSSING:
        if b.level == a.level + 1 and c.level == a.level:
            return [L(a.level + 1)]
        if b.level == a.level - 1 and c.level == a.level:
            return [L(a.level - 1)]
    if a.kind == b.kind == CROSSING and c.kind == RIGHT_CUSP:
        if b.level == a.level + 1 and c.level == a.level:
            return [R(a.level + 1)]
        if b.level == a.level - 1 and c.level == a.level:
            return [R(a.level - 1)]
    return None


def _match_r3(events, j):
    if j + 3 > len(events):
        return None
    a, b, c = events[j:j + 3]
    if not (a.kind == b.kind == c.kind == CROSSING):
        return None
    if a.level == c.level and abs(b.level - a.level) == 1:
        return [X(b.level), X(a.level), X(b.level)]
    return None


def _commute_pair(a, b):
    """Swapped pair (b', a') for adjacent events a, b, or None.

    b' is b rewritten in pre-a coordinates, a' is a rewritten after b';
    fails whenever the supports interact.  The supports are the two
    strands a cusp or crossing touches; a left cusp's support is its
    insertion point, which may coincide with another event's level
    without interacting.
    """
    la, lb = a.level, b.level
    if b.kind == LEFT_CUSP:
        if a.kind == RIGHT_CUSP:
            above, below = lb <= la - 1, lb >= la
        else:
            above, below = lb <= la, lb >= la + 2
    else:
        above = lb + 1 <= la - 1
        if a.kind == RIGHT_CUSP:
            below = lb >= la
        elif a.kind == LEFT_CUSP and b.kind == RIGHT_CUSP:
            # (L p, R p+2) and (L p+2, R p) draw the same front (a cusp
            # born in the gap the right cusp vacates) and both would swap
            # to (R p, L p); only the second form commutes, so that the
            # swap stays an involution.
            below = lb >= la + 3
        else:
            below = lb >= la + 2
    if not above and not below:
        return None
    nb = lb
    if below and a.kind == LEFT_CUSP:
        nb = lb - 2
    elif below and a.kind == RIGHT_CUSP:
        nb = lb + 2
    na = la
    if above and b.kind == LEFT_CUSP:
        na = la + 2
    elif above and b.kind == RIGHT_CUSP:
        na = la - 2
    return (Event(b.kind, nb), Event(a.kind, na))


# -- orientation transfer --------------------------------------------------

def _event_ref_components(diagram, idx):
    """Component ids that the event at idx can witness, with a reference
    (segment, component) pair per entry."""
    ev = diagram.events[idx]
    out = []
    if ev.kind == CROSSING:
        gap = diagram.segments_at_gap(idx)
        for seg in (gap[ev.level - 1], gap[ev.level]):
            out.append((seg, diagram.component_of_segment[seg]))
    else:
        top, bot = diagram.cusp_segments(idx)
        out.append((top, diagram.component_of_segment[top]))
        out.append((bot, diagram.component_of_segment[bot]))
    return out


def transfer_by_map(old, new_events, index_map):
    """Build the rewritten diagram, carrying component orientations over.

    ``index_map`` sends new event indices to the old indices they
    correspond to; each new component takes the orientation that
    reproduces the old direction at its first mapped event.  Components
    with no mapped event default to '+'.
    """
    trial = FrontDiagram(new_events, None)
    symbols = [None] * trial.n_components
    remaining = trial.n_components
    for new_idx in sorted(index_map):
        old_idx = index_map[new_idx]
        old_refs = _event_ref_components(old, old_idx)
        new_refs = _event_ref_components(trial, new_idx)
        for (oseg, _oc), (nseg, nc) in zip(old_refs, new_refs):
            if symbols[nc] is None:
                same = (old.segment_direction[oseg]
                        == trial.segment_direction[nseg])
                symbols[nc] = "+" if same else "-"
                remaining -= 1
        if remaining == 0:
            break
    symbols = [s if s is not None else "+" for s in symbols]
    if all(s == "+" for s in symbols):
        return trial
    return FrontDiagram(new_events, symbols)


def rewritten(old, new_events, old_start, old_len, new_len):
    """Transfer orientations across a contiguous rewrite window."""
    new_events = list(new_events)
    shift = new_len - old_len
    index_map = {}
    for new_idx in range(len(new_events)):
        if new_idx < old_start:
            index_map[new_idx] = new_idx
        elif new_idx >= old_start + new_len:
            index_map[new_idx] = new_idx - shift
    return transfer_by_map(old, new_events, index_map)


# -- public operations -----------------------------------------------------

def apply_rewrite(diagram, rw):
    """Apply a rewrite, preserving component orientations.

    Raises InapplicableRewrite when the local pattern does not match.
    """
    events = list(diagram.events)
    counts = diagram.strand_counts
    j = rw.index
    if rw.kind == "commute":
        if not 0 <= j < len(events) - 1:
            raise InapplicableRewrite(rw, "index out of range")
        pair = _commute_pair(events[j], events[j + 1])
        if pair is None:
            raise InapplicableRewrite(rw, "events interact")
        new = events[:j] + list(pair) + events[j + 2:]
        return rewritten(diagram, new, j, 2, 2)
    if rw.kind == "r1_insert":
        if not 0 <= j <= len(events) or not 1 <= rw.level <= counts[j]:
            raise InapplicableRewrite(rw, "no strand at site")
        below, above = _fish_words(rw.level)
        gadget = below if rw.variant == "below" else above
        new = events[:j] + gadget + events[j:]
        return rewritten(diagram, new, j, 0, 3)
    if rw.kind == "r1_remove":
        if _match_fish(events, j) is None:
            raise InapplicableRewrite(rw, "no fish pattern")
        new = events[:j] + events[j + 3:]
        return rewritten(diagram, new, j, 3, 0)
    if rw.kind == "r2_push":
        rep = _push_replacement(events, counts, j, rw.variant)
        if rep is None:
            raise InapplicableRewrite(rw, "cusp cannot pass")
        new = events[:j] + rep + events[j + 1:]
        return rewritten(diagram, new, j, 1, 3)
    if rw.kind == "r2_pull":
        rep = _match_pull(events, j)
        if rep is None:
            raise InapplicableRewrite(rw, "no pushed-cusp pattern")
        new = events[:j] + rep + events[j + 3:]
        return rewritten(diagram, new, j, 3, 1)
    if rw.kind == "r3_triple":
        rep = _match_r3(events, j)
        if rep is None:
            raise InapplicableRewrite(rw, "no triple pattern")
        new = events[:j] + rep + events[j + 3:]
        return rewritten(diagram, new, j, 3, 3)
    raise InapplicableRewrite(rw, f"unknown kind {rw.kind}")


def inverse(diagram, rw):
    """The rewrite undoing ``rw`` on ``apply_rewrite(diagram, rw)``."""
    if rw.kind in ("commute", "r3_triple"):
        return rw
    if rw.kind == "r1_insert":
        return Rewrite("r1_remove", rw.index)
    if rw.kind == "r1_remove":
        level, variant = _match_fish(list(diagram.events), rw.index)
        return Rewrite("r1_insert", rw.index, level, variant)
    if rw.kind == "r2_push":
        return Rewrite("r2_pull", rw.index)
    if rw.kind == "r2_pull":
        ev = diagram.events[rw.index:rw.index + 3]
        contracted = _match_pull(list(diagram.events), rw.index)[0]
        pattern_cusp = ev[0] if ev[0].kind == LEFT_CUSP else ev[2]
        variant = "down" if contracted.level > pattern_cusp.level else "up"
        return Rewrite("r2_push", rw.index, variant=variant)
    raise InapplicableRewrite(rw, "not invertible")


def applicable_rewrites(diagram):
    """Complete enumeration of applicable rewrites, in a fixed order."""
    events = list(diagram.events)
    counts = diagram.strand_counts
    out = []
    for j in range(len(events) - 1):
        if _commute_pair(events[j], events[j + 1]) is not None:
            out.append(Rewrite("commute", j))
    for j in range(len(events) + 1):
        for level in range(1, counts[j] + 1):
            out.append(Rewrite("r1_insert", j, level, "below"))
            out.append(Rewrite("r1_insert", j, level, "above"))
    for j in range(len(events) - 2):
        if _match_fish(events, j) is not None:
            out.append(Rewrite("r1_remove", j))
    for j in range(len(events)):
        for variant in ("down", "up"):
            if _push_replacement(events, counts, j, variant) is not None:
                out.append(Rewrite("r2_push", j, variant=variant))
    for j in range(len(events) - 2):
        if _match_pull(events, j) is not None:
            out.append(Rewrite("r2_pull", j))
        if _match_r3(events, j) is not None:
            out.append(Rewrite("r3_triple", j))
    return out


def random_shuffle(diagram, steps, seed):
    """Deterministic random walk in the rewrite graph.

    Each step draws a rewrite kind and site at random and applies it if the
    pattern matches; a miss is a no-op, so the walk always terminates after
    exactly ``steps`` draws.  The result is Legendrian isotopic to the
    input by construction.
    """
    rng = random.Random(seed)
    d = diagram
    for _ in range(steps):
        n = len(d.events)
        kind = rng.choice(KINDS)
        if kind == "r1_insert":
            j = rng.randint(0, n)
            m = d.strand_counts[j]
            if m == 0:
                continue
            rw = Rewrite(kind, j, rng.randint(1, m),
                         rng.choice(("below", "above")))
        elif kind == "r2_push":
            if n == 0:
                continue
            rw = Rewrite(kind, rng.randint(0, n - 1),
                         variant=rng.choice(("down", "up")))
        else:
            if n == 0:
                continue
            rw = Rewrite(kind, rng.randint(0, n - 1))
        try:
            d = apply_rewrite(d, rw)
        except InapplicableRewrite:
            continue
    return d


def stabilize(diagram, sign):
    """Zigzag stabilization: tb drops by 1, rot shifts by ``sign``.

    The zigzag is inserted on the top strand of the first left cusp; the
    gadget (above or below the strand) is chosen from the strand direction
    so the two new cusps are both down (+) or both up (-).
    """
    if sign not in (1, -1):
        raise DiagramError("sign must be +1 or -1")
    for idx, ev in enumerate(diagram.events):
        if ev.kind == LEFT_CUSP:
            gap = idx + 1
            level = ev.level
            break
    else:
        raise DiagramError("cannot stabilize an empty diagram")
    direction = diagram.direction_at(gap, level)
    # rightward strand: below-zigzag adds two down cusps (S+)
    below = (direction == 1) == (sign == 1)
    if below:
        gadget = [L(level + 1), R(level)]
    else:
        gadget = [L(level), R(level + 1)]
    events = list(diagram.events)
    new = events[:gap] + gadget + events[gap:]
    return rewritten(diagram, new, gap, 0, 2)
