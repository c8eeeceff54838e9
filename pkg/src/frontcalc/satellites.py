"""Contact-framed copies and satellites of front diagrams.

The k-copy replaces every strand by k parallel push-offs (vertical
translates, which realize the contact framing).  A left cusp at level a
becomes k stacked cusps followed by k(k-1)/2 sorting crossings that
separate the upper branches from the lower ones; a right cusp is the
mirror image; a crossing becomes a k-by-k block of crossings.

A satellite splices an annular pattern word into the k-copy at one
generic x, on the k strands that copy the companion's first cusp's upper
branch.  Pattern words are written for rightward-parameterized strands;
when the companion runs the other way the lower branch block is used
instead, so the splice rows always point rightward.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagrams import (CROSSING, LEFT_CUSP, RIGHT_CUSP, DiagramError, Event,
                       FrontDiagram, L, R, X)


class PatternError(DiagramError):
    pass


class CompanionNotKnot(DiagramError):
    def __init__(self, n):
        super().__init__(f"companion has {n} components, wanted a knot")


class UnknownPattern(DiagramError):
    def __init__(self, name):
        super().__init__(f"unknown builtin pattern {name!r}")


@dataclass(frozen=True)
class PatternFront:
    """An event word on k strands in the annulus.

    Scanning from k strands must return to k strands (cusps appear in
    balancing pairs); the seam gluing is by position, and the pattern's
    strand-connection permutation is what determines how many components
    the satellite closes into.
    """
    strands: int
    events: tuple

    def __post_init__(self):
        if self.strands < 1:
            raise PatternError("pattern needs at least one strand")
        object.__setattr__(self, "events", tuple(self.events))
        m = self.strands
        for idx, ev in enumerate(self.events):
            if ev.kind == LEFT_CUSP:
                if not 1 <= ev.level <= m + 1:
                    raise PatternError(f"pattern event {idx} out of bounds")
                m += 2
            else:
                if not 1 <= ev.level <= m - 1:
                    raise PatternError(f"pattern event {idx} out of bounds")
                if ev.kind == RIGHT_CUSP:
                    m -= 2
        if m != self.strands:
            raise PatternError(
                f"pattern ends with {m} strands, started with {self.strands}")

    def closure_cycles(self):
        """Number of closed curves after gluing the seam by position."""
        parent = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def union(a, b):
            parent[find(a)] = find(b)

        fresh = iter(range(10 ** 9))
        current = [("start", i) for i in range(self.strands)]
        for ev in self.events:
            i = ev.level - 1
            if ev.kind == LEFT_CUSP:
                a, b = ("new", next(fresh)), ("new", next(fresh))
                union(a, b)
                current[i:i] = [a, b]
            elif ev.kind == RIGHT_CUSP:
                union(current[i], current[i + 1])
                del current[i:i + 2]
            else:
                current[i], current[i + 1] = current[i + 1], current[i]
        for i in range(self.strands):
            union(current[i], ("start", i))
        return len({find(t) for t in parent})


def builtin_pattern(name, param=None):
    """Built-in patterns: identity(k), half_twist(m), stab_core(sign),
    whitehead.

    The whitehead word is the standard 2-strand clasp with one cusp
    pair; it follows the common literature convention.
    """
    if name == "identity":
        k = 1 if param is None else int(param)
        return PatternFront(k, [])
    if name == "half_twist":
        m = 1 if param is None else int(param)
        if m < 0:
            raise UnknownPattern(f"half_twist({m})")
        return PatternFront(2, [X(1)] * m)
    if name == "stab_core":
        if param in ("+", 1):
            return PatternFront(1, [L(2), R(1)])
        if param in ("-", -1):
            return PatternFront(1, [L(1), R(2)])
        raise UnknownPattern(f"stab_core({param!r})")
    if name == "whitehead":
        return PatternFront(2, [X(1), X(1), R(1), L(1)])
    raise UnknownPattern(name)


# -- construction ----------------------------------------------------------

def _left_gadget(a, k):
    """k stacked left cusps at a, then sorting into upper/lower blocks."""
    events = [L(a + 2 * i) for i in range(k)]
    for i in range(2, k + 1):
        for o in range(2 * i - 3, i - 2, -1):
            events.append(X(a + o))
    return events

def _right_gadget(a, k):
    events = []
    for i in range(k, 1, -1):
        for o in range(i - 1, 2 * i - 2):
            events.append(X(a + o))
    events.extend(R(a) for _ in range(k))
    return events

def _crossing_gadget(a, k):
    return [X(a + j + l) for j in reversed(range(k)) for l in range(k)]


def _k_copy_events(diagram, k):
    """(events, origins): origins maps emitted cusps to source event index."""
    events = []
    origins = []
    for idx, ev in enumerate(diagram.events):
        a = k * (ev.level - 1) + 1
        if ev.kind == LEFT_CUSP:
            gadget = _left_gadget(a, k)
        elif ev.kind == RIGHT_CUSP:
            gadget = _right_gadget(a, k)
        else:
            gadget = _crossing_gadget(a, k)
        events.extend(gadget)
        origins.extend([idx] * len(gadget))
    return events, origins


def _inherit_orientations(diagram, events, origins):
    """Give every copied component the direction of its source strands."""
    trial = FrontDiagram(events, None)
    symbols = [None] * trial.n_components
    for new_idx, ev in enumerate(trial.events):
        if ev.kind == CROSSING:
            continue
        src = origins[new_idx]
        if src is None or diagram.events[src].kind == CROSSING:
            continue
        top, _ = trial.cusp_segments(new_idx)
        c = trial.component_of_segment[top]
        if symbols[c] is not None:
            continue
        src_top, _ = diagram.cusp_segments(src)
        same = (diagram.segment_direction[src_top]
                == trial.segment_direction[top])
        symbols[c] = "+" if same else "-"
    symbols = [s if s is not None else "+" for s in symbols]
    return FrontDiagram(events, symbols)


def k_copy(diagram, k):
    """k contact-framed push-off copies of every component."""
    if k < 1:
        raise DiagramError("k must be >= 1")
    if k == 1:
        return diagram
    events, origins = _k_copy_events(diagram, k)
    return _inherit_orientations(diagram, events, origins)


@dataclass(frozen=True)
class SatelliteResult:
    diagram: FrontDiagram
    companion_invariants: tuple   # (tb, rot) of the companion
    pattern_meta: str


def satellite(companion, pattern):
    """Splice an annular pattern into the companion's k-copy.

    The companion must be a knot.  The result's component count equals
    the pattern's closure cycle count.
    """
    if companion.n_components != 1:
        raise CompanionNotKnot(companion.n_components)
    k = pattern.strands
    events, origins = _k_copy_events(companion, k)
    first_cusp = next(i for i, ev in enumerate(companion.events)
                      if ev.kind == LEFT_CUSP)
    a = k * (companion.events[first_cusp].level - 1) + 1
    gadget_len = len(_left_gadget(a, k))
    splice_at = sum(len(_left_gadget(0, k)) if e.kind == LEFT_CUSP else
                    len(_crossing_gadget(0, k)) if e.kind == CROSSING else
                    len(_right_gadget(0, k))
                    for e in companion.events[:first_cusp]) + gadget_len
    # the upper block runs rightward for a '+' companion; otherwise use
    # the lower block, which runs the other way
    upper_rightward = (companion.segment_direction[
        companion.cusp_segments(first_cusp)[0]] == 1)
    row = a if upper_rightward else a + k
    spliced = [Event(ev.kind, ev.level + row - 1) for ev in pattern.events]
    events[splice_at:splice_at] = spliced
    origins[splice_at:splice_at] = [None] * len(spliced)
    d = _inherit_orientations(companion, events, origins)
    if d.n_components != pattern.closure_cycles():
        raise DiagramError("satellite component count mismatch")
    return SatelliteResult(d, (companion.tb, companion.rot),
                           f"pattern on {k} strands, "
                           f"{len(pattern.events)} events")


# -- pattern file format ---------------------------------------------------

PATTERN_HEADER = "pattern v1"


def pattern_to_text(p):
    word = " ".join(str(e) for e in p.events)
    return f"{PATTERN_HEADER}\nstrands: {p.strands}\n{word}\n"


def pattern_from_text(text):
    lines = text.splitlines()
    if len(lines) < 2 or lines[0] != PATTERN_HEADER:
        raise PatternError("missing 'pattern v1' header")
    if not lines[1].startswith("strands: "):
        raise PatternError("missing 'strands:' line")
    k = int(lines[1].split(":")[1])
    word = lines[2].split() if len(lines) > 2 else []
    return PatternFront(k, [Event.parse(t) for t in word])
