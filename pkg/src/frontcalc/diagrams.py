"""Event-word model of Legendrian front diagrams.

A front is encoded as an ordered word of events read left to right.  Strand
positions are 1-based, counted from the top.  A left cusp at level i inserts
two strands at positions i, i+1; a right cusp at level i merges the strands
at positions i, i+1; a crossing at level i transposes them.

Crossings carry no over/under data: in a front the descending strand
(upper-left to lower-right, i.e. the one with lesser slope) is always in
front.  Orientations are mandatory, one symbol per component; the '+'
symbol directs the top strand of the component's first left cusp rightward.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

LEFT_CUSP = "L"
RIGHT_CUSP = "R"
CROSSING = "X"

_KINDS = (LEFT_CUSP, RIGHT_CUSP, CROSSING)


class DiagramError(ValueError):
    """Base class for structured diagram rejections."""


class LevelOutOfBounds(DiagramError):
    def __init__(self, index, level, strands):
        self.index = index
        super().__init__(
            f"event {index}: level {level} out of bounds with {strands} strands")


class NonzeroFinalStrands(DiagramError):
    def __init__(self, strands):
        self.strands = strands
        super().__init__(f"word ends with {strands} open strands")


class OrientationMissing(DiagramError):
    def __init__(self, n_components, n_symbols):
        super().__init__(
            f"diagram has {n_components} components but {n_symbols} "
            f"orientation symbols")


@dataclass(frozen=True, order=True)
class Event:
    kind: str
    level: int

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise DiagramError(f"unknown event kind {self.kind!r}")
        if self.level < 1:
            raise DiagramError(f"level must be >= 1, got {self.level}")

    def __str__(self):
        return f"{self.kind}{self.level}"

    @staticmethod
    def parse(token: str) -> "Event":
        kind, level = token[:1], token[1:]
        if kind not in _KINDS or not level.isdigit():
            raise DiagramError(f"bad event token {token!r}")
        return Event(kind, int(level))


def L(level):
    return Event(LEFT_CUSP, level)


def R(level):
    return Event(RIGHT_CUSP, level)


def X(level):
    return Event(CROSSING, level)


def strand_counts(events):
    """Strand count at every gap: counts[g] is the count before event g.

    Raises on any level-bound violation or a nonzero final count.
    """
    counts = [0]
    m = 0
    for idx, ev in enumerate(events):
        if ev.kind == LEFT_CUSP:
            if not 1 <= ev.level <= m + 1:
                raise LevelOutOfBounds(idx, ev.level, m)
            m += 2
        else:
            if not 1 <= ev.level <= m - 1:
                raise LevelOutOfBounds(idx, ev.level, m)
            if ev.kind == RIGHT_CUSP:
                m -= 2
        counts.append(m)
    if m != 0:
        raise NonzeroFinalStrands(m)
    return counts


class _Scan:
    """Single left-to-right pass assigning segment ids and cusp data.

    A segment is a maximal strand piece between two cusps; segments persist
    through crossings.  Ids are assigned in creation order (top strand of a
    left cusp first), which fixes the component numbering.
    """

    def __init__(self, events):
        self.events = tuple(events)
        self.gaps = []           # segment ids at each gap, top to bottom
        self.cusp_pair = {}      # event index -> (top_seg, bottom_seg)
        self.crossing_pair = {}  # event index -> (upper_seg, lower_seg) before
        current = []
        next_id = 0
        self.gaps.append(tuple(current))
        for idx, ev in enumerate(events):
            i = ev.level - 1
            if ev.kind == LEFT_CUSP:
                if not 0 <= i <= len(current):
                    raise LevelOutOfBounds(idx, ev.level, len(current))
                top, bot = next_id, next_id + 1
                next_id += 2
                current[i:i] = [top, bot]
                self.cusp_pair[idx] = (top, bot)
            else:
                if not 0 <= i <= len(current) - 2:
                    raise LevelOutOfBounds(idx, ev.level, len(current))
                a, b = current[i], current[i + 1]
                if ev.kind == RIGHT_CUSP:
                    del current[i:i + 2]
                    self.cusp_pair[idx] = (a, b)
                else:
                    current[i], current[i + 1] = b, a
                    self.crossing_pair[idx] = (a, b)
            self.gaps.append(tuple(current))
        if current:
            raise NonzeroFinalStrands(len(current))
        self.n_segments = next_id


class FrontDiagram:
    """A validated front diagram: immutable after construction.

    Use :func:`validate` (or ``FrontDiagram(events, orientations)``) to
    build one; construction performs the full scan, component decomposition
    and orientation propagation.
    """

    def __init__(self, events, orientations=None):
        self.events = tuple(events)
        self.orientations = (None if orientations is None
                             else tuple(orientations))
        for s in self.orientations or ():
            if s not in ("+", "-"):
                raise DiagramError(f"bad orientation symbol {s!r}")
        scan = _Scan(self.events)
        self._scan = scan

        # Union-find over segments; cusps join their two segments.
        parent = list(range(scan.n_segments))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in scan.cusp_pair.values():
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

        roots = {}
        comp_of_seg = []
        for seg in range(scan.n_segments):
            r = find(seg)
            if r not in roots:
                roots[r] = len(roots)
            comp_of_seg.append(roots[r])
        self.component_of_segment = tuple(comp_of_seg)
        self.n_components = len(roots)
        if self.orientations is None:
            self.orientations = ("+",) * self.n_components
        if len(self.orientations) != self.n_components:
            raise OrientationMissing(self.n_components, len(self.orientations))

        # Direction of each segment: +1 rightward, -1 leftward.  The two
        # segments meeting at any cusp point in opposite x-directions; the
        # component's first segment is directed by its orientation symbol.
        dirs = [0] * scan.n_segments
        first_seg_of_comp = {}
        for seg in range(scan.n_segments):
            c = comp_of_seg[seg]
            if c not in first_seg_of_comp:
                first_seg_of_comp[c] = seg
        adj = {s: [] for s in range(scan.n_segments)}
        for a, b in scan.cusp_pair.values():
            adj[a].append(b)
            adj[b].append(a)
        for c, seg in first_seg_of_comp.items():
            dirs[seg] = 1 if self.orientations[c] == "+" else -1
            stack = [seg]
            while stack:
                s = stack.pop()
                for t in adj[s]:
                    if dirs[t] == 0:
                        dirs[t] = -dirs[s]
                        stack.append(t)
        self.segment_direction = tuple(dirs)

    # -- basic queries ----------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, FrontDiagram)
                and self.events == other.events
                and self.orientations == other.orientations)

    def __hash__(self):
        return hash((self.events, self.orientations))

    def __repr__(self):
        word = " ".join(str(e) for e in self.events)
        return f"FrontDiagram([{word}], orient={''.join(self.orientations)})"

    @property
    def n_events(self):
        return len(self.events)

    @cached_property
    def strand_counts(self):
        return tuple(len(g) for g in self._scan.gaps)

    def segments_at_gap(self, gap):
        """Segment ids top-to-bottom at the gap before event ``gap``."""
        return self._scan.gaps[gap]

    def component_at(self, gap, level):
        """Component index of the strand at 1-based ``level`` at ``gap``."""
        return self.component_of_segment[self._scan.gaps[gap][level - 1]]

    def direction_at(self, gap, level):
        """+1 if the strand at ``level`` runs rightward, -1 leftward."""
        return self.segment_direction[self._scan.gaps[gap][level - 1]]

    def cusp_segments(self, index):
        """(top, bottom) segment ids of the cusp event at ``index``."""
        return self._scan.cusp_pair[index]

    # -- invariants -------------------------------------------------------

    def crossing_sign(self, index):
        """Sign of the crossing at event ``index`` (+1 or -1).

        The descending strand is the overstrand; the sign is the
        determinant of (over tangent, under tangent) with the component
        orientations.
        """
        over, under = self._scan.crossing_pair[index]
        do = self.segment_direction[over]
        du = self.segment_direction[under]
        # over tangent (do, -do), under tangent (du, du)
        return 1 if do * du > 0 else -1

    def cusp_is_down(self, index):
        """True if the traversal moves downward through the cusp at ``index``.

        At either cusp kind the incoming strand is the top one exactly for
        a down cusp: leftward into a left cusp, rightward into a right cusp.
        """
        top, _bot = self._scan.cusp_pair[index]
        d = self.segment_direction[top]
        if self.events[index].kind == LEFT_CUSP:
            return d == -1
        return d == 1

    @cached_property
    def writhe(self):
        return sum(self.crossing_sign(i) for i in self._scan.crossing_pair)

    @cached_property
    def right_cusp_count(self):
        return sum(1 for e in self.events if e.kind == RIGHT_CUSP)

    @cached_property
    def tb(self):
        return self.writhe - self.right_cusp_count

    @cached_property
    def rot(self):
        down = sum(1 for i in self._scan.cusp_pair if self.cusp_is_down(i))
        up = len(self._scan.cusp_pair) - down
        assert (down - up) % 2 == 0
        return (down - up) // 2

    @cached_property
    def per_component(self):
        """List of (tb, rot) per component; tb counts self-crossings only."""
        writhe = [0] * self.n_components
        rcusps = [0] * self.n_components
        downup = [0] * self.n_components
        comp = self.component_of_segment
        for i, (a, b) in self._scan.crossing_pair.items():
            if comp[a] == comp[b]:
                writhe[comp[a]] += self.crossing_sign(i)
        for i, (a, _b) in self._scan.cusp_pair.items():
            c = comp[a]
            if self.events[i].kind == RIGHT_CUSP:
                rcusps[c] += 1
            downup[c] += 1 if self.cusp_is_down(i) else -1
        return [(writhe[c] - rcusps[c], downup[c] // 2)
                for c in range(self.n_components)]

    def linking_number(self, c1, c2):
        """Half the signed count of crossings between components c1, c2."""
        if c1 == c2:
            raise DiagramError("linking number needs distinct components")
        comp = self.component_of_segment
        total = 0
        for i, (a, b) in self._scan.crossing_pair.items():
            if {comp[a], comp[b]} == {c1, c2}:
                total += self.crossing_sign(i)
        assert total % 2 == 0
        return total // 2

    def crossing_indices(self):
        return sorted(self._scan.crossing_pair)

    def component_events(self, c):
        """Sorted event indices whose strands all belong to component c."""
        comp = self.component_of_segment
        out = []
        for i, pair in self._scan.cusp_pair.items():
            if comp[pair[0]] == c:
                out.append(i)
        for i, (a, b) in self._scan.crossing_pair.items():
            if comp[a] == c and comp[b] == c:
                out.append(i)
        return sorted(out)

    def component_subdiagram(self, c):
        """The front of component c alone, with other strands deleted."""
        comp = self.component_of_segment
        events = []
        for idx, ev in enumerate(self.events):
            gap = self._scan.gaps[idx]
            if ev.kind == LEFT_CUSP:
                segs = self._scan.cusp_pair[idx]
                if comp[segs[0]] != c:
                    continue
                above = sum(1 for s in gap[:ev.level - 1] if comp[s] != c)
                events.append(Event(ev.kind, ev.level - above))
            else:
                a = gap[ev.level - 1]
                b = gap[ev.level]
                if comp[a] != c or comp[b] != c:
                    continue
                above = sum(1 for s in gap[:ev.level - 1] if comp[s] != c)
                events.append(Event(ev.kind, ev.level - above))
        return FrontDiagram(events, (self.orientations[c],))


def validate(events, orientations):
    """Validate an event word plus orientations into a FrontDiagram.

    Raises LevelOutOfBounds, NonzeroFinalStrands or OrientationMissing.
    """
    return FrontDiagram(events, orientations)


def components(diagram):
    """Partition of segment ids into components, in index order."""
    out = [[] for _ in range(diagram.n_components)]
    for seg, c in enumerate(diagram.component_of_segment):
        out[c].append(seg)
    return out


@dataclass(frozen=True)
class ClassicalInvariants:
    tb: int
    rot: int
    per_component: tuple


def classical_invariants(diagram):
    return ClassicalInvariants(diagram.tb, diagram.rot,
                               tuple(diagram.per_component))


# -- text format ----------------------------------------------------------

FORMAT_HEADER = "frontdiagram v1"


def to_text(diagram):
    word = " ".join(str(e) for e in diagram.events)
    orient = " ".join(diagram.orientations)
    return f"{FORMAT_HEADER}\n{word}\norient:{' ' + orient if orient else ''}\n"


def from_text(text):
    lines = text.splitlines()
    if len(lines) < 3 or lines[0] != FORMAT_HEADER:
        raise DiagramError("missing 'frontdiagram v1' header")
    events = [Event.parse(tok) for tok in lines[1].split()]
    if not lines[2].startswith("orient:"):
        raise DiagramError("missing 'orient:' line")
    orientations = lines[2][len("orient:"):].split()
    return FrontDiagram(events, orientations)
