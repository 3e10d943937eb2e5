"""Rigorous paths on oriented wiring diagrams.

A rigorous path on an oriented diagram with orientation index ``k`` starts
at the bottom end of wire ``k``, travels with the wire orientations, visits
every crossing at most once, and ends at the bottom end of wire ``k + 1``.
At each crossing it either switches to the other wire or passes straight
through; passing through is forbidden when both wires point the same way
and the path would cross from right to left, i.e. downward on the higher
of two downward wires or upward on the lower of two upward wires.

Paths are stored as their full event list: every crossing transited, in
travel order, tagged with whether the path switched wires there.  The wire
expression and the node expression (switch crossings only) derive from the
events.  On symplectic diagrams the mirror of a path is its reflection in
the wall, traversed backwards; a path with orientation ``n`` equal to its
own mirror is symmetric.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .diagram import OrientedDiagram, SympWiringDiagram, WiringDiagram, orient
from .weyl import ReducedWord

__all__ = [
    "RigorousPath",
    "enumerate_paths",
    "enumerate_paths_naive",
    "symp_paths",
    "all_symp_paths",
    "mirror",
    "is_symmetric",
    "enclosed_region",
    "extension",
    "extension_by_search",
    "satisfies_maximality",
    "canonical_paths",
    "is_new",
    "path_json",
]


@dataclass(frozen=True)
class RigorousPath:
    """An oriented path, recorded as (crossing index, switched) events."""

    oriented: OrientedDiagram
    events: tuple[tuple[int, bool], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "events", tuple(self.events))

    @property
    def diagram(self):
        return self.oriented.diagram

    @property
    def base(self) -> WiringDiagram:
        return self.oriented.base

    @property
    def k(self) -> int:
        return self.oriented.up_count

    @property
    def start_wire(self) -> int:
        return self.k

    @property
    def end_wire(self) -> int:
        return self.k + 1

    @property
    def node_expression(self) -> tuple[int, ...]:
        return tuple(j for j, switched in self.events if switched)

    @property
    def visited(self) -> tuple[int, ...]:
        return tuple(j for j, _ in self.events)

    @property
    def wire_seq(self) -> tuple[int, ...]:
        """Wires in travel order (the wire expression)."""
        wires = [self.start_wire]
        for j, switched in self.events:
            if switched:
                wires.append(self.base.node(j).other_wire(wires[-1]))
        return tuple(wires)

    @property
    def switch_pairs(self) -> tuple[tuple[int, int, int], ...]:
        """Triples (node, from_wire, to_wire), one per switch event."""
        out = []
        wire = self.start_wire
        for j, switched in self.events:
            if switched:
                nxt = self.base.node(j).other_wire(wire)
                out.append((j, wire, nxt))
                wire = nxt
        return tuple(out)

    @property
    def peaks(self) -> tuple[int, ...]:
        """Crossings where the path turns from ascending to descending."""
        out = []
        for j, frm, to in self.switch_pairs:
            if self.oriented.is_up(frm) and not self.oriented.is_up(to):
                out.append(j)
        return tuple(out)

    def wires_by_name(self) -> tuple[str, ...]:
        d = self.diagram
        if isinstance(d, SympWiringDiagram):
            return tuple(d.wire_name(w) for w in self.wire_seq)
        return tuple(str(w) for w in self.wire_seq)

    def stops(self) -> tuple:
        """'bottom', the visited crossings, 'bottom' - with the wire per leg."""
        legs = []
        wire = self.start_wire
        prev: object = "bottom"
        for j, switched in self.events:
            legs.append((wire, prev, j))
            if switched:
                wire = self.base.node(j).other_wire(wire)
            prev = j
        legs.append((wire, prev, "bottom"))
        return tuple(legs)

    def polyline(self) -> tuple[tuple[int, int], ...]:
        pts: list[tuple[int, int]] = []
        for wire, frm, to in self.stops():
            seg = self.base.wire_slice(wire, frm, to)
            pts.extend(seg if not pts else seg[1:])
        return tuple(pts)

    def segments(self) -> frozenset[tuple[int, int]]:
        """Ids of all wire segments the path runs along, stubs included."""
        return frozenset(self.base.segment_id(wire, frm, to) for wire, frm, to in self.stops())

    def __str__(self) -> str:
        return " -> ".join(self.wires_by_name())


def _make_path(oriented: OrientedDiagram, events) -> RigorousPath:
    return RigorousPath(oriented, tuple(events))


def enumerate_paths(d: OrientedDiagram) -> tuple[RigorousPath, ...]:
    """All rigorous paths on ``d``, sorted by their switch-node sequences."""
    base = d.base
    end_wire = d.up_count + 1
    out: list[RigorousPath] = []
    events: list[tuple[int, bool]] = []
    visited: set[int] = set()

    def run(wire: int, at: int | None) -> None:
        if at is None:
            if not d.is_up(wire) and wire == end_wire:
                out.append(_make_path(d, events))
            return
        if at in visited:
            return
        node = base.node(at)
        other = node.other_wire(wire)
        visited.add(at)
        same_direction = d.is_up(wire) == d.is_up(other)
        pass_ok = not same_direction or (wire > other if d.is_up(wire) else wire < other)
        if pass_ok:
            events.append((at, False))
            run(wire, base.node_on_wire_after(wire, at, downward=not d.is_up(wire)))
            events.pop()
        events.append((at, True))
        run(other, base.node_on_wire_after(other, at, downward=not d.is_up(other)))
        events.pop()
        visited.remove(at)

    run(d.up_count, base.first_node_on_wire(d.up_count, downward=False))
    out.sort(key=lambda p: p.node_expression)
    return tuple(out)


def enumerate_paths_naive(d: OrientedDiagram) -> tuple[RigorousPath, ...]:
    """Oracle enumerator: collect all simple oriented walks, filter afterwards.

    Walks are grown with no turning rule at all; the forbidden-fragment test
    runs as a separate postfilter over the finished walks.
    """
    base = d.base
    end_wire = d.up_count + 1
    walks: list[tuple[tuple[int, bool], ...]] = []
    events: list[tuple[int, bool]] = []
    visited: set[int] = set()

    def grow(wire: int, at: int | None) -> None:
        if at is None:
            if not d.is_up(wire) and wire == end_wire:
                walks.append(tuple(events))
            return
        if at in visited:
            return
        visited.add(at)
        other = base.node(at).other_wire(wire)
        for switched, nxt_wire in ((False, wire), (True, other)):
            events.append((at, switched))
            grow(nxt_wire, base.node_on_wire_after(nxt_wire, at, downward=not d.is_up(nxt_wire)))
            events.pop()
        visited.remove(at)

    def fragment_free(evts) -> bool:
        wire = d.up_count
        for j, switched in evts:
            other = base.node(j).other_wire(wire)
            if switched:
                wire = other
                continue
            if d.is_up(wire) == d.is_up(other):
                if d.is_up(wire) and wire < other:
                    return False
                if not d.is_up(wire) and wire > other:
                    return False
        return True

    grow(d.up_count, base.first_node_on_wire(d.up_count, downward=False))
    paths = [_make_path(d, e) for e in walks if fragment_free(e)]
    paths.sort(key=lambda p: p.node_expression)
    return tuple(paths)


def symp_paths(sd: SympWiringDiagram, k: int) -> tuple[RigorousPath, ...]:
    return enumerate_paths(orient(sd, k))


def all_symp_paths(sd: SympWiringDiagram) -> tuple[RigorousPath, ...]:
    out: list[RigorousPath] = []
    for k in range(1, sd.n + 1):
        out.extend(symp_paths(sd, k))
    return tuple(out)


def mirror(p: RigorousPath) -> RigorousPath:
    """Reflect a symplectic path in the wall and reverse the traversal.

    Sends orientation ``k`` to ``2n - k`` (so ``n`` maps to itself); applying
    it twice gives back the original path.
    """
    sd = p.diagram
    if not isinstance(sd, SympWiringDiagram):
        raise ValueError("mirror needs a path on a symplectic diagram")
    flipped = OrientedDiagram(sd, 2 * sd.n - p.k)
    events = tuple((sd.mirror_node(j), sw) for j, sw in reversed(p.events))
    return RigorousPath(flipped, events)


def is_symmetric(p: RigorousPath) -> bool:
    """Whether a wall-orientation path equals its own mirror."""
    sd = p.diagram
    if not isinstance(sd, SympWiringDiagram) or p.k != sd.n:
        raise ValueError("symmetry is defined for symplectic paths with orientation n")
    return p == mirror(p)


# -- enclosed regions -------------------------------------------------------


def _closed_polygon(p: RigorousPath) -> tuple[tuple, ...]:
    pts = list(p.polyline())
    x_end = pts[-1][0]
    x_start = pts[0][0]
    pts.extend([(x_end, -2), (x_start, -2)])
    return tuple(pts)


def _inside(px: Fraction, py: Fraction, poly) -> bool:
    """Even-odd test with a horizontal ray; ``py`` must avoid all vertex heights."""
    crossings = 0
    n = len(poly)
    for i in range(n):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % n]
        if y1 == y2:
            continue
        lo, hi = (y1, y2) if y1 < y2 else (y2, y1)
        if not (lo < py < hi):
            continue
        x_at = Fraction(x1) + (Fraction(x2) - Fraction(x1)) * (py - y1) / (y2 - y1)
        if x_at > px:
            crossings += 1
    return crossings % 2 == 1


@lru_cache(maxsize=None)
def enclosed_region(p: RigorousPath) -> frozenset[int]:
    """Indices of the chambers between the path and the diagram bottom."""
    base = p.base
    poly = _closed_polygon(p)
    inside = []
    for j in range(1, base.length + 1):
        px, py = base.chamber_rep_point(j)
        if _inside(px, py, poly):
            inside.append(j)
    return frozenset(inside)


def _fragment_in_closure(p: RigorousPath, wire: int, frm, to) -> bool:
    """Whether the wire segment from ``frm`` to ``to`` stays in the closed region of ``p``."""
    base = p.base
    if base.segment_id(wire, frm, to) in p.segments():
        return True
    pts = base.wire_slice(wire, frm, to)
    mx = Fraction(pts[0][0] + pts[1][0], 2)
    my = Fraction(pts[0][1] + pts[1][1], 2)
    return _inside(mx, my, _closed_polygon(p))


# -- extensions -------------------------------------------------------------


def _path_from_nodes(oriented: OrientedDiagram, nodes: tuple[int, ...]) -> RigorousPath:
    """Rebuild a path from its ordered visited crossings; validates the walk."""
    base = oriented.base
    wire = oriented.up_count
    at = base.first_node_on_wire(wire, downward=False)
    events: list[tuple[int, bool]] = []
    for pos, v in enumerate(nodes):
        if at != v:
            raise ValueError(f"node {v} is not next along wire {wire}")
        node = base.node(v)
        other = node.other_wire(wire)
        target = nodes[pos + 1] if pos + 1 < len(nodes) else None
        chosen = None
        for cand, switched in ((wire, False), (other, True)):
            nxt = base.node_on_wire_after(cand, v, downward=not oriented.is_up(cand))
            if target is None:
                ok = nxt is None and not oriented.is_up(cand) and cand == oriented.up_count + 1
            else:
                ok = nxt == target
            if ok:
                chosen = (cand, switched, nxt)
                break
        if chosen is None:
            raise ValueError(f"walk cannot continue from node {v} to {target}")
        wire, switched, at = chosen[0], chosen[1], chosen[2]
        events.append((v, switched))
    if wire != oriented.up_count + 1:
        raise ValueError("walk does not end at the required bottom endpoint")
    return RigorousPath(oriented, tuple(events))


def satisfies_maximality(p: RigorousPath) -> bool:
    """No other path fits inside region(p) union region(mirror(p)) yet leaves region(p).

    Paths with this property give irredundant folded string inequalities.
    """
    union = enclosed_region(p) | enclosed_region(mirror(p))
    own = enclosed_region(p)
    for q in enumerate_paths(p.oriented):
        if q == p:
            continue
        r = enclosed_region(q)
        if r <= union and not r <= own:
            return False
    return True


def _wall_event_index(p: RigorousPath) -> int:
    sd = p.diagram
    hits = [i for i, (j, _) in enumerate(p.events) if sd.on_wall(j)]
    if len(hits) != 1:
        raise ValueError(f"expected exactly one wall transit, found {len(hits)}")
    return hits[0]


def _extend_at_wall(p: RigorousPath) -> RigorousPath:
    """Symmetrize an orientation-n path by splicing it with its mirror at the wall."""
    sd = p.diagram
    t = _wall_event_index(p)
    wall = p.events[t][0]
    prefix = p.events[:t]
    suffix = p.events[t + 1 :]

    def reflect(evts):
        return tuple((sd.mirror_node(j), sw) for j, sw in reversed(evts))

    union = enclosed_region(p) | enclosed_region(mirror(p))
    for half in (prefix + ((wall, True),) + reflect(prefix), reflect(suffix) + ((wall, True),) + suffix):
        cand = _path_from_nodes(p.oriented, tuple(j for j, _ in half))
        if enclosed_region(cand) == union:
            return cand
    raise AssertionError("no wall splice matches the union region")


def _splice(p: RigorousPath, q: RigorousPath) -> RigorousPath:
    """One extension step: reroute ``p`` along the excursion of ``q``."""
    d_nodes = p.visited
    q_nodes = q.visited
    legs = q.stops()[1:]  # fragments after the entry stub: (wire, from, to)
    own_closure = [
        _fragment_in_closure(p, wire, frm, to) for wire, frm, to in legs
    ]
    u1 = next(i for i, ok in enumerate(own_closure) if not ok)
    u2 = next(i for i in range(u1 + 1, len(legs)) if own_closure[i])
    # legs[i] runs from q_nodes[i] to q_nodes[i+1] (or the exit stub at the end)
    v1 = d_nodes.index(q_nodes[u1])
    v2 = d_nodes.index(q_nodes[u2])
    merged = d_nodes[: v1 + 1] + q_nodes[u1 + 1 : u2 + 1] + d_nodes[v2 + 1 :]
    return _path_from_nodes(p.oriented, merged)


def extension(p: RigorousPath) -> RigorousPath:
    """The unique maximal reroute of ``p`` inside region(p) union region(mirror(p)).

    For orientation ``n`` the result is the symmetric path filling the whole
    union.  For smaller orientations the path is grown by splicing in any
    path that escapes region(p) while staying inside the union, until the
    maximality property holds.  Symmetric paths and already-maximal paths
    come back unchanged; the operation is idempotent.
    """
    sd = p.diagram
    if not isinstance(sd, SympWiringDiagram) or p.k > sd.n:
        raise ValueError("extension applies to symplectic paths with orientation <= n")
    if p.k == sd.n:
        return p if is_symmetric(p) else _extend_at_wall(p)
    union = enclosed_region(p) | enclosed_region(mirror(p))
    current = p
    while True:
        own = enclosed_region(current)
        escape = None
        for q in enumerate_paths(p.oriented):
            if q == current:
                continue
            r = enclosed_region(q)
            if r <= union and not r <= own:
                escape = q
                break
        if escape is None:
            return current
        grown = _splice(current, escape)
        if not enclosed_region(grown) > own:
            raise AssertionError("extension splice failed to grow the region")
        current = grown


def extension_by_search(p: RigorousPath) -> RigorousPath:
    """Oracle for `extension`: pick the region-maximal path inside the union."""
    union = enclosed_region(p) | enclosed_region(mirror(p))
    candidates = [q for q in enumerate_paths(p.oriented) if enclosed_region(q) <= union]
    best = [
        q
        for q in candidates
        if all(enclosed_region(r) <= enclosed_region(q) for r in candidates)
    ]
    if len(best) != 1:
        raise AssertionError(f"expected a unique maximal candidate, found {len(best)}")
    return best[0]


# -- canonical paths ----------------------------------------------------------


def _wire_position_at(base: WiringDiagram, wire: int, level: int) -> int:
    return base.arrangements[level].index(wire) + 1


def _below_wire(sd: SympWiringDiagram, path: RigorousPath, wire: int) -> bool:
    """Whether the path stays weakly below the given extreme wire (1 or 2n).

    Wire 2n descends monotonically from top right to bottom left, so the
    region below it lies strictly to its right; for wire 1 it is the other
    way around.  Crossings on the wire itself count as below.
    """
    base = sd.base
    for v in path.visited:
        node = base.node(v)
        if wire in node.wires:
            continue
        pos = _wire_position_at(base, wire, v - 1)
        if wire == 2 * sd.n:
            if not node.column >= pos:
                return False
        else:
            if not node.column < pos:
                return False
    return True


def _strictly_decreasing(seq) -> bool:
    return all(a > b for a, b in zip(seq, seq[1:]))


def _canonical_lift_path(sd: SympWiringDiagram, j: int) -> RigorousPath:
    """The single-peaked staircase path of the lifted diagram peaking at wire j vs 2n."""
    base = sd.base
    top_wire = 2 * sd.n
    peak = next(nd.index for nd in base.nodes if nd.wires == (j, top_wire))
    found: list[RigorousPath] = []
    for u in range(1, 2 * sd.n):
        for p in enumerate_paths(OrientedDiagram(sd, u)):
            if p.peaks != (peak,):
                continue
            if not _below_wire(sd, p, top_wire):
                continue
            ws = p.wire_seq
            if top_wire not in ws:
                continue
            cut = ws.index(top_wire)
            if cut == 0 or ws[cut - 1] != j:
                continue
            if not (_strictly_decreasing(ws[:cut]) and _strictly_decreasing(ws[cut + 1 :])):
                continue
            start = p.start_wire
            pre_peak_ok = True
            wire = start
            for ev, switched in p.events:
                if ev == peak:
                    break
                other = base.node(ev).other_wire(wire)
                if other > start:
                    pre_peak_ok = False
                    break
                if switched:
                    wire = other
            if pre_peak_ok:
                found.append(p)
    if len(found) != 1:
        raise AssertionError(
            f"expected one canonical lifted path peaking at wires ({j}, {top_wire}), found {len(found)}"
        )
    return found[0]


def canonical_paths(sd: SympWiringDiagram) -> tuple[RigorousPath, ...]:
    """The canonical symplectic rigorous paths, one per node on the last barred wire.

    Each arises from a single-peaked staircase path of the lifted diagram:
    mirror it into an orientation at most ``n``, then extend.  For rank at
    least 3 they are pairwise distinct and there are exactly ``2n - 1``.
    """
    out: list[RigorousPath] = []
    for j in range(1, 2 * sd.n):
        p = _canonical_lift_path(sd, j)
        if p.k > sd.n:
            p = mirror(p)
        out.append(extension(p))
    unique: list[RigorousPath] = []
    for p in out:
        if p not in unique:
            unique.append(p)
    if sd.n >= 3 and len(unique) != 2 * sd.n - 1:
        raise AssertionError(f"expected {2 * sd.n - 1} canonical paths, found {len(unique)}")
    return tuple(unique)


def is_new(p: RigorousPath, w: ReducedWord) -> bool:
    """Whether the path uses the outermost wire pair, so does not descend from
    the contracted word's diagram."""
    if w.rank < 3:
        raise ValueError("newness is relative to a contraction, which needs rank >= 3")
    sd = p.diagram
    if not isinstance(sd, SympWiringDiagram):
        raise ValueError("is_new expects a symplectic path")
    return 1 in p.wire_seq or 2 * sd.n in p.wire_seq


def path_json(p: RigorousPath) -> dict:
    sd = p.diagram
    payload = {
        "k": p.oriented.k_display,
        "wires": list(p.wires_by_name()),
        "nodes": list(p.node_expression),
        "peaks": list(p.peaks),
    }
    if isinstance(sd, SympWiringDiagram):
        payload["node_labels"] = [sd.label_str(j) for j in p.node_expression]
        if p.k == sd.n:
            payload["symmetric"] = is_symmetric(p)
    return payload
