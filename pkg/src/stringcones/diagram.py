"""Wiring diagrams for reduced words, their symplectic folds, and chambers.

A reduced word ``(c_1, ..., c_l)`` in type A with ``m`` wires draws as ``m``
vertical wires crossing once per letter: the ``j``-th crossing (counted from
the top) swaps the wires at positions ``c_j`` and ``c_j + 1``.  Wire ``k``
starts at top position ``k`` and ends at bottom position ``m + 1 - k``; its
endpoints are labelled ``U_k`` (top) and ``L_k`` (bottom).

Integer drawing coordinates, used both for exact region computations and
for SVG output: position ``p`` sits at ``x = 2p - 1``; the crossing of
letter ``j`` occupies the slab ``y in [2(l-j), 2(l-j) + 2]`` with its centre
at ``(2 c_j, 2(l-j) + 1)``.  Crossing centres thus have even x and odd y
while wire corners have odd x and even y, which keeps all point-location
predicates away from degenerate cases.

A type-B/C word of rank ``n`` folds out to its lifted type-A word on ``2n``
wires; the resulting symplectic wiring diagram is mirror symmetric about
the wall, the vertical line between positions ``n`` and ``n + 1``.  Wires
``n+1, ..., 2n`` are displayed as the barred wires ``nb, ..., 1b``.  The two
crossings produced by a letter ``x != n`` of the underlying word carry twin
labels: ``tbar_j`` in column ``x`` and ``t_j`` in column ``2n - x``; a letter
``n`` yields the single wall node ``t_j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from ._linalg import det_int
from .weyl import ReducedWord, lift

__all__ = [
    "Node",
    "WiringDiagram",
    "SympWiringDiagram",
    "OrientedDiagram",
    "ChamberStructure",
    "build_diagram",
    "build_symp_diagram",
    "orient",
    "chamber_structure",
    "diagram_json",
]


@dataclass(frozen=True)
class Node:
    """One crossing: ``index`` counts from the top, ``column`` is the swap gap."""

    index: int
    column: int
    left_above: int  # wire at position `column` just above the crossing
    right_above: int  # wire at position `column + 1` just above

    @property
    def wires(self) -> tuple[int, int]:
        a, b = self.left_above, self.right_above
        return (a, b) if a < b else (b, a)

    def other_wire(self, wire: int) -> int:
        if wire == self.left_above:
            return self.right_above
        if wire == self.right_above:
            return self.left_above
        raise ValueError(f"wire {wire} does not pass through node {self.index}")


class WiringDiagram:
    """The wiring diagram of a type-A reduced word.

    Hashable by identity; all contents are immutable after construction.
    """

    def __init__(self, word: ReducedWord):
        if word.lie_type.family != "A":
            raise ValueError("WiringDiagram expects a type-A word; fold B/C words first")
        self.word = word
        self.m = word.rank + 1
        self.length = len(word.letters)

        nodes: list[Node] = []
        arr = list(range(1, self.m + 1))
        arrangements = [tuple(arr)]
        for j, c in enumerate(word.letters, start=1):
            nodes.append(Node(j, c, arr[c - 1], arr[c]))
            arr[c - 1], arr[c] = arr[c], arr[c - 1]
            arrangements.append(tuple(arr))
        self.nodes = tuple(nodes)
        self.arrangements = tuple(arrangements)

        per_wire: dict[int, list[int]] = {w: [] for w in range(1, self.m + 1)}
        for nd in nodes:
            per_wire[nd.left_above].append(nd.index)
            per_wire[nd.right_above].append(nd.index)
        self.wire_nodes = {w: tuple(v) for w, v in per_wire.items()}

    # -- basic lookups ----------------------------------------------------

    def node(self, j: int) -> Node:
        return self.nodes[j - 1]

    def node_on_wire_after(self, wire: int, j: int, downward: bool) -> int | None:
        """The next node on ``wire`` below (or above) node ``j``; None at the end."""
        seq = self.wire_nodes[wire]
        k = seq.index(j)
        if downward:
            return seq[k + 1] if k + 1 < len(seq) else None
        return seq[k - 1] if k > 0 else None

    def first_node_on_wire(self, wire: int, downward: bool) -> int:
        seq = self.wire_nodes[wire]
        return seq[0] if downward else seq[-1]

    # -- drawing coordinates ----------------------------------------------

    def node_center(self, j: int) -> tuple[int, int]:
        nd = self.node(j)
        return (2 * nd.column, 2 * (self.length - j) + 1)

    @cached_property
    def _wire_polylines(self) -> dict[int, tuple[tuple[int, int], ...]]:
        top = 2 * self.length + 1
        out: dict[int, tuple[tuple[int, int], ...]] = {}
        for w in range(1, self.m + 1):
            x = 2 * w - 1
            pts: list[tuple[int, int]] = [(x, top)]
            pos = w
            for j in self.wire_nodes[w]:
                nd = self.node(j)
                y_top = 2 * (self.length - j) + 2
                pts.append((x, y_top))
                pts.append(self.node_center(j))
                pos = nd.column + 1 if pos == nd.column else nd.column
                x = 2 * pos - 1
                pts.append((x, y_top - 2))
            pts.append((x, -1))
            deduped = [pts[0]]
            for p in pts[1:]:  # adjacent crossings make zero-length corners
                if p != deduped[-1]:
                    deduped.append(p)
            out[w] = tuple(deduped)
        return out

    def wire_polyline(self, wire: int) -> tuple[tuple[int, int], ...]:
        """Drawn course of a wire, top to bottom, including crossing centres."""
        return self._wire_polylines[wire]

    def wire_slice(self, wire: int, frm, to) -> tuple[tuple[int, int], ...]:
        """Polyline along ``wire`` between node indices or 'top'/'bottom'."""
        pts = self._wire_polylines[wire]
        index = {}
        for k, p in enumerate(pts):
            index[p] = k

        def locate(spot) -> int:
            if spot == "top":
                return 0
            if spot == "bottom":
                return len(pts) - 1
            return index[self.node_center(spot)]

        a, b = locate(frm), locate(to)
        if a <= b:
            return pts[a : b + 1]
        return tuple(reversed(pts[b : a + 1]))

    def bottom_position(self, wire: int) -> int:
        return self.m + 1 - wire

    # -- chambers -----------------------------------------------------------

    def chamber_rep_point(self, j: int) -> tuple[Fraction, Fraction]:
        """A point interior to the chamber whose top node is ``a_j``."""
        x, y = self.node_center(j)
        return (Fraction(x), Fraction(2 * y - 1, 2))

    def segment_id(self, wire: int, a, b) -> tuple[int, int]:
        """Identify the wire segment between consecutive stops ``a`` and ``b``.

        Stops are node indices or 'top'/'bottom'; the id is (wire, slot) with
        slot 0 for the top stub and slot k after the k-th node on the wire.
        """
        seq = self.wire_nodes[wire]

        def slot(spot) -> int:
            if spot == "top":
                return -1
            if spot == "bottom":
                return len(seq)
            return seq.index(spot)

        sa, sb = slot(a), slot(b)
        if abs(sa - sb) != 1:
            raise ValueError(f"{a} and {b} are not consecutive on wire {wire}")
        return (wire, min(sa, sb) + 1)

    def __repr__(self) -> str:
        return f"WiringDiagram({self.word})"


@dataclass(frozen=True)
class ChamberStructure:
    """Chambers of a wiring diagram and the chamber-variable change of basis.

    Chamber ``j`` is the region directly below node ``a_j``.  ``i_plus[j]``
    holds the boundary nodes in the same column as ``a_j`` (always ``a_j``
    itself plus the next crossing straight below, when there is one), and
    ``i_minus[j]`` the boundary nodes one column off.  Row ``j`` of
    ``phi_rows`` expresses the chamber variable ``u_j`` in the crossing
    coordinates: +1 on ``i_plus[j]``, -1 on ``i_minus[j]``.
    """

    diagram: WiringDiagram
    i_plus: tuple[frozenset[int], ...]
    i_minus: tuple[frozenset[int], ...]
    phi_rows: tuple[tuple[int, ...], ...]

    @cached_property
    def det(self) -> int:
        return det_int([list(r) for r in self.phi_rows])

    def u_form(self, j: int) -> tuple[int, ...]:
        return self.phi_rows[j - 1]


def chamber_structure(d: WiringDiagram) -> ChamberStructure:
    length = d.length
    letters = d.word.letters
    i_plus: list[frozenset[int]] = []
    i_minus: list[frozenset[int]] = []
    rows: list[tuple[int, ...]] = []
    for j in range(1, length + 1):
        c = letters[j - 1]
        nxt = next((k for k in range(j + 1, length + 1) if letters[k - 1] == c), None)
        stop = nxt if nxt is not None else length + 1
        plus = {j} | ({nxt} if nxt is not None else set())
        minus = {k for k in range(j + 1, stop) if abs(letters[k - 1] - c) == 1}
        i_plus.append(frozenset(plus))
        i_minus.append(frozenset(minus))
        row = [0] * length
        for k in plus:
            row[k - 1] = 1
        for k in minus:
            row[k - 1] = -1
        rows.append(tuple(row))
    return ChamberStructure(d, tuple(i_plus), tuple(i_minus), tuple(rows))


class SympWiringDiagram:
    """The mirror-symmetric wiring diagram of a folded type-B/C word.

    Combinatorially this is the wiring diagram of the lifted type-A word;
    the extra structure is the wall, barred wire names, and the twin node
    labels t_j / tbar_j attached to each letter of the underlying word.
    """

    def __init__(self, word: ReducedWord):
        if not word.lie_type.is_doubled:
            raise ValueError("SympWiringDiagram expects a type-B or type-C word")
        self.word = word
        self.n = word.rank
        self.lift_word = lift(word)
        self.base = WiringDiagram(self.lift_word)
        self.m = 2 * self.n

        labels: list[tuple[str, int]] = []
        anode_of: dict[tuple[str, int], int] = {}
        for j, x in enumerate(word.letters, start=1):
            if x == self.n:
                labels.append(("t", j))
            else:
                labels.extend((("tbar", j), ("t", j)))
        for a_index, lab in enumerate(labels, start=1):
            anode_of[lab] = a_index
        self._labels = tuple(labels)
        self._anode_of = anode_of
        self.wall_nodes = frozenset(
            a for a in range(1, self.base.length + 1) if self.base.node(a).column == self.n
        )

    # -- labels -------------------------------------------------------------

    def label(self, a_index: int) -> tuple[str, int]:
        return self._labels[a_index - 1]

    def label_str(self, a_index: int) -> str:
        kind, j = self.label(a_index)
        return f"{kind}{j}"

    def anode(self, kind: str, j: int) -> int:
        return self._anode_of[(kind, j)]

    def letter_of_node(self, a_index: int) -> int:
        return self.word.letters[self.label(a_index)[1] - 1]

    def on_wall(self, a_index: int) -> bool:
        return a_index in self.wall_nodes

    def mirror_node(self, a_index: int) -> int:
        kind, j = self.label(a_index)
        if self.on_wall(a_index):
            return a_index
        return self.anode("t" if kind == "tbar" else "tbar", j)

    def mirror_wire(self, wire: int) -> int:
        return 2 * self.n + 1 - wire

    def wire_name(self, wire: int) -> str:
        if wire <= self.n:
            return str(wire)
        return f"{2 * self.n + 1 - wire}b"

    def wire_from_name(self, name: str) -> int:
        name = name.strip()
        if name.endswith("b"):
            k = int(name[:-1])
            if not 1 <= k <= self.n:
                raise ValueError(f"no wire named {name!r}")
            return 2 * self.n + 1 - k
        k = int(name)
        if not 1 <= k <= self.n:
            raise ValueError(f"no wire named {name!r}")
        return k

    def __repr__(self) -> str:
        return f"SympWiringDiagram({self.word.lie_type}, {self.word})"


@dataclass(frozen=True)
class OrientedDiagram:
    """A (symplectic) wiring diagram with the first ``up_count`` wires upward.

    ``up_count`` always refers to unbarred type-A wire indices; for a
    symplectic diagram with orientation ``k`` it equals ``k``, and for the
    barred orientation ``kb`` it equals ``2n + 1 - k``.
    """

    diagram: WiringDiagram | SympWiringDiagram
    up_count: int

    @property
    def base(self) -> WiringDiagram:
        d = self.diagram
        return d.base if isinstance(d, SympWiringDiagram) else d

    @property
    def is_symplectic(self) -> bool:
        return isinstance(self.diagram, SympWiringDiagram)

    def is_up(self, wire: int) -> bool:
        return wire <= self.up_count

    @property
    def k_display(self) -> str:
        if self.is_symplectic and self.up_count > self.diagram.n:
            return f"{2 * self.diagram.n + 1 - self.up_count}b"
        return str(self.up_count)


def build_diagram(w: ReducedWord) -> WiringDiagram:
    return WiringDiagram(w)


def build_symp_diagram(w: ReducedWord) -> SympWiringDiagram:
    return SympWiringDiagram(w)


def orient(d: WiringDiagram | SympWiringDiagram, k: int, barred: bool = False) -> OrientedDiagram:
    """Orient a diagram: wires 1..k upward (or 1..n, nb..kb for barred k)."""
    if isinstance(d, SympWiringDiagram):
        if barred:
            if not 2 <= k <= d.n:
                raise ValueError(f"barred orientation index {k} out of range 2..{d.n}")
            return OrientedDiagram(d, 2 * d.n + 1 - k)
        if not 1 <= k <= d.n:
            raise ValueError(f"orientation index {k} out of range 1..{d.n}")
        return OrientedDiagram(d, k)
    if barred:
        raise ValueError("barred orientations only exist on symplectic diagrams")
    if not 1 <= k <= d.m - 1:
        raise ValueError(f"orientation index {k} out of range 1..{d.m - 1}")
    return OrientedDiagram(d, k)


def diagram_json(d: WiringDiagram | SympWiringDiagram) -> dict:
    """JSON-ready description: wires, nodes, chambers (and wall data if any)."""
    base = d.base if isinstance(d, SympWiringDiagram) else d
    ch = chamber_structure(base)
    nodes = []
    for nd in base.nodes:
        entry = {
            "index": nd.index,
            "column": nd.column,
            "wires": list(nd.wires),
        }
        if isinstance(d, SympWiringDiagram):
            entry["label"] = d.label_str(nd.index)
            entry["wall"] = d.on_wall(nd.index)
            entry["wires"] = [d.wire_name(w) for w in nd.wires]
        nodes.append(entry)
    payload = {
        "word": str(base.word if not isinstance(d, SympWiringDiagram) else d.word),
        "wire_count": base.m,
        "wires": [
            d.wire_name(w) if isinstance(d, SympWiringDiagram) else str(w)
            for w in range(1, base.m + 1)
        ],
        "nodes": nodes,
        "chambers": [
            {
                "top_node": j,
                "plus": sorted(ch.i_plus[j - 1]),
                "minus": sorted(ch.i_minus[j - 1]),
            }
            for j in range(1, base.length + 1)
        ],
    }
    if isinstance(d, SympWiringDiagram):
        payload["type"] = str(d.word.lie_type)
        payload["wall_nodes"] = sorted(d.wall_nodes)
    return payload
