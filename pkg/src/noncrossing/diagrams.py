"""Arc diagrams over a line of labelled vertices.

A diagram places vertices 1..n on a horizontal line and draws each arc
(i, j), i <= j, in the upper halfplane; (j, j) is a loop at j.  Two
refinements are implemented:

* ``PartitionDiagram`` -- the standard arc encoding of a set partition:
  no loops, and every vertex starts at most one arc and ends at most one
  arc.  The arcs are exactly the consecutive-element pairs of the blocks.
* ``BraidDiagram`` -- every vertex of degree two carries either a loop
  (j, j) or a pair (i, j), (j, h) with i < j < h, which by convention
  cross at j.

The central statistic is the size of the largest set of mutually
crossing arcs.  For partitions a set {(i_1,j_1),...,(i_m,j_m)} is
mutually crossing when i_1 < ... < i_m < j_1 < ... < j_m.  For braids
the middle inequality relaxes to i_m <= j_1, so chains sharing the
vertex i_m = j_1 also count; loops never join a crossing set of size
two or more.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

Arc = tuple[int, int]


class InvalidDiagramError(ValueError):
    """Arcs violate the structural rules of the requested diagram class."""


@dataclass(frozen=True)
class ArcDiagram:
    """Base diagram: n vertices, arcs stored sorted with loops as (j, j).

    Every vertex has degree at most two, where a loop contributes two to
    the degree of its vertex, and no non-loop arc repeats.  n = 0 is the
    empty diagram.
    """

    n: int
    arcs: tuple[Arc, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "arcs", tuple(sorted((i, j) for i, j in self.arcs)))
        self._check()

    def _check(self) -> None:
        if self.n < 0:
            raise InvalidDiagramError(f"vertex count must be >= 0, got {self.n}")
        degree: dict[int, int] = {}
        seen: set[Arc] = set()
        for i, j in self.arcs:
            if not (1 <= i <= j <= self.n):
                raise InvalidDiagramError(f"arc {(i, j)} out of range for n={self.n}")
            if (i, j) in seen:
                raise InvalidDiagramError(f"repeated arc {(i, j)}")
            seen.add((i, j))
            degree[i] = degree.get(i, 0) + 1
            degree[j] = degree.get(j, 0) + 1
        for v, d in degree.items():
            if d > 2:
                raise InvalidDiagramError(f"vertex {v} has degree {d} > 2")

    def degree(self, v: int) -> int:
        return sum((i == v) + (j == v) for i, j in self.arcs)

    def origins(self) -> set[int]:
        """Vertices that start an arc; a loop makes its vertex an origin."""
        return {i for i, _ in self.arcs}

    def endpoints(self) -> set[int]:
        """Vertices that end an arc; a loop makes its vertex an endpoint."""
        return {j for _, j in self.arcs}

    def isolated_vertices(self) -> tuple[int, ...]:
        touched = self.origins() | self.endpoints()
        return tuple(v for v in range(1, self.n + 1) if v not in touched)

    def loops(self) -> tuple[int, ...]:
        return tuple(i for i, j in self.arcs if i == j)


class PartitionDiagram(ArcDiagram):
    """Arc form of a set partition of [n]."""

    def _check(self) -> None:
        super()._check()
        lefts: set[int] = set()
        rights: set[int] = set()
        for i, j in self.arcs:
            if i == j:
                raise InvalidDiagramError(f"partition diagram cannot contain loop {(i, j)}")
            if i in lefts:
                raise InvalidDiagramError(f"vertex {i} starts two arcs")
            if j in rights:
                raise InvalidDiagramError(f"vertex {j} ends two arcs")
            lefts.add(i)
            rights.add(j)


class BraidDiagram(ArcDiagram):
    """Braid diagram: degree-two vertices are loops or crossing pairs."""

    def _check(self) -> None:
        super()._check()
        starts: dict[int, int] = {}
        ends: dict[int, int] = {}
        for i, j in self.arcs:
            if i == j:
                continue
            starts[i] = starts.get(i, 0) + 1
            ends[j] = ends.get(j, 0) + 1
        for v in range(1, self.n + 1):
            s, e = starts.get(v, 0), ends.get(v, 0)
            if s > 1:
                raise InvalidDiagramError(f"vertex {v} starts two non-loop arcs")
            if e > 1:
                raise InvalidDiagramError(f"vertex {v} ends two non-loop arcs")
            # degree-2 non-loop vertices must be endpoint-then-origin,
            # i.e. arcs (i, v), (v, h): one in, one out.  s == e == 1 is
            # exactly that; s == 2 or e == 2 was rejected above.


# -- block view of partitions -------------------------------------------------


def partition_from_blocks(blocks: Iterable[Iterable[int]]) -> PartitionDiagram:
    """Build the arc diagram of a set partition given as blocks.

    The blocks must be disjoint, nonempty, and cover [n] where n is the
    largest element.  Arcs join consecutive elements of each block.
    """
    seen: set[int] = set()
    arcs: list[Arc] = []
    for block in blocks:
        elems = sorted(block)
        if not elems:
            raise InvalidDiagramError("empty block")
        for v in elems:
            if v < 1:
                raise InvalidDiagramError(f"vertex {v} out of range")
            if v in seen:
                raise InvalidDiagramError(f"vertex {v} appears in two blocks")
            seen.add(v)
        arcs.extend(zip(elems, elems[1:]))
    n = max(seen, default=0)
    if len(seen) != n:
        missing = sorted(set(range(1, n + 1)) - seen)
        raise InvalidDiagramError(f"blocks do not cover [n]: missing {missing}")
    return PartitionDiagram(n, tuple(arcs))


def partition_blocks(p: PartitionDiagram) -> tuple[tuple[int, ...], ...]:
    """Blocks of the set partition, as the connected components of the arcs.

    Canonical form: each block ascending, blocks ordered by least element.
    Round-trips with :func:`partition_from_blocks`.
    """
    succ = {i: j for i, j in p.arcs}
    has_pred = {j for _, j in p.arcs}
    blocks = []
    for v in range(1, p.n + 1):
        if v in has_pred:
            continue
        block = [v]
        while block[-1] in succ:
            block.append(succ[block[-1]])
        blocks.append(tuple(block))
    return tuple(blocks)


# -- crossing statistics -------------------------------------------------------


def crossing_number_of_arcs(arcs: Iterable[Arc], shared_endpoint: bool) -> int:
    """Largest m admitting arcs with i_1 < ... < i_m </<= j_1 < ... < j_m.

    With ``shared_endpoint`` the middle comparison is <= (equality only
    realisable as i_m = j_1), which is the braid convention; otherwise
    it is strict, the partition convention.

    Every arc of such a set spans the cut c = i_m, so the maximum is
    found by scanning cuts: among the arcs spanning a cut, a mutually
    crossing set is exactly a subset whose left and right endpoints both
    increase strictly, i.e. a longest increasing subsequence.
    """
    arcs = sorted(arcs)
    best = 0
    for c in {i for i, _ in arcs}:
        if shared_endpoint:
            window = [(i, j) for i, j in arcs if i <= c <= j]
        else:
            window = [(i, j) for i, j in arcs if i <= c < j]
        best = max(best, _longest_chain(window))
    return best


def _longest_chain(arcs: list[Arc]) -> int:
    """Longest subsequence strictly increasing in both coordinates."""
    best = [0] * len(arcs)
    for t, (i, j) in enumerate(arcs):
        best[t] = 1 + max(
            (best[s] for s in range(t) if arcs[s][0] < i and arcs[s][1] < j),
            default=0,
        )
    return max(best, default=0)


def partition_crossing_number(p: PartitionDiagram) -> int:
    return crossing_number_of_arcs(p.arcs, shared_endpoint=False)


def braid_crossing_number(b: BraidDiagram) -> int:
    return crossing_number_of_arcs(b.arcs, shared_endpoint=True)


def is_k_noncrossing(d: PartitionDiagram | BraidDiagram, k: int) -> bool:
    """True when the diagram has no k mutually crossing arcs (class rules)."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if isinstance(d, PartitionDiagram):
        return partition_crossing_number(d) < k
    if isinstance(d, BraidDiagram):
        return braid_crossing_number(d) < k
    raise TypeError(f"expected a partition or braid diagram, got {type(d).__name__}")


def is_two_regular(p: PartitionDiagram) -> bool:
    """True when no arc joins adjacent vertices (i, i+1)."""
    return all(j != i + 1 for i, j in p.arcs)


def has_isolated_points(b: BraidDiagram) -> bool:
    return bool(b.isolated_vertices())


# -- braids as loop-decorated partitions ---------------------------------------


def strip_loops(b: BraidDiagram) -> PartitionDiagram:
    """Forget the loops of a braid, reading the rest as partition arcs.

    Vertices that carried loops become isolated.  On braids without
    isolated points this is injective and inverted by
    :func:`loop_isolated_vertices`.
    """
    return PartitionDiagram(b.n, tuple(a for a in b.arcs if a[0] != a[1]))


def loop_isolated_vertices(p: PartitionDiagram) -> BraidDiagram:
    """Read partition arcs as braid arcs, looping every isolated vertex.

    Shared endpoints (i, v), (v, h) take the braid crossing convention.
    The result never has isolated points.
    """
    loops = tuple((v, v) for v in p.isolated_vertices())
    return BraidDiagram(p.n, p.arcs + loops)


# -- text format ----------------------------------------------------------------


def format_diagram(d: ArcDiagram) -> str:
    """Canonical one-line form ``n=<int>; arcs=(i,j)(i,j)...``."""
    body = "".join(f"({i},{j})" for i, j in d.arcs)
    return f"n={d.n}; arcs={body}"


def parse_diagram(text: str) -> tuple[int, tuple[Arc, ...]]:
    """Parse the text format back into (n, arcs); inverse of format_diagram."""
    text = text.strip()
    try:
        head, body = text.split("; arcs=", 1)
        if not head.startswith("n="):
            raise ValueError
        n = int(head[2:])
    except ValueError:
        raise ValueError(f"bad diagram syntax: {text!r}") from None
    arcs: list[Arc] = []
    rest = body
    while rest:
        if not rest.startswith("(") or ")" not in rest:
            raise ValueError(f"bad arc list: {body!r}")
        item, rest = rest[1:].split(")", 1)
        i, _, j = item.partition(",")
        arcs.append((int(i), int(j)))
    return n, tuple(arcs)


# -- svg rendering ---------------------------------------------------------------

_SVG_UNIT = 40  # horizontal pixels between adjacent vertices


def diagram_svg(d: ArcDiagram) -> str:
    """Deterministic SVG: vertices on a baseline, arcs as semicircles above,
    loops as small circles sitting on their vertex."""
    margin = _SVG_UNIT
    base_y = 30 + _SVG_UNIT * max((j - i for i, j in d.arcs), default=0) // 2
    width = 2 * margin + _SVG_UNIT * max(d.n - 1, 0)
    height = base_y + 30
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<line x1="{margin}" y1="{base_y}" x2="{width - margin}" y2="{base_y}" '
        'stroke="black" stroke-width="1"/>',
    ]
    x_of = lambda v: margin + _SVG_UNIT * (v - 1)
    for i, j in d.arcs:
        if i == j:
            parts.append(
                f'<circle cx="{x_of(i)}" cy="{base_y - 8}" r="8" '
                'fill="none" stroke="black"/>'
            )
        else:
            r = _SVG_UNIT * (j - i) / 2
            parts.append(
                f'<path d="M {x_of(i)} {base_y} A {r:g} {r:g} 0 0 1 {x_of(j)} {base_y}" '
                'fill="none" stroke="black"/>'
            )
    for v in range(1, d.n + 1):
        parts.append(f'<circle cx="{x_of(v)}" cy="{base_y}" r="2.5" fill="black"/>')
        parts.append(
            f'<text x="{x_of(v)}" y="{base_y + 16}" font-size="11" '
            f'text-anchor="middle">{v}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts)
