"""Vacillating tableaux and their correspondence with arc diagrams.

A vacillating tableau of length 2n is a sequence of Young-diagram shapes
empty = s^0, s^1, ..., s^2n = empty in which each vertex i contributes
the two half-steps (s^{2i-2} -> s^{2i-1} -> s^{2i}).  Two step
disciplines are used:

* partition steps: the odd half may remove a square or do nothing, the
  even half may add a square or do nothing;
* braid steps: the legal pairs are (do nothing, do nothing),
  (add, remove), (do nothing, add) and (remove, do nothing).

The translation to diagrams scans vertices left to right while
maintaining a filling (a partial standard Young tableau whose entries
are the currently open origins):

* an "add at row h" half-step at vertex i places the entry i, the
  current maximum, at the end of row h;
* a "remove at row h" half-step reverse-bumps from the corner of row h.
  Walking upward, the carried value replaces the largest smaller entry
  of each row; the value e finally ejected from the top row closes the
  arc (e, i).  Under braid steps a vertex may place i and immediately
  eject it again, which is how loops (i, i) arise.

The inverse direction scans the diagram right to left, undoing each
half-step: an ejection is undone by ordinary row insertion of the arc
partner (bump the smallest larger entry downward), a placement is
undone by deleting the entry i, which at that moment is maximal and
therefore sits at a removable corner.  Because insertion and reverse
bumping are mutually inverse, the two scans are exact inverses, and the
maximal number of rows used equals the diagram's crossing number.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .diagrams import BraidDiagram, PartitionDiagram

Shape = tuple[int, ...]
HalfStep = tuple[str, int] | None  # ('+', row) adds, ('-', row) removes
StepPair = tuple[HalfStep, HalfStep]  # (odd half-step, even half-step)

PARTITION_STEPS = "partition"
BRAID_STEPS = "braid"


class MalformedTableauError(ValueError):
    """The shape sequence breaks the vacillating tableau rules."""


# -- shapes ---------------------------------------------------------------------


def is_shape(rows: Sequence[int]) -> bool:
    return all(r >= 1 for r in rows) and all(
        rows[h] >= rows[h + 1] for h in range(len(rows) - 1)
    )


def add_square(shape: Shape, row: int) -> Shape:
    """Shape with one more square in the given 1-indexed row."""
    if row < 1 or row > len(shape) + 1:
        raise MalformedTableauError(f"cannot add at row {row} of {shape}")
    rows = list(shape) + [0] * (row - len(shape))
    rows[row - 1] += 1
    if not is_shape(rows):
        raise MalformedTableauError(f"adding at row {row} of {shape} is illegal")
    return tuple(rows)


def remove_square(shape: Shape, row: int) -> Shape:
    if row < 1 or row > len(shape):
        raise MalformedTableauError(f"cannot remove at row {row} of {shape}")
    rows = list(shape)
    rows[row - 1] -= 1
    if rows[-1] == 0:
        rows.pop()
    if not is_shape(rows):
        raise MalformedTableauError(f"removing at row {row} of {shape} is illegal")
    return tuple(rows)


def half_step(prev: Shape, nxt: Shape) -> HalfStep:
    """The half-step turning prev into nxt, or raise if they differ by
    more than one square."""
    if prev == nxt:
        return None
    for row in range(1, max(len(prev), len(nxt)) + 1):
        a = prev[row - 1] if row <= len(prev) else 0
        b = nxt[row - 1] if row <= len(nxt) else 0
        if a == b:
            continue
        if b == a + 1 and add_square(prev, row) == nxt:
            return ("+", row)
        if b == a - 1 and remove_square(prev, row) == nxt:
            return ("-", row)
        break
    raise MalformedTableauError(f"shapes {prev} -> {nxt} differ by more than one square")


def _legal_pair(pair: StepPair, step_set: str) -> bool:
    odd, even = pair
    if step_set == PARTITION_STEPS:
        odd_ok = odd is None or odd[0] == "-"
        even_ok = even is None or even[0] == "+"
        return odd_ok and even_ok
    if step_set == BRAID_STEPS:
        if odd is None:
            return even is None or even[0] == "+"
        if odd[0] == "+":
            return even is not None and even[0] == "-"
        return even is None  # odd removes
    raise ValueError(f"unknown step set {step_set!r}")


# -- tableaux ---------------------------------------------------------------------


@dataclass(frozen=True)
class VacillatingTableau:
    """Shape sequence of length 2n+1 with a declared step discipline.

    k_bound, when set, additionally demands fewer than k rows in every
    shape.  Construction does not validate; see validate_tableau.
    """

    shapes: tuple[Shape, ...]
    step_set: str
    k_bound: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "shapes", tuple(tuple(s) for s in self.shapes))

    @property
    def n(self) -> int:
        return (len(self.shapes) - 1) // 2

    def max_rows(self) -> int:
        return max((len(s) for s in self.shapes), default=0)


def tableau_violations(t: VacillatingTableau) -> list[str]:
    """All rule violations, empty when the tableau is valid."""
    out: list[str] = []
    if t.step_set not in (PARTITION_STEPS, BRAID_STEPS):
        return [f"unknown step set {t.step_set!r}"]
    if len(t.shapes) % 2 == 0 or not t.shapes:
        out.append(f"length {len(t.shapes)} is not 2n+1")
        return out
    for pos, s in enumerate(t.shapes):
        if not is_shape(s):
            out.append(f"entry {pos} is not a shape: {s}")
            return out
    if t.shapes[0] != ():
        out.append("first shape is not empty")
    if t.shapes[-1] != ():
        out.append("last shape is not empty")
    for i in range(1, t.n + 1):
        try:
            pair = (
                half_step(t.shapes[2 * i - 2], t.shapes[2 * i - 1]),
                half_step(t.shapes[2 * i - 1], t.shapes[2 * i]),
            )
        except MalformedTableauError as err:
            out.append(f"vertex {i}: {err}")
            continue
        if not _legal_pair(pair, t.step_set):
            out.append(f"vertex {i}: pair {pair} not allowed for {t.step_set} steps")
    if t.k_bound is not None:
        for pos, s in enumerate(t.shapes):
            if len(s) >= t.k_bound:
                out.append(f"entry {pos} has {len(s)} rows, bound is < {t.k_bound}")
                break
    return out


def validate_tableau(t: VacillatingTableau) -> bool:
    return not tableau_violations(t)


def step_pairs(t: VacillatingTableau) -> tuple[StepPair, ...]:
    """The n half-step pairs of a valid tableau."""
    _require_valid(t)
    return tuple(
        (
            half_step(t.shapes[2 * i - 2], t.shapes[2 * i - 1]),
            half_step(t.shapes[2 * i - 1], t.shapes[2 * i]),
        )
        for i in range(1, t.n + 1)
    )


def tableau_from_step_pairs(
    pairs: Iterable[StepPair],
    step_set: str,
    k_bound: int | None = None,
) -> VacillatingTableau:
    """Rebuild the shape sequence from pairs; inverse of step_pairs."""
    shapes: list[Shape] = [()]
    for idx, pair in enumerate(pairs, 1):
        if not _legal_pair(pair, step_set):
            raise MalformedTableauError(
                f"vertex {idx}: pair {pair} not allowed for {step_set} steps"
            )
        for half in pair:
            cur = shapes[-1]
            if half is None:
                shapes.append(cur)
            elif half[0] == "+":
                shapes.append(add_square(cur, half[1]))
            else:
                shapes.append(remove_square(cur, half[1]))
    if shapes[-1] != ():
        raise MalformedTableauError("pair sequence does not return to the empty shape")
    return VacillatingTableau(tuple(shapes), step_set, k_bound)


# -- fillings ---------------------------------------------------------------------
# A filling is a list of rows of distinct integers, strictly increasing
# along rows and down columns; the entries are the open origins.


def _place(filling: list[list[int]], value: int, row: int) -> None:
    # value exceeds every current entry, so the declared corner is the
    # only constraint
    if row == len(filling) + 1:
        filling.append([])
    elif not (1 <= row <= len(filling)):
        raise MalformedTableauError(f"cannot place at row {row}")
    filling[row - 1].append(value)


def _reverse_bump(filling: list[list[int]], row: int) -> int:
    """Remove the corner of the given row and bump upward, returning the
    entry ejected from the top row."""
    if not (1 <= row <= len(filling)) or not filling[row - 1]:
        raise MalformedTableauError(f"no corner at row {row}")
    if row < len(filling) and len(filling[row]) >= len(filling[row - 1]):
        raise MalformedTableauError(f"row {row} has no removable corner")
    value = filling[row - 1].pop()
    if not filling[row - 1]:
        filling.pop(row - 1)
    for r in range(row - 2, -1, -1):
        cells = filling[r]
        pos = max(c for c in range(len(cells)) if cells[c] < value)
        cells[pos], value = value, cells[pos]
    return value


def _insert(filling: list[list[int]], value: int) -> int:
    """Standard row insertion; returns the 1-indexed row of the new cell."""
    r = 0
    while r < len(filling):
        cells = filling[r]
        bigger = [c for c in range(len(cells)) if cells[c] > value]
        if not bigger:
            cells.append(value)
            return r + 1
        pos = bigger[0]
        cells[pos], value = value, cells[pos]
        r += 1
    filling.append([value])
    return len(filling)


def _extract_max(filling: list[list[int]], value: int) -> int:
    """Delete the maximal entry ``value``; returns the row it occupied."""
    for r, cells in enumerate(filling):
        if cells and cells[-1] == value:
            cells.pop()
            if not cells:
                filling.pop(r)
            return r + 1
    raise MalformedTableauError(f"entry {value} is not at a corner")


# -- the correspondence -------------------------------------------------------------


def tableau_to_diagram(t: VacillatingTableau) -> PartitionDiagram | BraidDiagram:
    """Left-to-right scan turning a valid tableau into its diagram."""
    _require_valid(t)
    filling: list[list[int]] = []
    arcs: list[tuple[int, int]] = []
    for i, (odd, even) in enumerate(step_pairs(t), 1):
        for half in (odd, even):
            if half is None:
                continue
            op, row = half
            if op == "+":
                _place(filling, i, row)
            else:
                arcs.append((_reverse_bump(filling, row), i))
    assert not filling, "valid tableaux drain the filling"
    cls = PartitionDiagram if t.step_set == PARTITION_STEPS else BraidDiagram
    return cls(t.n, tuple(arcs))


def diagram_to_tableau(
    d: PartitionDiagram | BraidDiagram,
    k_bound: int | None = None,
) -> VacillatingTableau:
    """Right-to-left scan building the unique tableau of a diagram.

    Exact inverse of tableau_to_diagram; the maximal row count of the
    result equals the crossing number of the diagram.
    """
    if isinstance(d, PartitionDiagram):
        step_set = PARTITION_STEPS
    elif isinstance(d, BraidDiagram):
        step_set = BRAID_STEPS
    else:
        raise TypeError(f"expected a partition or braid diagram, got {type(d).__name__}")

    partner = {j: i for i, j in d.arcs}  # vertex -> entry its ejection released
    placers = {i for i, _ in d.arcs}  # vertices that placed themselves

    filling: list[list[int]] = []
    rev: list[Shape] = [()]

    def snap() -> None:
        rev.append(tuple(len(r) for r in filling))

    for i in range(d.n, 0, -1):
        places, ejects = i in placers, i in partner
        if step_set == PARTITION_STEPS:
            # forward order was: eject at odd, place at even
            if places:
                _extract_max(filling, i)
            snap()
            if ejects:
                _insert(filling, partner[i])
            snap()
        else:
            # forward order was: place at odd and eject at even when the
            # vertex does both; otherwise place at even / eject at odd
            if places and ejects:
                _insert(filling, partner[i])
                snap()
                _extract_max(filling, i)
                snap()
            elif places:
                _extract_max(filling, i)
                snap()
                snap()
            elif ejects:
                snap()
                _insert(filling, partner[i])
                snap()
            else:
                snap()
                snap()
    assert not filling
    return VacillatingTableau(tuple(reversed(rev)), step_set, k_bound)


# -- text format ----------------------------------------------------------------------


def format_tableau(t: VacillatingTableau) -> str:
    """Shapes as comma-separated row vectors joined by '|'; empty shape
    is an empty field, so (empty, [1], empty) reads ``|1|``."""
    return "|".join(",".join(str(r) for r in s) for s in t.shapes)


def parse_tableau(
    text: str, step_set: str, k_bound: int | None = None
) -> VacillatingTableau:
    shapes = tuple(
        tuple(int(r) for r in field.split(",")) if field else ()
        for field in text.split("|")
    )
    return VacillatingTableau(shapes, step_set, k_bound)


def _require_valid(t: VacillatingTableau) -> None:
    problems = tableau_violations(t)
    if problems:
        raise MalformedTableauError("; ".join(problems))
