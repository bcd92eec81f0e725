"""
Standard domino tableaux and the domino insertion bijection.

A signed permutation w = i_1 ... i_n is inserted letter by letter.  A
positive letter enters as a horizontal domino appended to the first row of
the sub-tableau of smaller labels; a negative letter as a vertical domino
appended to its first column.  Dominoes with larger labels are then re-placed
in increasing label order: a domino whose old position is now fully covered
by the shape of the (already re-placed) smaller labels is appended to the end
of the next row if horizontal, resp. the next column if vertical, while a
domino covered only in its first cell pivots around its free cell
(horizontal -> vertical one column right, vertical -> horizontal one row
down).

These bumping rules are pinned down by the calibration anchors encoded in the
tests: the identity inserts to a single row of horizontal dominoes, the
sign-change generator to a single vertical domino, the displayed two-row
preimage words produce two-row tableaux, and insertion is a bijection onto
shape-matched pairs with Q(w) = P(w^{-1}).

Cells are (row, col), 0-based internally, 1-based in JSON.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import weylb
from .partitions import Partition

__all__ = [
    "DominoTableau", "domino_insert", "domino_shape", "domino_reverse",
    "rsk_type_a", "ShapeMismatch", "DuplicateLetter",
]

Cell = tuple[int, int]
Domino = tuple[Cell, Cell]


class ShapeMismatch(ValueError):
    """Raised when a tableau pair does not have matching shapes."""


class DuplicateLetter(ValueError):
    """Raised by rsk_type_a on words with repeated letters."""


def _sorted_domino(a: Cell, b: Cell) -> Domino:
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class DominoTableau:
    """A standard domino tableau: map label -> pair of adjacent cells."""

    dominoes: tuple[tuple[int, Domino], ...]  # sorted by label

    @staticmethod
    def from_dict(d: dict[int, Domino]) -> "DominoTableau":
        return DominoTableau(tuple(sorted((k, _sorted_domino(*v)) for k, v in d.items())))

    def as_dict(self) -> dict[int, Domino]:
        return dict(self.dominoes)

    def labels(self) -> list[int]:
        return [k for k, _ in self.dominoes]

    def cells(self) -> set[Cell]:
        out: set[Cell] = set()
        for _, (a, b) in self.dominoes:
            out.add(a)
            out.add(b)
        return out

    def shape(self) -> Partition:
        counts: dict[int, int] = {}
        for c in self.cells():
            counts[c[0]] = counts.get(c[0], 0) + 1
        rows = [counts.get(r, 0) for r in range(len(counts))]
        if sorted(counts) != list(range(len(counts))) or any(
            rows[i] < rows[i + 1] for i in range(len(rows) - 1)
        ):
            raise ValueError("cells do not form a partition shape")
        return tuple(rows)

    def check_standard(self) -> None:
        """Validate the partition shape and the row/column label increase."""
        shape = self.shape()
        label_at: dict[Cell, int] = {}
        for lab, (a, b) in self.dominoes:
            label_at[a] = lab
            label_at[b] = lab
        for r, width in enumerate(shape):
            for c in range(width):
                lab = label_at[(r, c)]
                if c + 1 < width and label_at[(r, c + 1)] < lab:
                    raise ValueError("labels not increasing along a row")
                if r + 1 < len(shape) and shape[r + 1] > c and label_at[(r + 1, c)] < lab:
                    raise ValueError("labels not increasing down a column")

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape()),
            "dominoes": [
                [lab, [a[0] + 1, a[1] + 1], [b[0] + 1, b[1] + 1]]
                for lab, (a, b) in self.dominoes
            ],
        }

    @staticmethod
    def from_json(d: dict) -> "DominoTableau":
        return DominoTableau.from_dict(
            {
                lab: ((a[0] - 1, a[1] - 1), (b[0] - 1, b[1] - 1))
                for lab, a, b in d["dominoes"]
            }
        )

    def pretty(self) -> str:
        if not self.dominoes:
            return "(empty)"
        label_at: dict[Cell, int] = {}
        for lab, (a, b) in self.dominoes:
            label_at[a] = lab
            label_at[b] = lab
        shape = self.shape()
        width = max(len(str(lab)) for lab, _ in self.dominoes)
        lines = []
        for r, rw in enumerate(shape):
            lines.append(
                " ".join(str(label_at[(r, c)]).rjust(width) for c in range(rw))
            )
        return "\n".join(lines)


def _is_partition_cells(cells: set[Cell]) -> bool:
    """Whether a set of cells is the Young diagram of a partition."""
    rows: dict[int, int] = {}
    for r, _ in cells:
        rows[r] = rows.get(r, 0) + 1
    if sorted(rows) != list(range(len(rows))):
        return False
    lens = [rows[r] for r in sorted(rows)]
    if any(lens[i] < lens[i + 1] for i in range(len(lens) - 1)):
        return False
    return all((r, c) in cells for r in rows for c in range(rows[r]))


def _row_len(cells: set[Cell], r: int) -> int:
    return sum(1 for c in cells if c[0] == r)


def _col_len(cells: set[Cell], c: int) -> int:
    return sum(1 for cell in cells if cell[1] == c)


def _shuffle_position(old: Domino, lam: set[Cell]) -> Domino:
    """
    The re-placement rule: where a domino at `old` goes once the shape `lam`
    of the re-placed smaller labels is fixed.  Unmoved if disjoint from lam;
    a fully covered domino is appended to the next row (horizontal) or column
    (vertical) of lam; one covered first cell pivots around the free cell.
    """
    (r1, c1), (r2, c2) = old
    first_in = old[0] in lam
    second_in = old[1] in lam
    if not first_in and not second_in:
        return old
    horizontal = r1 == r2
    if horizontal:
        if second_in:  # fully covered: append to the next row of lam
            assert first_in, "partial cover must be the first cell"
            c = _row_len(lam, r1 + 1)
            return ((r1 + 1, c), (r1 + 1, c + 1))
        return ((r1, c2), (r1 + 1, c2))  # pivot to vertical
    if second_in:  # fully covered: append to the next column of lam
        assert first_in, "partial cover must be the first cell"
        r = _col_len(lam, c1 + 1)
        return ((r, c1 + 1), (r + 1, c1 + 1))
    return ((r2, c1), (r2, c1 + 1))  # pivot to horizontal


def _insert_letter(tab: dict[int, Domino], letter: int) -> dict[int, Domino]:
    """One insertion step: returns the new tableau as a label -> domino map."""
    j = abs(letter)
    smaller = {lab: pos for lab, pos in tab.items() if lab < j}
    covered: set[Cell] = set()
    for pos in smaller.values():
        covered.update(pos)
    if letter > 0:
        c = _row_len(covered, 0)
        current: Domino = ((0, c), (0, c + 1))
    else:
        r = _col_len(covered, 0)
        current = ((r, 0), (r + 1, 0))
    new_tab = dict(smaller)
    new_tab[j] = current
    covered.update(current)
    for lab in sorted(lab for lab in tab if lab > j):
        pos = _shuffle_position(tab[lab], covered)
        assert not (pos[0] in covered or pos[1] in covered) or pos == tab[lab], \
            "bumping collision"
        new_tab[lab] = pos
        covered.update(pos)
    return new_tab


def domino_insert(w: weylb.SignedPermutation) -> tuple[DominoTableau, DominoTableau]:
    """
    Insert the window of w, returning the pair (P(w), Q(w)); the recording
    tableau Q marks with label k the two cells added at step k.
    """
    p: dict[int, Domino] = {}
    q: dict[int, Domino] = {}
    for step, letter in enumerate(w, start=1):
        new_p = _insert_letter(p, letter)
        old_cells: set[Cell] = set()
        for pos in p.values():
            old_cells.update(pos)
        added = sorted(
            {c for pos in new_p.values() for c in pos} - old_cells
        )
        assert len(added) == 2, "insertion must add exactly two cells"
        q[step] = _sorted_domino(*added)
        p = new_p
    tp = DominoTableau.from_dict(p)
    tq = DominoTableau.from_dict(q)
    tp.check_standard()
    tq.check_standard()
    return tp, tq


def domino_shape(w: weylb.SignedPermutation) -> Partition:
    """The shape of P(w)."""
    p, _ = domino_insert(w)
    return p.shape() if p.dominoes else ()


def _reverse_letter(tab: dict[int, Domino], hole: Domino) -> tuple[dict[int, Domino], int]:
    """
    Undo one insertion step.  `hole` is the pair of cells that were added;
    returns the previous tableau and the inserted (signed) letter.

    `hole` tracks the two cells by which the shape of the labels >= the
    current one exceeds its pre-insertion shape; a label was moved by the
    insertion iff its position meets the hole.  The old position is the
    unique domino, removable from the pre-insertion shape of the labels up
    to this one, that the forward re-placement rule sends to the observed
    position.
    """
    tab = dict(tab)
    hole_cells = set(hole)
    lam: set[Cell] = set()
    for pos in tab.values():
        lam.update(pos)
    for lab in sorted(tab, reverse=True):
        pos = tab[lab]
        lam -= set(pos)  # lam = shape of labels < lab in the inserted tableau
        if not (pos[0] in hole_cells or pos[1] in hole_cells):
            continue
        (r1, c1), (r2, c2) = pos
        horizontal = r1 == r2
        # The inserted domino itself sits exactly in the hole, appended to
        # row 0 (horizontal) or column 0 (vertical) of the smaller shape.
        if set(pos) == hole_cells:
            if horizontal and r1 == 0 and c1 == _row_len(lam, 0):
                del tab[lab]
                return tab, lab
            if not horizontal and c1 == 0 and r1 == _col_len(lam, 0):
                del tab[lab]
                return tab, -lab
        # Un-bump: the pre-insertion shape of labels <= lab is the current
        # one minus the hole; the old position is a removable domino in it
        # that the forward rule maps to pos.
        shape_leq = (lam | set(pos)) - hole_cells
        valid = []
        for a in shape_leq:
            for b in (((a[0], a[1] + 1)), ((a[0] + 1, a[1]))):
                old = (a, b)
                if (
                    b in shape_leq
                    and old != pos
                    and _is_partition_cells(shape_leq - set(old))
                    and _shuffle_position(old, lam) == pos
                ):
                    valid.append(old)
        if len(valid) != 1:
            raise ValueError(f"reverse bumping ambiguous or stuck at label {lab}")
        old = valid[0]
        tab[lab] = old
        hole_cells = lam - (shape_leq - set(old))
        assert len(hole_cells) == 2
    raise ValueError("no inserted letter found during reverse insertion")


def domino_reverse(p: DominoTableau, q: DominoTableau) -> weylb.SignedPermutation:
    """The unique signed permutation w with domino_insert(w) = (p, q)."""
    if p.shape() != q.shape() if p.dominoes else q.dominoes:
        raise ShapeMismatch("P and Q must have equal shapes")
    if p.dominoes and p.shape() != q.shape():
        raise ShapeMismatch("P and Q must have equal shapes")
    tab = p.as_dict()
    qd = q.as_dict()
    letters: list[int] = []
    for step in sorted(qd, reverse=True):
        tab, letter = _reverse_letter(tab, qd[step])
        letters.append(letter)
    return tuple(reversed(letters))


def rsk_type_a(word) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """
    Classical Robinson-Schensted row insertion for a word with distinct
    letters; returns (P, Q) as tuples of rows.

    >>> rsk_type_a([3, 1, 2])
    (((1, 2), (3,)), ((1, 3), (2,)))
    """
    word = list(word)
    if len(set(word)) != len(word):
        raise DuplicateLetter("letters must be distinct")
    p: list[list[int]] = []
    q: list[list[int]] = []
    for step, x in enumerate(word, start=1):
        row = 0
        while True:
            if row == len(p):
                p.append([x])
                q.append([step])
                break
            bigger = [i for i, y in enumerate(p[row]) if y > x]
            if not bigger:
                p[row].append(x)
                q[row].append(step)
                break
            i = bigger[0]
            p[row][i], x = x, p[row][i]
            row += 1
    return tuple(tuple(r) for r in p), tuple(tuple(r) for r in q)
