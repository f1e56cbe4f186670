"""Finite ultrametric spaces with exact rational distances.

A space is a tuple of distinct point labels plus a symmetric matrix of
Fractions satisfying the strong triangle inequality
``d(x,y) <= max(d(x,z), d(z,y))``.  :func:`validate_ultrametric` is the only
public gate that checks the axioms; everything downstream assumes it ran.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import (
    DuplicateLabel,
    EmptySpace,
    InputFormat,
    InvalidParameter,
    NegativeDistance,
    NonSymmetric,
    NonzeroDiagonal,
    TriangleViolation,
    UnknownLabel,
    ZeroOffDiagonal,
)
from .rationals import as_rational, format_rational

ZERO = Fraction(0)


@dataclass(frozen=True)
class UltrametricSpace:
    """Immutable finite ultrametric space: labels plus exact distance matrix."""

    labels: tuple[str, ...]
    dist: tuple[tuple[Fraction, ...], ...]

    def __len__(self) -> int:
        return len(self.labels)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(f"point {label!r} is not in the space", label=label) from None

    def distance(self, i: int, j: int) -> Fraction:
        return self.dist[i][j]

    def d(self, a: str, b: str) -> Fraction:
        """Distance between two points given by label."""
        return self.dist[self.index(a)][self.index(b)]

    def diameter(self) -> Fraction:
        return max((v for row in self.dist for v in row), default=ZERO)

    def min_positive_distance(self) -> Fraction | None:
        """Smallest nonzero distance, or None for a one-point space."""
        values = [v for row in self.dist for v in row if v > 0]
        return min(values) if values else None

    def __repr__(self) -> str:  # compact, matrix omitted
        return f"UltrametricSpace({len(self)} points: {', '.join(self.labels[:6])}{'...' if len(self) > 6 else ''})"


def _coerce_matrix(labels, matrix) -> tuple[tuple[str, ...], list[list[Fraction]]]:
    labels = tuple(str(l) for l in labels)
    n = len(labels)
    if n == 0:
        raise EmptySpace("a space needs at least one point")
    seen = set()
    for label in labels:
        if label in seen:
            raise DuplicateLabel(f"label {label!r} appears more than once", label=label)
        seen.add(label)
    if len(matrix) != n:
        raise InputFormat(f"matrix has {len(matrix)} rows for {n} labels")
    rows = []
    for i, row in enumerate(matrix):
        if len(row) != n:
            raise InputFormat(f"matrix row {i} has {len(row)} entries, expected {n}")
        rows.append([as_rational(v) for v in row])
    return labels, rows


def validate_ultrametric(labels, matrix) -> UltrametricSpace:
    """Check every axiom and return the validated space.

    Raises a structured error naming the first violated axiom together with
    the witnessing points; the scan order (diagonal, symmetry, positivity,
    strong triangle over ascending index triples) is deterministic.
    """
    labels, rows = _coerce_matrix(labels, matrix)
    n = len(labels)
    for i in range(n):
        if rows[i][i] != 0:
            raise NonzeroDiagonal(
                f"d({labels[i]},{labels[i]}) = {format_rational(rows[i][i])}, expected 0",
                point=labels[i],
            )
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise NonSymmetric(
                    f"d({labels[i]},{labels[j]}) = {format_rational(rows[i][j])} but "
                    f"d({labels[j]},{labels[i]}) = {format_rational(rows[j][i])}",
                    points=[labels[i], labels[j]],
                )
            if rows[i][j] < 0:
                raise NegativeDistance(
                    f"d({labels[i]},{labels[j]}) = {format_rational(rows[i][j])} < 0",
                    points=[labels[i], labels[j]],
                )
            if rows[i][j] == 0:
                raise ZeroOffDiagonal(
                    f"d({labels[i]},{labels[j]}) = 0 for distinct points",
                    points=[labels[i], labels[j]],
                )
    for i in range(n):
        for j in range(i + 1, n):
            dij = rows[i][j]
            row_i = rows[i]
            row_j = rows[j]
            for k in range(n):
                if k == i or k == j:
                    continue
                if dij > row_i[k] and dij > row_j[k]:
                    raise TriangleViolation(
                        f"d({labels[i]},{labels[j]}) = {format_rational(dij)} > "
                        f"max(d({labels[i]},{labels[k]}), d({labels[k]},{labels[j]})) = "
                        f"max({format_rational(row_i[k])}, {format_rational(row_j[k])})",
                        points=[labels[i], labels[j], labels[k]],
                    )
    return UltrametricSpace(labels, tuple(tuple(row) for row in rows))


def merge_duplicate_points(labels, matrix) -> tuple[list[str], list[list[Fraction]]]:
    """Collapse groups of points at mutual distance 0, keeping first labels.

    Preprocessing for dirty data: validation rejects zero off-diagonal entries,
    so callers opt into this merge explicitly.  Groups are the connected
    components of the d=0 relation (closure taken in case the input is not
    even transitive); distances between groups are read off the first member
    of each group.
    """
    labels, rows = _coerce_matrix(labels, matrix)
    n = len(labels)
    group_of = list(range(n))

    def find(i: int) -> int:
        while group_of[i] != i:
            group_of[i] = group_of[group_of[i]]
            i = group_of[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] == 0 or rows[j][i] == 0:
                ri, rj = find(i), find(j)
                if ri != rj:
                    group_of[max(ri, rj)] = min(ri, rj)
    reps = sorted({find(i) for i in range(n)})
    merged_labels = [labels[r] for r in reps]
    merged = [[rows[a][b] for b in reps] for a in reps]
    return merged_labels, merged


def spectrum(space: UltrametricSpace) -> tuple[Fraction, ...]:
    """Sorted distinct distance values; always starts with 0."""
    values = {ZERO}
    for row in space.dist:
        values.update(row)
    return tuple(sorted(values))


@dataclass(frozen=True)
class QuotientSpace:
    """Closed-ball quotient of a space at a given scale.

    ``blocks[k]`` lists the source labels merged into quotient point ``k``;
    the quotient reuses each block's first source label.  All quotient
    distances exceed the scale.
    """

    source: UltrametricSpace
    scale: Fraction
    blocks: tuple[tuple[str, ...], ...]
    quotient: UltrametricSpace


def closed_quotient(space: UltrametricSpace, t) -> QuotientSpace:
    """Collapse closed balls of radius ``t``.

    ``d(x,y) <= t`` is an equivalence relation on an ultrametric space, so the
    blocks are simply the closed balls; block distances are the (well-defined)
    source distances between representatives.
    """
    t = as_rational(t)
    if t < 0:
        raise InvalidParameter(f"scale must be >= 0, got {format_rational(t)}")
    n = len(space)
    assigned = [False] * n
    block_indices: list[list[int]] = []
    for i in range(n):
        if assigned[i]:
            continue
        members = [j for j in range(n) if not assigned[j] and space.dist[i][j] <= t]
        for j in members:
            assigned[j] = True
        block_indices.append(members)
    reps = [members[0] for members in block_indices]
    labels = tuple(space.labels[r] for r in reps)
    matrix = tuple(tuple(space.dist[a][b] for b in reps) for a in reps)
    blocks = tuple(tuple(space.labels[j] for j in members) for members in block_indices)
    return QuotientSpace(space, t, blocks, UltrametricSpace(labels, matrix))
