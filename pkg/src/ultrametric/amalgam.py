"""Amalgamation of ultrametric spaces along a common subspace.

Two spaces that agree on an identified common part A can be glued into a
single ultrametric space: distances inside each part are preserved and the
cross distance is ``min over a in A of max(d1(x1,a), d2(a,x2))``.  The empty
common part is rejected; use :func:`disjoint_amalgam` with an explicit scale
for that case.

Label policy: the glued space relabels points as ``L:<label>`` / ``R:<label>``,
identified pairs taking the left label.  This keeps outputs deterministic and
collision-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DuplicateIdentification,
    EmptyChain,
    EmptyCommonPart,
    MetricMismatchOnA,
    ScaleTooSmall,
    UltrametricError,
    UnknownLabel,
)
from .rationals import as_rational, format_rational
from .spaces import UltrametricSpace, validate_ultrametric


@dataclass(frozen=True)
class GlueSpec:
    """Two spaces plus the point identification defining their common part."""

    x1: UltrametricSpace
    x2: UltrametricSpace
    identify: tuple[tuple[str, str], ...]

    def __post_init__(self):
        object.__setattr__(self, "identify", tuple((a, b) for a, b in self.identify))


def _check_spec(spec: GlueSpec) -> None:
    if not spec.identify:
        raise EmptyCommonPart(
            "identification is empty; glue needs a nonempty common part "
            "(use disjoint_amalgam for the disjoint case)"
        )
    left = [a for a, _ in spec.identify]
    right = [b for _, b in spec.identify]
    for side, names in (("left", left), ("right", right)):
        if len(set(names)) != len(names):
            dup = next(n for n in names if names.count(n) > 1)
            raise DuplicateIdentification(
                f"point {dup!r} appears twice on the {side} side", label=dup
            )
    for a, b in spec.identify:
        spec.x1.index(a)
        spec.x2.index(b)
    for a, b in spec.identify:
        for c, d in spec.identify:
            if spec.x1.d(a, c) != spec.x2.d(b, d):
                raise MetricMismatchOnA(
                    f"common part metrics disagree: d({a},{c}) = "
                    f"{format_rational(spec.x1.d(a, c))} on the left but "
                    f"d({b},{d}) = {format_rational(spec.x2.d(b, d))} on the right",
                    left=[a, c],
                    right=[b, d],
                )


def glue_embeddings(spec: GlueSpec) -> tuple[dict[str, str], dict[str, str]]:
    """Label maps from each input space into the glued space."""
    right_to_left = {b: a for a, b in spec.identify}
    left = {a: f"L:{a}" for a in spec.x1.labels}
    right = {
        b: f"L:{right_to_left[b]}" if b in right_to_left else f"R:{b}"
        for b in spec.x2.labels
    }
    return left, right


def glue(spec: GlueSpec) -> UltrametricSpace:
    """Amalgamate the two spaces along their identified common part."""
    _check_spec(spec)
    x1, x2 = spec.x1, spec.x2
    common1 = [x1.index(a) for a, _ in spec.identify]
    common2 = [x2.index(b) for _, b in spec.identify]
    identified_right = {x2.index(b) for _, b in spec.identify}
    rest2 = [j for j in range(len(x2)) if j not in identified_right]

    labels = [f"L:{l}" for l in x1.labels] + [f"R:{x2.labels[j]}" for j in rest2]
    n1 = len(x1)
    n = n1 + len(rest2)
    matrix: list[list[Fraction]] = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n1):
        for j in range(n1):
            matrix[i][j] = x1.dist[i][j]
    for p, jp in enumerate(rest2):
        for q, jq in enumerate(rest2):
            matrix[n1 + p][n1 + q] = x2.dist[jp][jq]
    for i in range(n1):
        for p, jp in enumerate(rest2):
            value = min(
                max(x1.dist[i][a1], x2.dist[a2][jp])
                for a1, a2 in zip(common1, common2)
            )
            matrix[i][n1 + p] = value
            matrix[n1 + p][i] = value
    return validate_ultrametric(labels, matrix)


def disjoint_amalgam(x: UltrametricSpace, y: UltrametricSpace, s) -> UltrametricSpace:
    """Disjoint union with every cross distance equal to ``s``.

    ``s`` must be positive and at least both diameters: any smaller scale
    would break the strong triangle inequality on a triangle with two points
    in the wider space.
    """
    s = as_rational(s)
    required = max(x.diameter(), y.diameter())
    if s <= 0 or s < required:
        raise ScaleTooSmall(
            f"scale {format_rational(s)} is too small; need a positive value >= "
            f"{format_rational(required)}",
            scale=format_rational(s),
            required_minimum=format_rational(required),
        )
    labels = [f"L:{l}" for l in x.labels] + [f"R:{l}" for l in y.labels]
    nx, ny = len(x), len(y)
    matrix: list[list[Fraction]] = [[s] * (nx + ny) for _ in range(nx + ny)]
    for i in range(nx):
        for j in range(nx):
            matrix[i][j] = x.dist[i][j]
    for i in range(ny):
        for j in range(ny):
            matrix[nx + i][nx + j] = y.dist[i][j]
    return validate_ultrametric(labels, matrix)


@dataclass(frozen=True)
class ChainGlueResult:
    """Glued chain plus, for each input space, its label map into the result."""

    space: UltrametricSpace
    embeddings: tuple[dict[str, str], ...]


def chain_glue(spaces, identifications) -> ChainGlueResult:
    """Left fold of :func:`glue` over a chain of spaces.

    ``identifications[i]`` lists pairs ``(label in spaces[i], label in
    spaces[i+1])``; the left side is resolved through the accumulated space,
    so every input embeds isometrically into the result.
    """
    spaces = list(spaces)
    identifications = list(identifications)
    if not spaces:
        raise EmptyChain("chain_glue needs at least one space")
    if len(identifications) != len(spaces) - 1:
        raise EmptyChain(
            f"{len(spaces)} spaces need {len(spaces) - 1} identification lists, "
            f"got {len(identifications)}"
        )
    current = spaces[0]
    embeddings: list[dict[str, str]] = [{l: l for l in current.labels}]
    for link, (nxt, pairs) in enumerate(zip(spaces[1:], identifications)):
        try:
            resolved = tuple((embeddings[link][a], b) for a, b in pairs)
        except KeyError as exc:
            raise UnknownLabel(
                f"link {link}: point {exc.args[0]!r} is not in space {link} of the chain",
                label=exc.args[0],
                link=link,
            ) from None
        spec = GlueSpec(current, nxt, resolved)
        try:
            glued = glue(spec)
        except UltrametricError as exc:
            exc.details["link"] = link
            raise
        left, right = glue_embeddings(spec)
        embeddings = [{orig: left[cur] for orig, cur in emb.items()} for emb in embeddings]
        embeddings.append(right)
        current = glued
    return ChainGlueResult(current, tuple(embeddings))
