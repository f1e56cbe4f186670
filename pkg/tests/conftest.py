"""Shared builders for the test suite.

Everything random is seeded; suites state their seeds explicitly so failures
replay exactly.
"""

from __future__ import annotations

import random

import pytest

from ultrametric import (
    GlueSpec,
    UltrametricSpace,
    random_space,
    restrict,
    spectrum_constraint,
    validate_ultrametric,
)


def make_space(labels, entries) -> UltrametricSpace:
    """Build a space from {(a, b): value} with symmetry and zeros implied."""
    labels = list(labels)
    index = {l: i for i, l in enumerate(labels)}
    n = len(labels)
    matrix = [["0"] * n for _ in range(n)]
    for (a, b), value in entries.items():
        matrix[index[a]][index[b]] = value
        matrix[index[b]][index[a]] = value
    return validate_ultrametric(labels, matrix)


@pytest.fixture
def isosceles():
    """d(a,b)=1, d(a,c)=d(b,c)=2: the running three-point example."""
    return make_space("abc", {("a", "b"): 1, ("a", "c"): 2, ("b", "c"): 2})


SIX_VALUES = spectrum_constraint(["0", "1/8", "1/4", "3/8", "1/2", "1"])


def random_glue_spec(rng: random.Random, max_side: int = 7) -> GlueSpec:
    """Random valid glue spec: two overlapping subspaces of a random space.

    The right side is freshly relabeled so the identification map is
    exercised rather than being a trivial identity.
    """
    host = random_space(rng.randint(2, 10), SIX_VALUES, rng.randrange(10**9))
    labels = list(host.labels)
    rng.shuffle(labels)
    na = rng.randint(1, min(max_side, len(labels)))
    overlap = rng.randint(1, na)
    extra = rng.randint(0, min(max_side - overlap, len(labels) - na))
    left = restrict(host, labels[:na])
    right_raw = restrict(host, labels[na - overlap : na + extra])
    right = UltrametricSpace(
        tuple(f"m:{l}" for l in right_raw.labels), right_raw.dist
    )
    identify = tuple((l, f"m:{l}") for l in labels[na - overlap : na])
    return GlueSpec(left, right, identify)
