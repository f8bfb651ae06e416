"""Shared fixtures: the standard instance gallery used across the suite."""

import itertools

import pytest

from triblock.taxonomy import (TagB0, TagB1, TagB2, TagB3, TagI1, TagI2, TagT,
                               generate)


def gallery_tags():
    tags = [TagB0()]
    tags += [TagB1(n % 3, n) for n in (1, 2, 3, 4)]
    tags += [TagB2(0, n, 2, m) for n, m in itertools.product((2, 4), repeat=2)]
    tags += [TagB3(sizes) for sizes in itertools.product((2, 4), repeat=3)]
    tags += [TagB3(sizes) for sizes in itertools.product((1, 3), repeat=3)]
    tags += [TagI1(0, 1, k, inner) for k in (1, 2) for inner in (0, 2)]
    tags += [TagI2(0, (1, k), (2, l), 0, variant)
             for (k, l) in ((1, 1), (2, 1)) for variant in ("cross", "straight")]
    tags += [TagT(k, (0, 0, 0)) for k in (2, 3)]
    return tags


@pytest.fixture(scope="session")
def gallery():
    return [(tag, generate(tag, seed=17)) for tag in gallery_tags()]
