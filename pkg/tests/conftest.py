"""Shared random-cone generators with fixed seeds."""

from __future__ import annotations

import random

import pytest

from taxiconics import cone_from_raw, rat
from taxiconics.errors import DegenerateCone, ZeroVector


def rnd_rat(rng: random.Random, lo=-4, hi=4, den_max=8):
    den = rng.randrange(1, den_max + 1)
    return rat(rng.randrange(lo * den, hi * den + 1), den)


def random_plane_triple(rng: random.Random, allow_vertical=True, allow_horizontal=True):
    r = rng.random()
    if allow_vertical and r < 0.12:
        return (rnd_rat(rng), rnd_rat(rng), 0)
    if allow_horizontal and r < 0.2:
        return (0, 0, 1)
    return (rnd_rat(rng), rnd_rat(rng), 1)


def random_line_triple(rng: random.Random, allow_horizontal=True):
    if allow_horizontal and rng.random() < 0.12:
        return (rnd_rat(rng), rnd_rat(rng), 0)
    return (rnd_rat(rng), rnd_rat(rng), 1)


def random_kappa(rng: random.Random):
    return rat(rng.randrange(1, 25), rng.randrange(1, 7))


def random_cone(
    rng: random.Random,
    allow_horizontal_line=True,
    allow_vertical_plane=True,
    allow_horizontal_plane=True,
):
    while True:
        try:
            return cone_from_raw(
                random_plane_triple(rng, allow_vertical_plane, allow_horizontal_plane),
                random_line_triple(rng, allow_horizontal_line),
                random_kappa(rng),
            )
        except (DegenerateCone, ZeroVector):
            continue


def random_cones(n: int, seed: int, **kwargs) -> list:
    rng = random.Random(seed)
    return [random_cone(rng, **kwargs) for _ in range(n)]


def random_steep_line_triple(rng: random.Random):
    while True:
        a1, a2 = rnd_rat(rng, -1, 1), rnd_rat(rng, -1, 1)
        if abs(a1) + abs(a2) < 1:
            return (a1, a2, 1)


def random_steep_plane_triple(rng: random.Random):
    while True:
        A1, A2 = rnd_rat(rng, -4, 4), rnd_rat(rng, -4, 4)
        if max(abs(A1), abs(A2)) > 1:
            return (A1, A2, 1)


@pytest.fixture(scope="session")
def cone_family():
    """1000 fixed-seed random cones shared by the invariant suites."""
    return random_cones(1000, seed=20240811)
