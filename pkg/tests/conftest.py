"""Shared fixtures and independent oracle builders for the test suite.

The builders here construct reference data straight from textbook
definitions (group addition for quantum doubles, closed-form dimension
equations) so the tests do not lean on the code paths they check.
"""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from braidinv.fusion import FusionRing


def group_ring(moduli, names=None) -> FusionRing:
    """Fusion ring of a finite abelian group, built from group addition."""
    elements = list(itertools.product(*[range(m) for m in moduli]))
    index = {g: i for i, g in enumerate(elements)}
    rank = len(elements)
    fusion = np.zeros((rank, rank, rank), dtype=np.int64)
    for g in elements:
        for h in elements:
            s = tuple((x + y) % m for x, y, m in zip(g, h, moduli))
            fusion[index[g], index[h], index[s]] = 1
    dual = [index[tuple((-x) % m for x, m in zip(g, moduli))] for g in elements]
    if names is None:
        names = ["".join(str(x) for x in g) for g in elements]
    return FusionRing(names, dual, fusion)


def toric_ring() -> FusionRing:
    """Quantum double of Z2: labels 1, e, m, f with (Z2)^2 addition."""
    return group_ring((2, 2), names=["1", "m", "e", "f"])


def fibonacci_ring() -> FusionRing:
    fusion = np.zeros((2, 2, 2), dtype=np.int64)
    fusion[0, 0, 0] = 1
    fusion[0, 1, 1] = 1
    fusion[1, 0, 1] = 1
    fusion[1, 1, 0] = 1
    fusion[1, 1, 1] = 1
    return FusionRing(["1", "tau"], [0, 1], fusion)


def ising_ring() -> FusionRing:
    # labels 1, sigma, psi
    fusion = np.zeros((3, 3, 3), dtype=np.int64)
    for a in range(3):
        fusion[0, a, a] = 1
        fusion[a, 0, a] = 1
    fusion[1, 1, 0] = 1
    fusion[1, 1, 2] = 1
    fusion[1, 2, 1] = 1
    fusion[2, 1, 1] = 1
    fusion[2, 2, 0] = 1
    return FusionRing(["1", "sigma", "psi"], [0, 1, 2], fusion)


@pytest.fixture
def toric():
    return toric_ring()


@pytest.fixture
def fib():
    return fibonacci_ring()


@pytest.fixture
def ising():
    return ising_ring()
