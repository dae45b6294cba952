"""Shared fixtures and helpers for the test suite."""

from __future__ import annotations

import random

import pytest

from gicap import ChannelParams, InterferenceTag, classify, db_to_linear


def vertex_sets_equal(a, b, tol=1e-9) -> bool:
    """Compare two canonical vertex lists coordinate-wise within tol."""
    if len(a) != len(b):
        return False
    return all(
        abs(p.r1 - q.r1) <= tol and abs(p.r2 - q.r2) <= tol for p, q in zip(a, b)
    )


def random_channel(rng: random.Random, want: InterferenceTag | None = None) -> ChannelParams:
    """Draw one channel log-uniform in dB, optionally rejection-filtered."""
    while True:
        params = ChannelParams(
            db_to_linear(rng.uniform(0.0, 60.0)),
            db_to_linear(rng.uniform(0.0, 60.0)),
            db_to_linear(rng.uniform(-20.0, 60.0)),
            db_to_linear(rng.uniform(-20.0, 60.0)),
        )
        if want is None or classify(params).tag is want:
            return params


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240811)
