# -*- coding: utf-8 -*-

"""
Seeded random samples for the verification suites. Every suite draws from its
own stream, derived from the run seed and the suite name, so that adding or
reordering suites never changes the samples of another one.
"""

import zlib
from typing import Optional

import numpy as np

from .domain import ConvexDomain, PolygonDomain, UnitBall
from .exceptions import DegenerateInput
from .flags import DEFAULT_SEED

__all__ = (
    'rng_for',
    'ball_points',
    'ball_pairs',
    'circle_points',
    'domain_pairs',
)


def rng_for(name: str, seed: Optional[int] = None) -> np.random.Generator:
    """Independent generator for the stream ``name`` of the run ``seed``."""
    seed = DEFAULT_SEED if seed is None else seed
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(zlib.crc32(name.encode('utf-8')),)))


def ball_points(rng: np.random.Generator, count: int, n: int = 2, radius: float = 0.99) -> np.ndarray:
    """Uniform points of the ball of the given radius, shape ``(count, n)``."""
    directions = rng.standard_normal((count, n))
    directions /= np.linalg.norm(directions, axis=1, keepdims=True)
    radii = radius * rng.random(count) ** (1.0 / n)
    return directions * radii[:, None]


def ball_pairs(rng: np.random.Generator, count: int, n: int = 2, radius: float = 0.99):
    return ball_points(rng, count, n, radius), ball_points(rng, count, n, radius)


def circle_points(rng: np.random.Generator, count: int) -> np.ndarray:
    """Uniform angles on the unit circle, sorted, as complex numbers."""
    return np.exp(1j * np.sort(rng.uniform(0.0, 2.0 * np.pi, count)))


def domain_pairs(rng: np.random.Generator, D: ConvexDomain, count: int, margin: float = 1e-3):
    """
    Pairs of points at distance at least ``margin`` from the boundary of
    ``D``, drawn by rejection from the bounding box.
    """
    if isinstance(D, UnitBall):
        return ball_pairs(rng, count, D.dim, 1.0 - margin)
    if not isinstance(D, PolygonDomain):
        raise DegenerateInput('unsupported domain', operation='domain_pairs', value=D)
    P = D.polygon
    low, high = P.vertices.min(axis=0), P.vertices.max(axis=0)
    accepted = []
    needed = 2 * count
    while needed > 0:
        candidates = rng.uniform(low, high, (max(2 * needed, 16), 2))
        slack = np.min(P.offsets[None, :] - candidates @ P.normals.T, axis=1)
        keep = candidates[slack > margin][:needed]
        accepted.append(keep)
        needed -= len(keep)
    points = np.concatenate(accepted)
    return points[:count], points[count:]
