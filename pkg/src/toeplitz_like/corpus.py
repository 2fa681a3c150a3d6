"""Seeded random symbols for property checks and experiments."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .poly import from_roots
from .symbol import RationalFn, normalize


@dataclass(frozen=True)
class CorpusConfig:
    """Parameters of the random symbol family.

    Roots are drawn in factored form, so their positions are known exactly.
    Distinct roots keep an angular gap of ``min_separation`` radians; without
    it, near-coincident poles produce partial-fraction coefficients of size
    ``1/gap**k`` and every relative comparison degenerates.
    """

    size: int = 50
    seed: int = 20240611
    max_degree: int = 6
    inside_radius: tuple = (0.3, 0.8)
    outside_radius: tuple = (1.25, 3.0)
    band_weights: tuple = (0.4, 0.25, 0.35)  # inside, circle, outside
    multiple_root_prob: float = 0.15
    max_multiplicity: int = 3
    min_separation: float = 0.3


def _draw_roots(rng: np.random.Generator, degree: int, cfg: CorpusConfig, taken: list) -> list:
    roots, total = [], 0
    while total < degree:
        for _ in range(1000):
            theta = rng.uniform(0, 2 * np.pi)
            if all(abs(np.angle(np.exp(1j * (theta - t)))) >= cfg.min_separation for t in taken):
                break
        else:
            raise RuntimeError("could not place a separated root; lower min_separation")
        band = rng.choice(3, p=cfg.band_weights)
        if band == 0:
            rad = rng.uniform(*cfg.inside_radius)
        elif band == 1:
            rad = 1.0
        else:
            rad = rng.uniform(*cfg.outside_radius)
        m = 1
        if rng.uniform() < cfg.multiple_root_prob:
            m = int(rng.integers(2, cfg.max_multiplicity + 1))
        m = min(m, degree - total)
        root = complex(rad * np.cos(theta), rad * np.sin(theta))
        if rad == 1.0:
            # keep exact unit modulus
            root = complex(np.cos(theta), np.sin(theta))
            root /= abs(root)
        roots.append((root, m))
        taken.append(theta)
        total += m
    return roots


def random_symbol(rng: np.random.Generator, cfg: CorpusConfig = CorpusConfig()) -> RationalFn:
    deg_s = int(rng.integers(0, cfg.max_degree + 1))
    deg_q = int(rng.integers(0, cfg.max_degree + 1))
    taken: list = []
    zeros = _draw_roots(rng, deg_s, cfg, taken)
    poles = _draw_roots(rng, deg_q, cfg, taken)
    lead = complex(rng.normal(), rng.normal())
    lead /= abs(lead)
    lead *= rng.uniform(0.5, 2.0)
    return normalize(from_roots(zeros, lead), from_roots(poles))


def corpus(cfg: CorpusConfig = CorpusConfig()) -> list[RationalFn]:
    rng = np.random.default_rng(cfg.seed)
    return [random_symbol(rng, cfg) for _ in range(cfg.size)]
