"""Root finding, multiplicity clustering and unit-circle classification."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DivisionByZeroPoly, NoConvergence
from .poly import Poly, from_roots, merge_roots
from .tolerances import Tolerances, resolve

__all__ = [
    "ClassifiedRoots",
    "find_roots",
    "classify",
    "split_factors",
    "are_coprime",
    "band_of",
]

INSIDE, ON_CIRCLE, OUTSIDE = "inside", "on_circle", "outside"


@dataclass(frozen=True)
class ClassifiedRoots:
    inside: tuple = ()
    on_circle: tuple = ()
    outside: tuple = ()
    circle_tolerance: float = 1e-8

    @property
    def n_inside(self) -> int:
        return sum(m for _, m in self.inside)

    @property
    def n_on_circle(self) -> int:
        return sum(m for _, m in self.on_circle)

    @property
    def n_outside(self) -> int:
        return sum(m for _, m in self.outside)

    @property
    def total(self) -> int:
        return self.n_inside + self.n_on_circle + self.n_outside

    @property
    def max_circle_order(self) -> int:
        return max((m for _, m in self.on_circle), default=0)


def band_of(z: complex, circle_tolerance: float) -> str:
    """Which of inside / on_circle / outside a point falls into.

    The ambiguous annulus counts as on-circle.
    """
    r = abs(z)
    if r < 1.0 - circle_tolerance:
        return INSIDE
    if r > 1.0 + circle_tolerance:
        return OUTSIDE
    return ON_CIRCLE


def _sort_key(item):
    r, _ = item
    return (round(abs(r), 12), round(math.atan2(r.imag, r.real), 12))


def _aberth(c: np.ndarray, tol: Tolerances) -> np.ndarray:
    """Aberth-Ehrlich simultaneous iteration on ascending coefficients ``c``."""
    n = len(c) - 1
    c = c / c[-1]
    desc = c[::-1]
    ddesc = np.polyder(desc)
    absc = np.abs(c)
    # Cauchy bound; start on a circle rotated off the real axis
    radius = 1.0 + np.max(absc[:-1])
    lower = absc[0] / (absc[0] + np.max(absc[1:]))
    r0 = max(math.sqrt(radius * max(lower, 1e-3)), 1e-3)
    angles = 2 * np.pi * np.arange(n) / n + 0.4
    z = r0 * np.exp(1j * angles)
    norm = np.max(absc)
    eps = np.finfo(float).eps

    converged = np.zeros(n, dtype=bool)
    extra = 0
    for _ in range(tol.max_iters):
        pz = np.polyval(desc, z)
        dpz = np.polyval(ddesc, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pz / dpz
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            s = inv.sum(axis=1)
            w = ratio / (1.0 - ratio * s)
        bad = ~np.isfinite(w)
        if bad.any():
            # p'(z) == 0 or colliding iterates: nudge and carry on
            w[bad] = 1e-8 * (1 + np.abs(z[bad])) * np.exp(1j * np.arange(bad.sum()))
        w[pz == 0] = 0.0
        z = z - w
        resid = np.abs(np.polyval(desc, z))
        bound = tol.root * norm * np.maximum(1.0, np.abs(z)) ** n
        converged = resid <= bound
        small = np.abs(w) <= 4 * eps * np.maximum(1.0, np.abs(z))
        if converged.all():
            # a few polishing sweeps once the residual test passes
            extra += 1
            if small.all() or extra > 20:
                break
    if not converged.all():
        raise NoConvergence(f"root iteration did not converge in {tol.max_iters} steps")
    return z


def _cluster(z: np.ndarray, radius: float) -> list[list[int]]:
    n = len(z)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i):
            if abs(z[i] - z[j]) <= radius:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _taylor_at(p: Poly, c: complex, upto: int) -> np.ndarray:
    """``p^(j)(c)/j!`` for ``j < upto`` together with the matching scale."""
    shifted = p.taylor_shift(c).array
    k = np.arange(len(p.coeffs))
    absc = np.abs(p.array)
    scales = np.array([
        np.sum(absc[j:] * np.array([math.comb(int(i), j) for i in k[j:]]) * abs(c) ** (k[j:] - j))
        for j in range(upto)
    ])
    vals = np.zeros(upto, dtype=complex)
    vals[: min(upto, len(shifted))] = shifted[:upto]
    return np.abs(vals), scales


def _merge_multiple(p: Poly, clusters: list[tuple[complex, int]], tol: Tolerances):
    """Merge nearby clusters that jointly form one multiple root.

    Floating point splits an m-fold root into m points roughly eps**(1/m)
    apart, well beyond the plain cluster radius once m >= 3. Clusters are
    regrouped by single linkage at growing radii; a group is merged when the
    polynomial and its first m-1 derivatives vanish at the weighted mean,
    relative to their natural scale.
    """
    for level in (1e-5, 1e-4, 1e-3, 1e-2, 3e-2):
        if len(clusters) < 2:
            break
        centres = np.array([c for c, _ in clusters])
        radius = level * max(1.0, float(np.max(np.abs(centres))))
        if radius <= tol.cluster:
            continue
        merged = []
        for g in _cluster(centres, radius):
            if len(g) == 1:
                merged.append(clusters[g[0]])
                continue
            m = sum(clusters[i][1] for i in g)
            centre = sum(clusters[i][0] * clusters[i][1] for i in g) / m
            centre = _polish(p, centre, m, reach=radius)
            vals, scales = _taylor_at(p, centre, m)
            if np.all(vals <= tol.res * scales):
                merged.append((complex(centre), m))
            else:
                merged.extend(clusters[i] for i in g)
        clusters = merged
    return clusters


def _polish(p: Poly, r: complex, m: int, reach: float = 1e-6) -> complex:
    """Newton on ``p^(m-1)``, which has a simple root at an m-fold root of p."""
    f = p.derivative(m - 1)
    df = f.derivative()
    best, best_res = r, abs(f(r))
    x = r
    for _ in range(8):
        d = df(x)
        if d == 0:
            break
        x = x - f(x) / d
        res = abs(f(x))
        if res < best_res:
            best, best_res = x, res
        else:
            break
    if abs(best - r) > reach * max(1.0, abs(r)):
        return r
    return complex(best)


def find_roots(p: Poly, tol: Tolerances | None = None) -> tuple:
    """All roots of ``p`` as ``((root, multiplicity), ...)``.

    Known roots attached to ``p`` are returned untouched. Otherwise roots at
    the origin are split off exactly and the rest come from Aberth-Ehrlich
    iteration followed by clustering.
    """
    tol = resolve(tol)
    if p.is_zero:
        raise DivisionByZeroPoly("the zero polynomial has no finite root set")
    if p.roots is not None:
        return tuple(sorted(p.roots, key=_sort_key))
    key = ("roots", tol)
    if key in p._cache:
        return p._cache[key]

    c = p.array
    zeros_at_origin = 0
    while zeros_at_origin < len(c) - 1 and c[zeros_at_origin] == 0:
        zeros_at_origin += 1
    c = c[zeros_at_origin:]
    found: list[tuple[complex, int]] = []
    if zeros_at_origin:
        found.append((0j, zeros_at_origin))
    n = len(c) - 1
    if n == 1:
        found.append((complex(-c[0] / c[1]), 1))
    elif n > 1:
        z = _aberth(c, tol)
        groups = _cluster(z, tol.cluster)
        clusters = [(complex(np.mean(z[g])), len(g)) for g in groups]
        reduced = Poly(c)
        clusters = _merge_multiple(reduced, clusters, tol)
        clusters = [(_polish(reduced, r, m) if m > 1 else r, m) for r, m in clusters]
        found.extend(clusters)
    result = tuple(sorted(merge_roots(found), key=_sort_key))
    p._cache[key] = result
    return result


def classify(p: Poly, circle_tolerance: float | None = None, tol: Tolerances | None = None) -> ClassifiedRoots:
    tol = resolve(tol)
    ct = tol.circle if circle_tolerance is None else circle_tolerance
    bands = {INSIDE: [], ON_CIRCLE: [], OUTSIDE: []}
    for r, m in find_roots(p, tol):
        bands[band_of(r, ct)].append((r, m))
    return ClassifiedRoots(tuple(bands[INSIDE]), tuple(bands[ON_CIRCLE]), tuple(bands[OUTSIDE]), ct)


def split_factors(p: Poly, tol: Tolerances | None = None) -> tuple[Poly, Poly, Poly, complex]:
    """``p = leading * p_minus * p_zero * p_plus`` with monic factors."""
    cr = classify(p, tol=tol)
    return (from_roots(cr.inside), from_roots(cr.on_circle), from_roots(cr.outside), p.leading)


def are_coprime(a: Poly, b: Poly, tol: Tolerances | None = None) -> bool:
    tol = resolve(tol)
    ra, rb = find_roots(a, tol), find_roots(b, tol)
    return not any(abs(x - y) <= tol.cluster for x, _ in ra for y, _ in rb)
