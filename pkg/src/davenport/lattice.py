"""Lattice vectors, finite ground sets (boxes, balls, explicit point lists),
and the signed-permutation symmetry group used for canonicalization.

Vectors are plain tuples of Python ints, so all arithmetic in this module is
exact.  Ground sets:

    box  B(m, d)  = { v in Z^d : max_i |v_i| <= m }
    ball B(m, d)  = { v in Z^d : v_1^2 + ... + v_d^2 <= m^2 }
    explicit      = a finite, deduplicated point list

The symmetry group of both boxes and balls is the hyperoctahedral group of
signed coordinate permutations (order 2^d * d!).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

Vec = tuple  # tuple of d ints


def vec(*coords) -> Vec:
    return tuple(int(c) for c in coords)


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vneg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def vscale(k: int, u: Vec) -> Vec:
    return tuple(k * a for a in u)


def norm2(u: Vec) -> int:
    return sum(a * a for a in u)


def infnorm(u: Vec) -> int:
    return max(abs(a) for a in u) if u else 0


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class GroundSet:
    """A finite subset of Z^d given as a box, a ball, or an explicit list."""

    kind: str                     # "box" | "ball" | "explicit"
    d: int
    m: int = 0                    # radius / half-width for box and ball
    points: tuple = ()            # explicit points, deduplicated and sorted

    def __post_init__(self):
        if self.kind not in ("box", "ball", "explicit"):
            raise ValueError(f"unknown ground set kind {self.kind!r}")
        if self.d < 1:
            raise ValueError("dimension must be >= 1")
        if self.kind in ("box", "ball") and self.m < 1:
            raise ValueError("radius/half-width must be >= 1")
        if self.kind == "explicit":
            pts = sorted(set(tuple(int(c) for c in p) for p in self.points))
            for p in pts:
                if len(p) != self.d:
                    raise DimensionMismatch(
                        f"point {p} has dimension {len(p)}, expected {self.d}")
            object.__setattr__(self, "points", tuple(pts))

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __str__(self):
        if self.kind == "explicit":
            return f"explicit[{len(self.points)} pts, d={self.d}]"
        return f"{self.kind}:{self.m}:{self.d}"

    @property
    def max_infnorm(self) -> int:
        if self.kind in ("box", "ball"):
            return self.m
        return max((infnorm(p) for p in self.points), default=0)

    @property
    def max_norm2(self) -> int:
        """Largest squared Euclidean norm over the set (exact)."""
        if self.kind == "box":
            return self.d * self.m * self.m
        if self.kind == "ball":
            return self.m * self.m
        return max((norm2(p) for p in self.points), default=0)


def box(m: int, d: int) -> GroundSet:
    return GroundSet("box", d, m)


def ball(m: int, d: int) -> GroundSet:
    return GroundSet("ball", d, m)


def explicit(points) -> GroundSet:
    pts = [tuple(int(c) for c in p) for p in points]
    if not pts:
        raise ValueError("explicit ground set must be nonempty")
    return GroundSet("explicit", len(pts[0]), points=tuple(pts))


def contains(g: GroundSet, v) -> bool:
    """Exact membership test."""
    if len(v) != g.d:
        raise DimensionMismatch(f"vector {v} has dimension {len(v)}, ground set has {g.d}")
    v = tuple(int(c) for c in v)
    if g.kind == "box":
        return all(abs(c) <= g.m for c in v)
    if g.kind == "ball":
        return norm2(v) <= g.m * g.m
    return v in g.points


def enumerate_points(g: GroundSet) -> list:
    """All points of g in lexicographic order."""
    if g.kind == "explicit":
        return list(g.points)
    rng = range(-g.m, g.m + 1)
    if g.kind == "box":
        return [tuple(p) for p in itertools.product(rng, repeat=g.d)]
    m2 = g.m * g.m
    return [tuple(p) for p in itertools.product(rng, repeat=g.d) if norm2(p) <= m2]


def parse_ground(text: str) -> GroundSet:
    """Parse `box:m:d`, `ball:m:d`, or `file:PATH` (one point per line)."""
    if text.startswith("file:"):
        path = text[5:]
        pts = []
        with open(path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                pts.append(tuple(int(t) for t in line.split()))
        return explicit(pts)
    parts = text.split(":")
    if len(parts) != 3 or parts[0] not in ("box", "ball"):
        raise ValueError(f"cannot parse ground set {text!r}")
    m, d = int(parts[1]), int(parts[2])
    return GroundSet(parts[0], d, m)


# ---------------------------------------------------------------------------
# Signed permutation group
# ---------------------------------------------------------------------------

def signed_permutations(d: int):
    """All (perm, signs) pairs; the element maps v to w with
    w[i] = signs[i] * v[perm[i]].  Group order 2^d * d!."""
    out = []
    for perm in itertools.permutations(range(d)):
        for signs in itertools.product((1, -1), repeat=d):
            out.append((perm, signs))
    return out


def apply_signed_perm(elem, v: Vec) -> Vec:
    perm, signs = elem
    return tuple(signs[i] * v[perm[i]] for i in range(len(v)))


_GROUP_CACHE = {}


def group(d: int):
    if d not in _GROUP_CACHE:
        _GROUP_CACHE[d] = signed_permutations(d)
    return _GROUP_CACHE[d]


def canonical_vector(v: Vec) -> Vec:
    """Lexicographically least image of a single vector under the group."""
    return min(apply_signed_perm(g, v) for g in group(len(v)))


def canonical_orbit_representative(vs, with_column_perms: bool = True):
    """Lexicographically least image of a vector list under the signed
    permutation group; when `with_column_perms` the list order itself is
    also quotiented (the image list is sorted before comparison)."""
    vs = [tuple(v) for v in vs]
    if not vs:
        return []
    d = len(vs[0])
    if any(len(v) != d for v in vs):
        raise DimensionMismatch("mixed dimensions in vector list")
    best = None
    for g in group(d):
        img = [apply_signed_perm(g, v) for v in vs]
        if with_column_perms:
            img.sort()
        img = tuple(img)
        if best is None or img < best:
            best = img
    return list(best)


def canonical_decorated(support, mults):
    """Canonical form of a support with attached multiplicities: the
    lexicographically least sorted tuple of (vector, mult) pairs over the
    group.  Two decorated supports are equivalent iff forms are equal."""
    pairs = list(zip((tuple(v) for v in support), mults))
    if not pairs:
        return ()
    d = len(pairs[0][0])
    best = None
    for g in group(d):
        img = tuple(sorted((apply_signed_perm(g, v), int(mu)) for v, mu in pairs))
        if best is None or img < best:
            best = img
    return best


def orbit_representatives(points, d: int):
    """Subset of `points` that are the lexicographic minimum of their own
    orbit within `points` (orbits taken in all of Z^d; for box/ball ground
    sets orbits stay inside the set)."""
    pts = set(points)
    reps = []
    for p in points:
        if canonical_vector(p) == p:
            reps.append(p)
    # canonical_vector(p) is always a group image of p; for symmetric ground
    # sets it lies in pts, so every orbit contributes exactly one rep.
    if not reps and points:
        reps = [min(pts)]
    return reps
