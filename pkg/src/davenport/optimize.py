"""Derivative-free maximization of the geometric objectives: the hexagon
area in the two support angles, the reduced two-angle dodecahedron volume,
and the full five-parameter dodecahedron volume on the unit sphere.

All objectives are smooth trigonometric expressions (the five-variable one
has absolute values, evaluated directly).  The maximizer is deterministic:
a uniform grid, compass (coordinate) descent from the best 16 cells with
multiplicative step shrinking, and for arity >= 3 a fixed number of seeded
random restarts.  Ties break toward the lexicographically smallest point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .polytopes import simplex_vertices, volume_float


def hexagon_area(alpha, beta):
    """Area of the hexagon spanned by three unit vectors at consecutive
    angles alpha, beta: sin(a) + sin(b) - sin(a+b).  Scale by m^2 for
    radius m."""
    return np.sin(alpha) + np.sin(beta) - np.sin(alpha + beta)


def dodeca_reduced(theta, theta1):
    """Reduced dodecahedron volume after the symmetry relations:
    2 sin(t) sin(t1) + 2 sin(t/2) sin(2 t1)."""
    return 2.0 * np.sin(theta) * np.sin(theta1) \
        + 2.0 * np.sin(theta * 0.5) * np.sin(2.0 * theta1)


def dodeca_full(theta, theta1, theta2, phi1, phi2):
    """Volume of the rhombic dodecahedron spanned by the four unit vectors
    parameterized by (theta, theta1, theta2, phi1, phi2); see
    `dodeca_vectors` for the frame."""
    s = np.sin(theta)
    c = np.cos(theta)
    inner = np.cos(theta1) * np.sin(phi1) * np.sin(theta2) \
        - np.sin(theta1) * np.cos(theta2) * np.sin(phi2)
    cross = np.cos(theta1) * np.cos(phi1) * np.sin(theta2) \
        - np.sin(theta1) * np.cos(theta2) * np.cos(phi2)
    return s * (np.sin(theta1) - np.sin(theta2)) + np.abs(inner) \
        + np.abs(c * inner - s * cross)


def dodeca_vectors(theta, theta1, theta2, phi1, phi2):
    """The four unit vectors behind `dodeca_full`."""
    w1 = (1.0, 0.0, 0.0)
    w2 = (math.cos(theta), math.sin(theta), 0.0)
    w3 = (math.cos(theta1) * math.cos(phi1),
          math.cos(theta1) * math.sin(phi1), math.sin(theta1))
    w4 = (math.cos(theta2) * math.cos(phi2),
          math.cos(theta2) * math.sin(phi2), math.sin(theta2))
    return [w1, w2, w3, w4]


EPS_DOMAIN = 1e-9

HEXAGON = None
DODECA_REDUCED = None
DODECA_FULL = None


@dataclass
class ObjectiveSpec:
    name: str
    arity: int
    bounds: tuple               # per-variable (lo, hi); evaluated on the
                                # closed box shrunk by EPS_DOMAIN
    fn: object
    symmetries: str = ""

    def __call__(self, x):
        return float(self.fn(*x))

    def clamp(self, x):
        out = []
        for v, (lo, hi) in zip(x, self.bounds):
            out.append(float(min(max(v, lo + EPS_DOMAIN), hi - EPS_DOMAIN)))
        return tuple(out)


def _init_specs():
    global HEXAGON, DODECA_REDUCED, DODECA_FULL
    pi = math.pi
    HEXAGON = ObjectiveSpec("hexagon", 2, ((0.0, pi), (0.0, pi)),
                            hexagon_area, symmetries="f(a,b)=f(b,a)")
    DODECA_REDUCED = ObjectiveSpec(
        "dodeca_reduced", 2, ((0.0, pi), (0.0, pi / 2)), dodeca_reduced)
    DODECA_FULL = ObjectiveSpec(
        "dodeca_full", 5,
        ((0.0, pi), (0.0, pi / 2), (-pi / 2, 0.0), (pi, 2 * pi), (pi, 2 * pi)),
        dodeca_full)


_init_specs()


@dataclass
class MaximizeResult:
    point: tuple
    value: float
    grad_inf: float             # max |central finite-difference component|
    evals: int
    trace: dict = field(default_factory=dict)


def _better(val, pt, best_val, best_pt):
    if val > best_val:
        return True
    return val == best_val and (best_pt is None or pt < best_pt)


def _compass(obj: ObjectiveSpec, start, step0: float, iters: int):
    """Deterministic coordinate descent with multiplicative step shrink."""
    x = list(obj.clamp(start))
    fx = obj(x)
    step = step0
    evals = 1
    for _ in range(iters):
        improved = False
        for i in range(obj.arity):
            for sgn in (1.0, -1.0):
                y = list(x)
                y[i] = y[i] + sgn * step
                y = list(obj.clamp(y))
                fy = obj(y)
                evals += 1
                if fy > fx:
                    x, fx = y, fy
                    improved = True
        if not improved:
            step *= 0.5
            if step < 1e-12:
                break
    return tuple(x), fx, evals


def maximize(obj: ObjectiveSpec, grid_n: int = 64, refine_iters: int = 200,
             seed: int = 0, top_k: int = 16, restarts: int = 64) -> MaximizeResult:
    """Grid scan + compass refinement; deterministic given (grid_n,
    refine_iters, seed).  For arity >= 3 adds `restarts` seeded random
    starting points."""
    if grid_n < 8:
        raise ValueError("grid_n must be >= 8")
    n_axis = grid_n if obj.arity <= 2 else max(8, min(grid_n, 9))
    axes = []
    for lo, hi in obj.bounds:
        h = (hi - lo) / n_axis
        axes.append(np.linspace(lo + h / 2, hi - h / 2, n_axis))
    mesh = np.meshgrid(*axes, indexing="ij")
    vals = np.asarray(obj.fn(*mesh), dtype=float)
    flat = vals.ravel()
    evals = flat.size
    order = np.argsort(flat)[::-1][:top_k]
    starts = []
    for idx in order:
        coords = np.unravel_index(int(idx), vals.shape)
        starts.append(tuple(axes[i][coords[i]] for i in range(obj.arity)))
    if obj.arity >= 3:
        rng = np.random.default_rng(seed)
        lo = np.array([b[0] for b in obj.bounds])
        hi = np.array([b[1] for b in obj.bounds])
        for _ in range(restarts):
            starts.append(tuple(lo + rng.random(obj.arity) * (hi - lo)))

    grid_h = max(float((hi_ - lo_) / n_axis) for lo_, hi_ in obj.bounds)
    best_pt, best_val = None, -math.inf
    for s in starts:
        pt, val, ev = _compass(obj, s, grid_h, refine_iters)
        evals += ev
        if _better(val, pt, best_val, best_pt):
            best_pt, best_val = pt, val

    h = 1e-6
    grad = []
    for i in range(obj.arity):
        up = list(best_pt)
        dn = list(best_pt)
        up[i] += h
        dn[i] -= h
        grad.append((obj(obj.clamp(up)) - obj(obj.clamp(dn))) / (2 * h))
        evals += 2
    return MaximizeResult(best_pt, best_val, max(abs(g) for g in grad), evals,
                          trace={"grid_n": n_axis, "starts": len(starts)})


@dataclass
class SimplexEvidenceReport:
    d: int
    trials: int
    eps: float
    base_volume: float
    max_increase: float
    ok: bool
    proved_dimension: bool      # d <= 3 has a proof; d >= 4 is evidence only


def simplex_local_max_evidence(d: int, trials: int = 1000, eps: float = 1e-3,
                               seed: int = 0, tol: float = 1e-9) -> SimplexEvidenceReport:
    """Perturb the regular-simplex generators by random tangent noise of
    magnitude eps (staying on the unit sphere) and check that the body
    volume sum |det| never increases beyond tolerance."""
    if d < 2:
        raise ValueError("d must be >= 2")
    fam = simplex_vertices(d)
    base = volume_float(fam.vertices)
    rng = np.random.default_rng(seed)
    worst = -math.inf
    for _ in range(trials):
        pts = fam.vertices.copy()
        for i in range(d + 1):
            z = rng.standard_normal(d)
            v = pts[i]
            t = z - np.dot(z, v) * v
            nt = np.linalg.norm(t)
            if nt > 0:
                w = v + (eps / nt) * t
                pts[i] = w / np.linalg.norm(w)
        worst = max(worst, volume_float(pts) - base)
    return SimplexEvidenceReport(d, trials, eps, base, worst,
                                 worst <= tol, d <= 3)
