"""Cobounded convex regions inside a cone and their exact covolumes.

A region is conv(generators) + cone; the complement inside the cone is the
coconvex body whose volume is the covolume.  Coboundedness is certified by
a level threshold: once the slice {level = T} of the cone lies in the
region, star-shapedness of the complement about the origin puts the whole
half-space {level >= T} inside as well.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cones import RationalCone, extreme_rays, is_positive_on_cone
from .errors import CapExceeded, ConeMismatch, NonpositiveScalar, WrongArity
from .linalg import dot, primitive
from .polytopes import hull_vertices, polytope_volume, vertices_from_halfspaces

THRESHOLD_DOUBLING_CAP = 64  # threshold search stops at T0 * 2**64


@dataclass(frozen=True)
class NewtonRegion:
    """Region conv(generators) + cone, with facets and certified threshold.

    `generators` is pruned to the vertex set of the region; `facets` are
    (normal, offset) pairs meaning normal.x >= offset, normals primitive
    integer; `threshold` T certifies cone & {ell >= T} inside the region.
    """

    cone: RationalCone
    ell: tuple
    generators: tuple
    facets: tuple
    threshold: Fraction

    @property
    def dim(self) -> int:
        return self.cone.dim

    def contains(self, point) -> bool:
        return all(dot(u, point) >= c for u, c in self.facets)


@dataclass(frozen=True)
class CoconvexBody:
    region: NewtonRegion
    covolume: Fraction


def newton_region(cone: RationalCone, generators, ell) -> NewtonRegion:
    """Build conv(generators) + cone and certify coboundedness.

    Raises NotCobounded (via CapExceeded) when some ray of the cone is
    never dominated, and ValueError on malformed input.
    """
    gens = sorted({tuple(Fraction(x) for x in g) for g in generators})
    if not gens:
        raise ValueError("need at least one generator")
    n = cone.dim
    if any(len(g) != n for g in gens):
        raise ValueError("generator dimension mismatch")
    ell = primitive(ell)
    if not is_positive_on_cone(ell, cone):
        raise ValueError("level functional must be strictly positive on the cone")
    for g in gens:
        if not cone.contains(g):
            raise ValueError(f"generator {g} lies outside the cone")

    homog = [primitive(g + (Fraction(1),)) for g in gens]
    homog += [r + (0,) for r in cone.rays]
    raw_facets = extreme_rays(homog, n + 1)
    # A zero spatial normal is the lifted cone's facet t >= 0, not a facet
    # of the region; drop it.
    facets = tuple(sorted((tuple(f[:n]), Fraction(-f[n])) for f in raw_facets
                          if any(x != 0 for x in f[:n])))

    vertex_gens = extreme_rays([tuple(u) + (-c,) for u, c in facets]
                               + [tuple(0 for _ in range(n)) + (1,)], n + 1)
    vertices = []
    for g in vertex_gens:
        t = g[n]
        if t == 0:
            assert tuple(g[:n]) in cone.rays, "recession mismatch"
            continue
        vertices.append(tuple(Fraction(x, t) for x in g[:n]))

    t0 = max(dot(ell, g) for g in gens)
    threshold = _certify_threshold(cone, ell, facets, Fraction(t0))
    return NewtonRegion(cone=cone, ell=ell, generators=tuple(sorted(vertices)),
                        facets=facets, threshold=threshold)


def _slice_inside(cone, ell, facets, t) -> bool:
    # The slice {level = t} of the cone is conv{t r / ell(r)}; it lies in
    # the region iff every facet holds at each scaled ray.
    for u, c in facets:
        for r in cone.rays:
            if t * Fraction(dot(u, r), dot(ell, r)) < c:
                return False
    return True


def _certify_threshold(cone, ell, facets, t0: Fraction) -> Fraction:
    if _slice_inside(cone, ell, facets, t0):
        return t0
    t = t0 if t0 > 0 else Fraction(1)
    for _ in range(THRESHOLD_DOUBLING_CAP + 1):
        if _slice_inside(cone, ell, facets, t):
            return t
        t *= 2
    raise CapExceeded(
        "no finite threshold certifies coboundedness; "
        "some ray of the cone is never dominated by the generators")


def cobounded_threshold(region: NewtonRegion) -> Fraction:
    """The certified level T with cone & {ell >= T} inside the region."""
    return region.threshold


@functools.lru_cache(maxsize=None)
def covol(region: NewtonRegion) -> Fraction:
    """Exact volume of the coconvex body cone \\ region.

    Computed as vol(cone & {ell <= T}) - vol(region & {ell <= T}) at the
    certified threshold; the value is independent of T above it.
    """
    return covol_at(region, region.threshold)


def covol_at(region: NewtonRegion, t: Fraction) -> Fraction:
    """Covolume evaluated with truncation level t >= the threshold."""
    if t < region.threshold:
        raise ValueError("truncation below the certified threshold")
    cone, ell, n = region.cone, region.ell, region.dim
    origin = tuple(Fraction(0) for _ in range(n))
    cone_pts = [origin] + [tuple(t * Fraction(x, dot(ell, r)) for x in r)
                           for r in cone.rays]
    vol_cone = polytope_volume(hull_vertices(cone_pts), degenerate_ok=True)
    cap = (tuple(-x for x in ell), -t)
    verts = vertices_from_halfspaces(region.facets + (cap,), n)
    vol_region = polytope_volume(hull_vertices(verts), degenerate_ok=True)
    return vol_cone - vol_region


def coconvex_body(region: NewtonRegion) -> CoconvexBody:
    return CoconvexBody(region=region, covolume=covol(region))


def _check_compatible(r1: NewtonRegion, r2: NewtonRegion):
    if r1.cone != r2.cone or r1.ell != r2.ell:
        raise ConeMismatch("regions live over different cones or levels")


def minkowski_sum(r1: NewtonRegion, r2: NewtonRegion) -> NewtonRegion:
    """Region with generators {g1 + g2}; redundant points are pruned."""
    _check_compatible(r1, r2)
    sums = {tuple(a + b for a, b in zip(g1, g2))
            for g1 in r1.generators for g2 in r2.generators}
    return newton_region(r1.cone, sums, r1.ell)


def scale(region: NewtonRegion, lam) -> NewtonRegion:
    lam = Fraction(lam)
    if lam <= 0:
        raise NonpositiveScalar(f"scaling factor {lam} must be positive")
    gens = [tuple(lam * x for x in g) for g in region.generators]
    return newton_region(region.cone, gens, region.ell)


def cone_region(cone: RationalCone, ell) -> NewtonRegion:
    """The region equal to the whole cone (covolume zero, Minkowski unit)."""
    return newton_region(cone, [tuple(0 for _ in range(cone.dim))], ell)


def newton_diagram(region: NewtonRegion):
    """Bounded faces: facets whose normal is strictly positive on the cone."""
    faces = []
    for u, c in region.facets:
        if all(dot(u, r) > 0 for r in region.cone.rays):
            verts = [v for v in region.generators if dot(u, v) == c]
            faces.append(hull_vertices(verts))
    return faces


def mixed_covol(regions) -> Fraction:
    """Mixed covolume by inclusion-exclusion over subset Minkowski sums.

    Symmetric, multilinear, and equal to the covolume on the diagonal.
    """
    regions = list(regions)
    if not regions:
        raise WrongArity("need n regions")
    n = regions[0].dim
    if len(regions) != n:
        raise WrongArity(f"need exactly {n} regions, got {len(regions)}")
    for r in regions[1:]:
        _check_compatible(regions[0], r)
    sums = {}
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            if size == 1:
                sums[subset] = regions[subset[0]]
            else:
                sums[subset] = minkowski_sum(sums[subset[:-1]], regions[subset[-1]])
    total = Fraction(0)
    for subset, reg in sums.items():
        sign = -1 if (n - len(subset)) % 2 else 1
        total += sign * covol(reg)
    factorial = 1
    for i in range(2, n + 1):
        factorial *= i
    return total / factorial
