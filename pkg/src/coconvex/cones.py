"""Strongly convex rational polyhedral cones with dual ray/facet descriptions.

The workhorse is :func:`extreme_rays`, an incremental double-description
pass with exact integer pivots and the combinatorial adjacency test.  It
converts between the two descriptions of a pointed cone in either
direction, since facets of a cone are the extreme rays of its dual.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotFullDimensional, NotStronglyConvex
from .linalg import dot, independent_subset, primitive, rank, solve
from .lp import nonnegative_combination


@dataclass(frozen=True)
class RationalCone:
    """Full-dimensional strongly convex cone; both descriptions canonical.

    `rays` are the primitive integer extreme rays, `facets` the primitive
    integer inner normals (facet f means f.x >= 0 on the cone), each sorted
    lexicographically so that structural equality is meaningful.
    """

    dim: int
    rays: tuple
    facets: tuple

    def contains(self, point) -> bool:
        return all(dot(f, point) >= 0 for f in self.facets)


def extreme_rays(constraints, dim: int):
    """Extreme rays of ``{y : a.y >= 0 for a in constraints}``.

    Requires the constraint vectors to span R^dim (so the cone is pointed)
    and returns sorted primitive integer generators.  Constraints are
    processed one at a time; new rays come from adjacent positive/negative
    pairs, with adjacency decided by zero-set inclusion.
    """
    cons = []
    seen = set()
    for a in constraints:
        a = primitive(a)
        if any(x != 0 for x in a) and a not in seen:
            seen.add(a)
            cons.append(a)
    base = independent_subset(cons, dim)
    if base is None:
        raise ValueError("constraints do not span the ambient space")
    order = base + [i for i in range(len(cons)) if i not in base]
    cons = [cons[i] for i in order]

    bmat = cons[:dim]
    rays = []
    for j in range(dim):
        rhs = [0] * dim
        rhs[j] = 1
        y = primitive(solve(bmat, rhs))
        mask = 0
        for i in range(dim):
            if dot(cons[i], y) == 0:
                mask |= 1 << i
        rays.append((y, mask))

    for idx in range(dim, len(cons)):
        a = cons[idx]
        pos, zero, neg = [], [], []
        for vec, mask in rays:
            d = dot(a, vec)
            if d > 0:
                pos.append((vec, mask, d))
            elif d < 0:
                neg.append((vec, mask, d))
            else:
                zero.append((vec, mask | (1 << idx)))
        if not neg:
            rays = [(v, m) for v, m, _ in pos] + zero
            continue
        new = []
        new_seen = set()
        for pvec, pmask, pd in pos:
            for nvec, nmask, nd in neg:
                common = pmask & nmask
                adjacent = True
                for vec, mask in rays:
                    if vec is pvec or vec is nvec:
                        continue
                    if common & ~mask == 0:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                combo = primitive(tuple(pd * nv - nd * pv for pv, nv in zip(pvec, nvec)))
                if combo in new_seen:
                    continue
                new_seen.add(combo)
                mask = 0
                for i in range(idx + 1):
                    if dot(cons[i], combo) == 0:
                        mask |= 1 << i
                new.append((combo, mask))
        rays = [(v, m) for v, m, _ in pos] + zero + new

    return sorted(v for v, _ in rays)


def is_pointed_by_lp(rays) -> bool:
    """LP decision of strong convexity: some functional is >= 1 on all rays.

    Independent of any facet computation; the test-suite oracle route.
    """
    n = len(rays[0])
    k = len(rays)
    cols = [tuple(r[j] for r in rays) for j in range(n)]
    cols += [tuple(-r[j] for r in rays) for j in range(n)]
    for i in range(k):
        slack = [0] * k
        slack[i] = -1
        cols.append(tuple(slack))
    return nonnegative_combination(cols, (1,) * k) is not None


def dual_description(rays) -> RationalCone:
    """Build the cone generated by `rays` with both dual descriptions.

    Raises NotStronglyConvex if the cone contains a line and
    NotFullDimensional if it spans a proper subspace.
    """
    rays = [primitive(r) for r in rays]
    rays = [r for r in rays if any(x != 0 for x in r)]
    if not rays:
        raise ValueError("need at least one nonzero ray")
    n = len(rays[0])
    if any(len(r) != n for r in rays):
        raise ValueError("rays of mixed dimension")
    if not is_pointed_by_lp(rays):
        raise NotStronglyConvex("cone contains a line")
    if rank(rays) < n:
        raise NotFullDimensional("rays span a proper subspace")
    facets = extreme_rays(rays, n)
    if rank(facets) < n:
        raise NotStronglyConvex("cone contains a line")
    canon = extreme_rays(facets, n)
    cone = RationalCone(dim=n, rays=tuple(canon), facets=tuple(sorted(facets)))
    assert all(cone.contains(r) for r in rays)
    return cone


def orthant(n: int) -> RationalCone:
    axes = tuple(sorted(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))
    return RationalCone(dim=n, rays=axes, facets=axes)


def is_positive_on_cone(functional, cone: RationalCone) -> bool:
    """True iff the functional is strictly positive on every extreme ray."""
    if len(functional) != cone.dim:
        raise ValueError("dimension mismatch")
    return all(dot(functional, r) > 0 for r in cone.rays)
