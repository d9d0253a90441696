"""The minimal del Pezzo quaternion types and their constructors.

Three of the four types are direct degree patterns on P^2:

    F23       a = (0,0,0), d = 1      discriminant degree 3
    F24       a = (0,1,1), d = 0      discriminant degree 4
    F25minus  a = (0,0,1), d = 1      discriminant degree 5

The fourth, F25plus, is not a sum-of-line-bundles form: it arises from a
net of quadrics in P^4 (a symmetric 5x5 matrix of linear forms) by
orthogonal projection away from a common smooth point of the net.  It is
exposed fiberwise only, as a provider of 3x3 scalar forms whose degeneracy
locus is the quintic det5 = 0; all fiber operations accept its output.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from . import linalg
from .errors import (
    BasePointSingularError,
    DegenerateAfterRetriesError,
    DegreePatternError,
    UnknownTagError,
)
from .invariants import BundleDescriptor, CotangentTwist, LineBundle
from .poly import HomogPoly, PolyMatrix, PolyRing, det
from .qform import FiberPoint, QForm, discriminant, new_qform


class DelPezzoTag(Enum):
    F23 = "F23"
    F24 = "F24"
    F25_PLUS = "F25plus"
    F25_MINUS = "F25minus"

    @classmethod
    def coerce(cls, tag) -> "DelPezzoTag":
        if isinstance(tag, cls):
            return tag
        for member in cls:
            if member.value == tag or member.name == tag:
                return member
        raise UnknownTagError(f"unknown del Pezzo tag {tag!r}")


@dataclass(frozen=True)
class ResolutionData:
    """Source and target of the adjusted symmetric resolution of the
    ramification module; the target is the V* of the type."""

    source: BundleDescriptor
    target: BundleDescriptor


@dataclass(frozen=True)
class TypeData:
    tag: DelPezzoTag
    a: tuple | None           # None for the projected type F25plus
    d: int | None
    disc_degree: int
    vstar: BundleDescriptor
    resolution: ResolutionData
    bs_description: str
    h12: int


CATALOG = {
    DelPezzoTag.F23: TypeData(
        tag=DelPezzoTag.F23,
        a=(0, 0, 0), d=1, disc_degree=3,
        vstar=BundleDescriptor.of(LineBundle(-1), LineBundle(-1), LineBundle(-1)),
        resolution=ResolutionData(
            source=BundleDescriptor.of(LineBundle(-2), LineBundle(-2), LineBundle(-2)),
            target=BundleDescriptor.of(LineBundle(-1), LineBundle(-1), LineBundle(-1))),
        bs_description="divisor of bidegree (1,2) in P2 x P2",
        h12=0),
    DelPezzoTag.F24: TypeData(
        tag=DelPezzoTag.F24,
        a=(0, 1, 1), d=0, disc_degree=4,
        vstar=BundleDescriptor.of(LineBundle(-2), LineBundle(-1), LineBundle(-1)),
        resolution=ResolutionData(
            source=BundleDescriptor.of(LineBundle(-2), LineBundle(-3), LineBundle(-3)),
            target=BundleDescriptor.of(LineBundle(-2), LineBundle(-1), LineBundle(-1))),
        bs_description="double cover of P1 x P2 ramified in a (2,2) divisor",
        h12=2),
    DelPezzoTag.F25_PLUS: TypeData(
        tag=DelPezzoTag.F25_PLUS,
        a=None, d=None, disc_degree=5,
        vstar=BundleDescriptor.of(CotangentTwist(0), LineBundle(-2)),
        resolution=ResolutionData(
            source=BundleDescriptor.of(CotangentTwist(-2), LineBundle(-3)),
            target=BundleDescriptor.of(CotangentTwist(0), LineBundle(-2))),
        bs_description="blow-up of P3 along a degree-7 genus-5 curve",
        h12=5),
    DelPezzoTag.F25_MINUS: TypeData(
        tag=DelPezzoTag.F25_MINUS,
        a=(0, 0, 1), d=1, disc_degree=5,
        vstar=BundleDescriptor.of(LineBundle(-2), LineBundle(-2), LineBundle(-1)),
        resolution=ResolutionData(
            source=BundleDescriptor.of(LineBundle(-4), LineBundle(-3), LineBundle(-3)),
            target=BundleDescriptor.of(LineBundle(-2), LineBundle(-2), LineBundle(-1))),
        bs_description="blow-up of a cubic threefold along a line",
        h12=5),
}

LINE_BUNDLE_TAGS = (DelPezzoTag.F23, DelPezzoTag.F24, DelPezzoTag.F25_MINUS)

GENERATION_RETRIES = 100


def resolution_metadata(tag) -> ResolutionData:
    return CATALOG[DelPezzoTag.coerce(tag)].resolution


def make_type(tag, entries=None, *, domain=None, seed=None, ring=None) -> QForm:
    """A validated form of the given line-bundle type.

    With ``entries`` (a 3x3 grid or PolyMatrix) the form is validated
    against the type's degree pattern.  Otherwise entries are drawn with
    the seeded generator over ``domain`` and regenerated until the
    discriminant is nonzero (bounded retries).
    """
    tag = DelPezzoTag.coerce(tag)
    if tag not in LINE_BUNDLE_TAGS:
        raise UnknownTagError(
            f"{tag.value} is not a direct degree pattern; build it with "
            "make_net / make_f25plus")
    data = CATALOG[tag]
    if entries is not None:
        return new_qform(data.a, data.d, entries)
    if ring is None:
        if domain is None:
            raise ValueError("need entries, or a domain/ring to generate them")
        ring = PolyRing(domain)
    rng = random.Random(seed)
    for _ in range(GENERATION_RETRIES):
        grid = [[None] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(i, 3):
                f = ring.random_homogeneous(data.a[i] + data.a[j] + data.d, rng)
                grid[i][j] = grid[j][i] = f
        q = new_qform(data.a, data.d, grid)
        if not discriminant(q).is_zero:
            return q
    raise DegenerateAfterRetriesError(
        f"no nondegenerate {tag.value} form after {GENERATION_RETRIES} tries")


# ------------------------------------------------------------ nets of quadrics

@dataclass(frozen=True)
class QuadricNet:
    """A net of quadrics in P^4 in normalized position.

    The 5x5 symmetric matrix has linear entries, and the base point
    p = (0:0:0:0:1) is arranged so that the last row reads (u, v, w, 0, 0);
    in particular the (5,5) entry vanishes, i.e. p lies on every quadric,
    and p is a smooth point of each one.
    """

    matrix: PolyMatrix

    def __post_init__(self):
        m = self.matrix
        if m.rows != 5 or m.cols != 5:
            raise ValueError("a net needs a 5x5 matrix")
        if not m.is_symmetric():
            raise ValueError("net matrix must be symmetric")
        ring = m.ring
        for row in m.entries:
            for f in row:
                if f and f.degree != 1:
                    raise DegreePatternError("net entries must be linear or zero")
        expected = [ring.variable(0), ring.variable(1), ring.variable(2),
                    ring.zero, ring.zero]
        for j in range(5):
            if m.entry(4, j) != expected[j]:
                raise DegreePatternError(
                    "normalized position requires the last row (u, v, w, 0, 0)")

    @property
    def ring(self) -> PolyRing:
        return self.matrix.ring

    @property
    def domain(self):
        return self.matrix.ring.domain


def net_from_upper(ring: PolyRing, fifteen_entries) -> QuadricNet:
    """Build a net from its upper triangle, row-major (A11..A15, A22..A55)."""
    if len(fifteen_entries) != 15:
        raise ValueError("expected 15 upper-triangle entries")
    grid = [[None] * 5 for _ in range(5)]
    it = iter(fifteen_entries)
    for i in range(5):
        for j in range(i, 5):
            f = next(it)
            grid[i][j] = grid[j][i] = f
    return QuadricNet(matrix=PolyMatrix(grid))


def make_net(*, domain=None, ring=None, seed=None) -> QuadricNet:
    """Seeded random net in normalized position with nonzero quintic det5."""
    if ring is None:
        if domain is None:
            raise ValueError("need a domain or ring")
        ring = PolyRing(domain)
    rng = random.Random(seed)
    fixed = [ring.variable(0), ring.variable(1), ring.variable(2),
             ring.zero, ring.zero]
    for _ in range(GENERATION_RETRIES):
        grid = [[None] * 5 for _ in range(5)]
        for i in range(4):
            for j in range(i, 4):
                f = ring.random_homogeneous(1, rng)
                grid[i][j] = grid[j][i] = f
        for j in range(5):
            grid[4][j] = grid[j][4] = fixed[j]
        net = QuadricNet(matrix=PolyMatrix(grid))
        if not det(net.matrix).is_zero:
            return net
    raise DegenerateAfterRetriesError(
        f"no net with nonzero quintic after {GENERATION_RETRIES} tries")


class F25PlusProvider:
    """Fiberwise conic forms of the projected net.

    At a base point q0, restrict the quadric A(q0) to the hyperplane
    W = ker(p^T A(q0)) (which contains p) and descend to W / <p>; the
    deterministic basis is the reduced-echelon kernel basis with the p
    direction pivoted away.  The resulting 3x3 scalar form is degenerate
    exactly on the quintic det5 = 0.
    """

    def __init__(self, net: QuadricNet):
        self.net = net
        self._det5 = None

    @property
    def det5(self) -> HomogPoly:
        if self._det5 is None:
            self._det5 = det(self.net.matrix)
        return self._det5

    def fiber_form(self, p: FiberPoint):
        dom = self.net.domain
        values = self.net.matrix.evaluate(p.coords)
        row = values[4]
        if not any(row):
            raise BasePointSingularError(
                f"projection point is singular on the quadric over {p}")
        kernel = linalg.kernel_basis([row], dom)
        basis = [v for v in kernel if not v[4]]
        if len(basis) != 3:
            raise BasePointSingularError(
                f"kernel at {p} does not split off the projection point")

        def pair(x, y):
            acc = dom.zero
            for i in range(5):
                if not x[i]:
                    continue
                for j in range(5):
                    if y[j]:
                        acc = acc + x[i] * values[i][j] * y[j]
            return acc

        return [[pair(basis[r], basis[s]) for s in range(3)] for r in range(3)]

    def rank_at(self, p: FiberPoint) -> int:
        return linalg.rank(self.fiber_form(p), self.net.domain)

    def degenerate_at(self, p: FiberPoint) -> bool:
        return self.rank_at(p) < 3


def make_f25plus(net: QuadricNet) -> F25PlusProvider:
    return F25PlusProvider(net)
