"""Even Clifford algebras of ternary quadratic forms, fiberwise.

The algebra attached to a symmetric 3x3 matrix q is generated by x, y, z
subject to  x_i x_j + x_j x_i = 2 q_ij  (so x_i^2 = q_ii).  Words in x, y, z
normalize to strictly increasing square-free words by the rewriting engine
below; the even part is 4-dimensional with basis

    1,  Xbar = yz - q23,  Ybar = zx - q13,  Zbar = xy - q12,

the last three traceless.  The trace functional is 2 on 1 and 0 on the
Xbar/Ybar/Zbar span, so half the trace of a product is its 1-component.
The whole construction is generic over the coefficient ring: scalar entries
give the fiber algebra at a point, polynomial entries give the algebra of
a global form, which is how the global trace pairing is computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

from . import linalg
from .errors import (
    InternalInvariantError,
    InvalidAlgebraError,
    NotAPerfectSquareError,
    NotDivisibleError,
    NotRecoverableError,
    OddDegreeError,
)
from .poly import PolyMatrix, adjugate3, det3, divide_exact, poly_sqrt
from .qform import FiberPoint, QForm
from .series import RationalSeries, poly_mul_1d

LETTERS = "xyz"


@dataclass(frozen=True)
class CliffordWord:
    """A scalar multiple of a word in the generators x, y, z."""

    coefficient: object
    letters: tuple

    @classmethod
    def parse(cls, coefficient, text: str) -> "CliffordWord":
        return cls(coefficient, tuple(LETTERS.index(ch) for ch in text))

    def __str__(self):
        word = "".join(LETTERS[i] for i in self.letters) or "1"
        return f"{self.coefficient}*{word}"


def reduce_word(words, q, rng=None) -> dict:
    """Normalize a linear combination of Clifford words.

    ``words`` is an iterable of CliffordWord (or (coefficient, letters)
    pairs); ``q`` is the symmetric 3x3 relation matrix, entries in any
    commutative coefficient ring.  Adjacent pairs rewrite by

        x_i x_i -> q_ii          x_j x_i -> 2 q_ij - x_i x_j   (j > i)

    until every word is strictly increasing.  The result is a dict mapping
    normal words to coefficients.  ``rng`` randomizes which reducible
    position fires first; the normal form does not depend on the choice
    (the rewriting system is confluent), which the tests exercise.
    """
    stack = []
    for w in words:
        if isinstance(w, CliffordWord):
            c, letters = w.coefficient, tuple(w.letters)
        else:
            c, letters = w[0], tuple(w[1])
        if c:
            stack.append((c, letters))
    result = {}
    while stack:
        c, w = stack.pop()
        spots = [k for k in range(len(w) - 1) if w[k] >= w[k + 1]]
        if not spots:
            s = result.get(w)
            s = c if s is None else s + c
            if s:
                result[w] = s
            else:
                result.pop(w, None)
            continue
        k = spots[0] if rng is None else rng.choice(spots)
        i, j = w[k], w[k + 1]
        head, tail = w[:k], w[k + 2:]
        if i == j:
            c2 = c * q[i][i]
            if c2:
                stack.append((c2, head + tail))
        else:
            c2 = c * (q[j][i] + q[j][i])  # 2 q_ij without needing a scalar 2
            if c2:
                stack.append((c2, head + tail))
            stack.append((-c, head + (j, i) + tail))
    return result


# ------------------------------------------------------------- rank-4 algebra

class AlgebraType(IntEnum):
    """The five isomorphism classes of rank-4 algebras with a degree-2 trace;
    types 1-4 are the even Clifford algebras of forms of rank 3, 2, 1, 0,
    type 5 (the two-arrow quiver algebra) is not even Clifford."""

    CENTRAL_SIMPLE = 1
    DEGENERATE_CLIFFORD = 2
    DOUBLE_LINE_CLIFFORD = 3
    LOCAL_COMMUTATIVE = 4
    KRONECKER_QUIVER = 5

    @property
    def is_even_clifford(self) -> bool:
        return self.value <= 4


BASIS_LABELS = ("1", "Xbar", "Ybar", "Zbar")


@dataclass(frozen=True)
class FiberAlgebra:
    """Rank-4 algebra by structure constants on (1, Xbar, Ybar, Zbar).

    ``constants[i][j][k]`` is the e_k-coefficient of e_i * e_j; ``trace`` is
    the trace functional as a 4-vector.  ``domain`` is the coefficient ring
    (a scalar domain, or a PolyRing for global computations).
    """

    domain: object
    constants: tuple
    trace: tuple

    def unit(self) -> tuple:
        d = self.domain
        return (d.one, d.zero, d.zero, d.zero)

    def basis(self, k: int) -> tuple:
        d = self.domain
        return tuple(d.one if i == k else d.zero for i in range(4))

    def element(self, coeffs) -> tuple:
        d = self.domain
        out = tuple(d(c) for c in coeffs)
        if len(out) != 4:
            raise ValueError("an element needs 4 coordinates")
        return out

    def multiply(self, u, v) -> tuple:
        d = self.domain
        out = [d.zero] * 4
        for i, ui in enumerate(u):
            if not ui:
                continue
            for j, vj in enumerate(v):
                if not vj:
                    continue
                f = ui * vj
                row = self.constants[i][j]
                for k in range(4):
                    if row[k]:
                        out[k] = out[k] + f * row[k]
        return tuple(out)

    def trace_of(self, u):
        d = self.domain
        acc = d.zero
        for t, x in zip(self.trace, u):
            acc = acc + t * x
        return acc


def fiber_algebra(q, domain) -> FiberAlgebra:
    """Even Clifford algebra of a symmetric 3x3 matrix over ``domain``.

    Entries of q are coerced into the domain; the structure constants are
    computed by normalizing products of the basis words, never from closed
    formulas, so this is an independent route to every identity about the
    algebra.
    """
    q = [[domain(q[i][j]) for j in range(3)] for i in range(3)]
    for i in range(3):
        for j in range(i):
            if q[i][j] != q[j][i]:
                raise ValueError("relation matrix must be symmetric")
    one = domain.one
    zero = domain.zero
    # Normal-form word combinations for 1, Xbar, Ybar, Zbar.
    combos = [
        {(): one},
        {(1, 2): one, (): -q[1][2]},
        {(0, 2): -one, (): q[0][2]},
        {(0, 1): one, (): -q[0][1]},
    ]
    even_words = [(), (0, 1), (0, 2), (1, 2)]

    def to_basis(normal):
        for w in normal:
            if w not in even_words:
                raise InternalInvariantError(f"odd word {w} in an even product")
        c_e = normal.get((), zero)
        c_xy = normal.get((0, 1), zero)
        c_xz = normal.get((0, 2), zero)
        c_yz = normal.get((1, 2), zero)
        a1 = c_e + q[1][2] * c_yz + q[0][2] * c_xz + q[0][1] * c_xy
        return (a1, c_yz, -c_xz, c_xy)

    constants = []
    for i in range(4):
        row = []
        for j in range(4):
            prod = []
            for wi, ci in combos[i].items():
                for wj, cj in combos[j].items():
                    prod.append((ci * cj, wi + wj))
            row.append(to_basis(reduce_word(prod, q)))
        constants.append(tuple(row))
    trace = (one + one, zero, zero, zero)
    return FiberAlgebra(domain=domain, constants=tuple(constants), trace=trace)


def fiber_algebra_at(q: QForm, p: FiberPoint) -> FiberAlgebra:
    """Fiber algebra of a global form at a point of P^2."""
    return fiber_algebra(q.matrix.evaluate(p.coords), q.domain)


def kronecker_quiver_algebra(domain) -> FiberAlgebra:
    """The two-arrow quiver algebra (upper triangular with a rank-2 corner),
    presented with its quaternion trace; the classifier must call it type 5.

    Basis: 1, s = e11 - e22, and two corner elements annihilating each other;
    s*v = v and v*s = -v for corner v, s^2 = 1.
    """
    one, zero = domain.one, domain.zero

    def vec(*vals):
        return tuple(domain(v) for v in vals)

    z4 = vec(0, 0, 0, 0)
    constants = (
        (vec(1, 0, 0, 0), vec(0, 1, 0, 0), vec(0, 0, 1, 0), vec(0, 0, 0, 1)),
        (vec(0, 1, 0, 0), vec(1, 0, 0, 0), vec(0, 0, 1, 0), vec(0, 0, 0, 1)),
        (vec(0, 0, 1, 0), vec(0, 0, -1, 0), z4, z4),
        (vec(0, 0, 0, 1), vec(0, 0, 0, -1), z4, z4),
    )
    return FiberAlgebra(domain=domain,
                        constants=constants,
                        trace=(one + one, zero, zero, zero))


# ----------------------------------------------------------------- validation

def validate_fiber_algebra(alg: FiberAlgebra) -> None:
    """Check the rank-4 algebra axioms; raise InvalidAlgebraError if broken.

    Checked: 1 is a two-sided unit, the trace is 2 on 1 and 0 on the
    traceless basis, multiplication is associative on all basis triples, and
    squares/anticommutators of traceless elements are central (which is the
    polarized form of the degree-2 Cayley-Hamilton identity).
    """
    d = alg.domain
    c = alg.constants
    if len(c) != 4 or any(len(r) != 4 or any(len(v) != 4 for v in r) for r in c):
        raise InvalidAlgebraError("structure constants are not 4x4x4")
    for j in range(4):
        if c[0][j] != alg.basis(j) or c[j][0] != alg.basis(j):
            raise InvalidAlgebraError("basis element 0 is not a two-sided unit")
    two = d.one + d.one
    if alg.trace[0] != two or any(alg.trace[k] != d.zero for k in (1, 2, 3)):
        raise InvalidAlgebraError("trace functional is not (2, 0, 0, 0)")
    for i in range(4):
        for j in range(4):
            for k in range(4):
                left = alg.multiply(c[i][j], alg.basis(k))
                right = alg.multiply(alg.basis(i), c[j][k])
                if left != right:
                    raise InvalidAlgebraError(
                        f"associativity fails on basis triple ({i},{j},{k})")
    for i in range(1, 4):
        for j in range(1, 4):
            anti = tuple(x + y for x, y in zip(c[i][j], c[j][i]))
            if any(anti[k] for k in (1, 2, 3)):
                raise InvalidAlgebraError(
                    f"anticommutator of traceless elements {i},{j} is not central")


# -------------------------------------------------------------- trace pairing

def trace_pairing_fiber(alg: FiberAlgebra):
    """Half-trace pairing on the traceless part: P_ij = (e_i e_j)_1."""
    return [[alg.constants[i][j][0] for j in range(1, 4)] for i in range(1, 4)]


def trace_pairing_global(q: QForm) -> PolyMatrix:
    """Trace pairing of the global algebra, computed through the rewriting
    engine with polynomial coefficients.  Equals -adjugate3(q.matrix) as an
    exact polynomial identity; the test suite checks the two routes against
    each other."""
    alg = fiber_algebra(q.matrix.entries, q.ring)
    return PolyMatrix(trace_pairing_fiber(alg))


def recover_form(pairing: PolyMatrix) -> PolyMatrix:
    """Solve P = -Adj Q for Q, up to a global sign.

    Requires -det P to be a nonzero perfect square s^2 (s is then det Q up
    to sign); the result is adjugate3(P) / s entrywise.  Round trip:
    recover_form(trace_pairing_global(q)) is q.matrix or its negative.
    """
    if not pairing.is_symmetric():
        raise NotRecoverableError("trace pairing must be symmetric")
    d = -det3(pairing)
    if d.is_zero:
        raise NotRecoverableError("det of the pairing vanishes")
    try:
        s = poly_sqrt(d)
    except NotAPerfectSquareError as exc:
        raise NotRecoverableError(f"-det P is not a perfect square: {exc}") from exc
    adj = adjugate3(pairing)
    try:
        return adj.map(lambda f: divide_exact(f, s))
    except NotDivisibleError as exc:
        raise NotRecoverableError(f"adjugate not divisible by sqrt: {exc}") from exc


# -------------------------------------------------------------- cayley-hamilton

def cayley_hamilton_check(alg: FiberAlgebra, element) -> bool:
    """Does a^2 - tr(a) a + g = 0 hold, with g = ((tr a)^2 - tr(a^2)) / 2?"""
    a = alg.element(element)
    d = alg.domain
    sq = alg.multiply(a, a)
    t = alg.trace_of(a)
    half = d.one / (d.one + d.one)
    g = (t * t - alg.trace_of(sq)) * half
    lhs = tuple(sq[k] - t * a[k] + (g if k == 0 else d.zero) for k in range(4))
    return not any(lhs)


# -------------------------------------------------------------- classification

def classify(alg: FiberAlgebra) -> AlgebraType:
    """Isomorphism type of a rank-4 algebra with trace, over a field.

    Case split on the rank r of the trace pairing restricted to the
    traceless part: r >= 2 is central simple; r = 0 is type 4 unless some
    product of traceless basis elements survives (type 3); r = 1 picks a
    traceless x with x^2 = a != 0 and branches on whether a is a square and,
    if so, whether left multiplication by x/sqrt(a) acts on the orthogonal
    complement as a single eigenvalue (the quiver algebra) or two (type 2).
    """
    validate_fiber_algebra(alg)
    d = alg.domain
    pairing = trace_pairing_fiber(alg)
    r = linalg.rank(pairing, d)
    if r >= 2:
        return AlgebraType.CENTRAL_SIMPLE
    if r == 0:
        for i in range(1, 4):
            for j in range(1, 4):
                if any(alg.constants[i][j]):
                    return AlgebraType.DOUBLE_LINE_CLIFFORD
        return AlgebraType.LOCAL_COMMUTATIVE
    # r == 1: a rank-1 symmetric pairing always has a nonzero diagonal entry
    # away from characteristic 2.
    pivot = next((i for i in range(3) if pairing[i][i]), None)
    if pivot is None:
        raise InternalInvariantError("rank-1 pairing with zero diagonal")
    a = pairing[pivot][pivot]
    if not d.is_square(a):
        return AlgebraType.DEGENERATE_CLIFFORD
    s = d.sqrt(a)
    x = tuple((d.one / s) if k == pivot + 1 else d.zero for k in range(4))
    complement = linalg.kernel_basis([pairing[pivot]], d)
    if len(complement) != 2:
        raise InternalInvariantError("orthogonal complement is not 2-dimensional")
    action = []
    for v in complement:
        w = alg.multiply(x, (d.zero,) + tuple(v))
        if w[0]:
            raise InternalInvariantError("x * v left the traceless part")
        cols = [[complement[0][k], complement[1][k]] for k in range(3)]
        sol = linalg.solve(cols, list(w[1:]), d)
        if sol is None:
            raise InternalInvariantError("x * v left the orthogonal complement")
        action.append(sol)
    # action[j] holds the coordinates of x * v_j in the basis (v_0, v_1).
    plus = action[0] == [d.one, d.zero] and action[1] == [d.zero, d.one]
    minus = action[0] == [-d.one, d.zero] and action[1] == [d.zero, -d.one]
    if plus or minus:
        return AlgebraType.KRONECKER_QUIVER
    return AlgebraType.DEGENERATE_CLIFFORD


def azumaya_at(q: QForm, p: FiberPoint) -> bool:
    """Is the fiber at p central simple?  Decided by the discriminant, and
    cross-checked against the structural classifier."""
    from .qform import discriminant

    open_locus = bool(discriminant(q).evaluate(p.coords))
    structural = classify(fiber_algebra_at(q, p)) is AlgebraType.CENTRAL_SIMPLE
    if open_locus != structural:
        raise InternalInvariantError(
            f"discriminant and classifier disagree at {p}")
    return open_locus


# -------------------------------------------------------------- Hilbert series

def _gamma_generator_degrees(q: QForm):
    a1, a2, a3 = q.a
    d = q.d
    degs = (0, 2 * (a1 + a2 + d), 2 * (a2 + a3 + d), 2 * (a3 + a1 + d))
    if any(g < 0 for g in degs[1:]):
        raise ValueError("generator degrees must be nonnegative; "
                         "twist the form first")
    return degs


def gamma_hilbert_series(q: QForm) -> RationalSeries:
    """Hilbert series of the graded sections algebra of the even Clifford
    algebra: free module on 1 and the three even generators x_i x_j (of
    degree 2(a_i + a_j + d)) over the base polynomial ring with deg u = v =
    w = 2, hence (1 + sum t^(2(a_i+a_j+d))) / (1 - t^2)^3."""
    degs = _gamma_generator_degrees(q)
    num = [0] * (max(degs) + 1)
    for g in degs:
        num[g] += 1
    one_minus_t2 = (1, 0, -1)
    den = poly_mul_1d(poly_mul_1d(one_minus_t2, one_minus_t2), one_minus_t2)
    return RationalSeries(tuple(num), den)


def gamma_dimension_bruteforce(q: QForm, n: int) -> int:
    """Dimension of the degree-n graded piece by direct monomial count:
    monomials u^i v^j w^k times one of the four module generators."""
    if n < 0 or n % 2:
        raise OddDegreeError(f"graded degree must be even and nonnegative, got {n}")
    degs = _gamma_generator_degrees(q)
    count = 0
    for g in degs:
        rest = n - g
        if rest < 0 or rest % 2:
            continue
        m = rest // 2
        for i in range(m + 1):
            for j in range(m - i + 1):
                count += 1  # k = m - i - j is forced
    return count
