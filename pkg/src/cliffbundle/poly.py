"""Sparse homogeneous multivariate polynomials with exact coefficients.

A polynomial is a dict mapping exponent tuples to nonzero scalars, tagged
with its total degree (``None`` for the zero polynomial, which fits any
degree slot).  The monomial order everywhere is graded lexicographic with
the ring's first variable largest; since all stored terms share one total
degree, comparing exponent tuples lexicographically is enough.

The ring object fixes the scalar domain and the ordered variable tuple.
Polynomials from different rings never mix.
"""

from __future__ import annotations

from .errors import (
    DegreeMismatchError,
    DegreePatternError,
    IndexOutOfRangeError,
    InhomogeneousError,
    NotAPerfectSquareError,
    NotDivisibleError,
    PolyParseError,
    UnknownVariableError,
)
from .linalg import det_cofactor

Exponent = tuple  # tuple[int, ...], one entry per ring variable


def monomials_of_degree(nvars: int, degree: int):
    """All exponent tuples of the given total degree, in a fixed order."""
    if nvars == 1:
        yield (degree,)
        return
    for e in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - e):
            yield (e,) + rest


class PolyRing:
    """A polynomial ring: scalar domain plus an ordered variable tuple."""

    __slots__ = ("domain", "variables")

    def __init__(self, domain, variables=("u", "v", "w")):
        if len(set(variables)) != len(variables):
            raise ValueError("duplicate variable names")
        self.domain = domain
        self.variables = tuple(variables)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @property
    def zero(self) -> "HomogPoly":
        return HomogPoly._make(self, {}, None)

    @property
    def one(self) -> "HomogPoly":
        return self.constant(1)

    def constant(self, c) -> "HomogPoly":
        c = self.domain(c)
        if not c:
            return self.zero
        return HomogPoly._make(self, {(0,) * self.nvars: c}, 0)

    def variable(self, which) -> "HomogPoly":
        if isinstance(which, str):
            if which not in self.variables:
                raise UnknownVariableError(f"unknown variable {which!r}")
            which = self.variables.index(which)
        exps = [0] * self.nvars
        exps[which] = 1
        return HomogPoly._make(self, {tuple(exps): self.domain.one}, 1)

    def monomial(self, coeff, exps) -> "HomogPoly":
        coeff = self.domain(coeff)
        exps = tuple(exps)
        if len(exps) != self.nvars or any(e < 0 for e in exps):
            raise ValueError(f"bad exponent tuple {exps}")
        if not coeff:
            return self.zero
        return HomogPoly._make(self, {exps: coeff}, sum(exps))

    def poly(self, terms: dict) -> "HomogPoly":
        """Validated construction from an exponent->coefficient mapping."""
        clean = {}
        degree = None
        for exps, c in terms.items():
            c = self.domain(c)
            if not c:
                continue
            exps = tuple(exps)
            d = sum(exps)
            if degree is None:
                degree = d
            elif d != degree:
                raise InhomogeneousError(
                    f"terms of degree {degree} and {d} in one polynomial")
            clean[exps] = c
        if not clean:
            return self.zero
        return HomogPoly._make(self, clean, degree)

    def __call__(self, x) -> "HomogPoly":
        # Coercion hook so a PolyRing can stand in for a scalar domain
        # wherever only zero / one / coercion are needed (e.g. building
        # algebras whose structure constants are polynomials).
        if isinstance(x, HomogPoly):
            if x.ring != self:
                raise TypeError("polynomial from a different ring")
            return x
        return self.constant(x)

    def parse(self, text: str) -> "HomogPoly":
        return parse_poly(text, self)

    def random_homogeneous(self, degree: int, rng, nonzero: bool = False) -> "HomogPoly":
        """Random homogeneous polynomial with coefficients from the domain."""
        for _ in range(1000):
            terms = {}
            for exps in monomials_of_degree(self.nvars, degree):
                c = self.domain.random(rng)
                if c:
                    terms[exps] = c
            if terms or not nonzero:
                break
        else:
            raise RuntimeError("random generation kept producing zero")
        if not terms:
            return self.zero
        return HomogPoly._make(self, terms, degree)

    def __eq__(self, other):
        return (isinstance(other, PolyRing)
                and self.domain == other.domain
                and self.variables == other.variables)

    def __hash__(self):
        return hash((self.domain, self.variables))

    def __repr__(self):
        return f"PolyRing({self.domain!r}, {self.variables})"


class HomogPoly:
    """Immutable homogeneous polynomial.  Build through a PolyRing."""

    __slots__ = ("ring", "terms", "degree")

    def __init__(self, *args, **kwargs):
        raise TypeError("use PolyRing.poly / .monomial / .parse to build polynomials")

    @classmethod
    def _make(cls, ring, terms, degree):
        self = object.__new__(cls)
        self.ring = ring
        self.terms = terms
        self.degree = degree
        return self

    # -------------------------------------------------------------- queries

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def num_terms(self) -> int:
        return len(self.terms)

    def leading(self):
        """(exponents, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exps = max(self.terms)
        return exps, self.terms[exps]

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.ring.domain.zero)

    def __eq__(self, other):
        if not isinstance(other, HomogPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    __hash__ = None

    # ----------------------------------------------------------- arithmetic

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise TypeError("polynomials from different rings")

    def __add__(self, other):
        if not isinstance(other, HomogPoly):
            return NotImplemented
        self._check_ring(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.degree != other.degree:
            raise DegreeMismatchError(
                f"adding degrees {self.degree} and {other.degree}")
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            s = terms.get(exps)
            s = c if s is None else s + c
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        if not terms:
            return self.ring.zero
        return HomogPoly._make(self.ring, terms, self.degree)

    def __neg__(self):
        return HomogPoly._make(self.ring, {e: -c for e, c in self.terms.items()},
                               self.degree)

    def __sub__(self, other):
        if not isinstance(other, HomogPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HomogPoly):
            self._check_ring(other)
            if self.is_zero or other.is_zero:
                return self.ring.zero
            terms = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    s = terms.get(e)
                    s = c1 * c2 if s is None else s + c1 * c2
                    if s:
                        terms[e] = s
                    else:
                        del terms[e]
            if not terms:
                return self.ring.zero
            return HomogPoly._make(self.ring, terms, self.degree + other.degree)
        try:
            c = self.ring.domain(other)
        except TypeError:
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def scale(self, c) -> "HomogPoly":
        c = self.ring.domain(c)
        if not c or self.is_zero:
            return self.ring.zero
        return HomogPoly._make(self.ring, {e: c * v for e, v in self.terms.items()},
                               self.degree)

    # ------------------------------------------------------------- calculus

    def evaluate(self, point):
        """Value at a point; coordinates are coerced into the domain."""
        dom = self.ring.domain
        pt = [dom(x) for x in point]
        if len(pt) != self.ring.nvars:
            raise ValueError("wrong number of coordinates")
        total = dom.zero
        for exps, c in self.terms.items():
            v = c
            for x, e in zip(pt, exps):
                if e:
                    v = v * x ** e
            total = total + v
        return total

    def partial(self, which) -> "HomogPoly":
        """Formal partial derivative with respect to one variable."""
        if isinstance(which, str):
            which = self.ring.variables.index(which)
        terms = {}
        for exps, c in self.terms.items():
            e = exps[which]
            if e == 0:
                continue
            new = list(exps)
            new[which] = e - 1
            nc = c * e
            if nc:
                terms[tuple(new)] = nc
        if not terms:
            return self.ring.zero
        return HomogPoly._make(self.ring, terms, self.degree - 1)

    # ------------------------------------------------------------ rendering

    def __str__(self):
        return poly_to_string(self)

    def __repr__(self):
        return f"<{poly_to_string(self)}>"


# ------------------------------------------------------------------ printing

def _coeff_parts(c):
    """(is_negative, absolute-value string) for rendering; prime-field values
    are canonical nonnegative residues and never get a sign."""
    from fractions import Fraction
    if isinstance(c, Fraction):
        return c < 0, str(abs(c))
    return False, str(c)


def _monomial_string(variables, exps):
    parts = []
    for name, e in zip(variables, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def poly_to_string(f: HomogPoly) -> str:
    if f.is_zero:
        return "0"
    out = []
    for exps in sorted(f.terms, reverse=True):
        neg, mag = _coeff_parts(f.terms[exps])
        mono = _monomial_string(f.ring.variables, exps)
        if mono and mag == "1":
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = mag
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


# ------------------------------------------------------------------- parsing

def _tokenize(text: str):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j]))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j]))
            i = j
        elif ch in "+-*/^":
            tokens.append((ch, ch))
            i += 1
        else:
            raise PolyParseError(f"bad character {ch!r} at position {i}")
    return tokens


class _Parser:
    def __init__(self, tokens, ring):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self, kind=None):
        if self.pos >= len(self.tokens):
            raise PolyParseError("unexpected end of input")
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise PolyParseError(f"expected {kind}, found {tok[1]!r}")
        self.pos += 1
        return tok

    def parse(self):
        terms = {}
        degree = None
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        while True:
            coeff, exps = self.term()
            if sign < 0:
                coeff = -coeff
            if coeff:
                d = sum(exps)
                if degree is None:
                    degree = d
                elif d != degree:
                    raise InhomogeneousError(
                        f"mixed degrees {degree} and {d} in input")
                s = terms.get(exps, self.ring.domain.zero) + coeff
                if s:
                    terms[exps] = s
                else:
                    terms.pop(exps, None)
            nxt = self.peek()
            if nxt is None:
                break
            if nxt == "+":
                self.take()
                sign = 1
            elif nxt == "-":
                self.take()
                sign = -1
            else:
                raise PolyParseError(f"expected + or -, found {self.tokens[self.pos][1]!r}")
        if not terms:
            return self.ring.zero
        return HomogPoly._make(self.ring, terms, degree)

    def term(self):
        dom = self.ring.domain
        kind = self.peek()
        if kind == "int":
            num = int(self.take()[1])
            den = 1
            if self.peek() == "/":
                self.take()
                den = int(self.take("int")[1])
                if den == 0:
                    raise PolyParseError("zero denominator")
            coeff = dom.from_pair(num, den)
            if self.peek() == "*":
                save = self.pos
                self.take()
                if self.peek() != "name":
                    self.pos = save
                    return coeff, (0,) * self.ring.nvars
                return coeff, self.monomial()
            return coeff, (0,) * self.ring.nvars
        if kind == "name":
            return dom.one, self.monomial()
        tok = self.tokens[self.pos][1] if self.pos < len(self.tokens) else "end of input"
        raise PolyParseError(f"expected a term, found {tok!r}")

    def monomial(self):
        exps = [0] * self.ring.nvars
        while True:
            name = self.take("name")[1]
            if name not in self.ring.variables:
                raise UnknownVariableError(f"unknown variable {name!r}")
            power = 1
            if self.peek() == "^":
                self.take()
                power = int(self.take("int")[1])
                if power < 1:
                    raise PolyParseError("exponent must be positive")
            exps[self.ring.variables.index(name)] += power
            if self.peek() == "*" and self.pos + 1 < len(self.tokens) \
                    and self.tokens[self.pos + 1][0] == "name":
                self.take()
                continue
            break
        return tuple(exps)


def parse_poly(text: str, ring: PolyRing) -> HomogPoly:
    """Parse polynomial text (see the CLI grammar) into canonical form."""
    tokens = _tokenize(text)
    if not tokens:
        raise PolyParseError("empty input")
    return _Parser(tokens, ring).parse()


# ---------------------------------------------------------- polynomial matrix

class PolyMatrix:
    """Rectangular grid of polynomials from one ring, with an optional
    per-entry expected-degree pattern (zero entries fit any slot)."""

    __slots__ = ("entries", "degree_pattern")

    def __init__(self, entries, degree_pattern=None):
        rows = tuple(tuple(row) for row in entries)
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("entries must form a nonempty rectangle")
        ring = rows[0][0].ring
        for row in rows:
            for f in row:
                if f.ring != ring:
                    raise ValueError("matrix entries from different rings")
        self.entries = rows
        self.degree_pattern = None
        if degree_pattern is not None:
            pattern = tuple(tuple(row) for row in degree_pattern)
            for i, row in enumerate(rows):
                for j, f in enumerate(row):
                    if f and f.degree != pattern[i][j]:
                        raise DegreePatternError(
                            f"entry ({i + 1},{j + 1}) has degree {f.degree}, "
                            f"pattern expects {pattern[i][j]}")
            self.degree_pattern = pattern

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def ring(self) -> PolyRing:
        return self.entries[0][0].ring

    def entry(self, i: int, j: int) -> HomogPoly:
        return self.entries[i][j]

    def is_symmetric(self) -> bool:
        return (self.rows == self.cols
                and all(self.entries[i][j] == self.entries[j][i]
                        for i in range(self.rows) for j in range(i)))

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix(tuple(zip(*self.entries)))

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix(tuple(tuple(fn(f) for f in row) for row in self.entries))

    def __neg__(self):
        return self.map(lambda f: -f)

    def __add__(self, other):
        return PolyMatrix(tuple(
            tuple(a + b for a, b in zip(r1, r2))
            for r1, r2 in zip(self.entries, other.entries)))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, PolyMatrix):
            return self.map(lambda f: f * other)
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        zero = self.ring.zero
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                row.append(acc)
            out.append(tuple(row))
        return PolyMatrix(tuple(out))

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.entries == other.entries

    __hash__ = None

    def evaluate(self, point):
        """Scalar matrix of entry values at a point."""
        return [[f.evaluate(point) for f in row] for row in self.entries]

    def __repr__(self):
        body = "; ".join(", ".join(str(f) for f in row) for row in self.entries)
        return f"PolyMatrix[{body}]"


def _grid(m):
    if isinstance(m, PolyMatrix):
        return m.entries
    return tuple(tuple(row) for row in m)


def det(m) -> HomogPoly:
    """Exact determinant of a square polynomial matrix (cofactor expansion)."""
    g = _grid(m)
    if len(g) != len(g[0]):
        raise ValueError("determinant of a non-square matrix")
    return det_cofactor([list(row) for row in g])


def det3(m) -> HomogPoly:
    """Determinant of a 3x3 polynomial matrix."""
    g = _grid(m)
    if len(g) != 3 or len(g[0]) != 3:
        raise ValueError("det3 needs a 3x3 matrix")
    return det(g)


def minor(m, drop_row: int, drop_col: int) -> HomogPoly:
    """Determinant of the submatrix with 1-based row ``drop_row`` and column
    ``drop_col`` removed."""
    g = _grid(m)
    if not (1 <= drop_row <= len(g) and 1 <= drop_col <= len(g[0])):
        raise IndexOutOfRangeError(
            f"minor index ({drop_row},{drop_col}) outside {len(g)}x{len(g[0])}")
    sub = [row[:drop_col - 1] + row[drop_col:]
           for i, row in enumerate(g) if i != drop_row - 1]
    return det(sub)


def adjugate3(m) -> PolyMatrix:
    """Transpose of the cofactor matrix; m * adjugate3(m) = det3(m) * I."""
    g = _grid(m)
    if len(g) != 3 or len(g[0]) != 3:
        raise ValueError("adjugate3 needs a 3x3 matrix")
    out = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            cof = minor(g, i + 1, j + 1)
            if (i + j) % 2 == 1:
                cof = -cof
            out[j][i] = cof
    return PolyMatrix(out)


# ------------------------------------------------------------ exact division

def _exp_quotient(e1, e2):
    out = []
    for a, b in zip(e1, e2):
        if a < b:
            return None
        out.append(a - b)
    return tuple(out)


def divide_exact(f: HomogPoly, g: HomogPoly) -> HomogPoly:
    """Quotient h with f = g*h, when it exists.

    Greedy leading-term cancellation in graded-lex order.  When f is a
    multiple of g this always succeeds (the leading term of a product is the
    product of leading terms); otherwise some intermediate leading term fails
    to divide and the offending remainder is attached to the error.
    """
    if g.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero:
        return f.ring.zero
    f._check_ring(g)
    if f.degree < g.degree:
        raise NotDivisibleError("degree of divisor exceeds degree of dividend",
                                remainder=f)
    ge, gc = g.leading()
    quo = {}
    rem = f
    while rem:
        re, rc = rem.leading()
        qe = _exp_quotient(re, ge)
        if qe is None:
            raise NotDivisibleError(
                f"leading monomial not divisible; remainder {rem}", remainder=rem)
        qc = rc / gc
        quo[qe] = qc
        rem = rem - g * HomogPoly._make(f.ring, {qe: qc}, sum(qe))
    return HomogPoly._make(f.ring, quo, f.degree - g.degree)


def poly_sqrt(f: HomogPoly) -> HomogPoly:
    """Polynomial square root g with g*g = f, canonically signed.

    The root is built term by term from the graded-lex leading term (whose
    exponent must be componentwise even and whose coefficient must be a
    square in the domain), then verified by squaring.  Of the two roots the
    one whose leading coefficient is positive (rationals) respectively the
    least residue (prime fields) is returned.
    """
    if f.is_zero:
        return f
    if f.degree % 2 != 0:
        raise NotAPerfectSquareError(f"odd degree {f.degree}")
    dom = f.ring.domain
    fe, fc = f.leading()
    if any(e % 2 for e in fe):
        raise NotAPerfectSquareError("leading monomial is not a square")
    if not dom.is_square(fc):
        raise NotAPerfectSquareError("leading coefficient is not a square")
    ge = tuple(e // 2 for e in fe)
    gc = dom.sqrt(fc)
    g = HomogPoly._make(f.ring, {ge: gc}, f.degree // 2)
    prev = None
    rem = f - g * g
    while rem:
        re, _ = rem.leading()
        if prev is not None and re >= prev:
            raise NotAPerfectSquareError("residual stopped shrinking")
        prev = re
        qe = _exp_quotient(re, ge)
        if qe is None:
            raise NotAPerfectSquareError("residual not reducible by the leading term")
        t = HomogPoly._make(f.ring, {qe: rem.terms[re] / (gc + gc)}, sum(qe))
        g = g + t
        rem = f - g * g
    if g * g != f:
        raise NotAPerfectSquareError("verification failed")
    _, lc = g.leading()
    if dom.is_negative(lc):
        g = -g
    return g
