import pytest

from cliffbundle import PolyRing, PrimeField, QQ, new_qform


@pytest.fixture
def ring_q():
    return PolyRing(QQ)


@pytest.fixture
def ring_f5():
    return PolyRing(PrimeField(5))


@pytest.fixture
def ring_f101():
    return PolyRing(PrimeField(101))


def uvw(ring):
    return ring.variable(0), ring.variable(1), ring.variable(2)


def diag_form(ring):
    """The standard sample: diag(u, v, w) with pattern a = (0,0,0), d = 1."""
    u, v, w = uvw(ring)
    z = ring.zero
    return new_qform((0, 0, 0), 1, [[u, z, z], [z, v, z], [z, z, w]])


def symbolic_entry_ring():
    """Six independent symbols for the entries of a symmetric 3x3 matrix,
    realized as degree-1 variables (substituting independent transcendentals
    is the generic case, so identities proved here are universal)."""
    return PolyRing(QQ, ("q11", "q12", "q13", "q22", "q23", "q33"))


def symbolic_qform():
    ring = symbolic_entry_ring()
    s = {name: ring.variable(name) for name in ring.variables}
    grid = [[s["q11"], s["q12"], s["q13"]],
            [s["q12"], s["q22"], s["q23"]],
            [s["q13"], s["q23"], s["q33"]]]
    return new_qform((0, 0, 0), 1, grid)


def symbolic_scalar_grid():
    """The (a, d, e; d, b, f; e, f, c) symmetric matrix over QQ[a..f]."""
    ring = PolyRing(QQ, ("a", "b", "c", "d", "e", "f"))
    s = {name: ring.variable(name) for name in ring.variables}
    grid = [[s["a"], s["d"], s["e"]],
            [s["d"], s["b"], s["f"]],
            [s["e"], s["f"], s["c"]]]
    return ring, s, grid
