"""Acceptance criteria, one test per criterion.

Each test enforces the criterion's exact values and its wall-clock budget,
and prints a single PASS line (visible with ``pytest -s`` or ``-rA``).

Two refinements relative to the criterion prose, both recorded in the
project notes: the extremal-minor value set {a1 q, -a2 q, a3 q} is checked
against the positions that actually carry those values under the
delete-(row, column) minor convention, and the 2p+1 rational-point count of
a rank-2 fiber is enforced exactly on split line pairs (a pair of conjugate
lines over F_p has a single rational point; both kinds occur and both are
asserted).
"""

import json
import random
import time
from contextlib import contextmanager

import pytest

from cliffbundle import (
    AlgebraType,
    CliffordWord,
    ConicType,
    FiberPoint,
    PolyRing,
    PrimeField,
    QQ,
    adjugate3,
    cayley_hamilton_check,
    classify,
    cli,
    conic_equation,
    fiber_algebra,
    fiber_algebra_at,
    gamma_dimension_bruteforce,
    gamma_hilbert_series,
    kronecker_quiver_algebra,
    make_f25plus,
    make_net,
    make_type,
    new_qform,
    projective_points,
    rank_at,
    recover_form,
    reduce_word,
    series_expand,
    trace_pairing_global,
    validate_fiber_algebra,
    verify_minors,
)
from cliffbundle.brauer_severi import NAMED_MINOR_IDENTITIES, alpha_variable
from conftest import diag_form, symbolic_qform

PATTERN_TAGS = ("F23", "F24", "F25minus")

RANK_TO_TYPE = {3: AlgebraType.CENTRAL_SIMPLE,
                2: AlgebraType.DEGENERATE_CLIFFORD,
                1: AlgebraType.DOUBLE_LINE_CLIFFORD,
                0: AlgebraType.LOCAL_COMMUTATIVE}

RANK_TO_CONIC = {3: ConicType.SMOOTH_CONIC,
                 2: ConicType.LINE_PAIR,
                 1: ConicType.DOUBLE_LINE,
                 0: ConicType.WHOLE_PLANE}


@contextmanager
def budget(seconds, label):
    started = time.perf_counter()
    yield
    elapsed = time.perf_counter() - started
    assert elapsed < seconds, f"{label} took {elapsed:.1f}s, budget {seconds}s"
    print(f"ACCEPTANCE PASS {label} ({elapsed:.2f}s)")


def test_c01_table_reproduction(capsys):
    expected = {"F23": (30, 0), "F24": (24, 2),
                "F25plus": (16, 5), "F25minus": (18, 5)}
    with budget(1.0, "criterion 1: del Pezzo invariant table via CLI"):
        for tag, (k3, h12) in expected.items():
            code = cli.main(["invariants", "--type", tag])
            out = capsys.readouterr().out
            assert code == 0
            payload = json.loads(out)["payload"]
            assert payload["minus_K3"] == k3
            assert payload["h12"] == h12


def test_c02_dual_path_invariants():
    from cliffbundle import CATALOG, DelPezzoTag, chern_c1_c2, chi_bundle
    from cliffbundle.invariants import (
        minus_k3_via_chern_p2,
        minus_k3_via_chern_printed,
        minus_k3_via_euler,
    )

    expected_c2 = {DelPezzoTag.F23: 3, DelPezzoTag.F24: 5,
                   DelPezzoTag.F25_PLUS: 9, DelPezzoTag.F25_MINUS: 8}
    with budget(1.0, "criterion 2: -K^3 agrees along both routes"):
        for tag, data in CATALOG.items():
            d = data.disc_degree
            chi = chi_bundle(data.vstar)
            _, c2 = chern_c1_c2(data.vstar, plus_trivial_summand=True)
            assert c2 == expected_c2[tag]
            euler = minus_k3_via_euler(d, chi)
            chern = minus_k3_via_chern_p2(d, c2)
            assert euler == chern
            printed = minus_k3_via_chern_printed(9, -3 * d, d * d, c2)
            assert printed != euler  # the uncorrected coefficient fails each row


def _sample_forms():
    forms = []
    field = PrimeField(101)
    for tag in PATTERN_TAGS:
        for seed in range(50):
            forms.append(make_type(tag, domain=field, seed=seed))
        for seed in range(5):
            forms.append(make_type(tag, domain=QQ, seed=1000 + seed))
    return forms


@pytest.fixture(scope="module")
def sample_forms():
    return _sample_forms()


def test_c03_trace_pairing_identity(sample_forms):
    label = "criterion 3: trace pairing equals minus adjugate (165 forms)"
    with budget(30.0, label):
        for q in sample_forms:
            engine = trace_pairing_global(q)      # rewriting-engine route
            cofactor = -adjugate3(q.matrix)       # classical adjugate route
            assert engine == cofactor


def test_c04_recovery_round_trip(sample_forms):
    label = "criterion 4: form recovery up to sign (165 forms)"
    with budget(30.0, label):
        for q in sample_forms:
            recovered = recover_form(trace_pairing_global(q))
            assert recovered in (q.matrix, -q.matrix)


def test_c05_brauer_severi_minors():
    with budget(10.0, "criterion 5: universal 3x3 minor identities"):
        q = symbolic_qform()
        report = verify_minors(q)  # raises if any minor fails divisibility
        assert report.named_ok
        named = {pos: report.quotient(*pos) for pos in NAMED_MINOR_IDENTITIES}
        assert named[(4, 3)] == alpha_variable(q.ring, q.a, 1)
        assert named[(3, 2)] == alpha_variable(q.ring, q.a, 3)
        assert named[(2, 4)] == -alpha_variable(q.ring, q.a, 2)
        values = {str(v) for v in named.values()}
        assert values == {"(1)*a1", "(-1)*a2", "(1)*a3"}


def _conic_fiber_count(q, base, field):
    """Rational points on the fiber conic, plus split detection: does the
    fiber carry a smooth rational point?"""
    values = q.matrix.evaluate(base.coords)
    count = 0
    smooth = False
    for alpha in projective_points(field):
        a = alpha.coords
        total = field.zero
        grad = False
        for i in range(3):
            row = field.zero
            for j in range(3):
                row = row + values[i][j] * a[j]
            total = total + a[i] * row
            if row:
                grad = True
        if not total:
            count += 1
            smooth = smooth or grad
    return count, smooth


def test_c06_fiber_classification_coherence():
    label = "criterion 6: rank/classify/conic coherence and fiber counts"
    with budget(60.0, label):
        for p in (5, 7):
            field = PrimeField(p)
            ring = PolyRing(field)
            forms = [diag_form(ring)]
            forms += [make_type(tag, domain=field, seed=2) for tag in PATTERN_TAGS]
            split_seen = nonsplit_seen = False
            for q in forms:
                for base in projective_points(field):
                    r = rank_at(q, base)
                    alg = fiber_algebra_at(q, base)
                    assert classify(alg) is RANK_TO_TYPE[r]
                    from cliffbundle import fiber_conic_type
                    assert fiber_conic_type(q, base) is RANK_TO_CONIC[r]
                    count, smooth = _conic_fiber_count(q, base, field)
                    if r == 3:
                        assert count == p + 1
                    elif r == 2:
                        if smooth:
                            assert count == 2 * p + 1
                            split_seen = True
                        else:
                            assert count == 1
                            nonsplit_seen = True
                    elif r == 1:
                        assert count == p + 1
                    else:
                        assert count == p * p + p + 1
            assert split_seen and nonsplit_seen


def _constructed_algebras():
    """Fiber algebras covering every rank, plus the quiver algebra."""
    algebras = []
    f101 = PrimeField(101)
    ring101 = PolyRing(f101)
    f7 = PrimeField(7)
    ring7 = PolyRing(f7)
    probes = ((1, 1, 1), (0, 1, 1), (0, 0, 1))
    for ring, field in ((ring101, f101), (ring7, f7)):
        q = diag_form(ring)
        for coords in probes:
            algebras.append(fiber_algebra_at(q, FiberPoint.make(field, coords)))
    for tag in PATTERN_TAGS:
        q = make_type(tag, domain=f101, seed=3)
        for coords in ((1, 2, 3), (1, 0, 0), (0, 1, 5)):
            algebras.append(fiber_algebra_at(q, FiberPoint.make(f101, coords)))
    algebras.append(fiber_algebra([[0] * 3] * 3, QQ))
    algebras.append(kronecker_quiver_algebra(f101))
    algebras.append(kronecker_quiver_algebra(QQ))
    return algebras


def test_c07_cayley_hamilton():
    rng = random.Random(2024)
    with budget(10.0, "criterion 7: Cayley-Hamilton on basis + 100 random"):
        for alg in _constructed_algebras():
            for k in range(4):
                assert cayley_hamilton_check(alg, alg.basis(k))
            dom = alg.domain
            for _ in range(100):
                vec = tuple(dom.random(rng) for _ in range(4))
                assert cayley_hamilton_check(alg, vec)


def test_c08_confluence_and_associativity():
    label = "criterion 8: 500-word confluence and basis associativity"
    with budget(30.0, label):
        rng = random.Random(4096)
        field = PrimeField(101)
        done = 0
        while done < 500:
            grid = [[field.random(rng) for _ in range(3)] for _ in range(3)]
            for i in range(3):
                for j in range(i):
                    grid[i][j] = grid[j][i]
            word = CliffordWord(field.random(rng),
                                tuple(rng.randrange(3)
                                      for _ in range(rng.randint(0, 6))))
            baseline = reduce_word([word], grid)
            first = reduce_word([word], grid, rng=random.Random(rng.randrange(10**9)))
            second = reduce_word([word], grid, rng=random.Random(rng.randrange(10**9)))
            assert baseline == first == second
            done += 1
        for alg in _constructed_algebras():
            validate_fiber_algebra(alg)  # includes all 64 basis triples


def test_c09_hilbert_series():
    with budget(10.0, "criterion 9: Hilbert series vs brute force to n = 40"):
        field = PrimeField(101)
        for tag in PATTERN_TAGS:
            q = make_type(tag, domain=field, seed=5)
            coeffs = series_expand(gamma_hilbert_series(q), 40)
            for n in range(0, 41, 2):
                assert gamma_dimension_bruteforce(q, n) == coeffs[n]


def test_c10_f25plus_projection():
    label = "criterion 10: projected net degenerates exactly on the quintic"
    with budget(60.0, label):
        f5 = PrimeField(5)
        provider = make_f25plus(make_net(domain=f5, seed=7))
        assert provider.det5.degree == 5
        for base in projective_points(f5):
            on_quintic = not provider.det5.evaluate(base.coords)
            assert provider.degenerate_at(base) == on_quintic
            if not on_quintic:
                assert provider.rank_at(base) == 3
        f101 = PrimeField(101)
        provider = make_f25plus(make_net(domain=f101, seed=11))
        assert provider.det5.degree == 5
        rng = random.Random(55)
        checked = 0
        while checked < 200:
            coords = [f101.random(rng) for _ in range(3)]
            if not any(coords):
                continue
            base = FiberPoint.make(f101, coords)
            on_quintic = not provider.det5.evaluate(base.coords)
            assert provider.degenerate_at(base) == on_quintic
            checked += 1
