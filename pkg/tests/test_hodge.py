import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from su2hodge.hodge import (
    ColorOutOfRange,
    NonIntegerShift,
    NotHomogeneous,
    OutputColorUnsupported,
    SurfaceDatum,
    ZeroColorShift,
    apply_shift,
    boundary_vector,
    evaluate,
    gap_scan,
    glue,
    hodge_polynomial,
    is_formal,
    parity_vanishes,
    signature,
    weight_of,
)
from su2hodge.laurent import ONE, U, V, ZERO, LaurentPoly, specialize
from su2hodge.su2_model import VALID_SWEEP, ModelParams, build_algebra

P53 = ModelParams(5, 3)


def test_hodge_polynomial_examples(A53):
    assert hodge_polynomial(A53, SurfaceDatum(0, (2, 2, 2, 2))) == U * V**3 + U**2 * V**2
    assert hodge_polynomial(A53, SurfaceDatum(0, ())) == ONE
    assert hodge_polynomial(A53, SurfaceDatum(1, (2,))) == 2 * V
    assert hodge_polynomial(A53, SurfaceDatum(1, ())) == 4
    with pytest.raises(ColorOutOfRange):
        hodge_polynomial(A53, SurfaceDatum(0, (4,)))
    with pytest.raises(ColorOutOfRange):
        hodge_polynomial(A53, SurfaceDatum(0, (1,), -1))


def test_output_color(A53):
    assert hodge_polynomial(A53, SurfaceDatum(0, (2, 2), 2)) == V
    assert hodge_polynomial(A53, SurfaceDatum(0, (2, 2), 0)) == U * V
    # Omega has [2]-coefficient 2/u: V_1(2;) has weight -1
    assert hodge_polynomial(A53, SurfaceDatum(1, (), 2)) == 2 * LaurentPoly.monomial(-1, 0)


def test_genus_two_vacuum_value(A53):
    # eps(Omega^2) with Omega = 4[0] + 2u^-1[2] and [2]^2 = v[2] + uv[0]
    e = hodge_polynomial(A53, SurfaceDatum(2, ()))
    assert e == 16 + 4 * LaurentPoly.monomial(-1, 1)
    assert specialize(e, 1, 1) == 20


def test_parity_vanishes():
    assert parity_vanishes(SurfaceDatum(0, (1, 2)))
    assert not parity_vanishes(SurfaceDatum(0, (2, 2, 2, 2)))
    assert not parity_vanishes(SurfaceDatum(0, (1,), 1))
    assert parity_vanishes(SurfaceDatum(3, (2,), 1))


def test_weight_of():
    assert weight_of(SurfaceDatum(0, (2, 2, 2, 2))) == 4
    assert weight_of(SurfaceDatum(5, ())) == 0
    assert weight_of(SurfaceDatum(0, (2, 2), 2)) == 1
    assert weight_of(SurfaceDatum(0, (1, 2))) == Fraction(3, 2)


def test_signature(A53):
    assert signature(A53, P53, SurfaceDatum(0, (2, 2, 2, 2))) == 0
    assert signature(A53, P53, SurfaceDatum(0, (2, 2))) == -1
    assert signature(A53, P53, SurfaceDatum(0, (1, 2))) == 0
    with pytest.raises(OutputColorUnsupported):
        signature(A53, P53, SurfaceDatum(0, (2, 2), 2))


def test_gap_scan():
    r = gap_scan(U * V**3 + U**2 * V**2)
    assert not r.has_type2_gap and r.p_support == (1, 2)
    assert not r.has_type1_gap
    r = gap_scan(U + LaurentPoly.monomial(3, -2))
    assert r.has_type2_gap and r.p_support == (1, 3)
    r = gap_scan(ZERO)
    assert not r.has_type2_gap and r.p_support == ()
    with pytest.raises(NotHomogeneous):
        gap_scan(U + V**2)


def test_apply_shift():
    d = SurfaceDatum(0, (2, 2))
    e = U * V
    assert apply_shift(e, d, {}) == e
    assert apply_shift(e, d, {2: (1, -1)}) == LaurentPoly.monomial(3, -1)
    assert apply_shift(e, d, {2: (Fraction(1, 2), 0)}) == U**2 * V
    with pytest.raises(NonIntegerShift):
        apply_shift(e, SurfaceDatum(0, (2,)), {2: (Fraction(1, 2), 0)})
    with pytest.raises(ZeroColorShift):
        apply_shift(e, d, {0: (1, 0)})
    # output colors shift the opposite way
    assert apply_shift(V, SurfaceDatum(0, (2, 2), 2), {2: (1, 0)}) == U * V


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(0, 3), max_size=5), st.integers(0, 2),
       st.dictionaries(st.integers(1, 3), st.tuples(st.integers(-3, 3), st.integers(-3, 3))))
def test_shifts_preserve_dimension(colors, g, delta):
    A = build_algebra(P53)
    d = SurfaceDatum(g, tuple(colors))
    e = hodge_polynomial(A, d)
    assert specialize(apply_shift(e, d, delta), 1, 1) == specialize(e, 1, 1)


def test_is_formal():
    assert is_formal(SurfaceDatum(0, ()))
    assert is_formal(SurfaceDatum(0, (1,)))
    assert is_formal(SurfaceDatum(1, ()))
    assert not is_formal(SurfaceDatum(0, (1, 1)))
    assert not is_formal(SurfaceDatum(1, (2,)))
    assert not is_formal(SurfaceDatum(2, ()))


def test_evaluate_record():
    res = evaluate(P53, SurfaceDatum(0, (2, 2, 2, 2)))
    assert res.polynomial == U * V**3 + U**2 * V**2
    assert (res.weight, res.dimension, res.signature) == (4, 2, 0)
    assert not res.gaps.has_type2_gap and not res.formal_value
    res = evaluate(P53, SurfaceDatum(0, (2, 2), 2))
    assert res.signature is None


data = st.builds(
    lambda p, g, cs, mu: (p, SurfaceDatum(g, tuple(c % p.rank for c in cs), None if mu is None else mu % p.rank)),
    st.sampled_from(VALID_SWEEP), st.integers(0, 3), st.lists(st.integers(0, 9), max_size=5),
    st.none() | st.integers(0, 9),
)


@settings(max_examples=150, deadline=None)
@given(data)
def test_homogeneous_of_weight(pd):
    params, d = pd
    e = hodge_polynomial(build_algebra(params), d)
    if parity_vanishes(d):
        assert e == ZERO
    else:
        assert all(p + q == weight_of(d) for p, q, _ in e.items())
        assert not gap_scan(e).has_type2_gap


@settings(max_examples=150, deadline=None)
@given(data)
def test_closed_coefficients_nonnegative(pd):
    params, d = pd
    d = SurfaceDatum(d.genus, d.colors)
    res = evaluate(params, d)
    assert all(c > 0 for _, _, c in res.polynomial.items())
    assert res.dimension >= abs(res.signature)


@settings(max_examples=150, deadline=None)
@given(data)
def test_low_genus_exponents_nonnegative(pd):
    params, d = pd
    d = SurfaceDatum(min(d.genus, 1), d.colors)
    e = hodge_polynomial(build_algebra(params), d)
    assert all(p >= 0 and q >= 0 for p, q, _ in e.items())


@pytest.mark.parametrize("params", VALID_SWEEP, ids=str)
def test_genus_one_vacuum(params):
    assert hodge_polynomial(build_algebra(params), SurfaceDatum(1, ())) == params.r - 1


@pytest.mark.parametrize("params", VALID_SWEEP, ids=str)
def test_permutation_invariance(params):
    A = build_algebra(params)
    rng = random.Random(params.r + 31 * params.s)
    for _ in range(5):
        colors = [rng.randrange(params.rank) for _ in range(4)]
        g = rng.randint(0, 2)
        values = {hodge_polynomial(A, SurfaceDatum(g, perm)) for perm in itertools.permutations(colors)}
        assert len(values) == 1


@pytest.mark.parametrize("params", VALID_SWEEP, ids=str)
def test_gluing(params):
    A = build_algebra(params)
    rng = random.Random(3 * params.r + params.s)
    for _ in range(10):
        alpha = tuple(rng.randrange(params.rank) for _ in range(rng.randint(0, 3)))
        beta = tuple(rng.randrange(params.rank) for _ in range(rng.randint(0, 3)))
        g1, g2 = rng.randint(0, 2), rng.randint(0, 2)
        whole = hodge_polynomial(A, SurfaceDatum(g1 + g2, alpha + beta))
        assert glue(A, boundary_vector(A, alpha, g1), boundary_vector(A, beta, g2)) == whole
