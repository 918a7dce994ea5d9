import random

import pytest

from conftest import rand_gauss_elem, rand_int_elem, rand_lift, rand_poly_elem
from cent2.matrices import (
    Mat2,
    MatN,
    commutes,
    identity2,
    is_scalar,
    matrix_from_rows,
    parse_matrix,
    reduce_mat,
)
from cent2.oracle import brute_force_cen
from cent2.quotient import parse_ring
from cent2.ufd import IntElem, parse_int_elem


def imat(e, f, g, h):
    return Mat2(IntElem(e), IntElem(f), IntElem(g), IntElem(h))


def test_transpose_example():
    assert imat(1, 2, 3, 4).transpose() == imat(1, 3, 2, 4)


def test_transpose_involution_and_product_rule():
    rng = random.Random(42)
    samplers = [
        lambda r: rand_int_elem(r),
        lambda r: rand_gauss_elem(r),
        lambda r: rand_poly_elem(r, 3),
    ]
    for sample in samplers:
        for _ in range(200):
            a = Mat2(*(sample(rng) for _ in range(4)))
            b = Mat2(*(sample(rng) for _ in range(4)))
            assert a.transpose().transpose() == a
            assert (a * b).transpose() == b.transpose() * a.transpose()


def test_commutes_examples():
    ctx = parse_ring("int/2")
    a = reduce_mat(ctx, imat(0, 1, 0, 0))
    b = reduce_mat(ctx, imat(0, 0, 1, 0))
    assert not commutes(a, b)
    assert commutes(identity2(a.e), b)


def test_polynomials_in_b_commute():
    rng = random.Random(43)
    ctx = parse_ring("int/12")
    for _ in range(100):
        b = reduce_mat(ctx, rand_lift(rng, ctx))
        aa = ctx.reduce(IntElem(rng.randrange(12)))
        bb = ctx.reduce(IntElem(rng.randrange(12)))
        poly_in_b = identity2(b.e).scale(aa) + b.scale(bb)
        assert commutes(poly_in_b, b)


def test_commutes_shape_mismatch():
    with pytest.raises(TypeError):
        commutes(imat(1, 0, 0, 1), MatN([[IntElem(1)]]))


def test_is_scalar():
    ctx = parse_ring("int/12")
    assert is_scalar(reduce_mat(ctx, imat(5, 0, 0, 5)))
    assert is_scalar(reduce_mat(ctx, imat(5, 0, 0, 17)))  # 17 = 5 mod 12
    assert not is_scalar(reduce_mat(ctx, imat(2, 2, 4, 8)))
    assert not is_scalar(imat(5, 0, 0, 17))  # over Z itself


def test_transpose_lemma_set_level():
    # Cen(B^T) == {A^T : A in Cen(B)} over Z6, a couple of instances
    ctx = parse_ring("int/6")
    for entries in [(0, 1, 0, 0), (2, 2, 4, 2), (1, 3, 3, 5)]:
        bhat = reduce_mat(ctx, imat(*entries))
        lhs = brute_force_cen(ctx, bhat.transpose())
        rhs = brute_force_cen(ctx, bhat).transpose_set()
        assert lhs == rhs


def test_commutes_iff_transposes_commute():
    rng = random.Random(44)
    ctx = parse_ring("int/6")
    for _ in range(300):
        a = reduce_mat(ctx, rand_lift(rng, ctx))
        b = reduce_mat(ctx, rand_lift(rng, ctx))
        assert commutes(a, b) == commutes(a.transpose(), b.transpose())


def test_matn_mul_against_mat2():
    rng = random.Random(45)
    for _ in range(100):
        a2 = Mat2(*(rand_int_elem(rng) for _ in range(4)))
        b2 = Mat2(*(rand_int_elem(rng) for _ in range(4)))
        an = MatN([[a2.e, a2.f], [a2.g, a2.h]])
        bn = MatN([[b2.e, b2.f], [b2.g, b2.h]])
        prod = a2 * b2
        assert (an * bn) == MatN([[prod.e, prod.f], [prod.g, prod.h]])


def test_parse_matrix_round_trip():
    rows = parse_matrix("[[2,2],[4,8]]", parse_int_elem)
    m = matrix_from_rows(rows)
    assert m == imat(2, 2, 4, 8)
    assert matrix_from_rows(parse_matrix(str(m), parse_int_elem)) == m


def test_parse_matrix_errors_carry_positions():
    from cent2.ufd import ParseError

    with pytest.raises(ParseError) as err:
        parse_matrix("[[2,2],[4,]]", parse_int_elem)
    assert err.value.pos > 0
    with pytest.raises(ParseError):
        parse_matrix("[2,2]", parse_int_elem)
