import random

import pytest

from rswb import Field, OpCounts
from rswb import polyring as P
from rswb.cantor import (CantorError, cantor_init, cantor_mul, mpe, mpi,
                         fast_mul)
from rswb.complexity import bound_cantor, bound_cantor_loose, bound_mpe_mpi


def rand_full(rng, q, length):
    return [rng.randrange(q) for _ in range(length - 1)] + \
        [rng.randrange(1, q)]


def test_init_chain(ctx256, gf256):
    assert ctx256.p == 8                    # full basis exists for m = 8
    assert ctx256.basis[0] == 1
    for i in range(1, ctx256.p):
        b = ctx256.basis[i]
        assert gf256.pow(b, 2) ^ b == ctx256.basis[i - 1]


def test_init_odd_m_chain_stops():
    # Tr(1) = m mod 2, so odd extensions cannot extend past beta_1
    assert cantor_init(Field(3)).p == 1
    assert cantor_init(Field(9)).p == 1
    assert cantor_init(Field(4)).p == 4


def test_s_polys_structure(ctx256):
    for i, sp in enumerate(ctx256.s_polys):
        nz = [e for e, c in enumerate(sp) if c]
        assert len(nz) <= i + 1
        assert all(e & (e - 1) == 0 for e in nz)   # exponents are powers of 2
        assert sp[-1] == 1                          # monic
    for i in range(1, ctx256.p + 1):
        assert ctx256.tw[i - 1][i] != 0


def test_mpe_constant_and_level0(ctx256, gf256):
    assert mpe(gf256, ctx256, [9], 3) == [9] * 8
    assert mpe(gf256, ctx256, [], 2) == [0] * 4
    assert mpe(gf256, ctx256, [5], 0) == [5]


def test_mpe_matches_horner(ctx256, gf256):
    rng = random.Random(10)
    for lev in range(ctx256.p + 1):
        for _ in range(3):
            f = P.norm([rng.randrange(256)
                        for _ in range(rng.randrange(1, (1 << lev) + 1))])
            vals = mpe(gf256, ctx256, f, lev)
            for idx in range(1 << lev):
                pt = ctx256.points[idx]
                assert vals[idx] == P.poly_eval_horner(gf256, f, pt)


def test_mpe_rejects_oversized(ctx256, gf256):
    with pytest.raises(CantorError):
        mpe(gf256, ctx256, [1] * 5, 2)
    with pytest.raises(CantorError):
        mpe(gf256, ctx256, [1], 9)


def test_mpi_roundtrip(ctx256, gf256):
    rng = random.Random(11)
    assert mpi(gf256, ctx256, [0] * 16, 4) == []
    assert mpi(gf256, ctx256, [7], 0) == [7]
    for lev in range(ctx256.p + 1):
        f = P.norm([rng.randrange(256) for _ in range(1 << lev)])
        assert mpi(gf256, ctx256, mpe(gf256, ctx256, f, lev), lev) == f
    with pytest.raises(CantorError):
        mpi(gf256, ctx256, [0] * 5, 2)


def test_cantor_mul_examples(ctx256, gf256):
    assert cantor_mul(gf256, ctx256, [1, 1], [1, 1]) == [1, 0, 1]
    assert cantor_mul(gf256, ctx256, [], [1, 2, 3]) == []


def test_cantor_mul_vs_schoolbook_500(ctx256, gf256):
    rng = random.Random(12)
    for _ in range(500):
        la = rng.randrange(1, 129)
        lb = rng.randrange(1, 258 - la)
        a = rand_full(rng, 256, la)
        b = rand_full(rng, 256, lb)
        assert cantor_mul(gf256, ctx256, a, b) == \
            P.poly_mul_school(gf256, a, b)


def test_cantor_mul_rejects_oversize(ctx256, gf256):
    a = [1] * 200
    b = [1] * 200
    with pytest.raises(CantorError, match="exceeds"):
        cantor_mul(gf256, ctx256, a, b)


def measured_cost(gf256, ctx256, h, seed=0):
    rng = random.Random(seed + h)
    da = (h - 1) // 2
    a = rand_full(rng, 256, da + 1)
    b = rand_full(rng, 256, h - da)
    ctr = OpCounts()
    cantor_mul(gf256.counted(ctr), ctx256, a, b)
    return ctr


def test_product_ceiling_spot(ctx256, gf256):
    for h in (2, 5, 16, 33, 100, 256):
        got = measured_cost(gf256, ctx256, h)
        bd = bound_cantor(h)
        loose = bound_cantor_loose(h)
        assert got.mul <= bd.mul and got.add <= bd.add and got.inv <= bd.inv
        assert got.mul <= loose.mul and got.add <= loose.add


def test_mpe_mpi_addition_recursions(ctx256, gf256):
    rng = random.Random(13)
    p = ctx256.p
    for i in range(1, p + 1):
        se, si = bound_mpe_mpi(i, p)
        f = rand_full(rng, 256, 1 << i)
        c = OpCounts()
        mpe(gf256.counted(c), ctx256, f, i)
        assert c.add <= se, (i, c.add, se)
        vals = [rng.randrange(256) for _ in range(1 << i)]
        c = OpCounts()
        mpi(gf256.counted(c), ctx256, vals, i)
        assert c.add <= si, (i, c.add, si)


def test_monotone_cost_properties(ctx256, gf256):
    # doubling at least doubles the measured cost
    for h in (4, 8, 16, 32, 64, 128):
        c1 = measured_cost(gf256, ctx256, h)
        c2 = measured_cost(gf256, ctx256, 2 * h)
        assert c2.mul >= 2 * c1.mul
        assert c2.add >= 2 * c1.add
    # within one recursion level a one-step size bump costs at most 2h extra
    for h in (11, 20, 50, 100, 200):
        if (h).bit_length() != (h + 1 - 1).bit_length():
            continue
        c1 = measured_cost(gf256, ctx256, h)
        c2 = measured_cost(gf256, ctx256, h + 1)
        assert c2.mul <= c1.mul + 2 * h
        assert c2.add <= c1.add + 2 * h


def test_bound_formula_monotone():
    for h in range(2, 129):
        b1 = bound_cantor(h)
        b2 = bound_cantor(2 * h)
        assert b2.mul >= 2 * b1.mul and b2.add >= 2 * b1.add


def test_bound_cantor_golden():
    # closed form at h = 256: 24576 + 7168 - 512 + 8 + 2
    assert bound_cantor(256).mul == 31242
    assert bound_cantor(256).inv == 512


def test_bound_mpe_mpi_values():
    assert bound_mpe_mpi(1, 3)[0] == 3          # 2 + 0 + 1
    for i in range(1, 9):
        se, si = bound_mpe_mpi(i, 8)
        assert si - se == i * (1 << (i - 1))    # (i+5)-(i+3) times 2^(i-2)


def test_fast_mul_dispatch(ctx256, gf256):
    rng = random.Random(14)
    a = rand_full(rng, 256, 3)
    b = rand_full(rng, 256, 4)
    assert fast_mul(gf256, ctx256, a, b) == P.poly_mul_school(gf256, a, b)
    assert fast_mul(gf256, None, a, b) == P.poly_mul_school(gf256, a, b)
