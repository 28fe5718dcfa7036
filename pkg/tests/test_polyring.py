import random

import pytest

from rswb import OpCounts
from rswb import polyring as P


def rand_poly(rng, q, max_len, nonzero=False):
    n = rng.randrange(1 if nonzero else 0, max_len + 1)
    f = [rng.randrange(q) for _ in range(n)]
    return P.norm(f)


def test_add_examples(gf8):
    assert P.poly_add(gf8, [1, 1], [1, 1]) == []
    assert P.poly_add(gf8, [1, 0, 1], [0, 1]) == [1, 1, 1]
    assert P.poly_add(gf8, [3, 5], []) == [3, 5]


def test_add_counts_max_len(gf8):
    c = OpCounts()
    F = gf8.counted(c)
    P.poly_add(F, [1, 2, 3, 4], [5, 6])
    assert c.add == 4


def test_mul_school_examples(gf8):
    assert P.poly_mul_school(gf8, [1, 1], [1, 1]) == [1, 0, 1]   # char 2
    assert P.poly_mul_school(gf8, [], [3, 1]) == []


def test_mul_school_counts(gf8):
    c = OpCounts()
    F = gf8.counted(c)
    P.poly_mul_school(F, [1, 2, 3], [4, 5])
    assert c.mul == 6                       # (deg a + 1)(deg b + 1)
    assert c.add == 6 - (3 + 2 - 1)         # products minus result length


def test_horner_examples(gf8):
    assert P.poly_eval_horner(gf8, [1, 1, 1], 2) == 7   # 4 ^ 2 ^ 1
    assert P.poly_eval_horner(gf8, [5], 3) == 5
    assert P.poly_eval_horner(gf8, [], 3) == 0


def test_horner_count_deg254(gf256):
    rng = random.Random(0)
    f = [rng.randrange(256) for _ in range(254)] + [rng.randrange(1, 256)]
    c = OpCounts()
    P.poly_eval_horner(gf256.counted(c), f, 7)
    assert c.as_tuple() == (254, 254, 0)


def test_dft_naive(gf8):
    pts = [gf8.pow_alpha(i) for i in range(7)]
    assert P.poly_dft_naive(gf8, [], pts) == [0] * 7
    assert P.poly_dft_naive(gf8, [5], pts) == [5] * 7
    c = OpCounts()
    F = gf8.counted(c)
    P.poly_dft_naive(F, [1, 2, 3], pts)
    assert c.as_tuple() == (42, 42, 0)      # n(n-1) regardless of degree


def test_idft_examples(gf8):
    assert P.poly_idft_naive(gf8, [0] * 7) == []
    assert P.poly_idft_naive(gf8, [1] * 7) == [1]   # DFT of a constant
    with pytest.raises(ValueError, match="poly_interp_lagrange"):
        P.poly_idft_naive(gf8, [0] * 5)


def test_dft_idft_roundtrip_basis(gf8):
    # DFT is linear, so checking every monomial c*x^j covers all inputs
    pts = [gf8.pow_alpha(i) for i in range(7)]
    for j in range(7):
        for cval in range(8):
            f = P.norm([0] * j + [cval])
            vals = P.poly_dft_naive(gf8, f, pts)
            assert P.poly_idft_naive(gf8, vals) == f


@pytest.mark.parametrize("m", range(2, 9))
def test_dft_idft_roundtrip_random(m):
    from rswb import Field
    F = Field(m)
    pts = [F.pow_alpha(i) for i in range(F.q1)]
    rng = random.Random(m)
    for _ in range(5):
        f = rand_poly(rng, F.order, F.q1)
        assert P.poly_idft_naive(F, P.poly_dft_naive(F, f, pts)) == f


def test_idft_count(gf256):
    c = OpCounts()
    F = gf256.counted(c)
    rng = random.Random(1)
    vals = [rng.randrange(256) for _ in range(255)]
    P.poly_idft_naive(F, vals)
    assert c.as_tuple() == (255 * 254, 255 * 254, 0)


def test_lagrange_examples(gf8):
    assert P.poly_interp_lagrange(gf8, [3], [5]) == [5]
    assert P.poly_interp_lagrange(gf8, [1, 2, 3], [0, 0, 0]) == []
    with pytest.raises(ValueError, match="duplicate"):
        P.poly_interp_lagrange(gf8, [1, 1], [0, 1])


def test_lagrange_vs_eval_roundtrip(gf8):
    rng = random.Random(9)
    for _ in range(30):
        pts = rng.sample(range(8), rng.randrange(1, 8))
        f = rand_poly(rng, 8, len(pts))
        if f and len(f) > len(pts):
            continue
        vals = [P.poly_eval_horner(gf8, f, p) for p in pts]
        g = P.poly_interp_lagrange(gf8, pts, vals)
        for p, v in zip(pts, vals):
            assert P.poly_eval_horner(gf8, g, p) == v
        if not f or len(f) <= len(pts):
            assert g == f


def test_divmod_examples(gf8):
    q, r = P.poly_divmod_long(gf8, [1, 1, 0, 1], [0, 0, 1])
    assert q == [0, 1] and r == [1, 1]
    q, r = P.poly_divmod_long(gf8, [5, 3, 2], [1])
    assert q == [5, 3, 2] and r == []
    with pytest.raises(ZeroDivisionError):
        P.poly_divmod_long(gf8, [1], [])


def test_divmod_multiply_back(gf256):
    rng = random.Random(3)
    for _ in range(100):
        a = rand_poly(rng, 256, 40)
        b = rand_poly(rng, 256, 20, nonzero=True)
        q, r = P.poly_divmod_long(gf256, a, b)
        back = P.poly_add(gf256, P.poly_mul_school(gf256, q, b), r)
        assert back == a
        assert not r or len(r) < len(b)


def test_ring_axioms_random(gf256):
    rng = random.Random(4)
    for _ in range(40):
        a = rand_poly(rng, 256, 12)
        b = rand_poly(rng, 256, 12)
        c = rand_poly(rng, 256, 12)
        assert P.poly_mul_school(gf256, a, b) == P.poly_mul_school(gf256, b, a)
        ab_c = P.poly_mul_school(gf256, P.poly_mul_school(gf256, a, b), c)
        a_bc = P.poly_mul_school(gf256, a, P.poly_mul_school(gf256, b, c))
        assert ab_c == a_bc
        lhs = P.poly_mul_school(gf256, a, P.poly_add(gf256, b, c))
        rhs = P.poly_add(gf256, P.poly_mul_school(gf256, a, b),
                         P.poly_mul_school(gf256, a, c))
        assert lhs == rhs


def test_rev():
    assert P.poly_rev([0, 1, 1], 2) == [1, 1]       # rev_2(x^2+x) = x+1
    assert P.poly_rev([1], 3) == [0, 0, 0, 1]       # rev_3(1) = x^3
    f = [1, 0, 3, 5]
    assert P.poly_rev(P.poly_rev(f, 3), 3) == f     # involution, f(0) != 0
    with pytest.raises(ValueError):
        P.poly_rev([1, 1, 1], 1)


def test_trunc_top():
    f = [1, 0, 0, 1, 0, 1]                          # x^5 + x^3 + 1
    assert P.poly_trunc_top(f, 2) == [1, 0, 1]      # top three coefficients
    assert P.poly_trunc_top(f, 5) == f
    assert P.poly_trunc_top(f, -1) == []
    assert P.poly_trunc_top([], 4) == []
    assert P.poly_trunc_top([3, 1], 4) == [0, 0, 0, 3, 1]   # pure shift up


def test_deriv(gf8):
    assert P.poly_deriv(gf8, [0, 0, 1]) == []          # (x^2)' = 2x = 0
    assert P.poly_deriv(gf8, [0, 1, 0, 1]) == [1, 0, 1]
    assert P.poly_deriv(gf8, [6]) == []


def test_text_form():
    assert P.poly_to_text([1, 0, 1]) == "1 0 1"
    assert P.poly_from_text("1 0 1") == [1, 0, 1]
    assert P.poly_from_text("0") == []
    assert P.poly_to_text([]) == "0"
