import random

import pytest

from cycledual import (
    Poly,
    conjugate_poly,
    dual_generator,
    extension_with_embedding,
    field_create,
    nth_root_of_unity,
    x_pow_n_minus_1,
)

from conftest import GF2, GF4, divisor_codes


def P(field, *coeffs):
    return Poly(field, coeffs)


def test_squaring_spreads_coefficients():
    g = P(GF2, 1, 1, 0, 1)
    assert g * g == P(GF2, 1, 0, 1, 0, 0, 0, 1)  # (1+x+x^3)^2 = 1+x^2+x^6


def test_divrem_example():
    q, r = x_pow_n_minus_1(GF2, 7).divrem(P(GF2, 1, 1, 0, 1))
    assert q == P(GF2, 1, 1, 1, 0, 1)  # x^4 + x^2 + x + 1
    assert r.is_zero


def test_gcd_example():
    # x^2 + 1 = (x + 1)^2 in characteristic two
    assert P(GF4, 1, 0, 1).gcd(P(GF4, 1, 1)) == P(GF4, 1, 1)
    # gcd is monic even for non-monic inputs
    assert P(GF4, 2, 0, 2).gcd(P(GF4, 2, 2)) == P(GF4, 1, 1)
    with pytest.raises(ValueError):
        P(GF4, 1, 1).gcd(Poly.zero(GF4))


def test_divrem_rejects_zero():
    with pytest.raises(ValueError, match="division by zero"):
        P(GF2, 1, 1).divrem(Poly.zero(GF2))


def test_divrem_reconstruction_random():
    rng = random.Random(20240901)
    fields = [GF2, GF4, field_create(3)]
    for _ in range(1000):
        f = rng.choice(fields)
        da, db = rng.randrange(0, 65), rng.randrange(0, 65)
        a = Poly(f, [rng.randrange(f.order) for _ in range(da + 1)])
        b = Poly(f, [rng.randrange(f.order) for _ in range(db + 1)])
        if b.is_zero:
            continue
        q, r = a.divrem(b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_eval_examples():
    assert P(GF2, 1, 1).eval(1).value == 0
    assert Poly.zero(GF4).eval(3).value == 0
    ext, emb = extension_with_embedding(GF2, 3)
    beta = nth_root_of_unity(ext, 7)
    g = P(GF2, 1, 1, 0, 1)
    assert g.eval(beta, emb).value == 0  # roots are the coset {1, 2, 4}
    assert g.eval(beta**2, emb).value == 0
    assert g.eval(beta**3, emb).value != 0


def test_eval_field_mismatch():
    ext, emb = extension_with_embedding(GF2, 3)
    beta = nth_root_of_unity(ext, 7)
    with pytest.raises(ValueError, match="field mismatch"):
        P(GF2, 1, 1).eval(beta)  # extension element without an embedding
    with pytest.raises(ValueError, match="field mismatch"):
        P(GF4, 1, 1).eval(GF2.one)


def test_dual_generator_hamming():
    g = dual_generator(P(GF2, 1, 1, 0, 1), 7)
    assert g == P(GF2, 1, 0, 1, 1, 1)  # x^4+x^3+x^2+1 = (x+1)(x^3+x+1)
    assert g == P(GF2, 1, 1) * P(GF2, 1, 1, 0, 1)


def test_dual_generator_whole_space_and_zero_code():
    # dual of the whole space is the zero code, generated by x^n - 1
    assert dual_generator(Poly.one(GF2), 7) == x_pow_n_minus_1(GF2, 7)
    # and conversely
    assert dual_generator(x_pow_n_minus_1(GF2, 7), 7) == Poly.one(GF2)


def test_dual_generator_gf4_even_weight_code():
    # h = x^2+x+1 is self-reciprocal, so the dual generator is x^2+x+1 itself
    # (the dual of the even-weight code is the repetition code, dimension 1)
    assert dual_generator(P(GF4, 1, 1), 3) == P(GF4, 1, 1, 1)


def test_dual_generator_rejects_non_divisor():
    with pytest.raises(ValueError, match="not a generator"):
        dual_generator(P(GF2, 1, 0, 1), 7)


@pytest.mark.parametrize("field,n", [(GF2, 7), (GF2, 21), (GF4, 7), (GF4, 21)])
def test_dual_generator_involution(field, n):
    for code in divisor_codes(field, n):
        g = code.g
        gd = dual_generator(g, n)
        assert dual_generator(gd, n) == g
        assert gd.degree == n - g.degree  # dim(C) + dim(dual) = n


def test_conjugate_poly():
    p = P(GF2, 1, 1, 0, 1)
    assert conjugate_poly(p, 2) == p  # Frobenius fixes GF(2)
    assert conjugate_poly(P(GF4, 1, 2), 2) == P(GF4, 1, 3)  # wx + 1 -> w^2x + 1
    rng = random.Random(7)
    for _ in range(50):
        p = Poly(GF4, [rng.randrange(4) for _ in range(rng.randrange(1, 7))])
        assert conjugate_poly(conjugate_poly(p, 2), 2) == p
    with pytest.raises(ValueError):
        conjugate_poly(p, 3)
    with pytest.raises(ValueError):
        conjugate_poly(p, 8)


def test_serialization():
    assert P(GF2, 1, 1, 0, 1).to_string() == "1,1,0,1"
    assert Poly.zero(GF4).to_string() == "0"
    assert P(GF4, 3, 0, 2).to_string() == "3,0,2"
    assert Poly.from_string(GF4, "3,0,2") == P(GF4, 3, 0, 2)
    assert Poly.from_string(GF2, "0") == Poly.zero(GF2)
    f16 = field_create(4)
    assert Poly.from_string(f16, "a,f").to_string() == "a,f"
    for bad in ("", "1,,1", "1,2", "1,1,0", "01,1", "A,1", "1, 1"):
        with pytest.raises(ValueError):
            Poly.from_string(GF2, bad)


def test_constructor_checks():
    with pytest.raises(ValueError):
        Poly(GF2, [2])
    with pytest.raises(ValueError, match="field mismatch"):
        Poly(GF2, [GF4.element(1)])
    assert Poly(GF4, [GF4.element(2), GF4.element(1)]) == P(GF4, 2, 1)
    assert P(GF2, 1, 1, 0, 0).coeffs == (1, 1)  # trailing zeros trimmed
