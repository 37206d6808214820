from math import comb

from hypothesis import given, strategies as st

from pbwlab import QPolynomial, q_binomial

coeff_lists = st.lists(st.integers(-50, 50), max_size=6)


def test_canonical_form():
    assert QPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
    assert QPolynomial((0, 0)).coeffs == ()
    assert QPolynomial().degree == -1
    assert QPolynomial((0, 0, 3)).degree == 2


def test_q_binomial_examples():
    assert q_binomial(5, 0).coeffs == (1,)
    assert q_binomial(2, 1).coeffs == (1, 1)
    assert q_binomial(4, 2).coeffs == (1, 1, 2, 1, 1)
    assert q_binomial(3, 4).is_zero()
    assert q_binomial(3, -1).is_zero()


def q_binomial_by_division(m, k):
    """[m]_q! / ([k]_q! [m-k]_q!) evaluated at an integer q > 1 with exact division."""
    def fact(r, q):
        out = 1
        for i in range(1, r + 1):
            out *= (q**i - 1) // (q - 1)
        return out
    return lambda q: fact(m, q) // (fact(k, q) * fact(m - k, q))


def test_q_binomial_at_one_is_binomial():
    for m in range(13):
        for k in range(m + 1):
            assert q_binomial(m, k)(1) == comb(m, k)


def test_q_binomial_matches_factorial_quotient():
    for m in range(10):
        for k in range(m + 1):
            for q in (2, 3, 5):
                assert q_binomial(m, k)(q) == q_binomial_by_division(m, k)(q)


@given(coeff_lists, coeff_lists, st.integers(-4, 4))
def test_ring_operations_commute_with_evaluation(a, b, x):
    p, r = QPolynomial(tuple(a)), QPolynomial(tuple(b))
    assert (p + r)(x) == p(x) + r(x)
    assert (p * r)(x) == p(x) * r(x)
    assert p.shift(3)(x) == x**3 * p(x)


def test_str():
    assert str(QPolynomial((1, 2, 3, 1))) == "1 + 2q + 3q^2 + q^3"
    assert str(QPolynomial()) == "0"
