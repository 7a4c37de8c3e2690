from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from grundy_spectral.polynomials import IntPolynomial, largest_real_root

coeff_lists = st.lists(
    st.integers(min_value=-50, max_value=50), min_size=1, max_size=8
)


@given(coeff_lists, coeff_lists, coeff_lists)
@settings(max_examples=100)
def test_ring_distributivity(a, b, c):
    pa, pb, pc = IntPolynomial(a), IntPolynomial(b), IntPolynomial(c)
    assert pa * (pb + pc) == pa * pb + pa * pc


@given(coeff_lists, coeff_lists)
@settings(max_examples=100)
def test_evaluation_is_a_homomorphism(a, b):
    pa, pb = IntPolynomial(a), IntPolynomial(b)
    for x in (-2, 0, 1, Fraction(1, 3)):
        assert (pa * pb)(x) == pa(x) * pb(x)
        assert (pa + pb)(x) == pa(x) + pb(x)


@given(coeff_lists)
@settings(max_examples=100)
def test_derivative_of_product(a):
    p = IntPolynomial(a)
    x = IntPolynomial((0, 1))
    # (x*p)' = p + x*p'
    assert (x * p).derivative() == p + x * p.derivative()


def test_largest_real_root_known_values():
    # x^2 - 2
    assert abs(largest_real_root(IntPolynomial((-2, 0, 1)), 3.0) - 2**0.5) < 1e-10
    # golden ratio: x^2 - x - 1
    phi = (1 + 5**0.5) / 2
    assert abs(largest_real_root(IntPolynomial((-1, -1, 1)), 3.0) - phi) < 1e-10
    # x^4 - 3x^2 + 1 has largest root phi as well
    assert (
        abs(largest_real_root(IntPolynomial((1, 0, -3, 0, 1)), 3.0) - phi) < 1e-10
    )


def test_trim_and_equality():
    assert IntPolynomial((1, 2, 0, 0)) == IntPolynomial((1, 2))
    assert IntPolynomial((0,)).is_zero
    assert IntPolynomial((0,)).degree == -1
