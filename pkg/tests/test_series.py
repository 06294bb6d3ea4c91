import pytest

from cycontract.series import (
    HilbertData,
    NotPolynomialError,
    RationalSeries,
    ci_hilbert_series,
    cover_section_dim,
    defect_quintic,
    embedding_dimension,
    fano_cover_image_series,
    general_cover_numerator,
    general_cover_series,
    image_degree,
    numerator_over_standard,
    p3_cover_image_series,
    poly_mul,
    one_minus_power,
    riemann_roch_fano,
    series_coefficients,
    series_equal,
    series_from_coefficients,
    series_json,
    veronese_square_series,
)
from oracles import taylor_oracle


def test_ci_series_sextic():
    s = ci_hilbert_series(HilbertData((1, 1, 1, 1, 2), (6,)))
    assert s.numerator == (1, 0, 0, 0, 0, 0, -1)
    assert s.denominator == (1, 1, 1, 1, 2)


def test_ci_series_two_cubics():
    s = ci_hilbert_series(HilbertData((1,) * 6, (3, 3)))
    assert s.numerator == poly_mul(one_minus_power(3), one_minus_power(3))
    assert series_coefficients(s, 3) == [1, 6, 21, 54]


def test_ci_series_polynomial_ring():
    s = ci_hilbert_series(HilbertData((1,)))
    assert s.numerator == (1,)
    assert s.denominator == (1,)
    assert series_coefficients(s, 4) == [1, 1, 1, 1, 1]


def test_hilbert_data_validation():
    with pytest.raises(ValueError):
        HilbertData((), ())
    with pytest.raises(ValueError):
        HilbertData((1, 1), (2, 3))  # not fewer equations than variables
    with pytest.raises(ValueError):
        HilbertData((1, 0, 1))


@pytest.mark.parametrize(
    "num,den,n",
    [
        ((1, 2, 3), (1, 1, 2), 12),
        ((1, 17, 27, 17, 1), (1, 1, 1, 1), 8),
        ((1, 0, 0, -2, 0, 0, 1), (1,) * 6, 10),
    ],
)
def test_coefficients_match_convolution_oracle(num, den, n):
    s = RationalSeries(num, den)
    assert series_coefficients(s, n) == taylor_oracle(num, den, n)


def test_coefficient_example_degree63_series():
    s = RationalSeries((1, 17, 27, 17, 1), (1, 1, 1, 1))
    # oracle first: convolution gives the t^1 coefficient 17 + 4 = 21
    assert taylor_oracle(s.numerator, s.denominator, 1) == [1, 21]
    assert series_coefficients(s, 1) == [1, 21]
    assert embedding_dimension(s) == 20


def test_series_equal_r3():
    a = RationalSeries((1, 2, 3, 2, 1), (1, 1, 1, 1))
    b = ci_hilbert_series(HilbertData((1,) * 6, (3, 3)))
    assert series_equal(a, b)


def test_series_equal_distinct():
    a = ci_hilbert_series(HilbertData((1, 1, 1, 1, 2), (6,)))
    b = ci_hilbert_series(HilbertData((1,) * 5, (5,)))
    assert not series_equal(a, b)


def test_series_equal_representation_independent():
    # rewrite the (1 - t^2) denominator factor as (1 - t)(1 + t): the factor
    # (1 + t) divides 1 - t^6 exactly, leaving (1,-1,1,-1,1,-1)
    a = ci_hilbert_series(HilbertData((1, 1, 1, 1, 2), (6,)))
    b = RationalSeries((1, -1, 1, -1, 1, -1), (1, 1, 1, 1, 1))
    assert poly_mul(b.numerator, (1, 1)) == a.numerator
    assert series_equal(a, b)
    assert series_equal(a, a)


def test_series_equal_is_equivalence_on_representatives():
    # several representatives of the r = 4 series
    base = fano_cover_image_series(4)
    reps = [
        base,
        general_cover_series(4),
        RationalSeries(poly_mul(base.numerator, (1, 1)), base.denominator + (1,)),
        RationalSeries(poly_mul(base.numerator, (1, 0, 0, -1)), base.denominator + (3,)),
    ]
    for a in reps:
        assert series_equal(a, a)
        for b in reps:
            assert series_equal(a, b) == series_equal(b, a)
            for c in reps:
                if series_equal(a, b) and series_equal(b, c):
                    assert series_equal(a, c)


def test_numerator_over_standard_r5():
    # oracle: cross-multiplied identity checked by expanding both sides
    s = fano_cover_image_series(5)
    assert numerator_over_standard(s, 4) == (1, 4, 5, 4, 1)


def test_numerator_over_standard_r3():
    s = ci_hilbert_series(HilbertData((1,) * 6, (3, 3)))
    assert numerator_over_standard(s, 4) == (1, 2, 3, 2, 1)


def test_numerator_over_standard_error():
    with pytest.raises(NotPolynomialError) as err:
        numerator_over_standard(ci_hilbert_series(HilbertData((1,))), 0)
    assert err.value.degree == 0


@pytest.mark.parametrize(
    "series,expected_degree,expected_ambient",
    [
        (p3_cover_image_series(1), 63, 20),
        (p3_cover_image_series(2), 24, 10),
        (p3_cover_image_series(3), 5, 4),
    ],
)
def test_image_degrees_p3_covers(series, expected_degree, expected_ambient):
    assert image_degree(series, 3) == expected_degree
    assert embedding_dimension(series) == expected_ambient


def test_image_degree_of_cover_series_is_3r():
    for r in range(1, 6):
        assert image_degree(fano_cover_image_series(r), 3) == 3 * r


def test_general_numerator_matches_product_form():
    for r in range(1, 6):
        assert series_equal(fano_cover_image_series(r), general_cover_series(r))
        assert general_cover_numerator(r) == numerator_over_standard(fano_cover_image_series(r), 4)


def test_riemann_roch_values():
    assert riemann_roch_fano(3, 1) == 5  # h^0(H) = r + 2
    assert riemann_roch_fano(1, 0) == 1
    assert riemann_roch_fano(5, 2) == 23
    with pytest.raises(ValueError):
        riemann_roch_fano(6, 1)


def test_section_dims():
    assert cover_section_dim(3, 2) == 21
    assert cover_section_dim(3, 3) == 54
    assert cover_section_dim(1, 1) == 4
    assert cover_section_dim(4, 0) == 1
    with pytest.raises(ValueError):
        cover_section_dim(0, 1)


def test_sections_match_series_coefficients():
    for r in range(1, 6):
        coeffs = series_coefficients(fano_cover_image_series(r), 10)
        general = series_coefficients(general_cover_series(r), 10)
        dims = [cover_section_dim(r, n) for n in range(11)]
        assert coeffs == dims
        assert general == dims


def test_riemann_roch_recursion():
    # h0(nG) - h0((n-1)G) = RR(n) - RR(n-3), with the polynomial (not the
    # sheaf-theoretic) value 0 at n = 0
    for r in range(1, 6):
        def f(n):
            return cover_section_dim(r, n) if n >= 1 else 0

        for n in range(1, 11):
            assert f(n) - f(n - 1) == riemann_roch_fano(r, n) - riemann_roch_fano(r, n - 3)


def test_coefficients_eventually_polynomial():
    # fit a cubic through four late values and check it backwards
    for r in range(1, 6):
        c = series_coefficients(fano_cover_image_series(r), 30)
        # Newton forward differences at n = 24..27 pin the cubic
        import numpy as np

        n0 = 24
        diffs = [c[n0], c[n0 + 1] - c[n0],
                 c[n0 + 2] - 2 * c[n0 + 1] + c[n0],
                 c[n0 + 3] - 3 * c[n0 + 2] + 3 * c[n0 + 1] - c[n0]]

        def fit(n):
            k = n - n0
            return (diffs[0] + diffs[1] * k + diffs[2] * k * (k - 1) // 2
                    + diffs[3] * k * (k - 1) * (k - 2) // 6)

        assert all(c[n] == fit(n) for n in range(1, 31))
        assert all(v >= 0 for v in c)


def test_defect_quintic():
    assert defect_quintic(35, 36) == 1
    assert defect_quintic(36, 36) == 0
    with pytest.raises(ValueError):
        defect_quintic(200, 36)
    with pytest.raises(ValueError):
        defect_quintic(40, 36)  # negative defect signals inconsistent inputs


def test_node_scheme_hilbert_function_value():
    # HF(5) of the (2,2,3,3) complete intersection node scheme, series path
    s = ci_hilbert_series(HilbertData((1,) * 5, (2, 2, 3, 3)))
    assert taylor_oracle(s.numerator, s.denominator, 5)[5] == 35
    assert series_coefficients(s, 5)[5] == 35


def test_veronese_square():
    quintic = ci_hilbert_series(HilbertData((1,) * 5, (5,)))
    even = veronese_square_series(quintic)
    assert even.numerator == (1, 11, 16, 11, 1)
    assert image_degree(even, 3) == 40
    assert embedding_dimension(even) == 14


def test_series_from_coefficients_guard():
    with pytest.raises(ValueError):
        series_from_coefficients([1, 3, 6, 10, 15, 21], 1)  # quadratic growth, dim 1


def test_formatting():
    s = RationalSeries((1, 2, 3, 2, 1), (1,) * 6)
    assert str(s) == "1 2 3 2 1 || 1,1,1,1,1,1"
    import json

    blob = json.loads(series_json(s, 3))
    assert blob["numerator"] == [1, 2, 3, 2, 1]
    assert blob["denominator"] == [1, 1, 1, 1, 1, 1]
    assert blob["coefficients"] == taylor_oracle((1, 2, 3, 2, 1), (1,) * 6, 3)
