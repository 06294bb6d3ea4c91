import json
from fractions import Fraction
from importlib import resources

import pytest

from cycontract.chern import INDEX2_FANO, P3_MODEL, ci_euler_ambient, ci_euler_weighted, grassmannian_g25_data
from cycontract.contraction import (
    HODGE_SHIFTS,
    ConstructionSpec,
    NotSmoothableError,
    PipelineConsistencyError,
    RankTwoPicardModel,
    chi_of_resolution,
    conifold_euler,
    construction_catalogue,
    contraction_euler,
    contraction_image_degree,
    double_cover_euler,
    hodge_shift,
    is_smoothable,
    milnor_correction,
    milnor_correction_from_pipeline,
    smoothing_euler,
    smoothing_hodge,
    table1,
    table3,
    triple_product,
    PFAFFIAN_LINEAR_7_HODGE,
)
from cycontract.series import HilbertData, ci_hilbert_series, image_degree


def _reference():
    text = resources.files("cycontract.data").joinpath("reference_tables.json").read_text()
    return json.loads(text)


# -- intersection products -------------------------------------------------------


def test_triple_product_cover_models():
    for r in range(1, 6):
        m = RankTwoPicardModel(L3=2 * r, lam=Fraction(-1), r=r)
        assert triple_product(m, 1, 1) == 3 * r


def test_triple_product_quintic_model():
    m = RankTwoPicardModel(L3=5, lam=Fraction(-1), r=4)
    assert triple_product(m, 1, 1) == 9
    assert triple_product(m, 1, 0) == 5


def test_triple_product_scaling():
    m = RankTwoPicardModel(L3=7, lam=Fraction(-2, 3), r=5)
    for a, b in [(1, 2), (3, 1), (2, 5)]:
        assert triple_product(m, 2 * a, 2 * b) == 8 * triple_product(m, a, b)


def test_contraction_image_degrees():
    cases = [
        (2, Fraction(-1, 3), 9, 63),
        (4, Fraction(-1, 2), 8, 40),
        (9, Fraction(-1), 5, 14),
        (2, Fraction(-1, 2), 8, 24),
        (2, Fraction(-1), 3, 5),
        (4, Fraction(-1), 4, 8),
    ]
    for l3, lam, r, expected in cases:
        m = RankTwoPicardModel(L3=l3, lam=lam, r=r)
        assert contraction_image_degree(m) == expected
        a = -1 / lam
        assert triple_product(m, a, 1) == expected


def test_contraction_image_degree_requires_integral_multiple():
    with pytest.raises(ValueError):
        contraction_image_degree(RankTwoPicardModel(L3=2, lam=Fraction(-2, 3), r=3))


def test_model_validation():
    with pytest.raises(ValueError):
        RankTwoPicardModel(L3=1, lam=Fraction(1), r=3)
    with pytest.raises(ValueError):
        RankTwoPicardModel(L3=1, lam=Fraction(-1), r=0)


# -- Euler pipelines ---------------------------------------------------------------


def test_double_cover_euler_values():
    assert double_cover_euler(P3_MODEL, -48, 4, 108) == -200
    assert double_cover_euler(P3_MODEL, -28, 3, 189) == -240
    assert double_cover_euler(INDEX2_FANO[1], -6, 11, 45) == -144


def test_conifold_euler():
    assert conifold_euler(-200, 36, resolved=True) == -128
    assert conifold_euler(-200, 36, resolved=False) == -164
    assert conifold_euler(-144, 28, resolved=True) == -88
    assert conifold_euler(-77, 0, resolved=True) == -77
    with pytest.raises(ValueError):
        conifold_euler(0, -1, resolved=True)


def test_contraction_euler():
    assert contraction_euler(-128, 4) == -135
    assert contraction_euler(-88, 5) == -94
    with pytest.raises(ValueError):
        contraction_euler(0, 11)


# -- Hodge bookkeeping ---------------------------------------------------------------


def test_hodge_shift_table_verbatim():
    assert HODGE_SHIFTS == {
        1: frozenset({29}),
        2: frozenset({17}),
        3: frozenset({11}),
        4: frozenset({7}),
        5: frozenset({4}),
        6: frozenset({1, 2}),
        7: frozenset({1}),
        8: frozenset({1}),
    }
    assert hodge_shift(5) == {4}
    assert hodge_shift(6) == {1, 2}
    assert hodge_shift(1) == {29}


def test_not_smoothable():
    assert not is_smoothable(9)
    assert not is_smoothable(8, surface="f1")
    assert is_smoothable(8)
    with pytest.raises(NotSmoothableError):
        hodge_shift(9)
    with pytest.raises(ValueError):
        hodge_shift(0)


def test_smoothing_hodge():
    assert smoothing_hodge(2, 76, 4) == {(1, 83)}
    assert smoothing_hodge(2, 40, 6) == {(1, 41), (1, 42)}
    with pytest.raises(ValueError):
        smoothing_hodge(1, 50, 4)
    # the rank drop is applied in every outcome
    for r in range(1, 9):
        for h11, h12 in smoothing_hodge(3, 10, r):
            assert h11 == 2


def test_smoothing_euler_values():
    assert smoothing_euler(-144, 1) == {-204}
    assert smoothing_euler(-128, 4) == {-144}
    assert smoothing_euler(-88, 5) == {-98}
    with pytest.raises(NotSmoothableError):
        smoothing_euler(0, 9)


def test_milnor_correction():
    assert milnor_correction(4) == -9
    assert milnor_correction(3) == -16
    assert milnor_correction(1) == -50
    with pytest.raises(ValueError):
        milnor_correction(6)


def test_milnor_correction_two_pipelines():
    g25 = grassmannian_g25_data()
    # r = 4: the index-2 double cover and the 36-node quintic
    chi_fiber_223 = ci_euler_weighted(HilbertData((1,) * 7, (2, 2, 3)))
    chi_fiber_33 = ci_euler_weighted(HilbertData((1,) * 6, (3, 3)))
    cover4 = milnor_correction_from_pipeline(-128, chi_fiber_223, 4)
    quintic36 = milnor_correction_from_pipeline(conifold_euler(-200, 36, True), chi_fiber_33, 4)
    assert cover4 == quintic36 == milnor_correction(4)
    # r = 3: the index-2 double cover and the 24-node quintic
    chi_fiber_24 = ci_euler_weighted(HilbertData((1,) * 6, (2, 4)))
    cover3 = milnor_correction_from_pipeline(-120, chi_fiber_33, 3)
    quintic24 = milnor_correction_from_pipeline(conifold_euler(-200, 24, True), chi_fiber_24, 3)
    assert cover3 == quintic24 == milnor_correction(3)
    # r = 5: the index-2 double cover (G(2,5) fiber) and the 28-node ideal
    chi_g25 = ci_euler_ambient(g25, [3, 1, 1])
    cover5 = milnor_correction_from_pipeline(-140, chi_g25, 5)
    h11, h12 = PFAFFIAN_LINEAR_7_HODGE
    pfaff = milnor_correction_from_pipeline(
        conifold_euler(-144, 28, True), 2 * (h11 - h12), 5
    )
    assert cover5 == pfaff == milnor_correction(5)


# -- the collected-results table -------------------------------------------------------


def test_table1_against_reference():
    rows = table1()
    reference = _reference()["table1"]
    assert len(rows) == len(reference) == 15
    for row, ref in zip(rows, reference):
        assert row.deg_d == ref["degD"]
        assert row.singular_locus == ref["singular_locus"]
        assert row.chi_smoothing == ref["chi_smoothing"]
        assert row.image_tag == ref["image_tag"]


def test_table1_chi_column_values():
    chis = [r.chi_smoothing for r in table1()]
    assert chis == [-204, -156, -144, -144, -150, -204, None, -200,
                    -176, -200, -176, -144, -98, -144, -120]


def test_table1_cross_checks_present():
    rows = table1()
    crossed = [r for r in rows if "euler-cross-path" in r.consistency
               or "euler-cross-path-g25" in r.consistency]
    assert len(crossed) >= 5
    assert all("image-degree" in r.consistency for r in rows)


def test_table1_image_degrees_match_picard():
    for spec, row in zip(construction_catalogue(), table1()):
        assert row.image_degree == contraction_image_degree(spec.picard)


def test_inconsistent_spec_aborts():
    spec = construction_catalogue()[2]
    broken = ConstructionSpec(
        kind=spec.kind, r=spec.r, label=spec.label, singular_locus=spec.singular_locus,
        image_tag=spec.image_tag, fano=spec.fano, branch=spec.branch,
        picard=spec.picard, fiber=HilbertData((1,) * 5, (5,)),  # wrong fiber
        series_tag=spec.series_tag,
    )
    from cycontract.contraction import evaluate_row

    with pytest.raises(PipelineConsistencyError):
        evaluate_row(broken)


def test_table3_values_and_erratum():
    rows = table3()
    assert [r["chi_X"] for r in rows] == [-240, -200, -176]
    assert [r["chi_smoothing"] for r in rows] == [None, -204, -200]
    assert rows[1]["chi_G"] == 108
    assert "128" in rows[1]["erratum"]
    assert all(r["chi_X"] != -220 for r in rows)


def test_chi_of_resolution_values():
    specs = construction_catalogue()
    chis = [chi_of_resolution(s) for s in specs]
    assert chis == [-144, -120, -120, -128, -140, -200, -240, -176,
                    -160, -196, -152, -128, -88, -120, -104]
