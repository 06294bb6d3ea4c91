from itertools import combinations_with_replacement

import pytest

from cycontract.chern import (
    INDEX2_FANO,
    P3_MODEL,
    QUADRIC_MODEL,
    AmbientChernData,
    FanoModel,
    ci_euler_ambient,
    ci_euler_weighted,
    curve_euler_ci_fano,
    delpezzo_euler,
    grassmannian_g25_data,
    load_chern_data,
    projective_chern_data,
    surface_euler_fano,
)
from cycontract.series import HilbertData
from oracles import g25_chern_table


# -- weighted complete intersections -------------------------------------------


@pytest.mark.parametrize(
    "weights,degrees,chi",
    [
        ((1, 1, 1, 1, 2), (6,), -204),
        ((1,) * 6, (3, 3), -144),
        ((1, 1, 1, 1, 1, 2), (3, 4), -156),
        ((1,) * 5, (5,), -200),
        ((1,) * 7, (2, 2, 3), -144),
        ((1,) * 6, (2, 4), -176),
    ],
)
def test_weighted_ci_euler(weights, degrees, chi):
    assert ci_euler_weighted(HilbertData(weights, degrees)) == chi


def test_weighted_ci_euler_fano_column():
    # the chi(F) column of the index-2 catalogue, as weighted intersections
    assert ci_euler_weighted(HilbertData((1, 1, 1, 2, 3), (6,))) == -38
    assert ci_euler_weighted(HilbertData((1, 1, 1, 1, 2), (4,))) == -16
    assert ci_euler_weighted(HilbertData((1,) * 5, (3,))) == -6
    assert ci_euler_weighted(HilbertData((1,) * 6, (2, 2))) == 0


def test_weighted_ci_requires_threefold():
    with pytest.raises(ValueError):
        ci_euler_weighted(HilbertData((1, 1, 1, 1), (2,)))


# -- general ambients ----------------------------------------------------------


def test_projective_data_agrees_with_weighted():
    # cross-validation of two code paths on every degree list with sum 4..12
    for k in range(1, 4):
        n = k + 3
        data = projective_chern_data(n)
        for degrees in combinations_with_replacement(range(1, 9), k):
            if not 4 <= sum(degrees) <= 12:
                continue
            weighted = ci_euler_weighted(HilbertData((1,) * (n + 1), degrees))
            ambient = ci_euler_ambient(data, list(degrees))
            assert ambient == weighted, (n, degrees)


def test_quintic_via_ambient():
    assert ci_euler_ambient(projective_chern_data(4), [5]) == -200


def test_g25_shipped_data_matches_oracle():
    oracle = g25_chern_table()
    shipped = grassmannian_g25_data()
    assert shipped.dimension == 6
    assert shipped.numbers == oracle


def test_g25_spot_values():
    data = grassmannian_g25_data()
    assert data.single(0, 6) == 5  # degree of G(2,5)
    assert data.single(6, 0) == 10  # topological Euler characteristic
    assert data.single(1, 5) == 25  # c1 = 5H


def test_g25_euler_values():
    data = grassmannian_g25_data()
    assert ci_euler_ambient(data, [3, 1, 1]) == -150
    assert ci_euler_ambient(data, [1, 1, 1]) == INDEX2_FANO[5].chi_top == 4


def test_missing_chern_number_reported():
    data = AmbientChernData(4, {((0, 0, 0, 0), 4): 1})
    with pytest.raises(KeyError) as err:
        ci_euler_ambient(data, [5])
    assert "multi-index" in str(err.value)


def test_chern_data_loader_roundtrip(tmp_path):
    path = tmp_path / "p4.txt"
    data = projective_chern_data(4)
    lines = ["dimension: 4"]
    for (exps, h), v in sorted(data.numbers.items()):
        lines.append(" ".join(map(str, exps)) + f" {h} : {v}")
    path.write_text("\n".join(lines))
    again = load_chern_data(str(path))
    assert again.numbers == data.numbers


# -- Fano models ----------------------------------------------------------------


def test_fano_model_invariants():
    for r, model in INDEX2_FANO.items():
        assert model.g * model.Hc2 == 24
        assert model.H3 == r
    assert {(m.H3, m.chi_top) for m in INDEX2_FANO.values()} == {
        (1, -38), (2, -16), (3, -6), (4, 0), (5, 4)
    }
    with pytest.raises(ValueError):
        FanoModel(g=2, H3=1, Hc2=10, chi_top=0)


def test_surface_euler_p3():
    assert surface_euler_fano(P3_MODEL, 7) == 189
    assert surface_euler_fano(P3_MODEL, 5) == 55
    # the closed form d^3 - 4d^2 + 6d for surfaces in P^3
    for d in range(1, 11):
        assert surface_euler_fano(P3_MODEL, d) == d**3 - 4 * d**2 + 6 * d


def test_surface_euler_sextic_inconsistency():
    # the published table prints 128 here; the closed form gives 108, which
    # is the value consistent with chi(X_2) = -200
    assert surface_euler_fano(P3_MODEL, 6) == 108


def test_anticanonical_members_are_del_pezzo():
    for r, model in INDEX2_FANO.items():
        assert surface_euler_fano(model, 1) == delpezzo_euler(r) == 12 - r


def test_curve_euler():
    assert curve_euler_ci_fano(P3_MODEL, 6, 2) == -48
    assert curve_euler_ci_fano(P3_MODEL, 5, 3) == -60
    assert curve_euler_ci_fano(P3_MODEL, 7, 1) == -28
    for r in range(1, 6):
        assert curve_euler_ci_fano(INDEX2_FANO[r], 1, 3) == -6 * r


def test_delpezzo_euler():
    assert delpezzo_euler(3) == 9
    assert delpezzo_euler(8) == 4
    assert delpezzo_euler(9) == 3
    with pytest.raises(ValueError):
        delpezzo_euler(10)


def test_quadric_model():
    assert QUADRIC_MODEL.g * QUADRIC_MODEL.Hc2 == 24
    assert surface_euler_fano(QUADRIC_MODEL, 1) == 4  # P^1 x P^1
    assert surface_euler_fano(QUADRIC_MODEL, 2) == 8  # quartic del Pezzo
