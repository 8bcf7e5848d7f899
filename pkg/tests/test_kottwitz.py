import pytest

from innerforms.errors import GroupSpecError
from innerforms.kottwitz import (
    ad_quotient_order,
    dual_center_positive_dimensional,
    inner_form_classes_gl,
    kottwitz_group,
)
from innerforms.rootdata import (
    adjoint_datum,
    build_catalog_group,
    cartan_determinant_closed_form,
    fundamental_group,
)
from oracles import cofactor_det, totient


def test_sl_n_has_no_inner_twists():
    for n in range(2, 9):
        assert kottwitz_group(build_catalog_group("SL", [n])).is_trivial


def test_pgl_n_is_cyclic_of_order_n():
    for n in range(2, 9):
        group = kottwitz_group(build_catalog_group("PGL", [n]))
        assert group.invariant_factors == (n,)


def test_e8_f4_g2_trivial():
    for tag in ("E8", "F4", "G2"):
        assert kottwitz_group(build_catalog_group(tag, [])).is_trivial
        assert ad_quotient_order(build_catalog_group(tag, [])) == 1


def test_sp_group_trivial_but_adjoint_order_two():
    datum = build_catalog_group("Sp", [8])
    assert kottwitz_group(datum).is_trivial
    assert ad_quotient_order(datum) == 2


def test_so_2n_order_two():
    assert kottwitz_group(build_catalog_group("SO", [10])).invariant_factors == (2,)


IRREDUCIBLE_TYPES = (
    [("A", r) for r in range(1, 9)]
    + [("B", r) for r in range(3, 9)]
    + [("C", r) for r in range(2, 9)]
    + [("D", r) for r in range(4, 9)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)


@pytest.mark.parametrize("series,rank", IRREDUCIBLE_TYPES)
def test_adjoint_kottwitz_order_is_cartan_determinant(series, rank):
    datum = adjoint_datum(series, rank)
    det = abs(cofactor_det(datum.cartan_matrix()))
    assert kottwitz_group(datum).order == det
    assert det == cartan_determinant_closed_form(series, rank)


@pytest.mark.parametrize("series,rank", IRREDUCIBLE_TYPES)
def test_simply_connected_kottwitz_trivial(series, rank):
    from innerforms.rootdata import simply_connected_datum

    assert kottwitz_group(simply_connected_datum(series, rank)).is_trivial


def test_kottwitz_agrees_with_fundamental_group_on_catalog():
    # both compute the torsion of Y/<coroots>: one as pi_1, one through the
    # component group of the dual center
    for tag, params in [
        ("SL", [6]), ("PGL", [6]), ("GL", [4]), ("Sp", [8]), ("GSp", [8]),
        ("Spin", [9]), ("GSpin", [8]), ("SO", [8]), ("E6sc", []), ("F4", []),
    ]:
        datum = build_catalog_group(tag, params)
        assert (
            kottwitz_group(datum).invariant_factors
            == fundamental_group(datum).invariant_factors
        )


def test_dual_center_dimension_flag():
    assert dual_center_positive_dimensional(build_catalog_group("GL", [3]))
    assert dual_center_positive_dimensional(build_catalog_group("GSpin", [8]))
    assert not dual_center_positive_dimensional(build_catalog_group("Sp", [8]))


# ---------------------------------------------------------------------------
# GL_n inner form classes


def test_single_class_for_gl1():
    classes = inner_form_classes_gl(1)
    assert len(classes) == 1
    assert classes[0].d == 1


def test_gl4_class_two_is_quaternionic():
    classes = inner_form_classes_gl(4)
    c = classes[2]
    assert c.d == 2  # d = 4 / gcd(2, 4), by the invariant-order oracle
    assert c.matrix_size == 2
    assert c.describe() == "GL_2(D_2), invariant 1/2"
    assert classes[0].describe() == "GL_4(F) (split)"


def test_class_counts_follow_totient():
    for n in range(1, 65):
        classes = inner_form_classes_gl(n)
        assert len(classes) == n
        by_degree = {}
        for c in classes:
            assert n % c.d == 0
            assert c.d * c.matrix_size == n
            from math import gcd

            assert gcd(c.invariant_numerator, c.d) == 1
            by_degree[c.d] = by_degree.get(c.d, 0) + 1
        for d, count in by_degree.items():
            assert count == totient(d)
        assert sum(by_degree.values()) == n  # sum over d | n of phi(d) = n


def test_inner_form_classes_validation():
    with pytest.raises(GroupSpecError):
        inner_form_classes_gl(0)


def test_ad_quotient_order_products_and_tori():
    datum = build_catalog_group("GL", [1])
    assert ad_quotient_order(datum) == 1
    from innerforms.rootdata import datum_product

    prod = datum_product(
        [build_catalog_group("SL", [3]), build_catalog_group("Sp", [4])]
    )
    assert ad_quotient_order(prod) == 6  # 3 for the A_2 part, 2 for the C_2 part


def test_ad_quotient_order_examples():
    assert ad_quotient_order(build_catalog_group("SL", [7])) == 7
    assert ad_quotient_order(build_catalog_group("Spin", [12])) == 4
    assert ad_quotient_order(build_catalog_group("E6sc", [])) == 3
    assert ad_quotient_order(build_catalog_group("E7sc", [])) == 2
