import random

import pytest

from innerforms.errors import DatumError, GroupSpecError
from innerforms.rootdata import (
    BasedRootDatum,
    FiniteAbelianGroup,
    adjoint_datum,
    build_catalog_group,
    cartan_determinant_closed_form,
    change_basis,
    classify,
    datum_product,
    det_int,
    diagonal_of,
    dual_datum,
    fundamental_group,
    mat_mul,
    random_unimodular,
    simply_connected_datum,
    smith_normal_form,
)
from oracles import cofactor_det

GOLDEN_TYPES = [
    ("SL", [2], "A1"),
    ("SL", [5], "A4"),
    ("GL", [1], "0 (torus rank 1)"),
    ("GL", [3], "A2 (torus rank 1)"),
    ("PGL", [4], "A3"),
    ("Sp", [4], "C2"),
    ("Sp", [8], "C4"),
    ("GSp", [8], "C4 (torus rank 1)"),
    ("Spin", [3], "A1"),
    ("Spin", [5], "C2"),
    ("Spin", [7], "B3"),
    ("Spin", [9], "B4"),
    ("Spin", [4], "A1 + A1"),
    ("Spin", [6], "A3"),
    ("Spin", [8], "D4"),
    ("Spin", [12], "D6"),
    ("SO", [8], "D4"),
    ("SO", [4], "A1 + A1"),
    ("GSpin", [8], "D4 (torus rank 1)"),
    ("GSpin", [9], "B4 (torus rank 1)"),
    ("GSpin", [3], "A1 (torus rank 1)"),
    ("E6sc", [], "E6"),
    ("E7sc", [], "E7"),
    ("E8", [], "E8"),
    ("F4", [], "F4"),
    ("G2", [], "G2"),
]


@pytest.mark.parametrize("tag,params,expected", GOLDEN_TYPES)
def test_catalog_classification_golden(tag, params, expected):
    assert str(classify(build_catalog_group(tag, params))) == expected


def test_sl2_standard_convention():
    datum = build_catalog_group("SL", [2])
    assert datum.rank == 1
    assert datum.simple_roots == ((2,),)
    assert datum.simple_coroots == ((1,),)


def test_gl3_standard_convention():
    datum = build_catalog_group("GL", [3])
    assert datum.rank == 3
    assert datum.simple_roots == ((1, -1, 0), (0, 1, -1))
    assert datum.simple_coroots == datum.simple_roots


def test_sp4_matches_c2_cartan_oracle():
    datum = build_catalog_group("Sp", [4])
    # hand-written C2 Cartan matrix in the <alpha_j, alpha_i^vee> convention
    assert datum.cartan_matrix() == [[2, -2], [-1, 2]]


def test_gspin8_is_d4_with_one_dimensional_center():
    datum = build_catalog_group("GSpin", [8])
    dynkin = classify(datum)
    assert dynkin.components == (("D", 4),)
    assert dynkin.torus_rank == 1
    # reference D_4 adjacency: node 2 (0-based 1) joined to each of the others
    edges = {
        (i, j)
        for i in range(4)
        for j in datum.adjacency()[i]
        if i < j
    }
    assert edges == {(0, 1), (1, 2), (1, 3)}


@pytest.mark.parametrize(
    "tag,params",
    [("SL", [1]), ("GL", [0]), ("Sp", [3]), ("Sp", [0]), ("SO", [6, 1]), ("SO", [7]),
     ("Spin", [2]), ("PGL", [1]), ("Nope", [3]), ("E6sc", [2])],
)
def test_bad_parameters_raise(tag, params):
    with pytest.raises(GroupSpecError):
        build_catalog_group(tag, params)


def test_invalid_cartan_rejected():
    with pytest.raises(DatumError):
        BasedRootDatum(2, ((1, 0),), ((1, 0),), "bad-diagonal")
    with pytest.raises(DatumError):
        # positive off-diagonal entry
        BasedRootDatum(2, ((2, 1), (0, 2)), ((1, 0), (0, 1)), "bad-sign")
    with pytest.raises(DatumError):
        # bond multiplicity 4 is affine, not finite
        BasedRootDatum(2, ((2, -2), (-2, 2)), ((1, 0), (0, 1)), "affine")


def test_root_coroot_count_mismatch():
    with pytest.raises(DatumError):
        BasedRootDatum(2, ((2, 0),), (), "mismatch")


# ---------------------------------------------------------------------------
# Smith normal form


def test_snf_identity():
    u, d, v = smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert d == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_snf_a1_cartan():
    _, d, _ = smith_normal_form([[2]])
    assert d == [[2]]


def test_snf_a4_cartan_diagonal():
    cartan = [
        [2, -1, 0, 0],
        [-1, 2, -1, 0],
        [0, -1, 2, -1],
        [0, 0, -1, 2],
    ]
    # oracle: |det| of the A_{n-1} Cartan matrix is n
    assert cofactor_det(cartan) == 5
    _, d, _ = smith_normal_form(cartan)
    assert diagonal_of(d) == [1, 1, 1, 5]


def test_snf_random_decomposition_property():
    rng = random.Random(20240817)
    for _ in range(1000):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        u, d, v = smith_normal_form(m)
        assert mat_mul(mat_mul(u, m), v) == d
        assert abs(cofactor_det(u)) == 1
        assert abs(cofactor_det(v)) == 1
        diag = diagonal_of(d)
        assert all(x >= 0 for x in diag)
        nonzero = [x for x in diag if x]
        for a, b in zip(nonzero, nonzero[1:]):
            assert b % a == 0
        # off-diagonal must vanish
        for i, row in enumerate(d):
            for j, x in enumerate(row):
                if i != j:
                    assert x == 0


def test_snf_entry_growth_regression():
    # naive Euclidean sweeps without re-pivoting blow up to thousands of
    # digits on this matrix; Rosser pivoting must finish it immediately
    m = [
        [42, -40, -11, -40, 74, -43, 95, 18],
        [-25, -94, 7, 43, 65, -74, -52, 62],
        [86, -24, -69, 91, -14, 85, 83, 29],
        [9, 30, 72, -51, -22, -27, 51, 28],
        [30, 1, 51, -91, 23, -37, 91, 4],
        [7, 71, -55, -6, 41, 80, 99, 73],
        [89, -4, -77, 13, 70, 31, -72, -58],
        [34, 1, -5, 26, 88, -92, 21, -88],
    ]
    u, d, v = smith_normal_form(m)
    assert mat_mul(mat_mul(u, m), v) == d
    diag = diagonal_of(d)
    assert diag[:7] == [1] * 7
    assert diag[7] == abs(cofactor_det(m))


def test_snf_larger_random_sweep():
    rng = random.Random(77)
    for _ in range(150):
        rows = rng.randint(1, 10)
        cols = rng.randint(1, 10)
        m = [[rng.randint(-99, 99) for _ in range(cols)] for _ in range(rows)]
        u, d, v = smith_normal_form(m)
        assert mat_mul(mat_mul(u, m), v) == d
        nonzero = [x for x in diagonal_of(d) if x]
        for a, b in zip(nonzero, nonzero[1:]):
            assert b % a == 0


def test_snf_structured_cases():
    cases = {
        ((2, 4, 6), (4, 8, 12), (6, 12, 18)): [2, 0, 0],
        ((6, 0, 0), (0, 10, 0), (0, 0, 15)): [1, 30, 30],
        ((10**12, 3), (7, 10**12)): [1, 10**24 - 21],
    }
    for m, expected in cases.items():
        rows = [list(r) for r in m]
        u, d, v = smith_normal_form(rows)
        assert mat_mul(mat_mul(u, rows), v) == d
        assert diagonal_of(d) == expected


def test_snf_zero_and_rectangular():
    u, d, v = smith_normal_form([[0, 0], [0, 0], [0, 0]])
    assert d == [[0, 0], [0, 0], [0, 0]]
    u, d, v = smith_normal_form([[4, 6]])
    assert diagonal_of(d) == [2]


# ---------------------------------------------------------------------------
# fundamental groups


def test_fundamental_group_simply_connected_trivial():
    for tag, params in [("SL", [5]), ("Sp", [8]), ("Spin", [9]), ("Spin", [8]),
                        ("E6sc", []), ("E7sc", []), ("E8", []), ("F4", []), ("G2", [])]:
        assert fundamental_group(build_catalog_group(tag, params)).is_trivial


def test_fundamental_group_pgl_n():
    for n in range(2, 9):
        group = fundamental_group(build_catalog_group("PGL", [n]))
        assert group.invariant_factors == (n,)
        assert group.order == n


def test_fundamental_group_adjoint_d4():
    group = fundamental_group(adjoint_datum("D", 4))
    assert group.invariant_factors == (2, 2)


def test_fundamental_group_so_2n():
    assert fundamental_group(build_catalog_group("SO", [10])).invariant_factors == (2,)


IRREDUCIBLE_TYPES = (
    [("A", r) for r in range(1, 9)]
    + [("B", r) for r in range(3, 9)]
    + [("C", r) for r in range(2, 9)]
    + [("D", r) for r in range(4, 9)]
    + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]
)


@pytest.mark.parametrize("series,rank", IRREDUCIBLE_TYPES)
def test_adjoint_fundamental_group_order_is_cartan_determinant(series, rank):
    datum = adjoint_datum(series, rank)
    det = abs(cofactor_det(datum.cartan_matrix()))
    assert det == cartan_determinant_closed_form(series, rank)
    assert fundamental_group(datum).order == det


def test_fundamental_group_unimodular_invariance():
    rng = random.Random(11)
    for tag, params in [("PGL", [6]), ("SO", [8]), ("GSp", [6]), ("GL", [4])]:
        datum = build_catalog_group(tag, params)
        base = fundamental_group(datum)
        for _ in range(10):
            u = random_unimodular(datum.rank, rng)
            assert det_int(u) in (1, -1)
            moved = change_basis(datum, u)
            assert fundamental_group(moved).invariant_factors == base.invariant_factors


def test_dual_datum_involution():
    for tag, params in [("SL", [4]), ("GSp", [6]), ("SO", [8]), ("F4", [])]:
        datum = build_catalog_group(tag, params)
        double = dual_datum(dual_datum(datum))
        assert double.simple_roots == datum.simple_roots
        assert double.simple_coroots == datum.simple_coroots


def test_product_and_json_round_trip():
    datum = datum_product(
        [build_catalog_group("GL", [3]), build_catalog_group("GL", [2])]
    )
    assert datum.rank == 5
    assert str(classify(datum)) == "A1 + A2 (torus rank 2)"
    back = BasedRootDatum.from_json(datum.to_json())
    assert back == datum


def test_finite_abelian_group_validation():
    assert FiniteAbelianGroup(()).order == 1
    assert str(FiniteAbelianGroup((2, 4))) == "Z/2 x Z/4"
    with pytest.raises(DatumError):
        FiniteAbelianGroup((1,))
    with pytest.raises(DatumError):
        FiniteAbelianGroup((2, 3))


def test_simply_connected_matches_catalog_realizations():
    # same Dynkin type through a completely different coordinate realization
    assert str(classify(simply_connected_datum("B", 4))) == "B4"
    assert str(classify(build_catalog_group("Spin", [9]))) == "B4"
