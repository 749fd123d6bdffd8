import json

import pytest

import ghw

NESTED = json.dumps(
    {
        "field": {"p": 2, "k": 2},
        "family": "nested-cartesian",
        "factors": [["0", "1"], ["0", "1"], "all"],
    }
)


@pytest.fixture(scope="module")
def algebra():
    return ghw.PointAlgebra(NESTED, order="lex", priority="t3,t2,t1")


def test_parameters(algebra):
    assert algebra.size == 13
    assert algebra.degree == 13
    assert algebra.regularity == 5
    assert [algebra.hilbert(d) for d in range(1, 6)] == [3, 6, 9, 12, 13]
    assert "lex" in algebra.order
    assert len(algebra.generators()) > 0


def test_weight_functions(algebra):
    assert [algebra.delta(d, 1, budget=40_000_000) for d in range(1, 6)] == [8, 4, 3, 1, 1]
    assert algebra.vartheta(2, 1) == 4
    assert [algebra.footprint(d, 1) for d in range(1, 6)] == [8, 4, 3, 1, 1]
    # r past the dimension: no subcode exists, the value is the degree
    assert algebra.delta(1, 4) == 13


def test_footprint_matrix_cells(algebra):
    M = algebra.footprint_matrix()
    assert len(M) == 5 and all(len(row) == 13 for row in M)
    assert M[0][:3] == [8, 12, 13]
    assert M[0][3] is None  # no 4-dimensional subcode in degree 1
    assert M[4] == list(range(1, 14))


def test_budget_interval(algebra):
    M = algebra.weight_matrix(budget=1)
    lo, hi = M[0][0]
    assert lo == 8 and hi == 11


def test_zeros(algebra):
    zeros, complement = algebra.zeros(["t1 - t2", "t1 - t3"])
    assert (zeros, complement) == (1, 12)
    with pytest.raises(Exception):
        algebra.zeros(["t1 + "])


def test_family_json_round_trip(algebra):
    again = ghw.PointAlgebra(algebra.family_json)
    assert again.size == algebra.size
    assert again.degree == algebra.degree
    assert [again.hilbert(d) for d in range(1, 6)] == [
        algebra.hilbert(d) for d in range(1, 6)
    ]


def test_module_functions():
    assert ghw.subspace_count(6, 3, 4) == 376805
    assert ghw.cartesian_second_weight([2, 2, 4], 1) == 12
    value, a, b = ghw.cartesian_second_weight_min([2, 2, 4], 3)
    assert value == ghw.cartesian_second_weight([2, 2, 4], 3) == 4
    assert sum(a) == sum(b) == 3 and a != b
    assert ghw.torus_second_weight(4, 3, 1) == 8
    assert ghw.nested_conjectured_min_distance([2, 2, 4], 4) == 2
    assert ghw.nested_min_distance_lower_bound([2, 2, 4], 2) == 2
    assert ghw.degree_pure_powers_plus_monomial([2, 3], [1, 2]) == 5


def test_verifiers():
    report = ghw.verify_pi_bound([2, 2, 2])
    assert report["ok"] and report["checked"] > 0
    report = ghw.verify_complement_product_bound([3, 3])
    assert report["ok"] and report["checked"] == 18


def test_projective_space_instance():
    A = ghw.PointAlgebra(
        json.dumps({"field": {"p": 2, "k": 1}, "family": "projective-space", "s": 3}),
        order="grevlex",
    )
    assert A.size == 7
    assert A.delta(2, 1) == 2
    assert A.footprint(2, 1) == 1  # the strict footprint gap
    assert A.vartheta(2, 1) == 2
