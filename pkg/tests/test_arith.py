"""Integer layer: parameter admissibility, SNF, PI degree, ord(pq) classification."""

import math
import random
from itertools import combinations

import pytest

from qheisenberg.arith import (
    ALWAYS_MAX,
    ALWAYS_NONMAX,
    MIXED,
    InvalidParameters,
    classify_pair,
    derive_params,
    int_det,
    int_mat_mul,
    ord_formula,
    ord_pq,
    pair_rs,
    pi_degree,
    pi_degree_snf,
    relation_matrix,
    scan_orders,
    smith_normal_form,
    valid_pairs,
)
from qheisenberg.cyclotomic import order_of_unit, zeta_power


def all_params(max_l, **kw):
    for m in range(1, max_l + 1):
        for n in range(1, max_l + 1):
            if math.lcm(m, n) > max_l:
                continue
            for k1, k2 in valid_pairs(m, n):
                yield derive_params(m, n, k1, k2, **kw)


def test_derive_params_anchor_2_3():
    ps = derive_params(2, 3, 1, 1)
    assert (ps.s1, ps.s2, ps.l) == (3, 2, 6)
    assert ps.p == zeta_power(6, 3) == -1
    assert ps.q == zeta_power(6, 2)
    assert order_of_unit(ps.p) == 2 and order_of_unit(ps.q) == 3


def test_derive_params_equal_orders():
    ps = derive_params(4, 4, 1, 1)
    assert (ps.s1, ps.s2, ps.l) == (1, 1, 4)
    assert ps.p == ps.q == zeta_power(4, 1)


def test_derive_params_rejects_pq_one():
    with pytest.raises(InvalidParameters):
        derive_params(2, 2, 1, 1)  # s1k1+s2k2 = 2 = 0 mod 2
    with pytest.raises(InvalidParameters):
        derive_params(4, 4, 1, 3)
    with pytest.raises(InvalidParameters):
        derive_params(3, 3, 1, 2)


def test_derive_params_rejects_bad_gcd_and_range():
    with pytest.raises(InvalidParameters):
        derive_params(4, 4, 2, 1)
    with pytest.raises(InvalidParameters):
        derive_params(4, 4, 1, 4)
    with pytest.raises(InvalidParameters):
        derive_params(1, 1)
    with pytest.raises(InvalidParameters):
        derive_params(2, 2)
    with pytest.raises(InvalidParameters):
        derive_params(0, 3, 0, 1)


def test_derive_params_m_equals_one_boundary():
    ps = derive_params(1, 3, 0, 1)
    assert ps.p == 1 and order_of_unit(ps.q) == 3
    ps = derive_params(3, 1, 1, 0)
    assert ps.q == 1 and order_of_unit(ps.p) == 3
    # defaults pick the smallest admissible pair
    assert (derive_params(1, 3).k1, derive_params(1, 3).k2) == (0, 1)
    assert (derive_params(2, 3).k1, derive_params(2, 3).k2) == (1, 1)


def test_derive_params_larger_conductor():
    ps = derive_params(2, 3, 1, 1, conductor=12)
    assert ps.p == zeta_power(12, 6) and ps.q == zeta_power(12, 4)
    with pytest.raises(InvalidParameters):
        derive_params(2, 3, 1, 1, conductor=8)


def test_relation_matrix_anchor():
    assert relation_matrix(derive_params(2, 3, 1, 1)) == [
        [0, -3, 3], [3, 0, -2], [-3, 2, 0]]
    assert relation_matrix(derive_params(1, 5, 0, 2)) == [
        [0, 0, 0], [0, 0, -2], [0, 2, 0]]
    for ps in all_params(10):
        h = relation_matrix(ps)
        for i in range(3):
            for j in range(3):
                assert h[i][j] == -h[j][i]


def test_snf_anchors():
    assert smith_normal_form([[0, -3, 3], [3, 0, -2], [-3, 2, 0]])[0] == [1, 1, 0]
    assert smith_normal_form([[0, 2], [-2, 0]])[0] == [2, 2]
    assert smith_normal_form([[0, 0], [0, 0]])[0] == [0, 0]


def minor_gcd(mat, k):
    # gcd of all k x k minors: the k-th determinantal divisor
    rows, cols = len(mat), len(mat[0])
    g = 0
    for ri in combinations(range(rows), k):
        for ci in combinations(range(cols), k):
            sub = [[mat[i][j] for j in ci] for i in ri]
            g = math.gcd(g, int_det(sub))
    return g


def test_snf_random_unimodular_and_divisor_chain():
    rng = random.Random(99)
    for _ in range(60):
        rows, cols = rng.randint(1, 6), rng.randint(1, 6)
        mat = [[rng.randint(-50, 50) for _ in range(cols)] for _ in range(rows)]
        diag, u, v = smith_normal_form(mat)
        prod = int_mat_mul(int_mat_mul(u, mat), v)
        for i in range(rows):
            for j in range(cols):
                assert prod[i][j] == (diag[i] if i == j else 0)
        assert abs(int_det(u)) == 1
        assert abs(int_det(v)) == 1
        for a, b in zip(diag, diag[1:]):
            assert a >= 0
            if a == 0:
                assert b == 0
            else:
                assert b % a == 0
        # determinantal-divisor route: d_k = D_k / D_{k-1}
        prev = 1
        for k in range(1, min(rows, cols, 4) + 1):
            dk = minor_gcd(mat, k)
            if prev == 0:
                assert dk == 0
            else:
                assert diag[k - 1] == (dk // prev if dk else 0)
            prev = dk


def test_pi_degree_snf_anchors():
    assert pi_degree_snf(derive_params(2, 3, 1, 1)) == 6
    assert pi_degree_snf(derive_params(1, 5, 0, 1)) == 5
    # (4,4,1,3) is rejected by validation (pq = 1), but its twist matrix
    # arithmetic is still well-defined: h1 = gcd(1,3) = 1, so l/gcd(h1,l) = 4
    diag, _, _ = smith_normal_form([[0, -1, 1], [1, 0, -3], [-1, 3, 0]])
    assert 4 // math.gcd(diag[0], 4) == 4


def test_pi_degree_closed_form():
    assert pi_degree(2, 3) == 6
    assert pi_degree(1, 7) == 7
    assert pi_degree(12, 18) == 36
    with pytest.raises(InvalidParameters):
        pi_degree(2, 2)


def test_pi_degree_agreement_up_to_24():
    for ps in all_params(24):
        assert pi_degree_snf(ps) == pi_degree(ps.m, ps.n) == ps.l
        h1 = math.gcd(ps.s1 * ps.k1, ps.s2 * ps.k2)
        assert smith_normal_form(relation_matrix(ps))[0][0] == h1
        assert math.gcd(h1, ps.l) == 1


def test_pair_rs():
    assert pair_rs(derive_params(2, 3, 1, 1)) == (0, 0)  # coprime orders
    assert pair_rs(derive_params(3, 5, 2, 3)) == (0, 0)
    assert pair_rs(derive_params(4, 4, 1, 1)) == (1, 1)
    assert pair_rs(derive_params(2, 4, 1, 1)) == (1, 2)
    ps = derive_params(2, 4, 1, 1)
    assert ps.p ** 1 == ps.q ** 2 == -1
    for ps in all_params(12):
        r, s = pair_rs(ps)
        assert 0 <= r < ps.m and 0 <= s < ps.n
        assert ps.p ** r == ps.q ** s


def test_ord_pq_anchors():
    assert ord_pq(derive_params(2, 3, 1, 1)) == 6
    assert ord_pq(derive_params(4, 4, 1, 1)) == 2
    assert ord_formula(2, 3, 1, 1) == 6
    assert ord_formula(4, 4, 1, 1) == 2


def test_ord_pq_field_cross_check_up_to_24():
    for ps in all_params(24):
        value = ord_pq(ps, cross_check=False)
        assert order_of_unit(ps.p * ps.q) == value
        assert ps.l % value == 0
        if math.gcd(ps.m, ps.n) == 1:
            assert value == ps.l


def test_ord_denominator_prime_structure():
    for ps in all_params(24):
        g = math.gcd(ps.m, ps.n)
        d = math.gcd(ps.m * ps.k2 + ps.n * ps.k1, ps.m * ps.n)
        assert d % g == 0
        assert _prime_set(d) == _prime_set(g)


def _prime_set(n):
    out = set()
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.add(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.add(n)
    return out


def test_classification_anchors():
    assert classify_pair(3, 3) == ALWAYS_MAX
    assert classify_pair(4, 4) == ALWAYS_NONMAX
    assert classify_pair(9, 9) == MIXED
    assert classify_pair(2, 3) == ALWAYS_MAX
    assert classify_pair(6, 6) == ALWAYS_NONMAX
    assert classify_pair(3, 6) == MIXED
    assert classify_pair(4, 6) == ALWAYS_MAX
    with pytest.raises(InvalidParameters):
        classify_pair(2, 2)


def test_scan_anchors():
    rep = scan_orders(2, 3)
    assert rep.verdict == ALWAYS_MAX
    assert rep.entries == {(1, 1): 6, (1, 2): 6}
    rep = scan_orders(4, 4)
    assert rep.verdict == ALWAYS_NONMAX
    assert set(rep.entries.values()) <= {1, 2}
    rep = scan_orders(9, 9)
    assert rep.verdict == MIXED
    assert rep.entries[(1, 1)] == 9 and rep.entries[(1, 2)] == 3


def test_scan_report_json_shape():
    data = scan_orders(2, 3).to_json()
    assert data == {"m": 2, "n": 3, "verdict": "ALWAYS_MAX",
                    "entries": [{"k1": 1, "k2": 1, "ord": 6},
                                {"k1": 1, "k2": 2, "ord": 6}]}


def test_classify_agrees_with_scan_up_to_24():
    for m in range(1, 25):
        for n in range(1, 25):
            if not valid_pairs(m, n):
                continue
            rep = scan_orders(m, n)
            assert classify_pair(m, n) == rep.verdict, (m, n)
            l = math.lcm(m, n)
            assert all(l % o == 0 for o in rep.entries.values())


def test_params_json_roundtrip():
    ps = derive_params(2, 3, 1, 1)
    assert ps.to_json() == {"m": 2, "n": 3, "k1": 1, "k2": 1}
    from qheisenberg.arith import AlgebraParams
    assert AlgebraParams.from_json(ps.to_json()) == ps
    ps = derive_params(2, 3, 1, 1, conductor=12)
    assert ps.to_json()["conductor"] == 12
    assert AlgebraParams.from_json(ps.to_json()) == ps
