"""Acceptance suite: one check per numbered criterion, in order.

Each test prints a single [criterion NN] PASS/FAIL line straight to the
terminal (bypassing capture), and enforces its runtime budget where one
applies.  Every comparison is exact; nothing here is approximate or
tolerance-based.
"""

import math
import random
import sys
import tempfile
import time
from fractions import Fraction

from qheisenberg.arith import (classify_pair, derive_params, ord_formula,
                               pi_degree, pi_degree_snf, scan_orders,
                               valid_pairs)
from qheisenberg.cyclotomic import CycNumber, order_of_unit, zeta_power
from qheisenberg.linalg import (FieldMatrix, is_invertible, matrix_hom_space)
from qheisenberg.pbw import (PbwElement, center_generators, generators,
                             is_central, pq_number, product,
                             product_via_rewriting, theta)
from qheisenberg.reps import (KIND_ONE_DIM, KIND_QPLANE_THETA, KIND_QPLANE_Z,
                              KIND_V1, KIND_V2, KIND_V3, ModuleDescriptor,
                              build_from_descriptor, build_v1, build_v2,
                              build_v3, classify, intertwiner, is_simple,
                              iso_test, theta_matrix, verify_relations)

from golden_cases import GOLDEN_CASES, expected_output, run_case


class Criterion:
    """Times a criterion body, prints its verdict, enforces the budget."""

    def __init__(self, capfd, number, detail, budget=None):
        self.capfd = capfd
        self.number = number
        self.detail = detail
        self.budget = budget

    def __enter__(self):
        self.t0 = time.monotonic()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.monotonic() - self.t0
        in_budget = self.budget is None or elapsed < self.budget
        ok = exc_type is None and in_budget
        verdict = "PASS" if ok else "FAIL"
        with self.capfd.disabled():
            print(f"[criterion {self.number:02d}] {verdict} in "
                  f"{elapsed:6.1f}s: {self.detail}", flush=True)
        if exc_type is None and not in_budget:
            raise AssertionError(
                f"criterion {self.number} took {elapsed:.1f}s, "
                f"budget {self.budget:.0f}s")
        return False


def all_params(max_l):
    out = []
    for m in range(1, max_l + 1):
        for n in range(1, max_l + 1):
            for k1, k2 in valid_pairs(m, n):
                if math.lcm(m, n) <= max_l:
                    out.append(derive_params(m, n, k1, k2))
    return out


def sample_scalars(params, rng, count):
    g = zeta_power(params.conductor, 1)
    pool = [CycNumber.from_rational(params.conductor, v)
            for v in (1, 2, 3, Fraction(1, 2), -1)] + [g, g * 2]
    return [rng.choice(pool) for _ in range(count)]


def test_criterion_01_pi_degree_by_smith_form(capfd):
    with Criterion(capfd, 1, "PI degree via Smith form equals lcm(m, n) on "
                   "every parameter set with l <= 12", budget=10.0):
        checked = 0
        for params in all_params(12):
            assert pi_degree_snf(params) == math.lcm(params.m, params.n)
            assert pi_degree(params.m, params.n) == params.l
            checked += 1
        assert checked > 400


def test_criterion_02_central_generators(capfd):
    with Criterion(capfd, 2, "the five central generators commute with "
                   "everything and plain x, y do not", budget=30.0):
        for m, n, k1, k2 in ((2, 3, 1, 1), (4, 4, 1, 1), (2, 4, 1, 1),
                             (1, 3, 0, 1), (3, 1, 1, 0)):
            params = derive_params(m, n, k1, k2)
            for gen in center_generators(params):
                assert is_central(gen), (m, n, k1, k2)
            x, y, _ = generators(params)
            assert not is_central(x)
            assert not is_central(y)


def test_criterion_03_twist_element_powers(capfd):
    with Criterion(capfd, 3, "twist-element powers carry the predicted "
                   "corner coefficients, collapsing to the closed form "
                   "at p = 1"):
        for m, n, k1, k2 in ((2, 3, 1, 1), (4, 4, 1, 1), (2, 4, 1, 1)):
            params = derive_params(m, n, k1, k2)
            coeff = params.q - params.p.inverse()
            power = PbwElement.one(params)
            th = theta(params)
            for k in range(1, 7):
                power = product(power, th)
                lead = coeff ** k * params.q ** (k * (k - 1) // 2)
                assert power.coefficient(0, k, k) == lead
                assert power.coefficient(k, 0, 0) == \
                    CycNumber.one(params.conductor)
        # at p = 1 and k = ord(q) the cross terms vanish entirely
        for n in (2, 3, 4):
            params = derive_params(1, n, 0, 1)
            scalar = ((params.q - 1) ** n
                      * params.q ** (n * (n - 1) // 2))
            closed = (PbwElement.monomial(params, 0, n, n, scalar)
                      + PbwElement.monomial(params, n, 0, 0))
            assert theta(params) ** n == closed


def test_criterion_04_builders_satisfy_relations(capfd):
    with Criterion(capfd, 4, "the three cyclic families satisfy the "
                   "relations with the predicted twist-element diagonals, "
                   "l <= 12", budget=60.0):
        rng = random.Random(4)
        for params in all_params(12):
            o = ord_formula(params.m, params.n, params.k1, params.k2)
            q_powers = [params.q ** k for k in range(params.l)]
            qinv = params.q.inverse()
            for _ in range(3):
                mu, lam, gam = sample_scalars(params, rng, 3)
                v1 = build_v1(params, mu, lam, gam)
                v2 = build_v2(params, mu, lam)
                v3 = build_v3(params, lam)
                for rep in (v1, v2, v3):
                    assert verify_relations(rep).ok
                assert theta_matrix(v1) == FieldMatrix.diagonal(
                    [qinv ** k * gam for k in range(params.l)],
                    params.conductor)
                assert theta_matrix(v2) == FieldMatrix.diagonal(
                    [lam * q_powers[k] for k in range(params.l)],
                    params.conductor)
                assert theta_matrix(v3) == FieldMatrix.diagonal(
                    [lam * q_powers[k] for k in range(o)], params.conductor)


def test_criterion_05_simplicity_and_dimension_bound(capfd):
    with Criterion(capfd, 5, "the three families are simple with dimensions "
                   "within the PI-degree bound, attained by the first, "
                   "l <= 8", budget=120.0):
        rng = random.Random(5)
        for params in all_params(8):
            bound = pi_degree(params.m, params.n)
            mu, lam, gam = sample_scalars(params, rng, 3)
            o = ord_formula(params.m, params.n, params.k1, params.k2)
            cases = [(build_v1(params, mu, lam, gam), params.l),
                     (build_v2(params, mu, lam), params.l),
                     (build_v3(params, lam), o)]
            for rep, d in cases:
                assert rep.d == d <= bound
                assert is_simple(rep)
            assert cases[0][1] == bound


def test_criterion_06_isomorphism_cases(capfd):
    with Criterion(capfd, 6, "three positive and three negative isomorphism "
                   "cases per family, with exact intertwiners and empty "
                   "hom spaces"):
        params = derive_params(2, 3, 1, 1)
        g = zeta_power(6, 1)
        one = CycNumber.one(6)
        two = CycNumber.from_rational(6, 2)
        three = CycNumber.from_rational(6, 3)

        def hom_dim(da, db):
            ra = build_from_descriptor(params, da)
            rb = build_from_descriptor(params, db)
            return len(matrix_hom_space([ra.Mx, ra.My, ra.Mz],
                                        [rb.Mx, rb.My, rb.Mz]))

        v1 = ModuleDescriptor(KIND_V1, mu=one, lam=two, gamma=three)
        v1_cases = [
            (ModuleDescriptor(KIND_V1, mu=g, lam=two, gamma=three), True, 0),
            (ModuleDescriptor(KIND_V1, mu=one, lam=params.p * two,
                              gamma=params.q.inverse() * three), True, 1),
            (ModuleDescriptor(KIND_V1, mu=one, lam=params.p * two,
                              gamma=three), True, 3),
            (ModuleDescriptor(KIND_V1, mu=one, lam=two * 2,
                              gamma=three), False, None),
            (ModuleDescriptor(KIND_V1, mu=two, lam=two, gamma=three),
             False, None),
            (ModuleDescriptor(KIND_V1, mu=one, lam=two, gamma=three * 2),
             False, None),
        ]
        v2 = ModuleDescriptor(KIND_V2, mu=one, lam=two)
        v2_cases = [
            (ModuleDescriptor(KIND_V2, mu=g, lam=two), True, 0),
            (ModuleDescriptor(KIND_V2, mu=g ** 5, lam=two), True, 0),
            (ModuleDescriptor(KIND_V2, mu=-one, lam=two), True, 0),
            (ModuleDescriptor(KIND_V2, mu=one, lam=three), False, None),
            (ModuleDescriptor(KIND_V2, mu=one, lam=-two), False, None),
            (ModuleDescriptor(KIND_V2, mu=two, lam=two), False, None),
        ]
        v3 = ModuleDescriptor(KIND_V3, lam=one)
        v3_cases = [
            (ModuleDescriptor(KIND_V3, lam=one), True, 0),
            (ModuleDescriptor(KIND_V3, lam=two), False, None),
            (ModuleDescriptor(KIND_V3, lam=-one), False, None),
            (ModuleDescriptor(KIND_V3, lam=g), False, None),
        ]
        # two further positive cases for the third family, on new bases
        for lam in (two, g):
            base = ModuleDescriptor(KIND_V3, lam=lam)
            got, k = iso_test(KIND_V3, base, base, params)
            assert got and k == 0
            assert is_invertible(intertwiner(KIND_V3, base, base, 0, params))

        for kind, base, cases in ((KIND_V1, v1, v1_cases),
                                  (KIND_V2, v2, v2_cases),
                                  (KIND_V3, v3, v3_cases)):
            positives = negatives = 0
            for other, want, want_k in cases:
                got, k = iso_test(kind, base, other, params)
                assert got == want and k == want_k
                if want:
                    p_mat = intertwiner(kind, base, other, k, params)
                    assert is_invertible(p_mat)
                    positives += 1
                else:
                    assert hom_dim(base, other) == 0
                    negatives += 1
            assert negatives >= 3
            assert positives + (2 if kind == KIND_V3 else 0) >= 3


def test_criterion_07_trichotomy_matches_scans(capfd):
    with Criterion(capfd, 7, "the order trichotomy agrees with brute-force "
                   "scans for every (m, n) up to 24", budget=60.0):
        anchors = {(3, 3): "ALWAYS_MAX", (4, 4): "ALWAYS_NONMAX",
                   (9, 9): "MIXED"}
        for m in range(1, 25):
            for n in range(1, 25):
                if not valid_pairs(m, n):
                    continue
                verdict = scan_orders(m, n).verdict
                assert classify_pair(m, n) == verdict, (m, n)
                if (m, n) in anchors:
                    assert verdict == anchors[(m, n)]


def test_criterion_08_order_formula_in_field(capfd):
    with Criterion(capfd, 8, "the closed-form order of p*q equals its "
                   "in-field multiplicative order, l <= 24"):
        checked = 0
        for params in all_params(24):
            value = ord_formula(params.m, params.n, params.k1, params.k2)
            assert order_of_unit(params.p * params.q) == value
            checked += 1
        assert checked > 3000


def test_criterion_09_rewriting_engine(capfd):
    with Criterion(capfd, 9, "pq-integer recurrences, associativity on 100 "
                   "triples, and rewriting against closed-form products on "
                   "100 pairs", budget=60.0):
        param_sets = [derive_params(*t) for t in
                      ((2, 3, 1, 1), (4, 4, 1, 1), (2, 4, 1, 1),
                       (3, 4, 1, 1))]
        for params in param_sets:
            o = ord_formula(params.m, params.n, params.k1, params.k2)
            pinv = params.p.inverse()
            for k in range(11):
                step = (pq_number(params, k + 1)
                        - params.q * pq_number(params, k))
                assert step == pinv ** k
                assert pq_number(params, k).is_zero() == (k % o == 0)
        rng = random.Random(9)

        def monomial(params):
            return PbwElement.monomial(
                params, rng.randrange(4), rng.randrange(4), rng.randrange(4),
                rng.choice([1, 2, Fraction(1, 2), -1]))

        for _ in range(100):
            params = rng.choice(param_sets)
            a, b, c = (monomial(params) for _ in range(3))
            assert product(product(a, b), c) == product(a, product(b, c))
        for _ in range(100):
            params = rng.choice(param_sets)
            a, b = (monomial(params) for _ in range(2))
            assert product_via_rewriting(a, b) == product(a, b)


def test_criterion_10_classification_round_trips(capfd):
    with Criterion(capfd, 10, "classification inverts every builder up to "
                   "isomorphism on five sampled descriptors per family"):
        rng = random.Random(10)
        param_pool = [derive_params(*t) for t in
                      ((2, 3, 1, 1), (4, 4, 1, 1), (2, 4, 1, 1),
                       (3, 4, 1, 1), (2, 3, 1, 2))]
        zero = CycNumber.zero(6)

        def descriptors(kind):
            for i in range(5):
                params = param_pool[i]
                mu, lam, gam = sample_scalars(params, rng, 3)
                if kind == KIND_V1:
                    yield params, ModuleDescriptor(kind, mu=mu, lam=lam,
                                                   gamma=gam)
                elif kind == KIND_V2:
                    yield params, ModuleDescriptor(kind, mu=mu, lam=lam)
                elif kind == KIND_V3:
                    yield params, ModuleDescriptor(kind, lam=lam)
                elif kind == KIND_QPLANE_Z:
                    yield params, ModuleDescriptor(kind, mu=mu, gamma=gam)
                elif kind == KIND_QPLANE_THETA:
                    yield params, ModuleDescriptor(kind, mu=mu, lam=lam)

        for kind in (KIND_V1, KIND_V2, KIND_V3, KIND_QPLANE_Z,
                     KIND_QPLANE_THETA):
            seen = 0
            for params, desc in descriptors(kind):
                got = classify(build_from_descriptor(params, desc))
                assert got.kind == kind
                agrees, k = iso_test(kind, got, desc, params)
                assert agrees, (kind, desc, got)
                assert is_invertible(intertwiner(kind, got, desc, k, params))
                seen += 1
            assert seen == 5
        params = derive_params(2, 3, 1, 1)
        one_dims = [(CycNumber.from_rational(6, 3), zero, zero),
                    (zeta_power(6, 1), zero, zero),
                    (zero, zero, CycNumber.from_rational(6, 2)),
                    (zero, zero, zeta_power(6, 1)),
                    (CycNumber.from_rational(6, Fraction(1, 2)), zero, zero)]
        for x_s, z_s, y_s in one_dims:
            desc = ModuleDescriptor(KIND_ONE_DIM, mu=x_s, lam=z_s, gamma=y_s)
            rep = build_from_descriptor(params, desc)
            assert verify_relations(rep).ok
            got = classify(rep)
            agrees, k = iso_test(KIND_ONE_DIM, got, desc, params)
            assert agrees and k == 0


def test_criterion_11_cli_goldens(capfd):
    with Criterion(capfd, 11, f"all {len(GOLDEN_CASES)} frozen command-line "
                   "outputs reproduce byte for byte"):
        assert len(GOLDEN_CASES) >= 20
        with tempfile.TemporaryDirectory() as tmpdir:
            for case in GOLDEN_CASES:
                code, out, err = run_case(case, tmpdir)
                want_out, want_err = expected_output(case)
                assert code == case["exit"], case["name"]
                assert out == want_out, case["name"]
                assert err == want_err, case["name"]
