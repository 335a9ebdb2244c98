import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from qgraded.commutation import (check_cqt_axioms, check_quotient_descent,
                                 classify_statistics, convolution_inverse,
                                 standard_factor, trivial_factor)
from qgraded.groups import GradingGroup
from qgraded.scalars import Scalar, root_of_unity


def test_fermionic_generator():
    b = standard_factor(GradingGroup(1), [[1]], [[0]], Scalar.from_rational(5))
    assert b.generator_value(0, 0) == -1


def test_generator_values_from_omega():
    G = GradingGroup(2)
    z3 = root_of_unity(3)
    b = standard_factor(G, [[0, 0], [0, 0]], [[0, 1], [-1, 0]], z3)
    assert b.generator_value(0, 1) == z3
    assert b.generator_value(1, 0) == z3.inverse()


def test_trivial_factor_is_constant_one():
    G = GradingGroup(0, (3, 3))
    b = trivial_factor(G)
    for g in G.elements():
        for h in G.elements():
            assert b.evaluate(g, h) == 1


def test_construction_rejects_bad_matrices():
    G = GradingGroup(2)
    with pytest.raises(ValueError, match="symmetric"):
        standard_factor(G, [[0, 1], [0, 0]], [[0, 0], [0, 0]], Scalar.one())
    with pytest.raises(ValueError, match="antisymmetric"):
        standard_factor(G, [[0, 0], [0, 0]], [[0, 1], [1, 0]], Scalar.one())
    with pytest.raises(ValueError, match="nonzero"):
        standard_factor(G, [[0, 0], [0, 0]], [[0, 0], [0, 0]], Scalar.zero())
    with pytest.raises(ValueError, match="2x2"):
        standard_factor(G, [[0]], [[0]], Scalar.one())


def test_construction_rejects_torsion_descent_violation():
    # b(gen0, gen1) = -1 does not satisfy (-1)^3 = 1 on Z_3^2
    with pytest.raises(ValueError, match="gen 0, gen 1"):
        standard_factor(GradingGroup(0, (3, 3)),
                        [[0, 1], [1, 0]], [[0, 0], [0, 0]], Scalar.one())


def _bilinear_oracle(b, g, h):
    """Expand b(g, h) one generator step at a time using only the
    bimultiplicative laws and generator values."""
    value = Scalar.one()
    for i, gi in enumerate(g.coords):
        for j, hj in enumerate(h.coords):
            for _ in range(abs(gi * hj)):
                step = b.generator_value(i, j)
                if gi * hj < 0:
                    step = step.inverse()
                value = value * step
    return value


def test_evaluate_matches_bimultiplicative_expansion():
    G = GradingGroup(2)
    q = root_of_unity(8)
    b = standard_factor(G, [[0, 0], [0, 0]], [[0, 1], [-1, 0]], q)
    g = G.element((2, 0))
    h = G.element((0, 3))
    assert b.evaluate(g, h) == q ** 6
    assert b.evaluate(g, h) == _bilinear_oracle(b, g, h)


def test_identity_evaluates_to_one():
    G = GradingGroup(0, (4, 4))
    b = standard_factor(G, [[0, 0], [0, 0]], [[0, 1], [-1, 0]], root_of_unity(4))
    e = G.identity()
    for h in G.elements():
        assert b.evaluate(e, h) == 1
        assert b.evaluate(h, e) == 1


def test_generator_power_rule():
    G = GradingGroup(2)
    q = root_of_unity(5)
    b = standard_factor(G, [[0, 0], [0, 0]], [[0, 1], [-1, 0]], q)
    xi0, xi1 = G.generator(0), G.generator(1)
    for n in range(-3, 7):
        assert b.evaluate(xi0, n * xi1) == b.generator_value(0, 1) ** n


@pytest.mark.parametrize("torsion,sigma,omega,q", [
    ((2, 2), [[0, 1], [1, 0]], [[0, 0], [0, 0]], "1"),
    ((2, 2), [[1, 1], [1, 1]], [[0, 1], [-1, 0]], "zeta(2)"),
    ((3, 3), [[0, 0], [0, 0]], [[0, 1], [-1, 0]], "zeta(3)"),
    ((4, 4), [[0, 0], [0, 0]], [[0, 2], [-2, 0]], "zeta(4)"),
])
def test_cqt_axioms_pass(torsion, sigma, omega, q):
    from qgraded.scalars import parse_scalar
    b = standard_factor(GradingGroup(0, torsion), sigma, omega, parse_scalar(q))
    report = check_cqt_axioms(b)
    assert report.passed, report.failures()


def test_cqt_axioms_pass_for_trivial_factor():
    report = check_cqt_axioms(trivial_factor(GradingGroup(0, (2, 2))))
    assert report.passed


def test_broken_pairing_fails_bimultiplicativity_with_witness():
    G = GradingGroup(0, (2, 2))
    b = standard_factor(G, [[0, 1], [1, 0]], [[0, 0], [0, 0]], Scalar.one())

    def broken(g, h):
        # violates b(g, h+k) = b(g,h) b(g,k) while staying nonzero
        if g.coords == (1, 1) and h.coords == (1, 1):
            return Scalar.from_rational(7)
        return b.evaluate(g, h)

    report = check_cqt_axioms(b, pairing=broken)
    result = report.result("cqt.bimultiplicative-right")
    assert not result.passed
    assert result.witness is not None


def test_cqt_report_documents_commutativity_reduction():
    report = check_cqt_axioms(trivial_factor(GradingGroup(0, (2,))))
    note = report.result("cqt.commutation-identity").note
    assert "commutativity" in note


def test_bicharacter_laws_exhaustively_on_small_groups():
    cases = [
        (GradingGroup(0, (2, 2)), [[0, 1], [1, 0]], [[0, 0], [0, 0]], Scalar.one()),
        (GradingGroup(0, (4,)), [[0]], [[0]], root_of_unity(4)),
        (GradingGroup(0, (3, 3)), [[0, 0], [0, 0]], [[0, 1], [-1, 0]],
         root_of_unity(3)),
    ]
    for G, sigma, omega, q in cases:
        b = standard_factor(G, sigma, omega, q)
        els = G.elements()
        for g, h, k in itertools.product(els, els, els):
            assert b.evaluate(g + h, k) == b.evaluate(g, k) * b.evaluate(h, k)
            assert b.evaluate(g, h + k) == b.evaluate(g, h) * b.evaluate(g, k)


# -- quotient descent -------------------------------------------------------

def test_descent_succeeds_for_even_roots():
    G = GradingGroup(2)
    for n in (2, 4, 6, 8):
        b = standard_factor(G, [[1, 1], [1, 1]], [[0, 1], [-1, 0]],
                            root_of_unity(n))
        result = check_quotient_descent(b, n)
        assert result.descends
        assert result.induced is not None
        assert result.induced.group == GradingGroup(0, (n, n))


def test_descent_fails_for_odd_root_with_odd_sigma():
    b = standard_factor(GradingGroup(2), [[0, 1], [1, 0]],
                        [[0, 0], [0, 0]], root_of_unity(3))
    result = check_quotient_descent(b, 3)
    assert not result.descends
    assert result.witness == (0, 1)


def test_descent_trivial_factor_always_descends():
    b = trivial_factor(GradingGroup(3))
    for n in (2, 3, 5):
        assert check_quotient_descent(b, n).descends


def test_descent_parity_rule():
    """With q a primitive n-th root and an odd sigma entry, descent holds
    exactly for even n."""
    G = GradingGroup(2)
    for n in range(2, 13):
        b = standard_factor(G, [[0, 1], [1, 0]], [[0, 1], [-1, 0]],
                            root_of_unity(n))
        assert check_quotient_descent(b, n).descends == (n % 2 == 0)


def test_induced_factor_satisfies_bicharacter_laws():
    b = standard_factor(GradingGroup(2), [[0, 1], [1, 0]], [[0, 2], [-2, 0]],
                        root_of_unity(4))
    induced = check_quotient_descent(b, 4).induced
    els = induced.group.elements()
    rng = random.Random(7)
    for _ in range(50):
        g, h, k = (rng.choice(els) for _ in range(3))
        assert induced.evaluate(g + h, k) == \
            induced.evaluate(g, k) * induced.evaluate(h, k)


@settings(max_examples=40)
@given(n=st.sampled_from([2, 4, 6, 8, 10, 12]),
       s01=st.integers(0, 3), s00=st.integers(0, 3), s11=st.integers(0, 3),
       w=st.integers(-3, 3))
def test_descent_always_holds_for_even_primitive_roots(n, s01, s00, s11, w):
    b = standard_factor(GradingGroup(2), [[s00, s01], [s01, s11]],
                        [[0, w], [-w, 0]], root_of_unity(n))
    assert check_quotient_descent(b, n).descends


# -- convolution inverse ----------------------------------------------------

def test_convolution_inverse_on_generators():
    G = GradingGroup(2)
    q = root_of_unity(8)
    b = standard_factor(G, [[0, 0], [0, 0]], [[0, 1], [-1, 0]], q)
    inv = convolution_inverse(b)
    assert inv.generator_value(0, 1) == q.inverse()
    triv = trivial_factor(G)
    assert convolution_inverse(triv).generator_value(0, 1) == 1


def test_pointwise_product_with_inverse_is_one():
    G = GradingGroup(2)
    b = standard_factor(G, [[1, 1], [1, 0]], [[0, 3], [-3, 0]], root_of_unity(6))
    inv = b.inverse()
    rng = random.Random(11)
    for _ in range(20):
        g = G.element((rng.randint(-4, 4), rng.randint(-4, 4)))
        h = G.element((rng.randint(-4, 4), rng.randint(-4, 4)))
        assert b.evaluate(g, h) * inv.evaluate(g, h) == 1


# -- statistics classification ---------------------------------------------

def test_classify_all_fermionic():
    b = standard_factor(GradingGroup(2), [[1, 0], [0, 1]],
                        [[0, 0], [0, 0]], Scalar.one())
    table = classify_statistics(b)
    assert all(row.label == "fermionic" for row in table.generators)


def test_classify_all_bosonic():
    table = classify_statistics(trivial_factor(GradingGroup(3)))
    assert all(row.label == "bosonic" for row in table.generators)
    assert all(p.mutual_phase == 1 for p in table.pairs)


def test_classify_anyonic_pair_with_trivial_mutual_phase():
    z4 = root_of_unity(4)
    b = standard_factor(GradingGroup(2), [[0, 0], [0, 0]],
                        [[0, 1], [-1, 0]], z4)
    table = classify_statistics(b)
    assert all(row.label == "bosonic" for row in table.generators)
    pair = table.pairs[0]
    assert pair.value_ij == z4
    assert pair.label == "anyonic(q-statistics)"
    assert pair.mutual_phase == 1


def test_sigma_reduced_mod_two_on_ingestion():
    b1 = standard_factor(GradingGroup(1), [[3]], [[0]], Scalar.one())
    b2 = standard_factor(GradingGroup(1), [[1]], [[0]], Scalar.one())
    assert b1.sigma == b2.sigma
    assert b1.generator_value(0, 0) == b2.generator_value(0, 0) == -1
