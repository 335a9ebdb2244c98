import pytest
from hypothesis import given, settings, strategies as st

from qgraded.algebras import (GradedAlgebra, build_b_symmetric_truncation,
                              build_group_algebra, build_truncated_poly,
                              build_twisted_group_algebra,
                              check_quantum_commutativity,
                              check_strong_grading, coaction, coinvariants,
                              strong_grading_window)
from qgraded.commutation import standard_factor, trivial_factor
from qgraded.errors import InfiniteGroupError
from qgraded.group_hopf import TensorElement
from qgraded.groups import GradingGroup
from qgraded.linalg import Echelon
from qgraded.scalars import Scalar, root_of_unity


def z2_fermionic_twisted():
    G = GradingGroup(0, (2,))
    b = standard_factor(G, [[1]], [[0]], Scalar.one())
    return build_twisted_group_algebra(G, b), b


# -- multiplication ---------------------------------------------------------

def test_unit_law():
    A, _ = z2_fermionic_twisted()
    x = A.basis_element(1).scale(3) + A.one()
    assert A.one() * x == x
    assert x * A.one() == x


def test_truncated_square_is_zero():
    P = build_truncated_poly(2)
    x = P.basis_element(1)
    assert (x * x).is_zero()


def test_twisted_z2_square_is_one():
    A, _ = z2_fermionic_twisted()
    u = A.basis_element(1)
    assert u * u == A.one()


# -- coaction ---------------------------------------------------------------

def test_coaction_on_homogeneous_vector():
    A, _ = z2_fermionic_twisted()
    u = A.basis_element(1)
    g = A.grade(1)
    assert coaction(u) == TensorElement({(1, g): Scalar.one()})


def test_coaction_of_unit():
    A, _ = z2_fermionic_twisted()
    e = A.group.identity()
    assert coaction(A.one()) == TensorElement({(0, e): Scalar.one()})


def test_coaction_is_linear_over_grades():
    P = build_truncated_poly(3)
    v = P.one() + P.basis_element(1).scale(2)
    t = coaction(v)
    assert t == TensorElement({(0, P.grade(0)): Scalar.one(),
                               (1, P.grade(1)): Scalar.from_rational(2)})


def test_coaction_is_counital_and_coassociative():
    # contracting the group leg recovers the element; duplicating it
    # (group-like coproduct) agrees with regrading, i.e. (id (x) delta)
    # and (coaction (x) id) produce the same 3-tensor
    P = build_truncated_poly(4)
    v = P.one() + P.basis_element(2).scale(5) - P.basis_element(3)
    t = coaction(v)
    recovered = {}
    for (i, _g), c in t.terms.items():
        recovered[i] = recovered.get(i, Scalar.zero()) + c
    assert recovered == v.coords
    lhs = {(i, g, g): c for (i, g), c in t.terms.items()}
    rhs = {}
    for (i, g), c in t.terms.items():
        rhs[(i, P.grade(i), g)] = c
    assert lhs == rhs


# -- coinvariants -----------------------------------------------------------

def test_coinvariants_of_twisted_z2_is_the_unit_line():
    A, _ = z2_fermionic_twisted()
    basis = coinvariants(A)
    assert len(basis) == 1
    assert basis[0].coords == {0: Scalar.one()}


def test_coinvariants_equal_identity_component(corpus):
    for entry in corpus:
        A = entry.algebra
        e = A.group.identity()
        component = A.component(e)
        basis = coinvariants(A)
        assert len(basis) == len(component)
        span = Echelon()
        for i in component:
            span.add({i: Scalar.one()})
        for v in basis:
            assert span.contains(v.coords)


def test_coinvariants_of_trivially_graded_algebra_is_everything():
    group = GradingGroup(0, ())
    e = group.identity()
    basis = [("a", e), ("b", e)]
    products = {(0, 0): {0: Scalar.one()}, (0, 1): {1: Scalar.one()},
                (1, 0): {1: Scalar.one()}}
    A = GradedAlgebra(group, basis, products, {0: Scalar.one()})
    assert len(coinvariants(A)) == A.dim


# -- quantum commutativity ---------------------------------------------------

def test_twisted_z22_quantum_commutative_by_construction():
    G = GradingGroup(0, (2, 2))
    b = standard_factor(G, [[0, 1], [1, 0]], [[0, 0], [0, 0]], Scalar.one())
    A = build_twisted_group_algebra(G, b)
    assert check_quantum_commutativity(A, b).quantum_commutative


def test_quantum_plane_truncation_is_quantum_commutative():
    G = GradingGroup(0, (3, 3))
    b = standard_factor(G, [[0, 0], [0, 0]], [[0, 1], [-1, 0]],
                        root_of_unity(3))
    A = build_b_symmetric_truncation(b, 2)
    assert check_quantum_commutativity(A, b).quantum_commutative
    x, y = A.basis_element(1), A.basis_element(2)
    assert x * y == (y * x).scale(b.evaluate(A.grade(1), A.grade(2)))


def test_plain_commutative_truncation_fails_against_q_factor():
    G = GradingGroup(0, (3, 3))
    commuting = trivial_factor(G)
    A = build_b_symmetric_truncation(commuting, 2)
    q_factor = standard_factor(G, [[0, 0], [0, 0]], [[0, 1], [-1, 0]],
                               root_of_unity(3))
    report = check_quantum_commutativity(A, q_factor)
    assert not report.quantum_commutative
    assert report.witness_pair == ("x", "y")
    g, h = report.witness_grades
    assert g.coords == (1, 0) and h.coords == (0, 1)


def test_fermionic_twisted_algebra_cannot_be_quantum_commutative():
    # u^2 = 1 but b(g, g) = -1 would force u^2 = -u^2; the failure is
    # structural, which is why corpus factors keep an even sigma diagonal
    A, b = z2_fermionic_twisted()
    report = check_quantum_commutativity(A, b)
    assert not report.quantum_commutative
    assert report.witness_pair == ("u(1)", "u(1)")


# -- strong grading ----------------------------------------------------------

@pytest.mark.parametrize("n,N", [(2, 1), (3, 1), (2, 2), (3, 2)])
def test_twisted_group_algebras_are_strongly_graded(n, N):
    G = GradingGroup(0, (n,) * N)
    omega = [[0] * N for _ in range(N)]
    if N == 2:
        omega = [[0, 1], [-1, 0]]
    b = standard_factor(G, [[0] * N for _ in range(N)], omega,
                        root_of_unity(n))
    A = build_twisted_group_algebra(G, b)
    assert check_strong_grading(A).strong


def test_truncated_poly_not_strong_with_witness():
    report = check_strong_grading(build_truncated_poly(2))
    assert not report.strong
    g, h = report.witness_pair
    assert (g.coords, h.coords) == ((1,), (1,))
    assert report.missing is not None

    report3 = check_strong_grading(build_truncated_poly(3))
    assert not report3.strong
    g, h = report3.witness_pair
    assert (g.coords, h.coords) == ((1,), (2,))


def test_group_algebra_over_itself_is_strong():
    assert check_strong_grading(build_group_algebra(GradingGroup(0, (2,)))).strong


def test_strong_grading_requires_finite_group():
    b = trivial_factor(GradingGroup(1))
    A = build_b_symmetric_truncation(b, 2)
    with pytest.raises(InfiniteGroupError, match="finite"):
        check_strong_grading(A)


def test_window_evidence_for_free_grading():
    b = trivial_factor(GradingGroup(1))
    A = build_b_symmetric_truncation(b, 3)
    window = strong_grading_window(A)
    assert window, "expected some grade pairs"
    # the window only lists pairs whose target grade is present in the
    # basis, and inside the truncation every such span is full
    assert all(w.spanned for w in window)


# -- builders ----------------------------------------------------------------

def test_twisted_builder_with_trivial_factor_is_group_algebra():
    G = GradingGroup(0, (2,))
    A = build_twisted_group_algebra(G, trivial_factor(G))
    u = A.basis_element(1)
    assert u * u == A.one()


def test_twisted_builder_generator_relations():
    G = GradingGroup(0, (2, 2))
    b = standard_factor(G, [[0, 1], [1, 0]], [[0, 0], [0, 0]], Scalar.one())
    A = build_twisted_group_algebra(G, b)
    u1 = A.basis_element(A.component(G.generator(0))[0])
    u2 = A.basis_element(A.component(G.generator(1))[0])
    assert u1 * u2 == (u2 * u1).scale(-1)
    assert A.dim == 4
    assert check_strong_grading(A).strong


def test_twisted_builder_self_statistics_recorded():
    from qgraded.commutation import classify_statistics
    G = GradingGroup(0, (2,))
    b = standard_factor(G, [[1]], [[0]], Scalar.one())
    A = build_twisted_group_algebra(G, b)
    u = A.basis_element(1)
    assert u * u == A.one()
    assert classify_statistics(b).generators[0].label == "fermionic"


def test_torsion_generator_power_is_unit():
    G = GradingGroup(0, (4,))
    b = standard_factor(G, [[0]], [[0]], root_of_unity(4))
    A = build_twisted_group_algebra(G, b)
    u = A.basis_element(1)
    assert u * u * u * u == A.one()


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_truncated_poly_structure(m):
    P = build_truncated_poly(m)
    assert P.dim == m
    x = P.basis_element(1)
    power = P.one()
    for _ in range(m - 1):
        power = power * x
    assert not power.is_zero()
    assert (power * x).is_zero()
    assert not check_strong_grading(P).strong


def test_pauli_truncation_basis():
    b = standard_factor(GradingGroup(1), [[1]], [[0]], Scalar.one())
    A = build_b_symmetric_truncation(b, 3)
    assert [A.label(i) for i in range(A.dim)] == ["1", "x"]
    x = A.basis_element(1)
    assert (x * x).is_zero()


def test_quantum_plane_basis_up_to_degree_two():
    b = standard_factor(GradingGroup(2), [[0, 0], [0, 0]], [[0, 1], [-1, 0]],
                        root_of_unity(3))
    A = build_b_symmetric_truncation(b, 2)
    assert [A.label(i) for i in range(A.dim)] == ["1", "x", "y", "x^2", "x*y", "y^2"]
    x, y = A.basis_element(1), A.basis_element(2)
    assert x * y == (y * x).scale(root_of_unity(3))


def test_trivial_factor_truncation_is_commutative():
    A = build_b_symmetric_truncation(trivial_factor(GradingGroup(2)), 3)
    for i in range(A.dim):
        for j in range(A.dim):
            assert (A.basis_element(i) * A.basis_element(j)
                    == A.basis_element(j) * A.basis_element(i))


def test_truncation_cuts_products_above_max_degree():
    A = build_b_symmetric_truncation(trivial_factor(GradingGroup(1)), 2)
    x = A.basis_element(1)
    x2 = x * x
    assert not x2.is_zero()
    assert (x2 * x).is_zero()


# -- invariants --------------------------------------------------------------

def test_homogeneity_of_all_builders(corpus):
    for entry in corpus:
        A = entry.algebra
        for (i, j), result in A.products.items():
            target = A.grade(i) + A.grade(j)
            for k in result:
                assert A.grade(k) == target, (entry.name, i, j, k)


def test_every_corpus_twisted_algebra_is_quantum_commutative(corpus):
    twisted = [e for e in corpus if e.name.startswith("twisted-")
               or e.name.startswith("group-algebra-")]
    assert twisted
    for entry in twisted:
        report = check_quantum_commutativity(entry.algebra, entry.factor)
        assert report.quantum_commutative, (entry.name, report.witness_pair)


def test_b_symmetric_truncations_are_quantum_commutative(corpus):
    entries = [e for e in corpus if e.name.startswith("b-symmetric-")]
    assert entries
    for entry in entries:
        assert check_quantum_commutativity(
            entry.algebra, entry.factor).quantum_commutative


@settings(max_examples=25, deadline=None)
@given(s00=st.integers(0, 1), s11=st.integers(0, 1), s01=st.integers(0, 1),
       w=st.integers(-2, 2), deg=st.integers(1, 3))
def test_fermionic_generators_square_to_zero(s00, s11, s01, w, deg):
    b = standard_factor(GradingGroup(2), [[s00, s01], [s01, s11]],
                        [[0, w], [-w, 0]], root_of_unity(4))
    A = build_b_symmetric_truncation(b, deg)
    # degree-1 monomials sit right after the unit, in generator order
    for i in range(2):
        x = A.basis_element(1 + i)
        assert A.grade(1 + i) == A.group.generator(i)
        if b.generator_value(i, i) == -1:
            assert (x * x).is_zero()


def test_cocycle_associativity_up_to_order_81():
    # Z_3^4 has order 81; construction itself validates all 81^3 basis
    # triples exactly and raises on any failure
    G = GradingGroup(0, (3, 3, 3, 3))
    omega = [[0, 1, 0, -1], [-1, 0, 2, 0], [0, -2, 0, 1], [1, 0, -1, 0]]
    sigma = [[0, 2, 0, 0], [2, 0, 0, 0], [0, 0, 2, 0], [0, 0, 0, 0]]
    b = standard_factor(G, sigma, omega, root_of_unity(3))
    A = build_twisted_group_algebra(G, b)
    assert A.dim == 81


def test_validation_catches_broken_homogeneity():
    G = GradingGroup(0, (2,))
    basis = [("1", G.element((0,))), ("x", G.element((1,)))]
    products = {(0, 0): {0: Scalar.one()}, (0, 1): {1: Scalar.one()},
                (1, 0): {1: Scalar.one()}, (1, 1): {1: Scalar.one()}}
    with pytest.raises(ValueError, match="homogeneity"):
        GradedAlgebra(G, basis, products, {0: Scalar.one()})


def test_validation_catches_nonassociativity():
    G = GradingGroup(0, ())
    e = G.identity()
    basis = [("1", e), ("a", e), ("b", e)]
    one = Scalar.one()
    products = {(0, 0): {0: one}, (0, 1): {1: one}, (0, 2): {2: one},
                (1, 0): {1: one}, (2, 0): {2: one},
                (1, 1): {2: one}, (1, 2): {1: one},
                (2, 1): {0: one}, (2, 2): {2: one}}
    with pytest.raises(ValueError, match="associativity"):
        GradedAlgebra(G, basis, products, {0: one})
