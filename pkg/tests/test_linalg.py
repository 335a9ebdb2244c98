from fractions import Fraction

from hypothesis import given, settings, strategies as st

from qgraded.linalg import (Echelon, LinearMap, kernel_basis, rank, rref,
                            vec_add_scaled)
from qgraded.scalars import Scalar


def vec(**kw):
    return {int(k[1:]): Scalar.from_rational(v) for k, v in kw.items()}


def s(x):
    return Scalar.from_rational(x)


def test_rank_of_simple_matrix():
    rows = [vec(c0=1, c1=2), vec(c1=1), vec(c0=1, c1=3)]
    assert rank(rows) == 2


def test_rref_is_fully_reduced():
    rows = [vec(c0=1, c1=2, c2=3), vec(c1=1, c2=1)]
    ech = rref(rows)
    for p, row in ech.pivot_rows.items():
        for c in row:
            assert c == p or c not in ech.pivot_rows


def test_kernel_vectors_annihilate():
    rows = [vec(c0=1, c1=2, c2=3), vec(c0=2, c1=4, c2=7)]
    kernel = kernel_basis(rows, 3)
    assert len(kernel) == 1
    for row in rows:
        total = Scalar.zero()
        for c, x in kernel[0].items():
            total = total + row.get(c, Scalar.zero()) * x
        assert total.is_zero()


def test_rank_nullity():
    rows = [vec(c0=1, c2=1), vec(c1=1, c3=2), vec(c0=1, c1=1, c2=1, c3=2)]
    assert rank(rows) + len(kernel_basis(rows, 5)) == 5


def test_contains_membership():
    ech = Echelon()
    ech.add(vec(c0=1, c1=1))
    ech.add(vec(c1=1, c2=1))
    assert ech.contains(vec(c0=1, c2=-1))
    assert not ech.contains(vec(c0=1, c2=1))


def test_add_reports_rank_growth():
    ech = Echelon()
    assert ech.add(vec(c0=1))
    assert not ech.add(vec(c0=5))
    assert ech.add(vec(c1=1))
    assert ech.rank == 2


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(st.fractions(min_value=-4, max_value=4,
                                      max_denominator=5),
                         min_size=4, max_size=4),
                min_size=1, max_size=5))
def test_rank_agrees_with_dense_fraction_elimination(raw):
    rows = [{i: Scalar.from_rational(x) for i, x in enumerate(r) if x != 0}
            for r in raw]
    # dense oracle over plain Fractions
    dense = [list(map(Fraction, r)) for r in raw]
    r = 0
    for col in range(4):
        piv = next((i for i in range(r, len(dense)) if dense[i][col] != 0), None)
        if piv is None:
            continue
        dense[r], dense[piv] = dense[piv], dense[r]
        for i in range(len(dense)):
            if i != r and dense[i][col] != 0:
                f = dense[i][col] / dense[r][col]
                dense[i] = [a - f * b for a, b in zip(dense[i], dense[r])]
        r += 1
    assert rank(rows) == r
    # every kernel vector annihilates every row
    for v in kernel_basis(rows, 4):
        for row in rows:
            total = Scalar.zero()
            for c, x in v.items():
                total = total + row.get(c, Scalar.zero()) * x
            assert total.is_zero()


def test_linear_map_compose_and_apply():
    f = LinearMap(["a", "b"], ["p", "q", "r"],
                  [vec(c0=1, c2=1), vec(c1=1)])
    g = LinearMap(["u"], ["a", "b"], [vec(c0=2, c1=3)])
    fg = f.compose(g)
    assert fg.domain_labels == ["u"]
    assert fg.codomain_labels == ["p", "q", "r"]
    assert fg.columns[0] == {0: s(2), 1: s(3), 2: s(2)}


def test_linear_map_bijectivity():
    good = LinearMap([0, 1], [0, 1], [vec(c1=1), vec(c0=2)])
    assert good.is_bijective()
    bad = LinearMap([0, 1], [0, 1], [vec(c0=1), vec(c0=2)])
    assert not bad.is_bijective()
    assert bad.rank() == 1
    kernel = bad.kernel()
    assert len(kernel) == 1


def test_vec_add_scaled_drops_zeros():
    out = vec_add_scaled(vec(c0=1), vec(c0=1), s(-1))
    assert out == {}
