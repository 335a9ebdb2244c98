"""Commutation factors: bicharacters G x G -> k\\{0} on a grading group.

A factor is generated from an integer symmetric matrix `sigma`, an integer
antisymmetric matrix `omega` and a nonzero scalar `q` via the generator
values b(xi_i, xi_j) = (-1)^sigma_ij * q^omega_ij, extended to all of
G x G bimultiplicatively.  These are exactly the coquasitriangular
structures on the group algebra kG for abelian G.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import GroupMismatchError
from .groups import GradingGroup, GroupElement
from .group_hopf import GroupAlgebraElement
from .reports import CheckReport, CheckResult
from .scalars import Scalar


class CommutationFactor:
    """Bicharacter on a grading group, determined by (sigma, omega, q).

    Construction validates symmetry of sigma, antisymmetry of omega,
    q != 0, and for torsion groups the well-definedness condition
    b(xi_i, xi_j)^{n_i} = 1 on every generator pair touching a torsion
    coordinate.  Values are cached; instances are immutable.
    """

    def __init__(self, group: GradingGroup, sigma, omega, q: Scalar):
        n = group.ngens
        sigma = tuple(tuple(int(x) % 2 for x in row) for row in sigma)
        omega = tuple(tuple(int(x) for x in row) for row in omega)
        if len(sigma) != n or any(len(r) != n for r in sigma):
            raise ValueError(f"sigma must be {n}x{n}")
        if len(omega) != n or any(len(r) != n for r in omega):
            raise ValueError(f"omega must be {n}x{n}")
        for i in range(n):
            for j in range(n):
                if sigma[i][j] != sigma[j][i]:
                    raise ValueError(f"sigma must be symmetric, differs at ({i},{j})")
                if omega[i][j] != -omega[j][i]:
                    raise ValueError(f"omega must be antisymmetric, differs at ({i},{j})")
        if not isinstance(q, Scalar):
            q = Scalar.from_rational(q)
        if q.is_zero():
            raise ValueError("q must be nonzero")
        self.group = group
        self.sigma = sigma
        self.omega = omega
        self.q = q
        minus_one = Scalar.from_rational(-1)
        self._gen = [[(minus_one ** sigma[i][j]) * (q ** omega[i][j])
                      for j in range(n)] for i in range(n)]
        self._cache: dict[tuple, Scalar] = {}
        self._check_torsion_descent()

    def _check_torsion_descent(self):
        r = self.group.free_rank
        for t, n_i in enumerate(self.group.torsion):
            i = r + t
            for j in range(self.group.ngens):
                if not (self._gen[i][j] ** n_i).is_one():
                    raise ValueError(
                        f"factor is not well-defined on torsion coordinate {i} "
                        f"(modulus {n_i}): b(gen {i}, gen {j})^{n_i} != 1")

    def generator_value(self, i: int, j: int) -> Scalar:
        """b on the (i, j) generator pair."""
        return self._gen[i][j]

    def __call__(self, g: GroupElement, h: GroupElement) -> Scalar:
        return self.evaluate(g, h)

    def evaluate(self, g: GroupElement, h: GroupElement) -> Scalar:
        """b(g, h), the bimultiplicative extension of the generator values."""
        if g.group != self.group or h.group != self.group:
            raise GroupMismatchError("elements do not belong to the factor's group")
        key = (g.coords, h.coords)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        value = Scalar.one()
        for i, gi in enumerate(g.coords):
            if gi:
                for j, hj in enumerate(h.coords):
                    if hj:
                        value = value * (self._gen[i][j] ** (gi * hj))
        self._cache[key] = value
        return value

    def inverse(self) -> "CommutationFactor":
        """The convolution inverse g,h -> b(g,h)^{-1}; again a factor."""
        neg_omega = tuple(tuple(-x for x in row) for row in self.omega)
        return CommutationFactor(self.group, self.sigma, neg_omega, self.q)

    def __repr__(self):
        return (f"CommutationFactor(group={self.group}, sigma={self.sigma}, "
                f"omega={self.omega}, q={self.q})")


def standard_factor(group: GradingGroup, sigma, omega, q) -> CommutationFactor:
    """Factor with generator values (-1)^sigma_ij * q^omega_ij."""
    return CommutationFactor(group, sigma, omega, q)


def trivial_factor(group: GradingGroup) -> CommutationFactor:
    n = group.ngens
    zero = [[0] * n for _ in range(n)]
    return CommutationFactor(group, zero, zero, Scalar.one())


def convolution_inverse(b: CommutationFactor) -> CommutationFactor:
    return b.inverse()


def check_cqt_axioms(b: CommutationFactor,
                     triples: Iterable[tuple] | None = None,
                     pairing: Callable[[GroupElement, GroupElement], Scalar] | None = None,
                     ) -> CheckReport:
    """Verify the coquasitriangularity laws of a factor on element triples.

    The commutation identity compares b(h,k)*(kh) with (hk)*b(h,k) inside
    kG; on group-likes it reduces to commutativity of the grading group,
    which the report records.  The two bimultiplicativity laws run over
    the triples; the binary laws (commutation identity, pointwise
    convolution invertibility) run over the pair projections.  `pairing`
    overrides the evaluation map (for negative fixtures).
    """
    ev = pairing or b.evaluate
    if triples is None:
        group = b.group
        if group.is_finite and group.order <= 64:
            els = group.elements()
        else:
            pool = [group.identity()] + group.generators()
            pool += [-g for g in group.generators()]
            pool += [g + g for g in group.generators()]
            seen, els = set(), []
            for g in pool:
                if g.coords not in seen:
                    seen.add(g.coords)
                    els.append(g)

        def triple_iter():
            return itertools.product(els, els, els)

        def pair_iter():
            return itertools.product(els, els)
    else:
        tlist = list(triples)

        def triple_iter():
            return iter(tlist)

        def pair_iter():
            seen = set()
            for h, k, _l in tlist:
                if (h.coords, k.coords) not in seen:
                    seen.add((h.coords, k.coords))
                    yield h, k

    report = CheckReport()

    witness = None
    for h, k in pair_iter():
        c = ev(h, k)
        lhs = GroupAlgebraElement.group_like(k + h).scale(c)
        rhs = GroupAlgebraElement.group_like(h + k).scale(c)
        if lhs != rhs:
            witness = f"({h}, {k})"
            break
    report.results.append(CheckResult(
        "cqt.commutation-identity", witness is None, witness=witness,
        note="on group-likes this reduces to commutativity of the grading group"))

    witness = None
    for h, k, l in triple_iter():
        if ev(h, k + l) != ev(h, k) * ev(h, l):
            witness = f"({h}, {k}, {l})"
            break
    report.results.append(CheckResult(
        "cqt.bimultiplicative-right", witness is None, witness=witness,
        note="b(h, k+l) = b(h,k) b(h,l)"))

    witness = None
    for h, k, l in triple_iter():
        if ev(h + k, l) != ev(h, l) * ev(k, l):
            witness = f"({h}, {k}, {l})"
            break
    report.results.append(CheckResult(
        "cqt.bimultiplicative-left", witness is None, witness=witness,
        note="b(h+k, l) = b(h,l) b(k,l)"))

    witness = None
    for h, k in pair_iter():
        if ev(h, k).is_zero():
            witness = f"({h}, {k})"
            break
    report.results.append(CheckResult(
        "cqt.convolution-invertible", witness is None, witness=witness,
        note="all values nonzero; q restricted to exact cyclotomic scalars"))
    return report


@dataclass
class DescentResult:
    """Outcome of the reduction of a factor on Z^N to Z_n^N."""

    descends: bool
    modulus: int
    witness: tuple[int, int] | None = None
    induced: CommutationFactor | None = None


def check_quotient_descent(b: CommutationFactor, n: int) -> DescentResult:
    """Decide whether b on Z^N induces a factor on Z_n^N.

    The condition is b(xi_i, xi_j)^n = 1 for every generator pair; on
    success the induced factor on Z_n^N is returned.
    """
    if b.group.torsion or b.group.free_rank == 0:
        raise ValueError("descent applies to factors on free groups Z^N")
    if n < 2:
        raise ValueError("reduction modulus must be >= 2")
    N = b.group.free_rank
    for i in range(N):
        for j in range(N):
            if not (b.generator_value(i, j) ** n).is_one():
                return DescentResult(False, n, witness=(i, j))
    target = GradingGroup(0, (n,) * N)
    induced = CommutationFactor(target, b.sigma, b.omega, b.q)
    return DescentResult(True, n, induced=induced)


@dataclass
class GeneratorStatistics:
    index: int
    self_value: Scalar
    label: str


@dataclass
class PairStatistics:
    i: int
    j: int
    value_ij: Scalar
    value_ji: Scalar
    mutual_phase: Scalar
    label: str


@dataclass
class StatisticsTable:
    generators: list[GeneratorStatistics]
    pairs: list[PairStatistics]


def _statistics_label(value: Scalar) -> str:
    if value.is_one():
        return "bosonic"
    if (value + Scalar.one()).is_zero():
        return "fermionic"
    return "anyonic(q-statistics)"


def classify_statistics(b: CommutationFactor) -> StatisticsTable:
    """Per-generator exchange statistics and pairwise mutual phases."""
    n = b.group.ngens
    gens = [GeneratorStatistics(i, b.generator_value(i, i),
                                _statistics_label(b.generator_value(i, i)))
            for i in range(n)]
    pairs = []
    for i in range(n):
        for j in range(i + 1, n):
            vij = b.generator_value(i, j)
            vji = b.generator_value(j, i)
            pairs.append(PairStatistics(i, j, vij, vji, vij * vji,
                                        _statistics_label(vij)))
    return StatisticsTable(gens, pairs)
