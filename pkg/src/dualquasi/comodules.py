"""Comodules and right dual quasi-Hopf bicomodules over a dual quasi-bialgebra.

Index conventions on a d-dimensional space M over an n-dimensional H:

* left coaction  ``rho_l``  (n·d × d):  ρ(e_j) lives in H⊗M, row a·d+i,
* right coaction ``rho_r``  (d·n × d):  ρ(e_j) lives in M⊗H, row i·n+a,
* right action   ``act``    (d × d·n):  e_i·e_a is column i·n+a.

A Hopf bicomodule is an H-bicomodule with a right action that is bicolinear
for the codiagonal structures and associative up to the reassociator twist:

    (m·h)·k = ω⁻¹(m₋₁⊗h₁⊗k₁) m₀·(h₂k₂) ω(m₁⊗h₃⊗k₃).

The free construction T tensors a bicomodule with H on the right; inducing
from a left comodule first installs the trivial right coaction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .dqb import DualQuasiBialgebra, _add
from .errors import DimensionMismatch, InvariantViolation
from .linalg import Matrix, kernel, rank, solve_affine
from .report import Check, Report, format_terms, terms_equal
from .scalars import Scalar


@dataclass(frozen=True)
class LeftComodule:
    """A left H-comodule: coassociative, counital left coaction."""

    dim: int
    rho_l: Matrix

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionMismatch("comodule dimension must be at least 1")
        if self.rho_l.cols != self.dim or self.rho_l.rows % self.dim:
            raise DimensionMismatch(
                f"left coaction must be (n*{self.dim})x{self.dim}, "
                f"got {self.rho_l.rows}x{self.rho_l.cols}")

    @property
    def hopf_dim(self) -> int:
        return self.rho_l.rows // self.dim


@dataclass(frozen=True)
class Bicomodule:
    """An H-bicomodule (object with compatible left and right coactions)."""

    dim: int
    rho_l: Matrix
    rho_r: Matrix

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionMismatch("bicomodule dimension must be at least 1")
        d = self.dim
        if self.rho_l.cols != d or self.rho_l.rows % d:
            raise DimensionMismatch("left coaction shape is inconsistent")
        if self.rho_r.cols != d or self.rho_r.rows % d:
            raise DimensionMismatch("right coaction shape is inconsistent")
        if self.rho_l.rows != self.rho_r.rows:
            raise DimensionMismatch("coactions disagree on the dimension of H")

    @property
    def hopf_dim(self) -> int:
        return self.rho_l.rows // self.dim


@dataclass(frozen=True)
class HopfBicomodule:
    """A right dual quasi-Hopf H-bicomodule: bicomodule plus right action."""

    dim: int
    rho_l: Matrix
    rho_r: Matrix
    act: Matrix

    def __post_init__(self):
        d = self.dim
        Bicomodule(d, self.rho_l, self.rho_r)  # reuse the shape checks
        n = self.rho_l.rows // d
        if (self.act.rows, self.act.cols) != (d, d * n):
            raise DimensionMismatch(
                f"action must be {d}x{d * n}, got {self.act.rows}x{self.act.cols}")

    @property
    def hopf_dim(self) -> int:
        return self.rho_l.rows // self.dim

    def bicomodule(self) -> Bicomodule:
        return Bicomodule(self.dim, self.rho_l, self.rho_r)


@dataclass(frozen=True)
class Subspace:
    """A subspace of a coordinate space, by an explicit independent basis."""

    ambient: int
    basis: Matrix  # ambient x rank, columns are the basis vectors

    @property
    def rank(self) -> int:
        return self.basis.cols

    def coordinates(self, vector: Sequence[Scalar]) -> tuple[Scalar, ...] | None:
        """Coordinates of a vector in this basis, or None if it lies outside."""
        sol = solve_affine(self.basis, list(vector))
        return None if sol is None else sol.particular


# -- sparse structure-constant views ------------------------------------------


def _left_terms(rho_l: Matrix, d: int):
    """Per basis j: terms (a, i, c) with ρ(e_j) = Σ c·(e_a ⊗ e_i)."""
    return tuple(tuple((row // d, row % d, v) for row, v in rho_l.column_terms(j))
                 for j in range(d))


def _right_terms(rho_r: Matrix, d: int, n: int):
    """Per basis j: terms (i, a, c) with ρ(e_j) = Σ c·(e_i ⊗ e_a)."""
    return tuple(tuple((row // n, row % n, v) for row, v in rho_r.column_terms(j))
                 for j in range(d))


def _act_terms(act: Matrix, d: int, n: int):
    """Per (i, a): terms (j, c) with e_i·e_a = Σ c·e_j."""
    return tuple(tuple(act.column_terms(c)) for c in range(d * n))


def _sweedler(H: DualQuasiBialgebra, lterms, rterms, j: int, nleft: int, nright: int):
    """Iterated bicoaction of basis vector j.

    Yields (left_tuple, mid, right_tuple, coeff) for
    m₋ₗ⊗…⊗m₋₁ ⊗ m₀ ⊗ m₁⊗…⊗m_r; well-defined on valid bicomodules."""
    if nleft == 0:
        mids = [((), j, H.field.one)]
    else:
        mids = []
        for a, j2, c in lterms[j]:
            for tup, c2 in H.delta_power(a, nleft):
                mids.append((tup, j2, c * c2))
    out = []
    for ltup, j2, c in mids:
        if nright == 0:
            out.append((ltup, j2, (), c))
            continue
        for j3, b, c2 in rterms[j2]:
            for tupr, c3 in H.delta_power(b, nright):
                out.append((ltup, j3, tupr, c * c2 * c3))
    return out


def _fail(name, witness, lhs, rhs) -> Check:
    return Check(name, False, witness, format_terms(lhs), format_terms(rhs))


def _dimension_check(H: DualQuasiBialgebra, obj) -> Check | None:
    if obj.hopf_dim != H.dim:
        return Check("dimensions", False, None,
                     f"coactions over H of dimension {obj.hopf_dim}",
                     f"H has dimension {H.dim}")
    if obj.rho_l.field != H.field:
        return Check("dimensions", False, None,
                     f"structure over {obj.rho_l.field!r}", f"H over {H.field!r}")
    return None


# -- validation -----------------------------------------------------------------


def _left_coaction_checks(H: DualQuasiBialgebra, d: int, lt) -> list[Check]:
    one = H.field.one
    checks = []
    failed = None
    for j in range(d):
        lhs: dict = {}
        rhs: dict = {}
        for a, i, c in lt[j]:
            for a1, a2, c2 in H.delta_terms(a):
                _add(lhs, (a1, a2, i), c * c2)
            for b, i2, c2 in lt[i]:
                _add(rhs, (a, b, i2), c * c2)
        if not terms_equal(lhs, rhs):
            failed = _fail("left-coassociativity", (j,), lhs, rhs)
            break
    checks.append(failed or Check("left-coassociativity", True))
    failed = None
    for j in range(d):
        acc: dict = {}
        for a, i, c in lt[j]:
            _add(acc, (i,), c * H.eps(a))
        if not terms_equal(acc, {(j,): one}):
            failed = _fail("left-counit", (j,), acc, {(j,): one})
            break
    checks.append(failed or Check("left-counit", True))
    return checks


def validate_left_comodule(H: DualQuasiBialgebra, V: LeftComodule) -> Report:
    """Coassociativity and counitality of a left coaction, on every basis vector."""
    bad = _dimension_check(H, V)
    if bad:
        return Report((bad,))
    return Report(tuple(_left_coaction_checks(H, V.dim, _left_terms(V.rho_l, V.dim))))


def _coaction_checks(H: DualQuasiBialgebra, d: int, lt, rt) -> list[Check]:
    one = H.field.one
    checks = _left_coaction_checks(H, d, lt)

    failed = None
    for j in range(d):
        lhs = {}
        rhs = {}
        for i, a, c in rt[j]:
            for a1, a2, c2 in H.delta_terms(a):
                _add(lhs, (i, a1, a2), c * c2)
            for i2, b, c2 in rt[i]:
                _add(rhs, (i2, b, a), c * c2)
        if not terms_equal(lhs, rhs):
            failed = _fail("right-coassociativity", (j,), lhs, rhs)
            break
    checks.append(failed or Check("right-coassociativity", True))

    failed = None
    for j in range(d):
        acc = {}
        for i, a, c in rt[j]:
            _add(acc, (i,), c * H.eps(a))
        if not terms_equal(acc, {(j,): one}):
            failed = _fail("right-counit", (j,), acc, {(j,): one})
            break
    checks.append(failed or Check("right-counit", True))

    # (H⊗ρ^r)ρ^l = (ρ^l⊗H)ρ^r : M → H⊗M⊗H
    failed = None
    for j in range(d):
        lhs = {}
        rhs = {}
        for a, i, c in lt[j]:
            for i2, b, c2 in rt[i]:
                _add(lhs, (a, i2, b), c * c2)
        for i, b, c in rt[j]:
            for a, i2, c2 in lt[i]:
                _add(rhs, (a, i2, b), c * c2)
        if not terms_equal(lhs, rhs):
            failed = _fail("bicomodule-compatibility", (j,), lhs, rhs)
            break
    checks.append(failed or Check("bicomodule-compatibility", True))
    return checks


def validate_bicomodule(H: DualQuasiBialgebra, M: HopfBicomodule) -> Report:
    """Every defining identity of a right dual quasi-Hopf H-bicomodule.

    Order: dimensions, both coaction axioms, bicomodule compatibility, action
    unit, left/right colinearity of the action, twisted associativity.
    """
    bad = _dimension_check(H, M)
    if bad:
        return Report((bad,))
    d, n = M.dim, H.dim
    lt = _left_terms(M.rho_l, d)
    rt = _right_terms(M.rho_r, d, n)
    at = _act_terms(M.act, d, n)
    checks = _coaction_checks(H, d, lt, rt)
    one = H.field.one

    failed = None
    for j in range(d):
        acc: dict = {}
        for u, cu in H.unit_terms():
            for j2, c in at[j * n + u]:
                _add(acc, (j2,), cu * c)
        if not terms_equal(acc, {(j,): one}):
            failed = _fail("action-unit", (j,), acc, {(j,): one})
            break
    checks.append(failed or Check("action-unit", True))

    # ρ^l(m·h) = m₋₁h₁ ⊗ m₀·h₂
    failed = None
    for j in range(d):
        for a in range(n):
            lhs: dict = {}
            rhs: dict = {}
            for j2, c in at[j * n + a]:
                for x, i, c2 in lt[j2]:
                    _add(lhs, (x, i), c * c2)
            for x, i, c in lt[j]:
                for a1, a2, c2 in H.delta_terms(a):
                    for y, c3 in H.mul_terms(x, a1):
                        for i2, c4 in at[i * n + a2]:
                            _add(rhs, (y, i2), c * c2 * c3 * c4)
            if not terms_equal(lhs, rhs):
                failed = _fail("action-left-colinear", (j, a), lhs, rhs)
                break
        if failed:
            break
    checks.append(failed or Check("action-left-colinear", True))

    # ρ^r(m·h) = m₀·h₁ ⊗ m₁h₂
    failed = None
    for j in range(d):
        for a in range(n):
            lhs = {}
            rhs = {}
            for j2, c in at[j * n + a]:
                for i, b, c2 in rt[j2]:
                    _add(lhs, (i, b), c * c2)
            for i, b, c in rt[j]:
                for a1, a2, c2 in H.delta_terms(a):
                    for i2, c3 in at[i * n + a1]:
                        for y, c4 in H.mul_terms(b, a2):
                            _add(rhs, (i2, y), c * c2 * c3 * c4)
            if not terms_equal(lhs, rhs):
                failed = _fail("action-right-colinear", (j, a), lhs, rhs)
                break
        if failed:
            break
    checks.append(failed or Check("action-right-colinear", True))

    # (m·h)·k = ω⁻¹(m₋₁⊗h₁⊗k₁) m₀·(h₂k₂) ω(m₁⊗h₃⊗k₃)
    failed = None
    sweedlers = [_sweedler(H, lt, rt, j, 1, 1) for j in range(d)]
    for j in range(d):
        for a in range(n):
            for b in range(n):
                lhs = {}
                rhs = {}
                for j2, c in at[j * n + a]:
                    for j3, c2 in at[j2 * n + b]:
                        _add(lhs, (j3,), c * c2)
                for ltup, j2, rtup, c in sweedlers[j]:
                    x, y = ltup[0], rtup[0]
                    for atup, ca in H.delta_power(a, 3):
                        for btup, cb in H.delta_power(b, 3):
                            w = H.omega_inv_at(x, atup[0], btup[0])
                            if not w:
                                continue
                            w2 = H.omega_at(y, atup[2], btup[2])
                            if not w2:
                                continue
                            coeff = c * ca * cb * w * w2
                            for t, cm in H.mul_terms(atup[1], btup[1]):
                                for j3, c3 in at[j2 * n + t]:
                                    _add(rhs, (j3,), coeff * cm * c3)
                if not terms_equal(lhs, rhs):
                    failed = _fail("action-quasi-associativity", (j, a, b), lhs, rhs)
                    break
            if failed:
                break
        if failed:
            break
    checks.append(failed or Check("action-quasi-associativity", True))
    return Report(tuple(checks))


# -- constructions --------------------------------------------------------------


def _require_valid_coactions(H: DualQuasiBialgebra, M: Bicomodule) -> None:
    bad = _dimension_check(H, M)
    if bad is not None:
        raise DimensionMismatch(bad.lhs or "inconsistent dimensions")
    rep = Report(tuple(_coaction_checks(
        H, M.dim, _left_terms(M.rho_l, M.dim), _right_terms(M.rho_r, M.dim, H.dim))))
    if not rep.ok:
        raise InvariantViolation(f"input coactions invalid: {rep.failures[0].axiom}")


def free_hopf_bicomodule(H: DualQuasiBialgebra, M: Bicomodule) -> HopfBicomodule:
    """Tensor a bicomodule with H on the right: the free Hopf bicomodule T(M).

    Structure on M⊗H (basis (i, a) ↦ i·n+a):

        ρ^l(m⊗h) = m₋₁h₁ ⊗ (m₀⊗h₂)
        ρ^r(m⊗h) = (m₀⊗h₁) ⊗ m₁h₂
        (m⊗h)·l = ω⁻¹(m₋₁⊗h₁⊗l₁) m₀⊗h₂l₂ ω(m₁⊗h₃⊗l₃)
    """
    _require_valid_coactions(H, M)
    d, n = M.dim, H.dim
    D = d * n
    zero = H.field.zero
    lt = _left_terms(M.rho_l, d)
    rt = _right_terms(M.rho_r, d, n)

    rho_l = [zero] * (n * D * D)
    rho_r = [zero] * (D * n * D)
    act = [zero] * (D * D * n)
    for i in range(d):
        for a in range(n):
            col = i * n + a
            for x, j, c1 in lt[i]:
                for (a1, a2), c2 in H.delta_power(a, 2):
                    for y, c3 in H.mul_terms(x, a1):
                        row = y * D + (j * n + a2)
                        rho_l[row * D + col] = rho_l[row * D + col] + c1 * c2 * c3
            for j, b, c1 in rt[i]:
                for (a1, a2), c2 in H.delta_power(a, 2):
                    for y, c3 in H.mul_terms(b, a2):
                        row = (j * n + a1) * n + y
                        rho_r[row * D + col] = rho_r[row * D + col] + c1 * c2 * c3
    sweedlers = [_sweedler(H, lt, rt, i, 1, 1) for i in range(d)]
    for i in range(d):
        for a in range(n):
            for l in range(n):
                col = (i * n + a) * n + l
                for ltup, j, rtup, c in sweedlers[i]:
                    x, y = ltup[0], rtup[0]
                    for atup, ca in H.delta_power(a, 3):
                        for ltup2, cl in H.delta_power(l, 3):
                            w = H.omega_inv_at(x, atup[0], ltup2[0])
                            if not w:
                                continue
                            w2 = H.omega_at(y, atup[2], ltup2[2])
                            if not w2:
                                continue
                            coeff = c * ca * cl * w * w2
                            for t, cm in H.mul_terms(atup[1], ltup2[1]):
                                row = j * n + t
                                act[row * D * n + col] = act[row * D * n + col] + coeff * cm
    return HopfBicomodule(
        D,
        Matrix(H.field, n * D, D, rho_l),
        Matrix(H.field, D * n, D, rho_r),
        Matrix(H.field, D, D * n, act),
    )


def trivial_right_coaction(H: DualQuasiBialgebra, dim: int) -> Matrix:
    """The coaction v ↦ v⊗1_H as a (dim·n)×dim matrix."""
    n = H.dim
    zero = H.field.zero
    entries = [zero] * (dim * n * dim)
    for i in range(dim):
        for u, cu in H.unit_terms():
            entries[(i * n + u) * dim + i] = cu
    return Matrix(H.field, dim * n, dim, entries)


def trivial_left_coaction(H: DualQuasiBialgebra, dim: int) -> Matrix:
    """The coaction v ↦ 1_H⊗v as an (n·dim)×dim matrix."""
    n = H.dim
    zero = H.field.zero
    entries = [zero] * (n * dim * dim)
    for i in range(dim):
        for u, cu in H.unit_terms():
            entries[(u * dim + i) * dim + i] = cu
    return Matrix(H.field, n * dim, dim, entries)


def induce_bicomodule(H: DualQuasiBialgebra, V: LeftComodule) -> HopfBicomodule:
    """Induce a Hopf bicomodule from a left comodule: V⊗H with

        ρ^l(v⊗h) = v₋₁h₁ ⊗ (v₀⊗h₂),  ρ^r(v⊗h) = (v⊗h₁) ⊗ h₂,
        (v⊗h)·l = ω⁻¹(v₋₁⊗h₁⊗l₁) v₀⊗h₂l₂.

    Implemented as the free construction on V with trivial right coaction.
    """
    rep = validate_left_comodule(H, V)
    if not rep.ok:
        raise InvariantViolation(f"input comodule invalid: {rep.failures[0].axiom}")
    base = Bicomodule(V.dim, V.rho_l, trivial_right_coaction(H, V.dim))
    return free_hopf_bicomodule(H, base)


def regular_bicomodule(H: DualQuasiBialgebra) -> Bicomodule:
    """H over itself, both coactions given by the comultiplication."""
    return Bicomodule(H.dim, H.delta, H.delta)


def hhat(H: DualQuasiBialgebra) -> HopfBicomodule:
    """The free Hopf bicomodule on H with trivial left coaction and
    comultiplication right coaction; underlying space H⊗H with

        ρ^r(h⊗k) = (h₁⊗k₁) ⊗ h₂k₂,  ρ^l(h⊗k) = k₁ ⊗ (h⊗k₂),
        (h⊗k)·l = h₁ ⊗ k₁l₁ ω(h₂⊗k₂⊗l₂).
    """
    base = Bicomodule(H.dim, trivial_left_coaction(H, H.dim), H.delta)
    return free_hopf_bicomodule(H, base)


# -- coinvariants and the adjunction maps ---------------------------------------


def coinvariants(H: DualQuasiBialgebra, M: HopfBicomodule | Bicomodule) -> Subspace:
    """The subspace {m : ρ^r(m) = m⊗1_H}, via an exact kernel computation."""
    A = M.rho_r - trivial_right_coaction(H, M.dim)
    basis_vectors = kernel(A)
    d = M.dim
    entries = [H.field.zero] * (d * len(basis_vectors))
    for col, vec in enumerate(basis_vectors):
        for i, v in enumerate(vec):
            entries[i * len(basis_vectors) + col] = v
    return Subspace(d, Matrix(H.field, d, len(basis_vectors), entries))


def coinvariant_comodule(H: DualQuasiBialgebra, M: HopfBicomodule | Bicomodule,
                         coinv: Subspace | None = None) -> LeftComodule:
    """The coinvariants as a left comodule, in coinvariant coordinates.

    Raises InvariantViolation when the left coaction fails to restrict."""
    if coinv is None:
        coinv = coinvariants(H, M)
    d, n, r = M.dim, H.dim, coinv.rank
    if r == 0:
        raise ValueError("the coinvariants are zero; there is no comodule to build")
    lt = _left_terms(M.rho_l, d)
    zero = H.field.zero
    entries = [zero] * (n * r * r)
    for col in range(r):
        image = [zero] * (n * d)
        for i, v in coinv.basis.column_terms(col):
            for a, i2, c in lt[i]:
                image[a * d + i2] = image[a * d + i2] + v * c
        for a in range(n):
            coords = coinv.coordinates(image[a * d:(a + 1) * d])
            if coords is None:
                raise InvariantViolation(
                    "left coaction does not restrict to the coinvariants")
            for beta, v in enumerate(coords):
                if v:
                    entries[(a * r + beta) * r + col] = v
    return LeftComodule(r, Matrix(H.field, n * r, r, entries))


def adjunction_counit(H: DualQuasiBialgebra, M: HopfBicomodule,
                      coinv: Subspace | None = None) -> Matrix:
    """The evaluation map M^coH⊗H → M, x⊗h ↦ x·h, on coinvariant coordinates.

    Verifies that the map intertwines both coactions and the action (it is a
    morphism of Hopf bicomodules); violations raise InvariantViolation.
    """
    if coinv is None:
        coinv = coinvariants(H, M)
    d, n, r = M.dim, H.dim, coinv.rank
    at = _act_terms(M.act, d, n)
    zero = H.field.zero
    entries = [zero] * (d * r * n)
    for alpha in range(r):
        col_terms = coinv.basis.column_terms(alpha)
        for a in range(n):
            col = alpha * n + a
            for i, v in col_terms:
                for j, c in at[i * n + a]:
                    entries[j * (r * n) + col] = entries[j * (r * n) + col] + v * c
    eps = Matrix(H.field, d, r * n, entries)
    if r:
        source = induce_bicomodule(H, coinvariant_comodule(H, M, coinv))
        ident = Matrix.identity(H.field, n)
        if M.rho_l @ eps != ident.kron(eps) @ source.rho_l:
            raise InvariantViolation("evaluation map is not left colinear")
        if M.rho_r @ eps != eps.kron(ident) @ source.rho_r:
            raise InvariantViolation("evaluation map is not right colinear")
        if eps @ source.act != M.act @ eps.kron(ident):
            raise InvariantViolation("evaluation map is not right linear")
    return eps


def adjunction_unit(H: DualQuasiBialgebra, V: LeftComodule) -> Matrix:
    """The map V → (V⊗H)^coH, v ↦ v⊗1_H, in coinvariant coordinates.

    Always bijective; a rank defect raises InvariantViolation."""
    FV = induce_bicomodule(H, V)
    coinv = coinvariants(H, FV)
    d, n = V.dim, H.dim
    zero = H.field.zero
    columns = []
    for i in range(d):
        vec = [zero] * (d * n)
        for u, cu in H.unit_terms():
            vec[i * n + u] = cu
        coords = coinv.coordinates(vec)
        if coords is None:
            raise InvariantViolation("v⊗1 is not coinvariant; upstream data is corrupt")
        columns.append(coords)
    r = coinv.rank
    entries = [zero] * (r * d)
    for col, coords in enumerate(columns):
        for beta, v in enumerate(coords):
            entries[beta * d + col] = v
    eta = Matrix(H.field, r, d, entries)
    if r != d or rank(eta) != d:
        raise InvariantViolation(
            f"unit of the adjunction is not bijective (rank {rank(eta)}, dim {d})")
    return eta
