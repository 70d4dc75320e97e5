"""Dual quasi-bialgebras by structure constants, convolution, and the axiom suite.

A dual quasi-bialgebra is a coassociative coalgebra (H, Δ, ε) together with
coalgebra maps m (multiplication) and u (unit) and a convolution-invertible
functional ω on H⊗H⊗H (the reassociator) such that m is associative and
unital only up to conjugation by ω.  Everything here is checked exactly by
expanding both sides of each identity on basis tuples; linearity makes that
complete.
"""

from __future__ import annotations

from .errors import DimensionMismatch, InvariantViolation
from .linalg import Matrix, tensor_index, tensor_unindex
from .report import Check, Report, format_terms, terms_equal
from .scalars import Field, Scalar


def _expect_shape(name: str, m: Matrix, rows: int, cols: int, field: Field) -> None:
    if (m.rows, m.cols) != (rows, cols):
        raise DimensionMismatch(
            f"{name} must be {rows}x{cols}, got {m.rows}x{m.cols}")
    if m.field != field:
        raise DimensionMismatch(f"{name} lives over {m.field!r}, expected {field!r}")


class DualQuasiBialgebra:
    """Structure constants of a finite-dimensional dual quasi-bialgebra.

    On the fixed basis e_0 … e_{n-1}:

    * ``delta``  (n²×n):  column i holds Δ(e_i) in H⊗H,
    * ``counit`` (1×n):   ε,
    * ``mul``    (n×n²):  column (i·n+j) holds e_i·e_j,
    * ``unit``   (n×1):   the unit element 1_H,
    * ``omega``  (1×n³):  the reassociator ω,
    * ``omega_inv`` (1×n³): its convolution inverse; computed when omitted.

    Instances are immutable after construction and safe to share; whether the
    data actually satisfies the axioms is the business of ``validate_dqb``.
    """

    def __init__(self, field: Field, dim: int,
                 delta: Matrix, counit: Matrix, mul: Matrix, unit: Matrix,
                 omega: Matrix, omega_inv: Matrix | None = None):
        if dim < 1:
            raise DimensionMismatch("dimension must be at least 1")
        n = dim
        _expect_shape("delta", delta, n * n, n, field)
        _expect_shape("counit", counit, 1, n, field)
        _expect_shape("mul", mul, n, n * n, field)
        _expect_shape("unit", unit, n, 1, field)
        _expect_shape("omega", omega, 1, n ** 3, field)
        self.field = field
        self.dim = dim
        self.delta = delta
        self.counit = counit
        self.mul = mul
        self.unit = unit
        self.omega = omega
        self._delta_terms = tuple(
            tuple((row // n, row % n, v) for row, v in delta.column_terms(i))
            for i in range(n))
        self._mul_table = tuple(tuple(mul.column_terms(c)) for c in range(n * n))
        self._unit_terms = tuple(unit.column_terms(0))
        self._delta_powers: dict[tuple[int, int], tuple] = {}
        self._counit_powers: dict[int, Matrix] = {}
        if omega_inv is None:
            omega_inv = convolution_inverse(self, omega, arity=3)
            if omega_inv is None:
                raise InvariantViolation("reassociator is not convolution invertible")
        else:
            _expect_shape("omega_inv", omega_inv, 1, n ** 3, field)
        self.omega_inv = omega_inv

    # -- structure-constant access -------------------------------------------

    def delta_terms(self, i: int):
        """Sweedler terms (j, k, c) of Δ(e_i) = Σ c·e_j⊗e_k."""
        return self._delta_terms[i]

    def delta_power(self, i: int, k: int):
        """Terms (index_tuple, c) of the k-fold comultiplication of e_i, k ≥ 1.

        Expanded by repeatedly splitting the rightmost factor; on coassociative
        data any other expansion order gives the same result.
        """
        key = (i, k)
        cached = self._delta_powers.get(key)
        if cached is not None:
            return cached
        if k == 1:
            result = (((i,), self.field.one),)
        else:
            result = []
            for tup, c in self.delta_power(i, k - 1):
                for a, b, c2 in self._delta_terms[tup[-1]]:
                    result.append((tup[:-1] + (a, b), c * c2))
            result = tuple(result)
        self._delta_powers[key] = result
        return result

    def mul_terms(self, a: int, b: int):
        """Terms (c, coeff) of the product e_a·e_b."""
        return self._mul_table[a * self.dim + b]

    def unit_terms(self):
        return self._unit_terms

    def eps(self, i: int) -> Scalar:
        return self.counit.entries[i]

    def omega_at(self, i: int, j: int, k: int) -> Scalar:
        n = self.dim
        return self.omega.entries[(i * n + j) * n + k]

    def omega_inv_at(self, i: int, j: int, k: int) -> Scalar:
        n = self.dim
        return self.omega_inv.entries[(i * n + j) * n + k]

    def counit_power(self, k: int) -> Matrix:
        """The functional ε⊗…⊗ε on the k-th tensor power of H."""
        cached = self._counit_powers.get(k)
        if cached is not None:
            return cached
        n = self.dim
        values = [self.field.one]
        for _ in range(k):
            values = [v * self.eps(i) for v in values for i in range(n)]
        result = Matrix.row_vector(self.field, values)
        self._counit_powers[k] = result
        return result

    def __repr__(self) -> str:
        return f"<DualQuasiBialgebra dim={self.dim} over {self.field!r}>"


# -- convolution algebra of functionals on tensor powers ----------------------


def _functional_arity(H: DualQuasiBialgebra, f: Matrix, arity: int | None) -> int:
    if f.rows != 1:
        raise DimensionMismatch("functionals are row vectors")
    n = H.dim
    if arity is not None:
        if f.cols != n ** arity:
            raise DimensionMismatch(f"functional has {f.cols} columns, expected {n ** arity}")
        return arity
    if n == 1:
        if f.cols != 1:
            raise DimensionMismatch("functional on a 1-dimensional coalgebra must have 1 column")
        return 1
    k, p = 0, 1
    while p < f.cols:
        p *= n
        k += 1
    if p != f.cols:
        raise DimensionMismatch(f"{f.cols} columns is not a tensor power of {n}")
    return k


def _split_terms(H: DualQuasiBialgebra, idx: tuple[int, ...]):
    """Codiagonal comultiplication of a basis vector of H^⊗k.

    Yields (left_tuple, right_tuple, coeff) with Δ applied factorwise."""
    if not idx:
        yield (), (), H.field.one
        return
    for a, b, c in H.delta_terms(idx[0]):
        for ra, rb, rc in _split_terms(H, idx[1:]):
            yield (a,) + ra, (b,) + rb, c * rc


def convolution(H: DualQuasiBialgebra, f: Matrix, g: Matrix,
                arity: int | None = None) -> Matrix:
    """Convolution f∗g of functionals on a common tensor power of H.

    (f∗g)(x) = Σ f(x₍₁₎)·g(x₍₂₎) with the componentwise comultiplication of
    the tensor-power coalgebra; ε⊗…⊗ε is the two-sided unit.
    """
    k = _functional_arity(H, f, arity)
    if _functional_arity(H, g, arity) != k:
        raise DimensionMismatch("convolution factors live on different tensor powers")
    n = H.dim
    zero = H.field.zero
    out = [zero] * (n ** k)
    for flat in range(n ** k):
        idx = tensor_unindex(flat, n, k)
        acc = zero
        for a_tup, b_tup, c in _split_terms(H, idx):
            fv = f.entries[tensor_index(a_tup, n)]
            if not fv:
                continue
            gv = g.entries[tensor_index(b_tup, n)]
            if not gv:
                continue
            acc = acc + fv * gv * c
        out[flat] = acc
    return Matrix.row_vector(H.field, out)


def convolution_inverse(H: DualQuasiBialgebra, f: Matrix,
                        arity: int | None = None) -> Matrix | None:
    """Two-sided convolution inverse of f, or None when it does not exist.

    Solves the linear system f∗g = ε^⊗k exactly, then verifies g∗f = ε^⊗k.
    """
    from .linalg import solve_affine

    k = _functional_arity(H, f, arity)
    n = H.dim
    N = n ** k
    zero = H.field.zero
    rows = [[zero] * N for _ in range(N)]
    for flat in range(N):
        idx = tensor_unindex(flat, n, k)
        row = rows[flat]
        for a_tup, b_tup, c in _split_terms(H, idx):
            fv = f.entries[tensor_index(a_tup, n)]
            if not fv:
                continue
            col = tensor_index(b_tup, n)
            row[col] = row[col] + fv * c
    eps_k = H.counit_power(k)
    sol = solve_affine(Matrix.from_rows(H.field, rows), list(eps_k.entries))
    if sol is None:
        return None
    g = Matrix.row_vector(H.field, list(sol.particular))
    if convolution(H, g, f, arity=k) != eps_k:
        return None
    return g


# -- the axiom suite -----------------------------------------------------------


def _add(d: dict, key, value) -> None:
    d[key] = d.get(key) + value if key in d else value


def _vector_check(name: str, witness, lhs: dict, rhs: dict) -> Check | None:
    if terms_equal(lhs, rhs):
        return None
    return Check(name, False, witness, format_terms(lhs), format_terms(rhs))


def _scalar_check(name: str, witness, lhs: Scalar, rhs: Scalar) -> Check | None:
    if lhs == rhs:
        return None
    return Check(name, False, witness, str(lhs), str(rhs))


def _coassociativity(H) -> Check:
    for i in range(H.dim):
        lhs: dict = {}
        rhs: dict = {}
        for a, b, c in H.delta_terms(i):
            for a1, a2, c2 in H.delta_terms(a):
                _add(lhs, (a1, a2, b), c * c2)
            for b1, b2, c2 in H.delta_terms(b):
                _add(rhs, (a, b1, b2), c * c2)
        bad = _vector_check("coassociativity", (i,), lhs, rhs)
        if bad:
            return bad
    return Check("coassociativity", True)


def _counit_laws(H) -> list[Check]:
    out = []
    for name, side in (("counit-left", 0), ("counit-right", 1)):
        failed = None
        for i in range(H.dim):
            acc: dict = {}
            for a, b, c in H.delta_terms(i):
                if side == 0:
                    _add(acc, (b,), c * H.eps(a))
                else:
                    _add(acc, (a,), c * H.eps(b))
            failed = _vector_check(name, (i,), acc, {(i,): H.field.one})
            if failed:
                break
        out.append(failed or Check(name, True))
    return out


def _mul_comultiplicative(H) -> Check:
    for i in range(H.dim):
        for j in range(H.dim):
            lhs: dict = {}
            rhs: dict = {}
            for t, c in H.mul_terms(i, j):
                for x, y, c2 in H.delta_terms(t):
                    _add(lhs, (x, y), c * c2)
            for a1, a2, ca in H.delta_terms(i):
                for b1, b2, cb in H.delta_terms(j):
                    for x, cx in H.mul_terms(a1, b1):
                        for y, cy in H.mul_terms(a2, b2):
                            _add(rhs, (x, y), ca * cb * cx * cy)
            bad = _vector_check("multiplication-comultiplicative", (i, j), lhs, rhs)
            if bad:
                return bad
    return Check("multiplication-comultiplicative", True)


def _mul_counital(H) -> Check:
    for i in range(H.dim):
        for j in range(H.dim):
            lhs = H.field.zero
            for t, c in H.mul_terms(i, j):
                lhs = lhs + c * H.eps(t)
            bad = _scalar_check("multiplication-counital", (i, j), lhs, H.eps(i) * H.eps(j))
            if bad:
                return bad
    return Check("multiplication-counital", True)


def _unit_comultiplicative(H) -> Check:
    lhs: dict = {}
    rhs: dict = {}
    for u, cu in H.unit_terms():
        for x, y, c in H.delta_terms(u):
            _add(lhs, (x, y), cu * c)
    for u1, c1 in H.unit_terms():
        for u2, c2 in H.unit_terms():
            _add(rhs, (u1, u2), c1 * c2)
    return _vector_check("unit-comultiplicative", None, lhs, rhs) \
        or Check("unit-comultiplicative", True)


def _unit_counital(H) -> Check:
    acc = H.field.zero
    for u, cu in H.unit_terms():
        acc = acc + cu * H.eps(u)
    return _scalar_check("unit-counital", None, acc, H.field.one) \
        or Check("unit-counital", True)


def _reassociator_invertible(H) -> Check:
    eps3 = H.counit_power(3)
    for prod in (convolution(H, H.omega, H.omega_inv, arity=3),
                 convolution(H, H.omega_inv, H.omega, arity=3)):
        if prod != eps3:
            for flat, (a, b) in enumerate(zip(prod.entries, eps3.entries)):
                if a != b:
                    witness = tensor_unindex(flat, H.dim, 3)
                    return Check("reassociator-invertible", False, witness, str(a), str(b))
    return Check("reassociator-invertible", True)


def _cocycle_identity(H) -> Check:
    """ω(H⊗H⊗m) ∗ ω(m⊗H⊗H) = (ε⊗ω) ∗ ω(H⊗m⊗H) ∗ (ω⊗ε) on H⊗4."""
    n = H.dim
    zero = H.field.zero
    N = n ** 4
    w_hh_m = [zero] * N
    w_m_hh = [zero] * N
    eps_w = [zero] * N
    w_h_m_h = [zero] * N
    w_eps = [zero] * N
    for flat in range(N):
        h, k, l, p = tensor_unindex(flat, n, 4)
        acc = zero
        for t, c in H.mul_terms(l, p):
            acc = acc + c * H.omega_at(h, k, t)
        w_hh_m[flat] = acc
        acc = zero
        for t, c in H.mul_terms(h, k):
            acc = acc + c * H.omega_at(t, l, p)
        w_m_hh[flat] = acc
        eps_w[flat] = H.eps(h) * H.omega_at(k, l, p)
        acc = zero
        for t, c in H.mul_terms(k, l):
            acc = acc + c * H.omega_at(h, t, p)
        w_h_m_h[flat] = acc
        w_eps[flat] = H.omega_at(h, k, l) * H.eps(p)
    row = lambda vals: Matrix.row_vector(H.field, vals)
    lhs = convolution(H, row(w_hh_m), row(w_m_hh), arity=4)
    rhs = convolution(H, convolution(H, row(eps_w), row(w_h_m_h), arity=4),
                      row(w_eps), arity=4)
    if lhs != rhs:
        for flat, (a, b) in enumerate(zip(lhs.entries, rhs.entries)):
            if a != b:
                return Check("cocycle-identity", False, tensor_unindex(flat, n, 4),
                             str(a), str(b))
    return Check("cocycle-identity", True)


def _cocycle_normalization(H) -> list[Check]:
    """ω(h⊗k⊗l) = ε(h)ε(k)ε(l) whenever the unit element sits in a slot."""
    names = ("cocycle-normalization-left", "cocycle-normalization-middle",
             "cocycle-normalization-right")
    out = []
    for slot, name in enumerate(names):
        failed = None
        for j in range(H.dim):
            for k in range(H.dim):
                acc = H.field.zero
                for u, cu in H.unit_terms():
                    args = [j, k]
                    args.insert(slot, u)
                    acc = acc + cu * H.omega_at(*args)
                failed = _scalar_check(name, (j, k), acc, H.eps(j) * H.eps(k))
                if failed:
                    break
            if failed:
                break
        out.append(failed or Check(name, True))
    return out


def _quasi_associativity(H) -> Check:
    """h₁(k₁l₁)·ω(h₂⊗k₂⊗l₂) = ω(h₁⊗k₁⊗l₁)·(h₂k₂)l₂ on basis triples."""
    n = H.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs: dict = {}
                rhs: dict = {}
                for a1, a2, ca in H.delta_terms(i):
                    for b1, b2, cb in H.delta_terms(j):
                        for c1, c2, cc in H.delta_terms(k):
                            coeff = ca * cb * cc
                            w = H.omega_at(a2, b2, c2)
                            if w:
                                for t, cm in H.mul_terms(b1, c1):
                                    for t2, cm2 in H.mul_terms(a1, t):
                                        _add(lhs, (t2,), coeff * cm * cm2 * w)
                            w2 = H.omega_at(a1, b1, c1)
                            if w2:
                                for t, cm in H.mul_terms(a2, b2):
                                    for t2, cm2 in H.mul_terms(t, c2):
                                        _add(rhs, (t2,), coeff * w2 * cm * cm2)
                bad = _vector_check("quasi-associativity", (i, j, k), lhs, rhs)
                if bad:
                    return bad
    return Check("quasi-associativity", True)


def _unit_laws(H) -> list[Check]:
    out = []
    for name, left in (("unit-left", True), ("unit-right", False)):
        failed = None
        for i in range(H.dim):
            acc: dict = {}
            for u, cu in H.unit_terms():
                pairs = H.mul_terms(u, i) if left else H.mul_terms(i, u)
                for t, c in pairs:
                    _add(acc, (t,), cu * c)
            failed = _vector_check(name, (i,), acc, {(i,): H.field.one})
            if failed:
                break
        out.append(failed or Check(name, True))
    return out


def validate_dqb(H: DualQuasiBialgebra) -> Report:
    """Exhaustively check every defining identity of a dual quasi-bialgebra.

    Fixed order: coalgebra axioms, coalgebra-map conditions on m and u,
    reassociator invertibility, cocycle identities, quasi-associativity,
    unit laws.  Each failing entry carries the first offending basis tuple
    in lexicographic order and both values.
    """
    checks: list[Check] = [_coassociativity(H)]
    checks.extend(_counit_laws(H))
    checks.append(_mul_comultiplicative(H))
    checks.append(_mul_counital(H))
    checks.append(_unit_comultiplicative(H))
    checks.append(_unit_counital(H))
    checks.append(_reassociator_invertible(H))
    checks.append(_cocycle_identity(H))
    checks.extend(_cocycle_normalization(H))
    checks.append(_quasi_associativity(H))
    checks.extend(_unit_laws(H))
    return Report(tuple(checks))
