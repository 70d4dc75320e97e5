"""Shared builders and independent oracles for the test suite."""

from __future__ import annotations

import random
from fractions import Fraction

from dualquasi import (Bicomodule, DualQuasiBialgebra, Field, LeftComodule,
                       Matrix, inverse)
from dualquasi.groups import (GroupData, cyclic_group_example,
                              idempotent_monoid_bialgebra)

CYCLIC_PARAMS = [(2, 0), (2, 1), (3, 0), (3, 1), (4, 0), (4, 1)]

_example_cache: dict = {}


def bundled_examples():
    """The six cyclic-group examples used throughout the suite."""
    out = []
    for n, r in CYCLIC_PARAMS:
        key = (n, r)
        if key not in _example_cache:
            _example_cache[key] = cyclic_group_example(n, r)
        out.append(_example_cache[key])
    return out


def control_bialgebra() -> DualQuasiBialgebra:
    if "control" not in _example_cache:
        _example_cache["control"] = idempotent_monoid_bialgebra()
    return _example_cache["control"]


def random_conjugator(field: Field, d: int, rng: random.Random) -> Matrix:
    """A small-entry invertible matrix: a product of two transvections."""
    P = Matrix.identity(field, d)
    for _ in range(2):
        if d < 2:
            break
        i, j = rng.sample(range(d), 2)
        lam = field.from_fraction(rng.choice([1, -1, 2]))
        T = Matrix.from_terms(field, d, d,
                              [(k, k, field.one) for k in range(d)] + [(i, j, lam)])
        P = P @ T
    return P


def random_left_comodule(H: DualQuasiBialgebra, group: GroupData,
                         rng: random.Random, max_dim: int = 3) -> LeftComodule:
    """A group-graded comodule in a randomly twisted basis; valid by construction."""
    d = rng.randint(1, max_dim)
    field = H.field
    grades = [rng.randrange(group.order) for _ in range(d)]
    rho = Matrix.from_terms(field, group.order * d, d,
                            [(grades[i] * d + i, i, field.one) for i in range(d)])
    P = random_conjugator(field, d, rng)
    rho = Matrix.identity(field, group.order).kron(inverse(P)) @ rho @ P
    return LeftComodule(d, rho)


def random_bicomodule(H: DualQuasiBialgebra, group: GroupData,
                      rng: random.Random, max_dim: int = 3) -> Bicomodule:
    """A bigraded bicomodule in a randomly twisted basis; valid by construction."""
    d = rng.randint(1, max_dim)
    field = H.field
    n = group.order
    gl = [rng.randrange(n) for _ in range(d)]
    gr = [rng.randrange(n) for _ in range(d)]
    rho_l = Matrix.from_terms(field, n * d, d,
                              [(gl[i] * d + i, i, field.one) for i in range(d)])
    rho_r = Matrix.from_terms(field, d * n, d,
                              [(i * n + gr[i], i, field.one) for i in range(d)])
    P = random_conjugator(field, d, rng)
    Pinv = inverse(P)
    I = Matrix.identity(field, n)
    return Bicomodule(d, I.kron(Pinv) @ rho_l @ P, Pinv.kron(I) @ rho_r @ P)


def rational(scalar) -> Fraction:
    """Extract the rational value of a scalar over the rational field."""
    assert len(scalar.coeffs) == 1
    return scalar.coeffs[0]


def sweedler_four_dim_hopf():
    """Sweedler's four-dimensional Hopf algebra over the rationals.

    Basis 1, g, x, gx with g² = 1, x² = 0, xg = −gx, Δg = g⊗g,
    Δx = x⊗1 + g⊗x.  Noncommutative and noncocommutative, so it exercises
    the multi-term comultiplication paths the grouplike examples never hit.
    Returns (algebra, antipode data); the antipode is s(g) = g, s(x) = −gx.
    """
    if "sweedler" in _example_cache:
        return _example_cache["sweedler"]
    from dualquasi import DualQuasiBialgebra
    from dualquasi.preantipode import AntipodeData

    Q = Field.rationals()
    one, zero = Q.one, Q.zero
    delta = Matrix.from_terms(Q, 16, 4, [
        (0 * 4 + 0, 0, one),
        (1 * 4 + 1, 1, one),
        (2 * 4 + 0, 2, one), (1 * 4 + 2, 2, one),
        (3 * 4 + 1, 3, one), (0 * 4 + 3, 3, one),
    ])
    counit = Matrix.row_vector(Q, [one, one, zero, zero])
    products = [
        (0, (0, 0), 1), (1, (0, 1), 1), (2, (0, 2), 1), (3, (0, 3), 1),
        (1, (1, 0), 1), (0, (1, 1), 1), (3, (1, 2), 1), (2, (1, 3), 1),
        (2, (2, 0), 1), (3, (2, 1), -1),
        (3, (3, 0), 1), (2, (3, 1), -1),
    ]
    mul = Matrix.from_terms(Q, 4, 16, [(r, a * 4 + b, Q.from_fraction(c))
                                       for r, (a, b), c in products])
    unit = Matrix.column_vector(Q, [one, zero, zero, zero])
    omega = Matrix.row_vector(Q, [
        counit.entries[i] * counit.entries[j] * counit.entries[k]
        for i in range(4) for j in range(4) for k in range(4)])
    H = DualQuasiBialgebra(Q, 4, delta, counit, mul, unit, omega)
    s = Matrix.from_terms(Q, 4, 4, [(0, 0, one), (1, 1, one),
                                    (3, 2, Q.from_fraction(-1)), (2, 3, one)])
    data = AntipodeData(s, counit, counit)
    _example_cache["sweedler"] = (H, data)
    return H, data


def sympy_grouplike_preantipode(group: GroupData, theta_fraction):
    """Independent parametric oracle for the preantipode system on a group
    algebra over the rationals.

    Derives the equations directly from the grouplike simplification (every
    Δ(e_g) = e_g⊗e_g), with theta_fraction(g,h,k) -> Fraction, and solves
    them with sympy.  Returns (particular as row-major Fractions with free
    parameters set to zero, number of free parameters, residual callable).
    """
    import sympy

    n = group.order
    syms = sympy.symbols(f"s0:{n * n}")  # S[h][x] at index h*n + x

    def entry(h, x):
        return syms[h * n + x]

    eqs = []
    e = group.identity
    for x in range(n):
        # S(x₂)₁ ⊗ x₁S(x₂)₂ = S(x)⊗1 componentwise at (p, q)
        for p in range(n):
            for q in range(n):
                coeff = (1 if group.mul(x, p) == q else 0) - (1 if q == e else 0)
                if coeff:
                    eqs.append(coeff * entry(p, x))
        # S(x₁)₁x₂ ⊗ S(x₁)₂ = 1⊗S(x) componentwise at (p, q)
        for p in range(n):
            for q in range(n):
                coeff = (1 if group.mul(q, x) == p else 0) - (1 if p == e else 0)
                if coeff:
                    eqs.append(coeff * entry(q, x))
        # ω(x₁ ⊗ S(x₂) ⊗ x₃) = ε(x)
        eqs.append(sympy.Add(*[
            entry(h, x) * sympy.Rational(theta_fraction(x, h, x)) for h in range(n)
        ]) - 1)

    solset = sympy.linsolve(eqs, syms)
    if not solset:
        return None
    (solution,) = solset
    free = sorted(solution.free_symbols, key=lambda s: s.name)
    zeroed = [expr.subs({s: 0 for s in free}) for expr in solution]
    particular = [Fraction(int(sympy.fraction(v)[0]), int(sympy.fraction(v)[1]))
                  for v in [sympy.nsimplify(v) for v in zeroed]]

    def residual(flat_fractions):
        subs = {syms[i]: sympy.Rational(flat_fractions[i]) for i in range(n * n)}
        return [sympy.simplify(eq.subs(subs)) for eq in eqs]

    return particular, len(free), residual
