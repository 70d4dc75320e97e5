from fractions import Fraction

import pytest

from dualquasi import Field, validate_dqb
from dualquasi.groups import (Cocycle, GroupData, canonical_group_preantipode,
                              cyclic_cocycle, group_antipode_data, group_dqb,
                              idempotent_monoid_bialgebra, trivial_cocycle,
                              validate_cocycle)

Q = Field.rationals()


def test_group_table_validation():
    G = GroupData.cyclic(4)
    assert G.identity == 0
    assert G.inv(1) == 3 and G.mul(3, 2) == 1
    with pytest.raises(ValueError):
        GroupData.from_table([[0, 1], [1, 1]])  # idempotent monoid: no inverse
    with pytest.raises(ValueError):
        GroupData.from_table([[1, 0], [1, 0]])  # no identity


def test_trivial_cocycle_validates():
    for n in (1, 2, 3, 5):
        G = GroupData.cyclic(n)
        assert validate_cocycle(G, trivial_cocycle(G)).ok


def test_z2_cocycle_is_parity_of_product():
    theta = cyclic_cocycle(2, 1)
    G = GroupData.cyclic(2)
    assert validate_cocycle(G, theta).ok
    for a in range(2):
        for b in range(2):
            for c in range(2):
                expected = Fraction(-1) ** (a * b * c)
                assert theta.theta(a, b, c) == Q.from_fraction(expected)


def test_broken_normalization_detected():
    G = GroupData.cyclic(2)
    values = [Q.one] * 8
    values[(1 * 2 + 0) * 2 + 1] = Q.from_fraction(-1)  # θ(g, 1, g) = −1
    theta = Cocycle(Q, 2, tuple(values))
    report = validate_cocycle(G, theta)
    failures = {c.axiom: c for c in report.failures}
    assert "cocycle-normalized" in failures
    assert failures["cocycle-normalized"].witness == (1, 0, 1)


def test_zero_value_detected():
    G = GroupData.cyclic(2)
    values = [Q.one] * 8
    values[7] = Q.zero
    report = validate_cocycle(G, Cocycle(Q, 2, tuple(values)))
    assert any(c.axiom == "cocycle-nonzero" and c.witness == (1, 1, 1)
               for c in report.failures)


def test_cyclic_cocycles_validate_up_to_order_six():
    for n in range(1, 7):
        for r in range(n):
            theta = cyclic_cocycle(n, r)  # validates internally
            assert validate_cocycle(GroupData.cyclic(n), theta).ok


def test_cyclic_cocycle_z3_value():
    theta = cyclic_cocycle(3, 1)
    field = theta.field
    assert field.order == 3
    assert theta.theta(1, 1, 2) == field.zeta(1)  # exponent 1·⌊3/3⌋ = 1
    assert theta.theta(1, 1, 1) == field.one      # ⌊2/3⌋ = 0


def test_cyclic_cocycle_field_handling():
    assert cyclic_cocycle(2, 1).field.kind == "rationals"
    assert cyclic_cocycle(5, 0).field.kind == "rationals"
    assert cyclic_cocycle(4, 1).field is Field.cyclotomic(4)
    with pytest.raises(ValueError):
        cyclic_cocycle(3, 1, Field.rationals())
    with pytest.raises(ValueError):
        cyclic_cocycle(3, 1, Field.cyclotomic(4))
    with pytest.raises(ValueError):
        cyclic_cocycle(3, 5)


def test_group_dqb_structures():
    G = GroupData.cyclic(2)
    theta = cyclic_cocycle(2, 1)
    H = group_dqb(G, theta)
    assert validate_dqb(H).ok
    assert H.omega_at(1, 1, 1) == Q.from_fraction(-1)
    assert all(H.omega_at(g, h, k) == Q.one
               for g in range(2) for h in range(2) for k in range(2)
               if (g, h, k) != (1, 1, 1))


def test_group_dqb_rejects_invalid_cocycle():
    G = GroupData.cyclic(2)
    values = [Q.one] * 8
    values[(1 * 2 + 0) * 2 + 1] = Q.from_fraction(-1)
    with pytest.raises(ValueError):
        group_dqb(G, Cocycle(Q, 2, tuple(values)))


def test_antipode_data_values():
    G = GroupData.cyclic(2)
    theta = cyclic_cocycle(2, 1)
    data = group_antipode_data(G, theta)
    assert [str(v) for v in data.beta.entries] == ["1", "-1"]
    assert [str(v) for v in data.alpha.entries] == ["1", "1"]
    assert data.s[0, 0] == Q.one and data.s[1, 1] == Q.one


def test_antipode_data_z4():
    theta = cyclic_cocycle(4, 1)
    data = group_antipode_data(GroupData.cyclic(4), theta)
    field = theta.field
    i = field.zeta(1)
    assert list(data.beta.entries) == [field.one, i ** 3, i ** 2, i]


def test_canonical_preantipode_formula():
    G = GroupData.cyclic(3)
    theta = cyclic_cocycle(3, 1)
    S = canonical_group_preantipode(G, theta)
    field = theta.field
    for a in range(3):
        terms = S.column_terms(a)
        assert len(terms) == 1
        row, value = terms[0]
        assert row == (-a) % 3
        assert value == theta.theta(a, (-a) % 3, a).inverse()


def test_idempotent_monoid_control():
    H = idempotent_monoid_bialgebra()
    assert validate_dqb(H).ok
    assert H.dim == 2


def test_cyclotomic_cocycle_values_are_roots_of_unity():
    theta = cyclic_cocycle(6, 1, Field.cyclotomic(6))
    for v in theta.values:
        assert v ** 6 == theta.field.one
