"""Group algebras with normalized 3-cocycles, and the negative control example.

A normalized 3-cocycle θ on a finite group extends trilinearly to a
reassociator on the group algebra, turning it into a dual quasi-bialgebra
with the usual grouplike coalgebra structure.  The canonical dual quasi-Hopf
datum is s(g) = g⁻¹, α = ε, β(g) = ω(g,g⁻¹,g)⁻¹, and the resulting
preantipode is S(g) = ω(g,g⁻¹,g)⁻¹·g⁻¹.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dqb import DualQuasiBialgebra
from .errors import InvariantViolation
from .groups_types import Cocycle, GroupData
from .linalg import Matrix
from .preantipode import AntipodeData
from .report import Check, Report
from .scalars import Field

__all__ = [
    "GroupData", "Cocycle", "GroupExample",
    "validate_cocycle", "trivial_cocycle", "cyclic_cocycle",
    "group_dqb", "group_antipode_data", "canonical_group_preantipode",
    "idempotent_monoid_bialgebra", "cyclic_group_example",
]


def validate_cocycle(group: GroupData, theta: Cocycle) -> Report:
    """Check that θ is nowhere zero, normalized (θ(g,1,h) = 1), and satisfies

        θ(h,k,l)·θ(g,hk,l)·θ(g,h,k) = θ(g,h,kl)·θ(gh,k,l)

    for all group quadruples, exhaustively."""
    n = group.order
    if theta.order != n:
        return Report((Check("cocycle-total", False, None,
                             f"defined on a group of order {theta.order}",
                             f"group has order {n}"),))
    one = theta.field.one
    checks: list[Check] = []

    failed = None
    for flat, v in enumerate(theta.values):
        if not v:
            g, rest = divmod(flat, n * n)
            h, k = divmod(rest, n)
            failed = Check("cocycle-nonzero", False, (g, h, k), "0", "nonzero")
            break
    checks.append(failed or Check("cocycle-nonzero", True))

    failed = None
    e = group.identity
    for g in range(n):
        for h in range(n):
            v = theta.theta(g, e, h)
            if v != one:
                failed = Check("cocycle-normalized", False, (g, e, h), str(v), "1")
                break
        if failed:
            break
    checks.append(failed or Check("cocycle-normalized", True))

    failed = None
    for g in range(n):
        for h in range(n):
            gh = group.mul(g, h)
            for k in range(n):
                hk = group.mul(h, k)
                for l in range(n):
                    lhs = theta.theta(h, k, l) * theta.theta(g, hk, l) * theta.theta(g, h, k)
                    rhs = theta.theta(g, h, group.mul(k, l)) * theta.theta(gh, k, l)
                    if lhs != rhs:
                        failed = Check("cocycle-identity", False, (g, h, k, l),
                                       str(lhs), str(rhs))
                        break
                if failed:
                    break
            if failed:
                break
        if failed:
            break
    checks.append(failed or Check("cocycle-identity", True))
    return Report(tuple(checks))


def trivial_cocycle(group: GroupData, field: Field | None = None) -> Cocycle:
    if field is None:
        field = Field.rationals()
    return Cocycle(field, group.order, (field.one,) * group.order ** 3)


def cyclic_cocycle(n: int, r: int, field: Field | None = None) -> Cocycle:
    """The standard normalized 3-cocycle on the cyclic group of order n:

        θ(gᵃ, gᵇ, gᶜ) = ζⁿ^(r·a·⌊(b+c)/n⌋),   a, b, c ∈ {0, …, n−1}.

    Exponent representatives are fixed to {0,…,n−1} before applying the
    formula; the output is validated exhaustively (the validation is this
    construction's own correctness oracle)."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= r < n:
        raise ValueError(f"r must lie in [0, {n}), got {r}")
    group = GroupData.cyclic(n)
    if field is None:
        field = Field.rationals() if (r == 0 or n <= 2) else Field.cyclotomic(n)
    if field.kind == "rationals":
        if r and n > 2:
            raise ValueError(f"a primitive {n}-th root of unity is not rational")
        root = field.from_fraction(-1) if n == 2 else field.one
    else:
        if field.order != n:
            raise ValueError(f"need the cyclotomic field of order {n}, got {field.order}")
        root = field.zeta(1)

    def value(a, b, c):
        return root ** ((r * a * ((b + c) // n)) % n)

    theta = Cocycle.from_function(group, field, value)
    rep = validate_cocycle(group, theta)
    if not rep.ok:
        raise InvariantViolation(f"generated cocycle failed {rep.failures[0].axiom}")
    return theta


def group_dqb(group: GroupData, theta: Cocycle) -> DualQuasiBialgebra:
    """The group algebra as a dual quasi-bialgebra: grouplike basis, product
    from the group table, reassociator the trilinear extension of θ."""
    rep = validate_cocycle(group, theta)
    if not rep.ok:
        raise ValueError(f"invalid cocycle: {rep.failures[0].axiom}")
    field = theta.field
    n = group.order
    zero, one = field.zero, field.one
    delta = [zero] * (n * n * n)
    for g in range(n):
        delta[(g * n + g) * n + g] = one
    counit = Matrix.row_vector(field, [one] * n)
    mul = [zero] * (n * n * n)
    for g in range(n):
        for h in range(n):
            mul[group.mul(g, h) * n * n + (g * n + h)] = one
    unit = [zero] * n
    unit[group.identity] = one
    omega = list(theta.values)
    omega_inv = [v.inverse() for v in theta.values]
    return DualQuasiBialgebra(
        field, n,
        Matrix(field, n * n, n, delta),
        counit,
        Matrix(field, n, n * n, mul),
        Matrix.column_vector(field, unit),
        Matrix.row_vector(field, omega),
        Matrix.row_vector(field, omega_inv),
    )


def group_antipode_data(group: GroupData, theta: Cocycle) -> AntipodeData:
    """The canonical dual quasi-Hopf datum: s(g) = g⁻¹, α = ε,
    β(g) = ω(g,g⁻¹,g)⁻¹."""
    field = theta.field
    n = group.order
    zero, one = field.zero, field.one
    s = [zero] * (n * n)
    for g in range(n):
        s[group.inv(g) * n + g] = one
    alpha = Matrix.row_vector(field, [one] * n)
    beta = Matrix.row_vector(
        field, [theta.theta(g, group.inv(g), g).inverse() for g in range(n)])
    return AntipodeData(Matrix(field, n, n, s), alpha, beta)


def canonical_group_preantipode(group: GroupData, theta: Cocycle) -> Matrix:
    """S(g) = ω(g,g⁻¹,g)⁻¹·g⁻¹, written down directly from the closed formula."""
    field = theta.field
    n = group.order
    entries = [field.zero] * (n * n)
    for g in range(n):
        entries[group.inv(g) * n + g] = theta.theta(g, group.inv(g), g).inverse()
    return Matrix(field, n, n, entries)


def idempotent_monoid_bialgebra(field: Field | None = None) -> DualQuasiBialgebra:
    """The monoid algebra of {1, e} with e² = e: an ordinary bialgebra with
    grouplike basis, trivial reassociator, and provably no preantipode.

    Serves as the negative control: the preantipode system is inconsistent
    and the evaluation map on the free bicomodule is rank-deficient."""
    if field is None:
        field = Field.rationals()
    zero, one = field.zero, field.one
    n = 2
    delta = [zero] * (n * n * n)
    for g in range(n):
        delta[(g * n + g) * n + g] = one
    table = ((0, 1), (1, 1))  # index 0 is the unit, index 1 is the idempotent
    mul = [zero] * (n * n * n)
    for g in range(n):
        for h in range(n):
            mul[table[g][h] * n * n + (g * n + h)] = one
    omega = [one] * (n ** 3)
    return DualQuasiBialgebra(
        field, n,
        Matrix(field, n * n, n, delta),
        Matrix.row_vector(field, [one, one]),
        Matrix(field, n, n * n, mul),
        Matrix.column_vector(field, [one, zero]),
        Matrix.row_vector(field, omega),
        Matrix.row_vector(field, list(omega)),
    )


@dataclass(frozen=True)
class GroupExample:
    """A bundled cyclic-group example: group, cocycle, algebra, Hopf datum,
    and the closed-form preantipode."""

    name: str
    group: GroupData
    cocycle: Cocycle
    dqb: DualQuasiBialgebra
    antipode: AntipodeData
    preantipode: Matrix


def cyclic_group_example(n: int, r: int, field: Field | None = None) -> GroupExample:
    group = GroupData.cyclic(n)
    theta = cyclic_cocycle(n, r, field)
    return GroupExample(
        name=f"cyclic_{n}_r{r}",
        group=group,
        cocycle=theta,
        dqb=group_dqb(group, theta),
        antipode=group_antipode_data(group, theta),
        preantipode=canonical_group_preantipode(group, theta),
    )
