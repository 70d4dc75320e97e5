"""Document formats (UTF-8 JSON) and report rendering.

Algebra documents carry ``version``, ``field`` ({"kind":"rationals"} or
{"kind":"cyclotomic","order":n}), ``dim`` and sparse/dense sections:

* ``delta``:  4-arrays [i, j, k, "c"] meaning Δ(e_i) += c·e_j⊗e_k,
* ``mul``:    4-arrays [i, j, k, "c"] meaning e_i·e_j += c·e_k,
* ``omega``:  4-arrays [i, j, k, "c"] meaning ω(e_i⊗e_j⊗e_k) = c,
* ``counit``, ``unit``: dense arrays of n scalar strings,
* ``omega_inv`` (optional): same layout as omega.

Module documents carry ``dim`` and sparse sections with input indices first
and the output index last: ``rho_l`` [i, a, j, "c"] (ρ(e_i) += c·e_a⊗e_j),
``rho_r`` [i, j, a, "c"] (ρ(e_i) += c·e_j⊗e_a), ``act`` [i, a, j, "c"]
(e_i·e_a += c·e_j).  Antipode documents hold dense matrices/functionals
(``s``, ``alpha``, ``beta``), preantipode documents a dense ``matrix``; both
use the column-as-image convention matrix[row][col] = coefficient of e_row
in the image of e_col.

Unspecified sparse entries are zero.  Canonical serialization sorts sparse
entries lexicographically by indices and prints scalars canonically, so
parse → serialize → parse is bit-exact.  Parsing never coerces: every
malformed scalar or out-of-range index aborts with its location.
"""

from __future__ import annotations

import json

from .comodules import HopfBicomodule
from .dqb import DualQuasiBialgebra, convolution_inverse
from .errors import DocumentError, ScalarParseError
from .linalg import Matrix
from .preantipode import AntipodeData
from .report import Report
from .scalars import Field, Scalar

FORMAT_VERSION = 1


# -- primitive readers -----------------------------------------------------------


def _parse_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"syntax error: {exc.msg}",
                            f"line {exc.lineno} column {exc.colno}") from None


def _require(doc: dict, key: str, kind, location: str):
    if not isinstance(doc, dict):
        raise DocumentError("expected a JSON object", location)
    if key not in doc:
        raise DocumentError(f"missing key {key!r}", location)
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise DocumentError(f"key {key!r} has the wrong type", f"{location}.{key}")
    return value


def _check_version(doc: dict, location: str) -> None:
    version = _require(doc, "version", int, location)
    if version != FORMAT_VERSION:
        raise DocumentError(f"unsupported version {version}", f"{location}.version")


def _field_from_doc(doc: dict, location: str) -> Field:
    fdoc = _require(doc, "field", dict, location)
    kind = _require(fdoc, "kind", str, f"{location}.field")
    if kind == "rationals":
        return Field.rationals()
    if kind == "cyclotomic":
        order = _require(fdoc, "order", int, f"{location}.field")
        if order < 1:
            raise DocumentError(f"order must be positive, got {order}",
                                f"{location}.field.order")
        return Field.cyclotomic(order)
    raise DocumentError(f"unknown field kind {kind!r}", f"{location}.field.kind")


def _scalar(field: Field, text, location: str) -> Scalar:
    if not isinstance(text, str):
        raise DocumentError("scalar must be a string", location)
    try:
        return field.parse(text)
    except ScalarParseError as exc:
        raise DocumentError(f"malformed scalar {text!r}: {exc}", location) from None


def _index(value, dim: int, location: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise DocumentError("index must be an integer", location)
    if not 0 <= value < dim:
        raise DocumentError(f"index out of range: {value} not in [0, {dim})", location)
    return value


def _dense_row(field: Field, values, length: int, location: str) -> list[Scalar]:
    if not isinstance(values, list) or len(values) != length:
        raise DocumentError(f"expected a list of {length} scalars", location)
    return [_scalar(field, v, f"{location}[{i}]") for i, v in enumerate(values)]


def _sparse_matrix(field: Field, entries, dims: tuple[int, ...], to_rc,
                   rows: int, cols: int, location: str,
                   allow_duplicates: bool) -> Matrix:
    if not isinstance(entries, list):
        raise DocumentError("expected a list of sparse entries", location)
    data = [field.zero] * (rows * cols)
    seen: set[tuple[int, ...]] = set()
    for pos, entry in enumerate(entries):
        here = f"{location}[{pos}]"
        if not isinstance(entry, list) or len(entry) != len(dims) + 1:
            raise DocumentError(
                f"expected [{len(dims)} indices, scalar]", here)
        idx = tuple(_index(v, d, here) for v, d in zip(entry[:-1], dims))
        if not allow_duplicates:
            if idx in seen:
                raise DocumentError(f"duplicate entry for indices {list(idx)}", here)
            seen.add(idx)
        value = _scalar(field, entry[-1], here)
        r, c = to_rc(idx)
        data[r * cols + c] = data[r * cols + c] + value
    return Matrix(field, rows, cols, data)


# -- dual quasi-bialgebra documents ------------------------------------------------


def load_dqb(text: str) -> DualQuasiBialgebra:
    """Parse a dual quasi-bialgebra document; validation is a separate step."""
    doc = _parse_json(text)
    loc = "dqb"
    _check_version(doc, loc)
    field = _field_from_doc(doc, loc)
    n = _require(doc, "dim", int, loc)
    if n < 1:
        raise DocumentError(f"dim must be positive, got {n}", f"{loc}.dim")
    delta = _sparse_matrix(
        field, _require(doc, "delta", list, loc), (n, n, n),
        lambda idx: (idx[1] * n + idx[2], idx[0]), n * n, n, f"{loc}.delta", True)
    mul = _sparse_matrix(
        field, _require(doc, "mul", list, loc), (n, n, n),
        lambda idx: (idx[2], idx[0] * n + idx[1]), n, n * n, f"{loc}.mul", True)
    omega = _sparse_matrix(
        field, _require(doc, "omega", list, loc), (n, n, n),
        lambda idx: (0, (idx[0] * n + idx[1]) * n + idx[2]),
        1, n ** 3, f"{loc}.omega", False)
    counit = Matrix.row_vector(
        field, _dense_row(field, _require(doc, "counit", list, loc), n, f"{loc}.counit"))
    unit = Matrix.column_vector(
        field, _dense_row(field, _require(doc, "unit", list, loc), n, f"{loc}.unit"))
    omega_inv = None
    if "omega_inv" in doc:
        omega_inv = _sparse_matrix(
            field, _require(doc, "omega_inv", list, loc), (n, n, n),
            lambda idx: (0, (idx[0] * n + idx[1]) * n + idx[2]),
            1, n ** 3, f"{loc}.omega_inv", False)
    return DualQuasiBialgebra(field, n, delta, counit, mul, unit, omega, omega_inv)


def _field_doc(field: Field) -> dict:
    if field.kind == "rationals":
        return {"kind": "rationals"}
    return {"kind": "cyclotomic", "order": field.order}


def _sparse_entries(matrix: Matrix, from_rc) -> list[list]:
    out = []
    for r in range(matrix.rows):
        for c in range(matrix.cols):
            v = matrix[r, c]
            if v:
                out.append(list(from_rc(r, c)) + [str(v)])
    out.sort(key=lambda e: e[:-1])
    return out


def dump_dqb(H: DualQuasiBialgebra) -> str:
    """Canonical serialization; inserts omega_inv when it was computed."""
    n = H.dim
    omega_inv = H.omega_inv
    if omega_inv is None:  # defensive; constructor always stores one
        omega_inv = convolution_inverse(H, H.omega, arity=3)
    doc = {
        "version": FORMAT_VERSION,
        "field": _field_doc(H.field),
        "dim": n,
        "delta": _sparse_entries(H.delta, lambda r, c: (c, r // n, r % n)),
        "counit": [str(v) for v in H.counit.entries],
        "mul": _sparse_entries(H.mul, lambda r, c: (c // n, c % n, r)),
        "unit": [str(v) for v in H.unit.entries],
        "omega": _sparse_entries(H.omega, lambda r, c: ((c // n) // n, (c // n) % n, c % n)),
        "omega_inv": _sparse_entries(omega_inv, lambda r, c: ((c // n) // n, (c // n) % n, c % n)),
    }
    return json.dumps(doc, indent=2) + "\n"


# -- module documents ---------------------------------------------------------------


def load_bicomodule(text: str, H: DualQuasiBialgebra) -> HopfBicomodule:
    """Parse a Hopf-bicomodule document over the given algebra."""
    doc = _parse_json(text)
    loc = "module"
    _check_version(doc, loc)
    d = _require(doc, "dim", int, loc)
    if d < 1:
        raise DocumentError(f"dim must be positive, got {d}", f"{loc}.dim")
    n = H.dim
    field = H.field
    rho_l = _sparse_matrix(
        field, _require(doc, "rho_l", list, loc), (d, n, d),
        lambda idx: (idx[1] * d + idx[2], idx[0]), n * d, d, f"{loc}.rho_l", True)
    rho_r = _sparse_matrix(
        field, _require(doc, "rho_r", list, loc), (d, d, n),
        lambda idx: (idx[1] * n + idx[2], idx[0]), d * n, d, f"{loc}.rho_r", True)
    act = _sparse_matrix(
        field, _require(doc, "act", list, loc), (d, n, d),
        lambda idx: (idx[2], idx[0] * n + idx[1]), d, d * n, f"{loc}.act", True)
    return HopfBicomodule(d, rho_l, rho_r, act)


def dump_bicomodule(M: HopfBicomodule) -> str:
    d = M.dim
    n = M.hopf_dim
    doc = {
        "version": FORMAT_VERSION,
        "dim": d,
        "rho_l": _sparse_entries(M.rho_l, lambda r, c: (c, r // d, r % d)),
        "rho_r": _sparse_entries(M.rho_r, lambda r, c: (c, r // n, r % n)),
        "act": _sparse_entries(M.act, lambda r, c: (c // n, c % n, r)),
    }
    return json.dumps(doc, indent=2) + "\n"


# -- antipode and preantipode documents ------------------------------------------------


def _dense_matrix(field: Field, rows, n: int, location: str) -> Matrix:
    if not isinstance(rows, list) or len(rows) != n:
        raise DocumentError(f"expected {n} rows", location)
    flat: list[Scalar] = []
    for i, row in enumerate(rows):
        flat.extend(_dense_row(field, row, n, f"{location}[{i}]"))
    return Matrix(field, n, n, flat)


def load_antipode(text: str, H: DualQuasiBialgebra) -> AntipodeData:
    doc = _parse_json(text)
    loc = "antipode"
    _check_version(doc, loc)
    n = _require(doc, "dim", int, loc)
    if n != H.dim:
        raise DocumentError(f"dim {n} disagrees with the algebra dimension {H.dim}",
                            f"{loc}.dim")
    field = H.field
    s = _dense_matrix(field, _require(doc, "s", list, loc), n, f"{loc}.s")
    alpha = Matrix.row_vector(
        field, _dense_row(field, _require(doc, "alpha", list, loc), n, f"{loc}.alpha"))
    beta = Matrix.row_vector(
        field, _dense_row(field, _require(doc, "beta", list, loc), n, f"{loc}.beta"))
    return AntipodeData(s, alpha, beta)


def dump_antipode(data: AntipodeData) -> str:
    n = data.s.rows
    doc = {
        "version": FORMAT_VERSION,
        "dim": n,
        "s": [[str(data.s[i, j]) for j in range(n)] for i in range(n)],
        "alpha": [str(v) for v in data.alpha.entries],
        "beta": [str(v) for v in data.beta.entries],
    }
    return json.dumps(doc, indent=2) + "\n"


def load_preantipode(text: str, H: DualQuasiBialgebra) -> Matrix:
    doc = _parse_json(text)
    loc = "preantipode"
    _check_version(doc, loc)
    n = _require(doc, "dim", int, loc)
    if n != H.dim:
        raise DocumentError(f"dim {n} disagrees with the algebra dimension {H.dim}",
                            f"{loc}.dim")
    return _dense_matrix(H.field, _require(doc, "matrix", list, loc), n, f"{loc}.matrix")


def dump_preantipode(S: Matrix) -> str:
    n = S.rows
    doc = {
        "version": FORMAT_VERSION,
        "dim": n,
        "matrix": [[str(S[i, j]) for j in range(n)] for i in range(n)],
    }
    return json.dumps(doc, indent=2) + "\n"


# -- report rendering -------------------------------------------------------------------


def serialize_report(report: Report, fmt: str = "text") -> str:
    """Render a report deterministically.

    ``text``: one PASS/FAIL line per axiom plus a summary line.
    ``json-lines``: one record per axiom with keys axiom/pass/witness/lhs/rhs.
    """
    if fmt == "json-lines":
        lines = []
        for c in report:
            lines.append(json.dumps({
                "axiom": c.axiom,
                "pass": c.passed,
                "witness": list(c.witness) if c.witness is not None else None,
                "lhs": c.lhs,
                "rhs": c.rhs,
            }))
        return "\n".join(lines)
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    lines = []
    for c in report:
        if c.passed:
            lines.append(f"PASS {c.axiom}")
        else:
            parts = [f"FAIL {c.axiom}"]
            if c.witness is not None:
                parts.append(f"witness={c.witness}")
            if c.lhs is not None:
                parts.append(f"lhs={c.lhs}")
            if c.rhs is not None:
                parts.append(f"rhs={c.rhs}")
            lines.append("  ".join(parts))
    failed = len(report.failures)
    if failed:
        lines.append(f"FAIL ({failed} of {len(report)} axioms)")
    else:
        lines.append(f"OK ({len(report)} axioms)")
    return "\n".join(lines)
