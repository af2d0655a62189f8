"""The algebra file format: a single self-describing JSON document with
exact scalar encoding ("a/b" strings over Q, residues over F_p).

Layout (all row-per-basis-element):

* mul[i][j] is the coordinate list of e_i e_j;
* comul[j] the length-d^2 coordinate list of Delta(e_j), leg 1 slowest;
* antipode[j] the coordinate list of S(e_j);
* phi / phi_inv are flat length-d^3 lists with the same leg convention.

Parsing errors carry the offending field; dimension mismatches and a
non-invertible antipode or associator are load errors, everything softer
is left for the axiom checker to report.
"""

from __future__ import annotations

import json
import os

from .algebra import AlgebraError, QuasiHopfAlgebra
from .field import FieldError, FieldSpec
from .linalg import Matrix
from .tensor import TensorElt

FORMAT_VERSION = 1


class FileFormatError(ValueError):
    pass


def _field_from_json(obj) -> FieldSpec:
    if obj == "Q":
        return FieldSpec.rationals()
    if isinstance(obj, dict) and set(obj) == {"Fp"}:
        return FieldSpec.prime(int(obj["Fp"]))
    raise FileFormatError('field must be "Q" or {"Fp": p}, got %r' % (obj,))


def _field_to_json(field: FieldSpec):
    return "Q" if field.is_rationals else {"Fp": field.p}


def _scalars(field: FieldSpec, raw, expect: int, where: str) -> list:
    if not isinstance(raw, list) or len(raw) != expect:
        raise FileFormatError("%s: expected a list of %d scalars" % (where, expect))
    out = []
    for k, x in enumerate(raw):
        try:
            out.append(field.of(x))
        except (FieldError, ValueError) as exc:
            raise FileFormatError("%s[%d]: bad scalar %r (%s)" % (where, k, x, exc)) from None
    return out


def load(path: str) -> QuasiHopfAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FileFormatError("%s: not valid JSON (%s)" % (path, exc)) from None
    return from_dict(doc, default_name=os.path.splitext(os.path.basename(path))[0])


def from_dict(doc: dict, default_name: str = "H") -> QuasiHopfAlgebra:
    if doc.get("format_version") != FORMAT_VERSION:
        raise FileFormatError("format_version must be %d" % FORMAT_VERSION)
    field = _field_from_json(doc.get("field"))
    try:
        d = int(doc["dim"])
    except (KeyError, TypeError, ValueError):
        raise FileFormatError("dim: missing or not an integer") from None
    if d <= 0:
        raise FileFormatError("dim must be positive")
    basis = doc.get("basis", ["e%d" % i for i in range(d)])
    if not isinstance(basis, list) or len(basis) != d:
        raise FileFormatError("basis: expected %d labels" % d)
    raw_mul = doc.get("mul")
    if not isinstance(raw_mul, list) or len(raw_mul) != d \
            or any(not isinstance(r, list) or len(r) != d for r in raw_mul):
        raise FileFormatError("mul: expected a d x d grid of coordinate lists")
    mul = [[_scalars(field, raw_mul[i][j], d, "mul[%d][%d]" % (i, j))
            for j in range(d)] for i in range(d)]
    unit = _scalars(field, doc.get("unit"), d, "unit")
    raw_comul = doc.get("comul")
    if not isinstance(raw_comul, list) or len(raw_comul) != d:
        raise FileFormatError("comul: expected %d rows" % d)
    comul = [_scalars(field, raw_comul[j], d * d, "comul[%d]" % j) for j in range(d)]
    counit = _scalars(field, doc.get("counit"), d, "counit")
    phi = TensorElt(field, d, 3, _scalars(field, doc.get("phi"), d ** 3, "phi"))
    raw_s = doc.get("antipode")
    if not isinstance(raw_s, list) or len(raw_s) != d:
        raise FileFormatError("antipode: expected %d rows" % d)
    S = Matrix.from_columns(field, [_scalars(field, raw_s[j], d, "antipode[%d]" % j)
                                    for j in range(d)])
    alpha = _scalars(field, doc.get("alpha"), d, "alpha")
    beta = _scalars(field, doc.get("beta"), d, "beta")
    phi_inv = None
    if doc.get("phi_inv") is not None:
        phi_inv = TensorElt(field, d, 3,
                            _scalars(field, doc["phi_inv"], d ** 3, "phi_inv"))
    name = doc.get("name", default_name)
    try:
        alg = QuasiHopfAlgebra(field, d, basis, mul, unit, comul, counit, phi, S,
                               alpha, beta, phi_inv=phi_inv, name=name)
    except AlgebraError as exc:
        raise FileFormatError(str(exc)) from None
    # normalize when legal; otherwise leave it to the def-7 axiom entry
    ea, eb = alg.eps(alg.alpha), alg.eps(alg.beta)
    if ea * eb == field.one and (ea != field.one or eb != field.one):
        alg = alg.normalize_alpha_beta()
    if doc.get("pivot") is not None:
        alg._file_pivot = _scalars(field, doc["pivot"], d, "pivot")
    return alg


def to_dict(alg: QuasiHopfAlgebra) -> dict:
    field = alg.field
    d = alg.dim
    enc = field.to_json
    doc = {
        "format_version": FORMAT_VERSION,
        "name": alg.name,
        "field": _field_to_json(field),
        "dim": d,
        "basis": list(alg.basis),
        "mul": [[[enc(c) for c in _dense_row(alg, i, j)] for j in range(d)]
                for i in range(d)],
        "unit": [enc(c) for c in alg.unit],
        "comul": [[enc(c) for c in alg.comul_mat.column(j)] for j in range(d)],
        "counit": [enc(c) for c in alg.counit],
        "phi": [enc(c) for c in alg.phi.coords],
        "phi_inv": [enc(c) for c in alg.phi_inv.coords],
        "antipode": [[enc(c) for c in alg.S.column(j)] for j in range(d)],
        "alpha": [enc(c) for c in alg.alpha],
        "beta": [enc(c) for c in alg.beta],
    }
    piv = getattr(alg, "_file_pivot", None)
    if piv is not None:
        doc["pivot"] = [enc(c) for c in piv]
    return doc


def _dense_row(alg, i, j):
    v = [alg.field.zero] * alg.dim
    for k, c in alg.mul_rows[i][j]:
        v[k] = c
    return v


def save(alg: QuasiHopfAlgebra, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(to_dict(alg), fh, indent=1)
        fh.write("\n")


def load_tensor(path: str, alg: QuasiHopfAlgebra) -> TensorElt:
    """A tensor file: {"field":..., "dim":..., "arity": n, "coords": [...]}"""
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FileFormatError("%s: not valid JSON (%s)" % (path, exc)) from None
    field = _field_from_json(doc.get("field"))
    if field != alg.field:
        raise FileFormatError("tensor field %r does not match the algebra" % field)
    d = int(doc.get("dim", -1))
    if d != alg.dim:
        raise FileFormatError("tensor dim %d does not match the algebra" % d)
    arity = int(doc.get("arity", -1))
    coords = _scalars(field, doc.get("coords"), d ** arity, "coords")
    return TensorElt(field, d, arity, coords)


def save_tensor(t: TensorElt, alg: QuasiHopfAlgebra, path: str):
    doc = {
        "format_version": FORMAT_VERSION,
        "field": _field_to_json(t.field),
        "dim": t.dim,
        "arity": t.arity,
        "coords": [t.field.to_json(c) for c in t.coords],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")
