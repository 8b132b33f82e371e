"""Input documents and machine reports.

One JSON document format, rationals always strings ("p" or "p/q") so no
number type can silently lose exactness.  The core fields describe one
subspace input; the optional fields carry a dual vector, a map block, or
semidirect components.  Machine reports are canonical JSON (sorted keys,
fixed separators, one trailing newline), so identical analyses produce
byte-identical output; the timings field is the only part that varies.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .analysis import CRQInput, cocr_input, cr_input
from .errors import ContractError, DocumentError
from .gaussian import GaussRat, format_rat, parse_rat
from .matrix import QQ, Mat
from .quaternion import Quat
from .subspace import Subspace
from .twistor import TwistorPoint


def _fail(path: str, message: str):
    raise DocumentError("%s: %s" % (path or "<root>", message))


def _expect(obj, typ, path):
    if not isinstance(obj, typ):
        _fail(path, "expected %s, got %s" % (typ.__name__, type(obj).__name__))
    return obj


def _parse_rat_at(value, path) -> Fraction:
    if not isinstance(value, str):
        _fail(path, "rationals must be strings, got %s" % type(value).__name__)
    try:
        return parse_rat(value)
    except ValueError as exc:
        _fail(path, str(exc))


def _parse_vector(value, length, path) -> tuple[Fraction, ...]:
    _expect(value, list, path)
    if len(value) != length:
        _fail(path, "expected %d coordinates, got %d" % (length, len(value)))
    return tuple(_parse_rat_at(x, "%s[%d]" % (path, i)) for i, x in enumerate(value))


def _parse_matrix(value, rows, cols, path) -> Mat:
    _expect(value, list, path)
    if len(value) != rows:
        _fail(path, "expected %d rows, got %d" % (rows, len(value)))
    data = [_parse_vector(r, cols, "%s[%d]" % (path, i)) for i, r in enumerate(value)]
    return Mat.from_rows(data, QQ)


def parse_input_document(obj, path="") -> tuple[CRQInput, dict]:
    """Core fields -> CRQInput; returns (input, extras) where extras holds
    the parsed optional fields (alpha) verbatim for the caller."""
    _expect(obj, dict, path)
    for key in ("k", "role", "basis"):
        if key not in obj:
            _fail(path, "missing required field %r" % key)
    k = obj["k"]
    if not isinstance(k, int) or k < 0:
        _fail(path + ".k", "k must be a nonnegative integer")
    role = obj["role"]
    if role not in ("cr", "cocr"):
        _fail(path + ".role", "role must be 'cr' or 'cocr'")
    basis_raw = _expect(obj["basis"], list, path + ".basis")
    vectors = [_parse_vector(v, 4 * k, "%s.basis[%d]" % (path, i)) for i, v in enumerate(basis_raw)]
    m = Mat.from_rows(vectors, QQ) if vectors else Mat.zeros(0, 4 * k, QQ)
    if m.rank() != m.rows:
        raise ContractError("basis rows are linearly dependent")
    subspace = Subspace(4 * k, m) if vectors else Subspace.zero(4 * k, QQ)
    try:
        inp = cr_input(k, subspace) if role == "cr" else cocr_input(k, subspace, obj.get("target_dim"))
    except ContractError:
        raise
    if "target_dim" in obj and obj["target_dim"] != inp.target_dim:
        raise ContractError(
            "target_dim %r inconsistent with basis (expected %d)" % (obj["target_dim"], inp.target_dim)
        )
    extras = {}
    if "alpha" in obj:
        extras["alpha"] = _parse_vector(obj["alpha"], 4 * k, path + ".alpha")
    return inp, extras


def parse_twist(obj, path):
    from .maps import Twist

    if obj is None:
        return Twist.identity()
    _expect(obj, dict, path)
    kind = obj.get("kind")
    if kind == "identity":
        return Twist.identity()
    if kind == "conjugation":
        q = _parse_vector(obj.get("quat"), 4, path + ".quat")
        return Twist.conjugation(Quat(*q))
    _fail(path + ".kind", "twist kind must be 'identity' or 'conjugation'")


def parse_map_document(obj) -> tuple[CRQInput, CRQInput, Mat, object, str]:
    """(src, dst, matrix, twist, map_kind) from a map document."""
    _expect(obj, dict, "")
    for key in ("src", "dst", "matrix"):
        if key not in obj:
            _fail("", "missing required field %r" % key)
    src, _ = parse_input_document(obj["src"], ".src")
    dst, _ = parse_input_document(obj["dst"], ".dst")
    kind = obj.get("map_kind")
    if kind is None:
        if src.role != dst.role:
            _fail(".map_kind", "roles differ, map_kind must be given")
        kind = src.role
    if kind not in ("cr", "cocr", "f"):
        _fail(".map_kind", "map_kind must be 'cr', 'cocr' or 'f'")
    if kind in ("cr", "cocr") and (src.role != kind or dst.role != kind):
        raise ContractError("map_kind %r does not match component roles" % kind)
    matrix = _parse_matrix(obj["matrix"], dst.dim_u, src.dim_u, ".matrix")
    twist = parse_twist(obj.get("twist"), ".twist")
    return src, dst, matrix, twist, kind


def parse_semidirect_document(obj):
    from .maps import SemidirectData

    _expect(obj, dict, "")
    for key in ("first", "second", "alpha_matrix"):
        if key not in obj:
            _fail("", "missing required field %r" % key)
    first, _ = parse_input_document(obj["first"], ".first")
    second, _ = parse_input_document(obj["second"], ".second")
    alpha = _parse_matrix(obj["alpha_matrix"], second.dim_u, 4 * first.k, ".alpha_matrix")
    return SemidirectData(first, second, alpha)


def load_document(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise DocumentError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise DocumentError("%s: invalid JSON at line %d column %d: %s" % (path, exc.lineno, exc.colno, exc.msg))


def input_to_document(inp: CRQInput, alpha=None) -> dict:
    doc = {
        "k": inp.k,
        "role": inp.role,
        "target_dim": inp.target_dim,
        "basis": [[format_rat(x) for x in row] for row in inp.subspace.basis.data],
    }
    if alpha is not None:
        doc["alpha"] = [format_rat(Fraction(a)) for a in alpha]
    return doc


def _gauss_pair(z: GaussRat) -> list[str]:
    return [format_rat(z.re), format_rat(z.im)]


def twistor_to_obj(p: TwistorPoint | None):
    if p is None:
        return None
    return {"z0": _gauss_pair(p.z0), "z1": _gauss_pair(p.z1)}


def obj_to_twistor(obj) -> TwistorPoint | None:
    if obj is None:
        return None
    z0 = GaussRat(parse_rat(obj["z0"][0]), parse_rat(obj["z0"][1]))
    z1 = GaussRat(parse_rat(obj["z1"][0]), parse_rat(obj["z1"][1]))
    return TwistorPoint(z0, z1)


def matrix_to_obj(m: Mat):
    return [[format_rat(x) if m.domain is QQ else str(x) for x in row] for row in m.data]


def subspace_to_obj(s: Subspace):
    return {"dim": s.dim, "basis": matrix_to_obj(s.basis)}


def dump_canonical(obj) -> str:
    """Canonical machine rendering: sorted keys, tight separators, one
    trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True) + "\n"
