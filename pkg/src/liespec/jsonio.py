"""JSON schemas for algebras, modules, and matrices.

Rationals serialize as "p/q" (or "p" when the denominator is 1); matrices as
row-major nested arrays of such strings; bracket tables use 1-based indices
with zero pairs omitted.  Dumps are canonical (fixed key order, sorted
brackets), so a dump-parse-dump round trip is byte-identical.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import SchemaError
from .liealg import LieAlgebra
from .linalg import RatMatrix
from .reps import Representation

FORMAT_VERSION = 1


def rational_to_str(x: Fraction) -> str:
    return str(x)


def rational_from_str(text) -> Fraction:
    if not isinstance(text, str):
        raise SchemaError(f"expected a rational string, got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as err:
        raise SchemaError(f"bad rational {text!r}") from err


def matrix_to_obj(m: RatMatrix) -> list[list[str]]:
    return [[rational_to_str(x) for x in m.row(i)] for i in range(m.rows)]


def matrix_from_obj(obj, rows: int | None = None, cols: int | None = None) -> RatMatrix:
    if not isinstance(obj, list) or any(not isinstance(r, list) for r in obj):
        raise SchemaError("matrix must be a nested array")
    nrows = len(obj)
    ncols = len(obj[0]) if obj else 0
    if any(len(r) != ncols for r in obj):
        raise SchemaError("matrix rows have unequal lengths")
    if rows is not None and (nrows, ncols) != (rows, cols):
        raise SchemaError(f"expected a {rows}x{cols} matrix, got {nrows}x{ncols}")
    return RatMatrix(nrows, ncols, [rational_from_str(x) for r in obj for x in r])


def algebra_to_obj(g: LieAlgebra) -> dict:
    brackets = []
    for (i, j), vec in g.brackets:
        coeffs = {
            str(k + 1): rational_to_str(c) for k, c in enumerate(vec) if c
        }
        brackets.append({"i": i + 1, "j": j + 1, "coeffs": coeffs})
    return {
        "format_version": FORMAT_VERSION,
        "dim": g.dim,
        "basis": list(g.basis_names),
        "brackets": brackets,
    }


def _expect(obj: dict, key: str):
    if key not in obj:
        raise SchemaError(f"missing key {key!r}")
    return obj[key]


def _check_version(obj: dict) -> None:
    version = _expect(obj, "format_version")
    if version != FORMAT_VERSION:
        raise SchemaError(f"unsupported format_version {version!r}")


def algebra_from_obj(obj) -> LieAlgebra:
    if not isinstance(obj, dict):
        raise SchemaError("algebra must be a JSON object")
    _check_version(obj)
    dim = _expect(obj, "dim")
    basis = _expect(obj, "basis")
    if not isinstance(dim, int) or dim < 1:
        raise SchemaError("dim must be a positive integer")
    if not isinstance(basis, list) or len(basis) != dim:
        raise SchemaError("basis must list one name per dimension")
    brackets = {}
    for item in obj.get("brackets", []):
        if not isinstance(item, dict):
            raise SchemaError("bracket entries must be objects")
        i, j = _expect(item, "i"), _expect(item, "j")
        if not (isinstance(i, int) and isinstance(j, int) and 1 <= i < j <= dim):
            raise SchemaError(f"bad bracket indices ({i}, {j})")
        vec = [Fraction(0)] * dim
        for key, text in _expect(item, "coeffs").items():
            try:
                k = int(key)
            except ValueError as err:
                raise SchemaError(f"bad coefficient index {key!r}") from err
            if not 1 <= k <= dim:
                raise SchemaError(f"coefficient index {k} out of range")
            vec[k - 1] = rational_from_str(text)
        brackets[(i - 1, j - 1)] = vec
    return LieAlgebra(dim, basis, brackets)


def rep_to_obj(v: Representation, algebra_ref: str | None = None) -> dict:
    algebra = algebra_ref if algebra_ref is not None else algebra_to_obj(v.algebra)
    return {
        "format_version": FORMAT_VERSION,
        "algebra": algebra,
        "dim": v.dim,
        "side": v.side,
        "action": [matrix_to_obj(m) for m in v.action],
    }


def rep_from_obj(obj, algebra: LieAlgebra | None = None) -> Representation:
    if not isinstance(obj, dict):
        raise SchemaError("module must be a JSON object")
    _check_version(obj)
    spec = _expect(obj, "algebra")
    if isinstance(spec, dict):
        algebra = algebra_from_obj(spec)
    elif algebra is None:
        raise SchemaError(f"algebra reference {spec!r} needs external resolution")
    dim = _expect(obj, "dim")
    side = _expect(obj, "side")
    if side not in ("left", "right"):
        raise SchemaError(f"side must be 'left' or 'right', got {side!r}")
    action_obj = _expect(obj, "action")
    if not isinstance(action_obj, list) or len(action_obj) != algebra.dim:
        raise SchemaError("need one action matrix per algebra basis element")
    action = [matrix_from_obj(m, dim, dim) for m in action_obj]
    return Representation(algebra, dim, side, action)


def dumps(obj) -> str:
    """Canonical JSON text: 2-space indent, insertion order, trailing newline."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise SchemaError(f"invalid JSON: {err}") from err
