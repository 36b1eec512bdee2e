"""JSON interchange formats for algebras, functionals, configurations and
supermatrices.  Rationals are always strings "p/q" ("p" when q = 1).
"""

import json
from pathlib import Path

from .algebras import AlgebraError, CommutativeAlgebra, FiniteSpace, LinearMap, function_algebra
from .exact.grassmann import GrassmannElement
from .exact.serialize import format_grassmann, format_rational, parse_grassmann, parse_rational
from .frobenius import PointConfiguration
from .superlinalg import SuperMatrix, SuperMatrixError


class InputError(ValueError):
    """Malformed interchange data."""


def read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _resolve(ref, base_dir):
    if isinstance(ref, str):
        return read_json(Path(base_dir or ".") / ref), Path(base_dir or ".") / ref
    return ref, None


def _rationals(values, what):
    try:
        return [parse_rational(v) for v in values]
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise InputError(f"{what}: {exc}") from None


# algebras

def load_algebra(record, base_dir=None):
    record, _ = _resolve(record, base_dir)
    if not isinstance(record, dict):
        raise InputError("algebra record must be an object")
    try:
        if "points" in record:
            return function_algebra(FiniteSpace(tuple(record["points"])))
        dim = record["dim"]
        unit = _rationals(record["unit"], "unit")
        structure = [[_rationals(cij, "structure") for cij in ci] for ci in record["structure"]]
        if len(structure) != dim:
            raise InputError("structure constants do not match dim")
        return CommutativeAlgebra.from_structure_constants(structure, unit)
    except KeyError as exc:
        raise InputError(f"algebra record is missing {exc}") from None
    except AlgebraError as exc:
        raise InputError(f"invalid algebra: {exc}") from None


def dump_algebra(A):
    return {
        "dim": A.dim,
        "unit": [format_rational(u) for u in A.unit_coords],
        "structure": [[[format_rational(x) for x in cij] for cij in ci]
                      for ci in A.structure_constants()],
    }


def dump_space(X):
    return {"points": list(X.points)}


# functionals

def load_functional(record, base_dir=None, source=None, target=None):
    record, path = _resolve(record, base_dir)
    if path is not None:
        base_dir = path.parent
    if not isinstance(record, dict) or "matrix" not in record:
        raise InputError("functional record needs a 'matrix'")
    if source is None:
        if "source" not in record:
            raise InputError("functional has no source algebra (use --algebra)")
        source = load_algebra(record["source"], base_dir)
    tgt = record.get("target", "scalar")
    if target is None and tgt != "scalar":
        target = load_algebra(tgt, base_dir)
    rows = [_rationals(r, "matrix") for r in record["matrix"]]
    try:
        return LinearMap(source, target, rows)
    except AlgebraError as exc:
        raise InputError(f"invalid functional: {exc}") from None


def dump_functional(f, source_ref=None, target_ref=None):
    out = {"matrix": [[format_rational(x) for x in r] for r in f.matrix]}
    if source_ref is not None:
        out["source"] = source_ref
    out["target"] = "scalar" if f.target is None else (target_ref or dump_algebra(f.target))
    return out


# configurations

def load_configuration(record, base_dir=None):
    record, path = _resolve(record, base_dir)
    if path is not None:
        base_dir = path.parent
    try:
        space, _ = _resolve(record["space"], base_dir)
        X = FiniteSpace(tuple(space["points"]))
        mult = record["multiplicities"]
        if any(not isinstance(v, int) for v in mult.values()):
            raise InputError("multiplicities must be integers")
        labels = {str(x): x for x in X.points}
        return PointConfiguration(X, {labels.get(k, k): v for k, v in mult.items()})
    except (KeyError, TypeError) as exc:
        raise InputError(f"configuration record is malformed: {exc}") from None
    except (ValueError, AlgebraError) as exc:
        raise InputError(f"invalid configuration: {exc}") from None


def dump_configuration(cfg):
    return {"space": dump_space(cfg.space),
            "multiplicities": {str(x): n for x, n in cfg.multiplicities}}


# supermatrices

def _parse_entry(x, ring_n):
    if ring_n is None:
        return parse_rational(x)
    if isinstance(x, list):
        return parse_grassmann(x, ring_n)
    return GrassmannElement.scalar(ring_n, parse_rational(x))


def load_supermatrix(record, base_dir=None):
    record, _ = _resolve(record, base_dir)
    try:
        p, q = int(record["p"]), int(record["q"])
        ring = record.get("ring", "rational")
        if ring == "rational":
            n = None
        elif isinstance(ring, str) and ring.startswith("grassmann:"):
            n = int(ring.split(":", 1)[1])
        else:
            raise InputError(f"unknown ring {ring!r}")
        blocks = record["blocks"]

        def block(name, rows, cols):
            data = blocks.get(name) or [[ "0"] * cols for _ in range(rows)]
            if len(data) != rows or any(len(r) != cols for r in data):
                raise InputError(f"block {name} must be {rows}x{cols}")
            return [[_parse_entry(x, n) for x in r] for r in data]

        a00 = block("a00", p, p)
        a01 = block("a01", p, q)
        a10 = block("a10", q, p)
        a11 = block("a11", q, q)
        rows = [a00[i] + a01[i] for i in range(p)] + [a10[i] + a11[i] for i in range(q)]
        return SuperMatrix(p, q, rows)
    except (KeyError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"supermatrix record is malformed: {exc}") from None
    except (SuperMatrixError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"invalid supermatrix: {exc}") from None


def format_value(x):
    """JSON-ready form of a ring element."""
    from fractions import Fraction
    if isinstance(x, (int, Fraction)):
        return format_rational(x)
    if isinstance(x, GrassmannElement):
        return format_grassmann(x)
    if hasattr(x, "coeffs"):
        return [format_value(c) for c in x.coeffs]
    if hasattr(x, "coords"):
        return [format_rational(c) for c in x.coords]
    return str(x)


def dump_supermatrix(M):
    ring_n = None
    for e in M.matrix.entries:
        if isinstance(e, GrassmannElement):
            ring_n = e.n
            break

    def blk(b):
        return [[format_value(x) if ring_n is None or isinstance(x, GrassmannElement)
                 else format_grassmann(GrassmannElement.scalar(ring_n, x)) for x in r]
                for r in b.to_rows()]

    return {"p": M.p, "q": M.q, "ring": "rational" if ring_n is None else f"grassmann:{ring_n}",
            "blocks": {"a00": blk(M.a00), "a01": blk(M.a01), "a10": blk(M.a10), "a11": blk(M.a11)}}
