"""JSON interchange for every structure the command line accepts.

One document = one JSON object with a "kind" tag, an optional
"format_version" (defaults to "1", the only version), and kind-specific
fields. Conventions, applied exactly once at this boundary:

  * indices in files are 1-based; everything in memory is 0-based;
  * scalars are exact rationals, written "p/q" (or a bare integer)
    and emitted as str(Fraction);
  * tensors and matrices are sparse entry lists, [i, j, k, value] and
    [row, col, value]; unlisted entries are zero; duplicates are
    rejected;
  * serialization is canonical: entries sorted by index, zeros omitted,
    two-space indent, so equal payloads produce identical bytes.

Schema failures raise SchemaError carrying a JSON-pointer path;
malformed JSON raises ParseError; a zero denominator raises ValueError.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    ActionData,
    AlgebraMorphism,
    LieAlgebra,
    PreLieAlgebra,
    Representation,
    Tensor3,
    Violation,
    check_lie,
    check_prelie,
    check_representation,
)
from .cochain import Cochain, CochainBasis
from .errors import ParseError, SchemaError
from .functors import (
    DendriformAlgebra,
    DendriformCrossedModule,
    LieCrossedModule,
    RotaBaxterLieCrossedModule,
    check_dendriform_xmod,
    check_lie_crossed_module,
    check_rb_lie_xmod,
)
from .linalg import MatrixQ
from .xmodules import (
    CrossedModule,
    CrossedModuleExtension,
    check_crossed_module,
    check_extension,
)

FORMAT_VERSION = "1"

KINDS = (
    "prelie",
    "lie",
    "representation",
    "crossed_module",
    "extension",
    "rblie_xmod",
    "dendriform_xmod",
    "cochain",
    "lie_xmod",
)

Payload = (
    PreLieAlgebra
    | LieAlgebra
    | Representation
    | CrossedModule
    | CrossedModuleExtension
    | RotaBaxterLieCrossedModule
    | DendriformCrossedModule
    | Cochain
    | LieCrossedModule
)


@dataclass(frozen=True)
class DocumentModel:
    kind: str
    payload: Payload
    format_version: str = FORMAT_VERSION


# --- low-level readers --------------------------------------------------------


def _require_dict(obj, ptr: str, required: tuple[str, ...], optional: tuple[str, ...] = ()) -> dict:
    if not isinstance(obj, dict):
        raise SchemaError(ptr or "/", "expected an object")
    for key in required:
        if key not in obj:
            raise SchemaError(ptr or "/", f"missing field {key!r}")
    allowed = set(required) | set(optional)
    for key in obj:
        if key not in allowed:
            raise SchemaError(f"{ptr}/{key}", "unknown field")
    return obj


def _read_int(obj, ptr: str, minimum: int = 0) -> int:
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise SchemaError(ptr, "expected an integer")
    if obj < minimum:
        raise SchemaError(ptr, f"must be at least {minimum}")
    return obj


def _read_fraction(obj, ptr: str) -> Fraction:
    if isinstance(obj, bool):
        raise SchemaError(ptr, "expected an integer or a 'p/q' string")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        try:
            return Fraction(obj)
        except ZeroDivisionError:
            raise ValueError(f"{ptr}: zero denominator") from None
        except ValueError:
            raise SchemaError(ptr, f"not a rational literal: {obj!r}") from None
    raise SchemaError(ptr, "expected an integer or a 'p/q' string")


def _read_index(obj, ptr: str, size: int) -> int:
    """A 1-based index into a dimension of size `size`; returns 0-based."""
    value = _read_int(obj, ptr, minimum=1)
    if value > size:
        raise SchemaError(ptr, f"index {value} out of range 1..{size}")
    return value - 1


def _read_entry_list(obj, ptr: str) -> list:
    if not isinstance(obj, list):
        raise SchemaError(ptr, "expected a list of entries")
    return obj


def _read_tensor(obj, ptr: str, d1: int, d2: int, d3: int) -> Tensor3:
    cube = [[[Fraction(0)] * d3 for _ in range(d2)] for _ in range(d1)]
    seen: set[tuple[int, int, int]] = set()
    for pos, entry in enumerate(_read_entry_list(obj, ptr)):
        eptr = f"{ptr}/{pos}"
        if not isinstance(entry, list) or len(entry) != 4:
            raise SchemaError(eptr, "expected [i, j, k, value]")
        i = _read_index(entry[0], f"{eptr}/0", d1)
        j = _read_index(entry[1], f"{eptr}/1", d2)
        k = _read_index(entry[2], f"{eptr}/2", d3)
        if (i, j, k) in seen:
            raise SchemaError(eptr, "duplicate entry")
        seen.add((i, j, k))
        cube[i][j][k] = _read_fraction(entry[3], f"{eptr}/3")
    return tuple(tuple(tuple(row) for row in plane) for plane in cube)


def _read_matrix(obj, ptr: str, rows: int, cols: int) -> MatrixQ:
    grid = [[Fraction(0)] * cols for _ in range(rows)]
    seen: set[tuple[int, int]] = set()
    for pos, entry in enumerate(_read_entry_list(obj, ptr)):
        eptr = f"{ptr}/{pos}"
        if not isinstance(entry, list) or len(entry) != 3:
            raise SchemaError(eptr, "expected [row, col, value]")
        r = _read_index(entry[0], f"{eptr}/0", rows)
        c = _read_index(entry[1], f"{eptr}/1", cols)
        if (r, c) in seen:
            raise SchemaError(eptr, "duplicate entry")
        seen.add((r, c))
        grid[r][c] = _read_fraction(entry[2], f"{eptr}/2")
    return MatrixQ.from_rows(grid) if rows else MatrixQ(0, cols, ())


# --- per-kind payload readers -------------------------------------------------


def _read_prelie(obj, ptr: str) -> PreLieAlgebra:
    _require_dict(obj, ptr, ("dim", "product"), ("labels",))
    dim = _read_int(obj["dim"], f"{ptr}/dim")
    product = _read_tensor(obj["product"], f"{ptr}/product", dim, dim, dim)
    labels = None
    if "labels" in obj:
        raw = obj["labels"]
        if not isinstance(raw, list) or len(raw) != dim or not all(isinstance(s, str) for s in raw):
            raise SchemaError(f"{ptr}/labels", f"expected a list of {dim} strings")
        labels = tuple(raw)
    return PreLieAlgebra(dim, product, labels)


def _read_lie(obj, ptr: str) -> LieAlgebra:
    _require_dict(obj, ptr, ("dim", "bracket"))
    dim = _read_int(obj["dim"], f"{ptr}/dim")
    return LieAlgebra(dim, _read_tensor(obj["bracket"], f"{ptr}/bracket", dim, dim, dim))


def _read_dendriform(obj, ptr: str) -> DendriformAlgebra:
    _require_dict(obj, ptr, ("dim", "succ", "prec"))
    dim = _read_int(obj["dim"], f"{ptr}/dim")
    return DendriformAlgebra(
        dim,
        _read_tensor(obj["succ"], f"{ptr}/succ", dim, dim, dim),
        _read_tensor(obj["prec"], f"{ptr}/prec", dim, dim, dim),
    )


def _read_representation(obj, ptr: str) -> Representation:
    _require_dict(obj, ptr, ("algebra", "carrier_dim", "left", "right"))
    algebra = _read_prelie(obj["algebra"], f"{ptr}/algebra")
    carrier = _read_int(obj["carrier_dim"], f"{ptr}/carrier_dim")
    left = _read_tensor(obj["left"], f"{ptr}/left", algebra.dim, carrier, carrier)
    right = _read_tensor(obj["right"], f"{ptr}/right", carrier, algebra.dim, carrier)
    return Representation(algebra, carrier, left, right)


def _read_crossed_module(obj, ptr: str) -> CrossedModule:
    _require_dict(obj, ptr, ("m", "n", "mu", "left", "right"))
    m = _read_prelie(obj["m"], f"{ptr}/m")
    n = _read_prelie(obj["n"], f"{ptr}/n")
    mu = _read_matrix(obj["mu"], f"{ptr}/mu", n.dim, m.dim)
    left = _read_tensor(obj["left"], f"{ptr}/left", n.dim, m.dim, m.dim)
    right = _read_tensor(obj["right"], f"{ptr}/right", m.dim, n.dim, m.dim)
    return CrossedModule(AlgebraMorphism(m, n, mu), ActionData(n, m, left, right))


def _read_extension(obj, ptr: str) -> CrossedModuleExtension:
    _require_dict(
        obj,
        ptr,
        ("g", "v_dim", "v_left", "v_right", "m", "n", "i", "mu", "pi", "left", "right"),
    )
    g = _read_prelie(obj["g"], f"{ptr}/g")
    v_dim = _read_int(obj["v_dim"], f"{ptr}/v_dim")
    v_left = _read_tensor(obj["v_left"], f"{ptr}/v_left", g.dim, v_dim, v_dim)
    v_right = _read_tensor(obj["v_right"], f"{ptr}/v_right", v_dim, g.dim, v_dim)
    m = _read_prelie(obj["m"], f"{ptr}/m")
    n = _read_prelie(obj["n"], f"{ptr}/n")
    i = _read_matrix(obj["i"], f"{ptr}/i", m.dim, v_dim)
    mu = _read_matrix(obj["mu"], f"{ptr}/mu", n.dim, m.dim)
    pi = _read_matrix(obj["pi"], f"{ptr}/pi", g.dim, n.dim)
    left = _read_tensor(obj["left"], f"{ptr}/left", n.dim, m.dim, m.dim)
    right = _read_tensor(obj["right"], f"{ptr}/right", m.dim, n.dim, m.dim)
    return CrossedModuleExtension(
        Representation(g, v_dim, v_left, v_right),
        i,
        AlgebraMorphism(m, n, mu),
        AlgebraMorphism(n, g, pi),
        ActionData(n, m, left, right),
    )


def _read_rblie_xmod(obj, ptr: str) -> RotaBaxterLieCrossedModule:
    _require_dict(obj, ptr, ("m", "n", "t_m", "t_n", "mu", "rho"))
    m = _read_lie(obj["m"], f"{ptr}/m")
    n = _read_lie(obj["n"], f"{ptr}/n")
    return RotaBaxterLieCrossedModule(
        m=m,
        n=n,
        t_m=_read_matrix(obj["t_m"], f"{ptr}/t_m", m.dim, m.dim),
        t_n=_read_matrix(obj["t_n"], f"{ptr}/t_n", n.dim, n.dim),
        mu=_read_matrix(obj["mu"], f"{ptr}/mu", n.dim, m.dim),
        rho=_read_tensor(obj["rho"], f"{ptr}/rho", n.dim, m.dim, m.dim),
    )


def _read_dendriform_xmod(obj, ptr: str) -> DendriformCrossedModule:
    _require_dict(
        obj, ptr, ("m", "n", "mu", "succ_nm", "prec_mn", "succ_mn", "prec_nm")
    )
    m = _read_dendriform(obj["m"], f"{ptr}/m")
    n = _read_dendriform(obj["n"], f"{ptr}/n")
    return DendriformCrossedModule(
        m=m,
        n=n,
        mu=_read_matrix(obj["mu"], f"{ptr}/mu", n.dim, m.dim),
        succ_nm=_read_tensor(obj["succ_nm"], f"{ptr}/succ_nm", n.dim, m.dim, m.dim),
        prec_mn=_read_tensor(obj["prec_mn"], f"{ptr}/prec_mn", m.dim, n.dim, m.dim),
        succ_mn=_read_tensor(obj["succ_mn"], f"{ptr}/succ_mn", m.dim, n.dim, m.dim),
        prec_nm=_read_tensor(obj["prec_nm"], f"{ptr}/prec_nm", n.dim, m.dim, m.dim),
    )


def _read_lie_xmod(obj, ptr: str) -> LieCrossedModule:
    _require_dict(obj, ptr, ("m", "n", "mu", "action"))
    m = _read_lie(obj["m"], f"{ptr}/m")
    n = _read_lie(obj["n"], f"{ptr}/n")
    return LieCrossedModule(
        m,
        n,
        _read_matrix(obj["mu"], f"{ptr}/mu", n.dim, m.dim),
        _read_tensor(obj["action"], f"{ptr}/action", n.dim, m.dim, m.dim),
    )


def _read_cochain(obj, ptr: str) -> Cochain:
    _require_dict(obj, ptr, ("arity", "algebra_dim", "carrier_dim", "entries"))
    arity = _read_int(obj["arity"], f"{ptr}/arity", minimum=1)
    algebra_dim = _read_int(obj["algebra_dim"], f"{ptr}/algebra_dim")
    carrier_dim = _read_int(obj["carrier_dim"], f"{ptr}/carrier_dim")
    basis = CochainBasis(arity, algebra_dim)
    values: list[list[Fraction]] = [
        [Fraction(0)] * carrier_dim for _ in range(len(basis))
    ]
    seen: set[tuple[int, int]] = set()
    for pos, entry in enumerate(_read_entry_list(obj["entries"], f"{ptr}/entries")):
        eptr = f"{ptr}/entries/{pos}"
        if not isinstance(entry, list) or len(entry) != 3:
            raise SchemaError(eptr, "expected [[arguments], component, value]")
        args_obj = entry[0]
        if not isinstance(args_obj, list) or len(args_obj) != arity:
            raise SchemaError(f"{eptr}/0", f"expected {arity} argument indices")
        args = tuple(
            _read_index(a, f"{eptr}/0/{t}", algebra_dim) for t, a in enumerate(args_obj)
        )
        prefix, last = args[:-1], args[-1]
        if any(prefix[t] >= prefix[t + 1] for t in range(len(prefix) - 1)):
            raise SchemaError(f"{eptr}/0", "leading arguments must strictly increase")
        b = _read_index(entry[1], f"{eptr}/1", carrier_dim)
        slot = (basis.position(prefix, last), b)
        if slot in seen:
            raise SchemaError(eptr, "duplicate entry")
        seen.add(slot)
        values[slot[0]][b] = _read_fraction(entry[2], f"{eptr}/2")
    return Cochain(arity, algebra_dim, carrier_dim, tuple(tuple(v) for v in values))


_READERS = {
    "prelie": _read_prelie,
    "lie": _read_lie,
    "representation": _read_representation,
    "crossed_module": _read_crossed_module,
    "extension": _read_extension,
    "rblie_xmod": _read_rblie_xmod,
    "dendriform_xmod": _read_dendriform_xmod,
    "cochain": _read_cochain,
    "lie_xmod": _read_lie_xmod,
}


def document_from_obj(obj) -> DocumentModel:
    if not isinstance(obj, dict):
        raise SchemaError("/", "expected a JSON object")
    if "kind" not in obj:
        raise SchemaError("/", "missing field 'kind'")
    kind = obj["kind"]
    if kind not in _READERS:
        raise SchemaError("/kind", f"unknown kind {kind!r}")
    version = obj.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise SchemaError("/format_version", f"unsupported version {version!r}")
    body = {k: v for k, v in obj.items() if k not in ("kind", "format_version")}
    payload = _READERS[kind](body, "")
    return DocumentModel(kind, payload, FORMAT_VERSION)


def parse_document(path: str) -> DocumentModel:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except UnicodeDecodeError:
        raise ParseError(f"{path} is not UTF-8") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from None
    return document_from_obj(obj)


# --- serialization ------------------------------------------------------------


def _ser_tensor(cube: Tensor3) -> list:
    out = []
    for i, plane in enumerate(cube):
        for j, row in enumerate(plane):
            for k, value in enumerate(row):
                if value != 0:
                    out.append([i + 1, j + 1, k + 1, str(value)])
    return out


def _ser_matrix(m: MatrixQ) -> list:
    out = []
    for r in range(m.rows):
        for c in range(m.cols):
            if m.at(r, c) != 0:
                out.append([r + 1, c + 1, str(m.at(r, c))])
    return out


def _ser_prelie(a: PreLieAlgebra) -> dict:
    obj = {"dim": a.dim, "product": _ser_tensor(a.product)}
    if a.labels is not None:
        obj["labels"] = list(a.labels)
    return obj


def _ser_lie(a: LieAlgebra) -> dict:
    return {"dim": a.dim, "bracket": _ser_tensor(a.bracket)}


def _ser_dendriform(a: DendriformAlgebra) -> dict:
    return {"dim": a.dim, "succ": _ser_tensor(a.succ), "prec": _ser_tensor(a.prec)}


def _ser_representation(rep: Representation) -> dict:
    return {
        "algebra": _ser_prelie(rep.algebra),
        "carrier_dim": rep.carrier_dim,
        "left": _ser_tensor(rep.left),
        "right": _ser_tensor(rep.right),
    }


def _ser_crossed_module(x: CrossedModule) -> dict:
    return {
        "m": _ser_prelie(x.m_algebra),
        "n": _ser_prelie(x.n_algebra),
        "mu": _ser_matrix(x.mu.matrix),
        "left": _ser_tensor(x.action.left),
        "right": _ser_tensor(x.action.right),
    }


def _ser_extension(e: CrossedModuleExtension) -> dict:
    return {
        "g": _ser_prelie(e.g_algebra),
        "v_dim": e.v_dim,
        "v_left": _ser_tensor(e.v_rep.left),
        "v_right": _ser_tensor(e.v_rep.right),
        "m": _ser_prelie(e.m_algebra),
        "n": _ser_prelie(e.n_algebra),
        "i": _ser_matrix(e.i),
        "mu": _ser_matrix(e.mu.matrix),
        "pi": _ser_matrix(e.pi.matrix),
        "left": _ser_tensor(e.action.left),
        "right": _ser_tensor(e.action.right),
    }


def _ser_rblie_xmod(x: RotaBaxterLieCrossedModule) -> dict:
    return {
        "m": _ser_lie(x.m),
        "n": _ser_lie(x.n),
        "t_m": _ser_matrix(x.t_m),
        "t_n": _ser_matrix(x.t_n),
        "mu": _ser_matrix(x.mu),
        "rho": _ser_tensor(x.rho),
    }


def _ser_dendriform_xmod(x: DendriformCrossedModule) -> dict:
    return {
        "m": _ser_dendriform(x.m),
        "n": _ser_dendriform(x.n),
        "mu": _ser_matrix(x.mu),
        "succ_nm": _ser_tensor(x.succ_nm),
        "prec_mn": _ser_tensor(x.prec_mn),
        "succ_mn": _ser_tensor(x.succ_mn),
        "prec_nm": _ser_tensor(x.prec_nm),
    }


def _ser_lie_xmod(x: LieCrossedModule) -> dict:
    return {
        "m": _ser_lie(x.m),
        "n": _ser_lie(x.n),
        "mu": _ser_matrix(x.mu),
        "action": _ser_tensor(x.action),
    }


def _ser_cochain(f: Cochain) -> dict:
    basis = CochainBasis(f.arity, f.algebra_dim)
    entries = []
    for pos, (prefix, last) in enumerate(basis.tuples):
        args = [t + 1 for t in prefix] + [last + 1]
        for b, value in enumerate(f.values[pos]):
            if value != 0:
                entries.append([args, b + 1, str(value)])
    return {
        "arity": f.arity,
        "algebra_dim": f.algebra_dim,
        "carrier_dim": f.carrier_dim,
        "entries": entries,
    }


_WRITERS = {
    "prelie": _ser_prelie,
    "lie": _ser_lie,
    "representation": _ser_representation,
    "crossed_module": _ser_crossed_module,
    "extension": _ser_extension,
    "rblie_xmod": _ser_rblie_xmod,
    "dendriform_xmod": _ser_dendriform_xmod,
    "cochain": _ser_cochain,
    "lie_xmod": _ser_lie_xmod,
}


def document_to_obj(model: DocumentModel) -> dict:
    obj = {"kind": model.kind, "format_version": model.format_version}
    obj.update(_WRITERS[model.kind](model.payload))
    return obj


def dumps_pretty(obj, indent: int = 2, width: int = 72) -> str:
    """json.dumps with two-space indent, except that any container whose
    compact form fits in `width` columns stays on one line. Deterministic,
    so fixture files and golden outputs are byte-stable."""

    def render(node, depth: int) -> str:
        compact = json.dumps(node, separators=(", ", ": "))
        if len(compact) + depth * indent <= width:
            return compact
        pad = " " * ((depth + 1) * indent)
        close = " " * (depth * indent)
        if isinstance(node, dict) and node:
            body = ",\n".join(
                f"{pad}{json.dumps(key)}: {render(value, depth + 1)}"
                for key, value in node.items()
            )
            return "{\n" + body + "\n" + close + "}"
        if isinstance(node, list) and node:
            body = ",\n".join(f"{pad}{render(value, depth + 1)}" for value in node)
            return "[\n" + body + "\n" + close + "]"
        return compact

    return render(obj, 0) + "\n"


def serialize_document(model: DocumentModel) -> str:
    return dumps_pretty(document_to_obj(model))


_VERIFIERS = {
    "prelie": check_prelie,
    "lie": check_lie,
    "representation": check_representation,
    "crossed_module": check_crossed_module,
    "extension": check_extension,
    "rblie_xmod": check_rb_lie_xmod,
    "dendriform_xmod": check_dendriform_xmod,
    "lie_xmod": check_lie_crossed_module,
}


def verify_document(model: DocumentModel) -> Violation | None:
    """Run the axiom verifier matching the document's kind.

    Cochain documents carry no axioms of their own (closedness is a
    statement relative to a representation), so they always verify.
    """
    checker = _VERIFIERS.get(model.kind)
    if checker is None:
        return None
    return checker(model.payload)


def write_document(model: DocumentModel, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(serialize_document(model))
