"""The JSON interchange layer.

Frozen examples pin the accepted syntax (1-based indices, "p/q"
scalars, sparse entries); a round-trip suite checks that
parse -> serialize -> parse is the identity for one payload of every
kind and that serialization is canonical (byte-stable).
"""

import json
from fractions import Fraction

import pytest

from preliecoh.algebra import PreLieAlgebra, Representation
from preliecoh.cochain import Cochain
from preliecoh.documents import (
    DocumentModel,
    document_from_obj,
    document_to_obj,
    parse_document,
    serialize_document,
    write_document,
)
from preliecoh.errors import ParseError, SchemaError
from preliecoh.functors import prelie_to_lie_xmod
from preliecoh.linalg import MatrixQ, vector
from preliecoh.xmodules import double_extension, identity_xmod, trivial_extension

from test_functors import (
    AFFINE2,
    LMULT2,
    SOLV2,
    identity_dendriform_xmod,
    rb_solv2,
    sparse_tensor,
    zero_dendriform,
)

F = Fraction


def test_accepts_minimal_idempotent_line():
    doc = document_from_obj(
        {"kind": "prelie", "format_version": "1", "dim": 1, "product": [[1, 1, 1, "1"]]}
    )
    assert doc.kind == "prelie"
    assert doc.payload.basis_product(0, 0) == vector([1])


def test_format_version_defaults_to_one():
    doc = document_from_obj({"kind": "prelie", "dim": 2, "product": []})
    assert doc.format_version == "1"
    assert doc.payload.product == PreLieAlgebra.zero_product(2).product


def test_integer_and_string_scalars_agree():
    a = document_from_obj({"kind": "prelie", "dim": 1, "product": [[1, 1, 1, 2]]})
    b = document_from_obj({"kind": "prelie", "dim": 1, "product": [[1, 1, 1, "2"]]})
    assert a == b
    c = document_from_obj({"kind": "prelie", "dim": 1, "product": [[1, 1, 1, "-3/7"]]})
    assert c.payload.basis_product(0, 0) == (F(-3, 7),)


def test_zero_denominator_is_a_value_error():
    with pytest.raises(ValueError, match="zero denominator"):
        document_from_obj({"kind": "prelie", "dim": 1, "product": [[1, 1, 1, "1/0"]]})


@pytest.mark.parametrize("scalar", [True, 1.5, None, [1]])
def test_non_rational_scalars_rejected(scalar):
    with pytest.raises(SchemaError):
        document_from_obj({"kind": "prelie", "dim": 1, "product": [[1, 1, 1, scalar]]})


def test_bad_rational_literal_points_at_the_entry():
    with pytest.raises(SchemaError) as info:
        document_from_obj({"kind": "prelie", "dim": 1, "product": [[1, 1, 1, "x"]]})
    assert info.value.path == "/product/0/3"


def test_out_of_range_index_rejected():
    with pytest.raises(SchemaError) as info:
        document_from_obj({"kind": "prelie", "dim": 2, "product": [[1, 3, 1, "1"]]})
    assert info.value.path == "/product/0/1"
    with pytest.raises(SchemaError):
        document_from_obj({"kind": "prelie", "dim": 2, "product": [[0, 1, 1, "1"]]})


def test_duplicate_entries_rejected():
    with pytest.raises(SchemaError, match="duplicate"):
        document_from_obj(
            {"kind": "prelie", "dim": 1, "product": [[1, 1, 1, "1"], [1, 1, 1, "2"]]}
        )


def test_unknown_kind_and_fields_rejected():
    with pytest.raises(SchemaError, match="unknown kind"):
        document_from_obj({"kind": "group", "dim": 1})
    with pytest.raises(SchemaError) as info:
        document_from_obj({"kind": "prelie", "dim": 1, "product": [], "extra": 1})
    assert info.value.path == "/extra"
    with pytest.raises(SchemaError, match="missing field"):
        document_from_obj({"kind": "prelie", "dim": 1})


def test_unsupported_format_version_rejected():
    with pytest.raises(SchemaError, match="unsupported version"):
        document_from_obj(
            {"kind": "prelie", "format_version": "2", "dim": 1, "product": []}
        )


def test_labels_survive_round_trip():
    named = PreLieAlgebra(2, LMULT2.product, ("x", "y"))
    model = DocumentModel("prelie", named)
    again = document_from_obj(json.loads(serialize_document(model)))
    assert again.payload.labels == ("x", "y")
    assert again == model


def test_cochain_entry_syntax():
    doc = document_from_obj(
        {
            "kind": "cochain",
            "arity": 3,
            "algebra_dim": 2,
            "carrier_dim": 2,
            "entries": [[[1, 2, 2], 1, "5/3"], [[1, 2, 1], 2, -1]],
        }
    )
    f = doc.payload
    assert f.value_at((0, 1, 1)) == (F(5, 3), F(0))
    assert f.value_at((0, 1, 0)) == (F(0), F(-1))
    # antisymmetry of the leading pair is applied on lookup
    assert f.value_at((1, 0, 1)) == (F(-5, 3), F(0))


def test_cochain_rejects_bad_argument_tuples():
    base = {"kind": "cochain", "arity": 3, "algebra_dim": 2, "carrier_dim": 1}
    with pytest.raises(SchemaError, match="strictly increase"):
        document_from_obj({**base, "entries": [[[2, 1, 1], 1, "1"]]})
    with pytest.raises(SchemaError, match="argument indices"):
        document_from_obj({**base, "entries": [[[1, 2], 1, "1"]]})
    with pytest.raises(SchemaError, match="duplicate"):
        document_from_obj(
            {**base, "entries": [[[1, 2, 1], 1, "1"], [[1, 2, 1], 1, "2"]]}
        )


def test_matrix_entries_must_be_triples():
    with pytest.raises(SchemaError, match="row, col, value"):
        document_from_obj(
            {
                "kind": "crossed_module",
                "m": {"dim": 1, "product": []},
                "n": {"dim": 1, "product": []},
                "mu": [[1, 1]],
                "left": [],
                "right": [],
            }
        )


def _sample_models():
    xm = identity_xmod(LMULT2)
    cochain = Cochain.from_coordinates(
        2, 2, 1, [F(1, 2), F(0), F(-3), F(7)]
    )
    return [
        DocumentModel("prelie", AFFINE2),
        DocumentModel("lie", SOLV2),
        DocumentModel("representation", Representation.regular(LMULT2)),
        DocumentModel("crossed_module", xm),
        DocumentModel("extension", trivial_extension(Representation.trivial(LMULT2, 1))),
        DocumentModel("extension", double_extension(Representation.regular(LMULT2))),
        DocumentModel("rblie_xmod", rb_solv2(MatrixQ.from_rows([[1, 0], [0, 0]]))),
        DocumentModel(
            "dendriform_xmod", identity_dendriform_xmod(zero_dendriform(2))
        ),
        DocumentModel("cochain", cochain),
        DocumentModel("lie_xmod", prelie_to_lie_xmod(xm)),
    ]


def test_round_trip_is_identity_for_every_kind():
    for model in _sample_models():
        text = serialize_document(model)
        again = document_from_obj(json.loads(text))
        assert again == model, model.kind
        assert serialize_document(again) == text, model.kind


def test_serialization_is_canonical():
    for model in _sample_models():
        obj = document_to_obj(model)
        assert obj["kind"] == model.kind
        assert obj["format_version"] == "1"
        assert serialize_document(model) == serialize_document(model)


def test_parse_document_reads_files(tmp_path):
    target = tmp_path / "algebra.json"
    model = DocumentModel("prelie", AFFINE2)
    write_document(model, str(target))
    assert parse_document(str(target)) == model


def test_parse_document_error_paths(tmp_path):
    with pytest.raises(ParseError, match="cannot read"):
        parse_document(str(tmp_path / "missing.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(ParseError, match="not valid JSON"):
        parse_document(str(bad))
    binary = tmp_path / "binary.json"
    binary.write_bytes(b"\xff\xfe{}")
    with pytest.raises(ParseError):
        parse_document(str(binary))


def test_sparse_zero_entries_are_dropped_on_output():
    algebra = PreLieAlgebra(2, sparse_tensor(2, 2, 2, {(0, 1, 1): 1}))
    obj = document_to_obj(DocumentModel("prelie", algebra))
    assert obj["product"] == [[1, 2, 2, "1"]]
