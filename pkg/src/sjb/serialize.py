"""Canonical document serialization and CSV matrix export.

Documents are JSON with a fixed key order, two-space indent, and a
trailing newline, so equal objects serialize to byte-identical files.
Subsets appear as sorted 1-indexed element lists and coefficients as
decimal strings, keeping files readable and safe for any consumer's
integer width.
"""

from __future__ import annotations

import csv
import json
from typing import Union

from .jordan import JordanBasis, JordanChain
from .lattice import elements_to_mask, mask_to_elements, subset_str
from .operators import up_matrix
from .scd import ChainDecomposition, SubsetChain
from .vectors import Vector

FORMAT_VERSION = "1"

Serializable = Union[JordanBasis, ChainDecomposition]


class DocumentError(ValueError):
    """Document violates the schema or its structural invariants."""


def to_document(obj: Serializable) -> dict:
    """Plain-data document for a basis or decomposition."""
    if isinstance(obj, JordanBasis):
        chains = []
        for ch in obj.chains:
            vectors = [[{"subset": list(mask_to_elements(mask)), "coeff": str(c)}
                        for mask, c in v.items()]
                       for v in ch.vectors]
            chains.append({"start_rank": ch.start_rank, "vectors": vectors})
        return {"format_version": FORMAT_VERSION, "kind": "sjb", "n": obj.n,
                "chains": chains}
    if isinstance(obj, ChainDecomposition):
        chains = [{"start_rank": ch.start_rank,
                   "subsets": [list(mask_to_elements(s)) for s in ch.subsets]}
                  for ch in obj.chains]
        return {"format_version": FORMAT_VERSION, "kind": "scd", "n": obj.n,
                "chains": chains}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def serialize(obj: Serializable) -> bytes:
    """Canonical bytes; equal objects yield identical bytes."""
    return (json.dumps(to_document(obj), indent=2) + "\n").encode("ascii")


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise DocumentError(msg)


def _parse_subset(raw, n: int) -> int:
    _require(isinstance(raw, list), f"subset must be a list, got {type(raw).__name__}")
    _require(all(isinstance(e, int) and not isinstance(e, bool) for e in raw),
             f"subset elements must be integers: {raw!r}")
    _require(raw == sorted(set(raw)), f"subset must be sorted without repeats: {raw!r}")
    try:
        return elements_to_mask(raw, n)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None


def _parse_coeff(raw) -> int:
    _require(isinstance(raw, str), f"coeff must be a string, got {type(raw).__name__}")
    try:
        value = int(raw)
    except ValueError:
        raise DocumentError(f"coeff is not a decimal integer: {raw!r}") from None
    _require(str(value) == raw, f"coeff is not in canonical form: {raw!r}")
    _require(value != 0, "zero coefficients must not be stored")
    return value


def from_document(doc) -> Serializable:
    """Rebuild a basis or decomposition, validating the schema."""
    _require(isinstance(doc, dict), "document must be an object")
    _require(doc.get("format_version") == FORMAT_VERSION,
             f"unsupported format_version {doc.get('format_version')!r}")
    kind = doc.get("kind")
    _require(kind in ("sjb", "scd"), f"unknown kind {kind!r}")
    n = doc.get("n")
    _require(isinstance(n, int) and not isinstance(n, bool) and 0 <= n <= 63,
             f"n must be an integer in 0..63, got {n!r}")
    chains_raw = doc.get("chains")
    _require(isinstance(chains_raw, list), "chains must be a list")

    if kind == "sjb":
        chains = []
        for ci, ch in enumerate(chains_raw):
            _require(isinstance(ch, dict), f"chain {ci} must be an object")
            start = ch.get("start_rank")
            _require(isinstance(start, int) and not isinstance(start, bool)
                     and 0 <= start <= n, f"chain {ci}: bad start_rank {start!r}")
            vectors_raw = ch.get("vectors")
            _require(isinstance(vectors_raw, list) and vectors_raw,
                     f"chain {ci}: vectors must be a non-empty list")
            vectors = []
            for vi, terms_raw in enumerate(vectors_raw):
                _require(isinstance(terms_raw, list) and terms_raw,
                         f"chain {ci} vector {vi}: terms must be a non-empty list")
                terms = {}
                for t in terms_raw:
                    _require(isinstance(t, dict) and set(t) == {"subset", "coeff"},
                             f"chain {ci} vector {vi}: term must have subset and coeff")
                    mask = _parse_subset(t["subset"], n)
                    _require(mask not in terms,
                             f"chain {ci} vector {vi}: repeated subset {t['subset']!r}")
                    terms[mask] = _parse_coeff(t["coeff"])
                vectors.append(Vector(n, terms))
            chains.append(JordanChain(n, start, vectors))
        return JordanBasis(n, chains)

    chains = []
    for ci, ch in enumerate(chains_raw):
        _require(isinstance(ch, dict), f"chain {ci} must be an object")
        start = ch.get("start_rank")
        _require(isinstance(start, int) and not isinstance(start, bool)
                 and 0 <= start <= n, f"chain {ci}: bad start_rank {start!r}")
        subsets_raw = ch.get("subsets")
        _require(isinstance(subsets_raw, list) and subsets_raw,
                 f"chain {ci}: subsets must be a non-empty list")
        subsets = [_parse_subset(s, n) for s in subsets_raw]
        chains.append(SubsetChain(n, subsets))
    return ChainDecomposition(n, chains)


def deserialize(data: bytes | str) -> Serializable:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    return from_document(doc)


def save(obj: Serializable, path) -> None:
    with open(path, "wb") as fh:
        fh.write(serialize(obj))


def load(path) -> Serializable:
    with open(path, "rb") as fh:
        return deserialize(fh.read())


def export_up_matrix_csv(n: int, k: int, path) -> None:
    """0/1 matrix of up at rank k, with subset-labelled header row and column."""
    m = up_matrix(n, k)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow([""] + [subset_str(s) for s in m.col_basis])
        for label, row in zip(m.row_basis, m.rows):
            writer.writerow([subset_str(label)] + row)
