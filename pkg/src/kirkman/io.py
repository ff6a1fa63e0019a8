"""Deterministic file formats.

Design file: JSON object with ``order``, ``block_size``, ``strength`` and
``classes`` (list of lists of ascending integer lists); classes in stored
order, blocks within a class sorted lexicographically.

Factorization file: JSON object with ``order`` and ``factors`` (list of lists
of ascending 2-element lists).

Catalog file: text lines ``id,score`` (an optional ``id,score`` header line is
tolerated).
"""

from __future__ import annotations

import json

from .core import ResolvableDesign, make_design
from .errors import FormatError
from .factorization import OneFactorization, from_factor_lists
from .placement import ChunkCatalog


def design_to_dict(d: ResolvableDesign) -> dict:
    return {
        "order": d.n,
        "block_size": d.k,
        "strength": d.t,
        "classes": [[list(b) for b in cls] for cls in d.classes],
    }


def design_from_dict(doc: dict) -> ResolvableDesign:
    try:
        n = int(doc["order"])
        k = int(doc["block_size"])
        t = int(doc["strength"])
        classes = doc["classes"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed design document: {exc}") from exc
    if not isinstance(classes, list):
        raise FormatError("classes must be a list")
    try:
        return make_design(n, k, t, classes)
    except Exception as exc:
        raise FormatError(f"invalid design content: {exc}") from exc


def dumps_design(d: ResolvableDesign) -> str:
    return json.dumps(design_to_dict(d), separators=(",", ":")) + "\n"


def loads_design(text: str) -> ResolvableDesign:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    return design_from_dict(doc)


def factorization_to_dict(f: OneFactorization) -> dict:
    factors = [sorted([int(a), int(b)] for a, b in factor) for factor in f.factors()]
    return {"order": f.m, "factors": factors}


def factorization_from_dict(doc: dict) -> OneFactorization:
    try:
        m = int(doc["order"])
        factors = doc["factors"]
        return from_factor_lists(m, factors)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed factorization document: {exc}") from exc


def dumps_factorization(f: OneFactorization) -> str:
    return json.dumps(factorization_to_dict(f), separators=(",", ":")) + "\n"


def loads_factorization(text: str) -> OneFactorization:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    return factorization_from_dict(doc)


def loads_catalog(text: str) -> ChunkCatalog:
    entries = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if lineno == 1 and line.lower() == "id,score":
            continue
        parts = line.rsplit(",", 1)
        if len(parts) != 2:
            raise FormatError(f"catalog line {lineno}: expected 'id,score'")
        chunk_id, score_text = parts[0].strip(), parts[1].strip()
        try:
            score = float(score_text)
        except ValueError as exc:
            raise FormatError(f"catalog line {lineno}: bad score {score_text!r}") from exc
        entries.append((chunk_id, score))
    return ChunkCatalog(tuple(entries))


def dumps_catalog(catalog: ChunkCatalog) -> str:
    lines = ["id,score"]
    lines += [f"{cid},{score:g}" for cid, score in catalog.entries]
    return "\n".join(lines) + "\n"
