"""JSON forms for every artifact the command line reads or writes.

All emitters are deterministic (sorted keys, fixed separators, trailing
newline) so that identical inputs produce byte-identical files.  Element
encodings follow the ring: decimal strings for integer and modular values,
monomial lists in canonical order for polynomials.
"""

from __future__ import annotations

import json

from . import indexing, level, matrices, plucker, rdu, rings
from .words import ConjWord, ExtWord


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


# -- elements and rings ----------------------------------------------------

ring_to_json = rings.ring_to_json
ring_from_json = rings.ring_from_json


def elem_to_json(ring, payload):
    return ring.payload_to_json(ring.coerce(payload))


def elem_from_json(ring, obj):
    return ring.payload_from_json(obj)


# -- matrices and pairs ------------------------------------------------------


def matrix_rows_to_json(m: matrices.Matrix):
    return [[elem_to_json(m.ring, x) for x in row] for row in m.rows]


def matrix_to_json(m: matrices.Matrix, n: int | None = None) -> dict:
    out = {
        "dim": m.dim,
        "ring": ring_to_json(m.ring),
        "rows": matrix_rows_to_json(m),
    }
    if n is not None:
        out["n"] = n
    return out


def matrix_from_json(obj: dict) -> matrices.Matrix:
    ring = ring_from_json(obj["ring"])
    rows = [[elem_from_json(ring, x) for x in row] for row in obj["rows"]]
    dim = obj.get("dim", len(rows))
    if dim != len(rows):
        raise ValueError("dim field disagrees with row count")
    return matrices.Matrix(ring, rows)


def pair_to_json(p: matrices.InvPair, n: int | None = None) -> dict:
    out = {
        "dim": p.dim,
        "ring": ring_to_json(p.ring),
        "fwd": matrix_rows_to_json(p.fwd),
        "bwd": matrix_rows_to_json(p.bwd),
    }
    if n is not None:
        out["n"] = n
    return out


def pair_from_json(obj: dict) -> matrices.InvPair:
    ring = ring_from_json(obj["ring"])
    fwd = matrices.Matrix(
        ring, [[elem_from_json(ring, x) for x in row] for row in obj["fwd"]]
    )
    bwd = matrices.Matrix(
        ring, [[elem_from_json(ring, x) for x in row] for row in obj["bwd"]]
    )
    return matrices.InvPair(fwd, bwd)  # certified on load


def pair_ambient_rank(obj: dict) -> int:
    if "n" in obj:
        return int(obj["n"])
    return indexing.ambient_rank(int(obj["dim"]))


# -- vectors -----------------------------------------------------------------


def vector_to_json(v: plucker.PairVector) -> dict:
    return {
        "n": v.n,
        "ring": ring_to_json(v.ring),
        "entries": [elem_to_json(v.ring, x) for x in v.entries],
    }


def vector_from_json(obj: dict) -> plucker.PairVector:
    ring = ring_from_json(obj["ring"])
    return plucker.PairVector(
        int(obj["n"]), ring, [elem_from_json(ring, x) for x in obj["entries"]]
    )


# -- words -------------------------------------------------------------------


def ext_word_to_json(w: ExtWord, ring) -> dict:
    return {
        "n": w.n,
        "letters": [
            {"i": i, "j": j, "xi": elem_to_json(ring, xi)} for i, j, xi in w.letters
        ],
    }


def ext_word_from_json(obj: dict, ring) -> ExtWord:
    return ExtWord(
        int(obj["n"]),
        [
            (int(l["i"]), int(l["j"]), elem_from_json(ring, l["xi"]))
            for l in obj["letters"]
        ],
    )


def conj_word_to_json(w: ConjWord, ring) -> dict:
    return {
        "n": w.n,
        "terms": [
            {"eps": eps, "h": ext_word_to_json(h, ring)} for eps, h in w.terms
        ],
    }


def conj_word_from_json(obj: dict, ring) -> ConjWord:
    return ConjWord(
        int(obj["n"]),
        [
            (int(t["eps"]), ext_word_from_json(t["h"], ring))
            for t in obj["terms"]
        ],
    )


# -- level generators ----------------------------------------------------------


def level_generator_to_json(gen: level.LevelGenerator, ring) -> dict:
    out = {
        "kind": gen.kind,
        "I": list(gen.I),
        "value": elem_to_json(ring, gen.value),
    }
    if gen.kind == "entry":
        out["J"] = list(gen.J)
    return out


# -- decompositions -------------------------------------------------------------


def decomposition_to_json(d: rdu.Decomposition, ring) -> dict:
    return {
        "case": d.case,
        "n": d.n,
        "k": d.k,
        "l": d.l,
        "ring": ring_to_json(ring),
        "param": elem_to_json(ring, d.param),
        "word": conj_word_to_json(d.word, ring),
        "certificates": [{"name": name, "ok": ok} for name, ok in d.certificates],
    }


def decomposition_parts_from_json(obj: dict):
    """Returns (word, k, l, param, n, ring) for re-verification."""
    ring = ring_from_json(obj["ring"])
    word = conj_word_from_json(obj["word"], ring)
    return (
        word,
        int(obj["k"]),
        int(obj["l"]),
        elem_from_json(ring, obj["param"]),
        int(obj["n"]),
        ring,
    )
