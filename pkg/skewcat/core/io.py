"""
JSON input and output for every structure kind.

Identifiers are JSON strings, integers or arrays (read back as tuples).
Tables keyed by several identifiers are arrays of rows, the value last.
Every document carries a "kind"; docs/format.md describes each one.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import jsonschema
from jsonschema.exceptions import best_match

from .fincat import (FinCat, FinFunctor, Ident, NatTrans, chain_category, cyclic_group_category,
                     compose_functors, discrete_category, identity_functor, make_category,
                     monoid_category, preorder_category, product_category, terminal_category)
from ..modules.fixtures import HomBundle, get_fixture
from ..modules.mwmonads import Monad, MwAlgebra, MwMonad
from ..modules.profhom import FinProf, relation_prof
from ..modules.skewstruct import SkewBicat, SkewMonCat
from ..modules.warpings import SkewWarping, WarpingAlgebra
from ..utils.errors import FormatError
from ..utils.logger import setup_logger

logger = setup_logger(__name__)

FIXTURE_PREFIX = "fixture:"

_IDENT = {"$ref": "#/definitions/ident"}
_ROWS = {"type": "array", "items": {"type": "array", "items": _IDENT}}
_DEFINITIONS = {
    "ident": {"anyOf": [
        {"type": "string"},
        {"type": "integer"},
        {"type": "array", "items": {"$ref": "#/definitions/ident"}},
    ]},
    "category": {
        "type": "object",
        "anyOf": [
            {"required": ["builder"]},
            {"required": ["objects", "morphisms", "identity", "composition"]},
        ],
        "properties": {
            "builder": {"enum": ["chain", "cyclic", "terminal", "discrete", "preorder", "monoid"]},
            "objects": {"type": "array", "items": _IDENT},
            "elements": {"type": "array", "items": _IDENT},
            "morphisms": {"type": "array", "items": {
                "type": "object", "required": ["id", "src", "tgt"],
                "properties": {"id": _IDENT, "src": _IDENT, "tgt": _IDENT},
            }},
            "identity": _ROWS,
            "composition": _ROWS,
            "n": {"type": "integer", "minimum": 1},
            "leq": _ROWS,
            "table": _ROWS,
            "unit": _IDENT,
            "name": {"type": "string"},
        },
    },
    "functor-table": {
        "type": "object", "required": ["obj", "mor"],
        "properties": {"obj": _ROWS, "mor": _ROWS},
    },
}


def _schema(required: Sequence[str], properties: Dict[str, Any]) -> Dict[str, Any]:
    props = {"kind": {"type": "string"}, "name": {"type": "string"}}
    props.update(properties)
    return {"type": "object", "required": ["kind", *required], "properties": props,
            "definitions": _DEFINITIONS}


_CATEGORY = {"$ref": "#/definitions/category"}
_FUNCTOR = {"$ref": "#/definitions/functor-table"}

SCHEMAS: Dict[str, Dict[str, Any]] = {
    "category": {"allOf": [{"$ref": "#/definitions/category"}],
                 "required": ["kind"], "definitions": _DEFINITIONS},
    "skew-moncat": _schema(["base", "tensor", "unit", "alpha", "lambda", "rho"], {
        "base": _CATEGORY, "tensor": _FUNCTOR, "unit": _IDENT,
        "alpha": _ROWS, "lambda": _ROWS, "rho": _ROWS,
    }),
    "skew-bicat": _schema(["cells0", "homs", "composition", "units", "alpha", "lambda", "rho"], {
        "cells0": {"type": "array", "items": _IDENT},
        "homs": {"type": "array", "items": {
            "type": "object", "required": ["src", "tgt", "category"],
            "properties": {"src": _IDENT, "tgt": _IDENT, "category": _CATEGORY},
        }},
        "composition": {"type": "array", "items": {
            "type": "object", "required": ["cells", "obj", "mor"],
            "properties": {"cells": {"type": "array", "items": _IDENT, "minItems": 3, "maxItems": 3},
                           "obj": _ROWS, "mor": _ROWS},
        }},
        "units": _ROWS, "alpha": _ROWS, "lambda": _ROWS, "rho": _ROWS,
    }),
    "monad": _schema(["base", "D", "mult", "unit"], {
        "base": _CATEGORY, "D": _FUNCTOR, "mult": _ROWS, "unit": _ROWS,
    }),
    "mw-monad": _schema(["base", "D", "T", "K"], {
        "base": _CATEGORY, "D": _ROWS, "T": _ROWS, "K": _ROWS,
    }),
    "mw-algebra": _schema(["monad", "carrier", "E"], {
        "monad": {"type": "object"}, "carrier": _IDENT, "E": _ROWS,
    }),
    "warping": _schema(["ambient", "D", "T", "K", "v", "k", "v0"], {
        "ambient": {"type": "object"}, "D": _ROWS,
        "T": {"type": "array", "items": {
            "type": "object", "required": ["src", "tgt", "obj", "mor"],
            "properties": {"src": _IDENT, "tgt": _IDENT, "obj": _ROWS, "mor": _ROWS},
        }},
        "K": _ROWS, "v": _ROWS, "k": _ROWS, "v0": _ROWS,
    }),
    "warping-algebra": _schema(["warping", "carrier", "E", "e", "e0"], {
        "warping": {"type": "object"}, "carrier": _IDENT,
        "E": {"type": "array", "items": {
            "type": "object", "required": ["src", "obj", "mor"],
            "properties": {"src": _IDENT, "obj": _ROWS, "mor": _ROWS},
        }},
        "e": _ROWS, "e0": _ROWS,
    }),
    "profunctor": _schema([], {
        "dom": _CATEGORY, "cod": _CATEGORY,
        "values": _ROWS, "left": _ROWS, "right": _ROWS, "relation": _ROWS,
    }),
    "hom-bundle": _schema(["base"], {
        "base": _CATEGORY,
        "endo": {"type": "array", "items": {"type": "object"}},
        "hom": {"type": "array", "items": {"type": "object"}},
    }),
    "profunctor-list": _schema(["items"], {
        "items": {"type": "array", "items": {"type": "object"}},
    }),
}


# ---------------------------------------------------------------------------
# identifiers and validation
# ---------------------------------------------------------------------------

def ident(x: Any) -> Ident:
    """JSON value to identifier: arrays become tuples."""
    if isinstance(x, list):
        return tuple(ident(y) for y in x)
    return x


def encode(x: Ident) -> Any:
    """Identifier to JSON value."""
    if isinstance(x, tuple):
        return [encode(y) for y in x]
    if isinstance(x, frozenset):
        return sorted((encode(y) for y in x), key=str)
    return x


def validate(doc: Any, kind: Optional[str] = None, location: str = "<input>") -> str:
    """Check doc against the schema of its kind.

    [RAISES]
    FormatError
        Unknown kind or schema violation; location gives the JSON path
    """
    if not isinstance(doc, dict) or "kind" not in doc:
        raise FormatError("document has no 'kind'", location=location)
    found = doc["kind"]
    if kind is not None and found != kind:
        raise FormatError(f"expected kind '{kind}', found '{found}'", location=location)
    if found not in SCHEMAS:
        raise FormatError(f"unknown kind '{found}'", location=location)
    error = best_match(jsonschema.Draft7Validator(SCHEMAS[found]).iter_errors(doc))
    if error is not None:
        path = "/".join(str(p) for p in error.absolute_path)
        raise FormatError(error.message, location=f"{location}:/{path}")
    return found


def _rows(rows: Sequence[Sequence[Any]]) -> List[Tuple[Ident, ...]]:
    return [tuple(ident(x) for x in row) for row in rows]


def _table(rows: Sequence[Sequence[Any]], width: int = 1) -> Dict[Ident, Ident]:
    """Rows (k1, ..., kw, value) to a dict; single keys stay unwrapped."""
    out = {}
    for row in _rows(rows):
        key = row[0] if width == 1 else row[:width]
        out[key] = row[width]
    return out


# ---------------------------------------------------------------------------
# readers
# ---------------------------------------------------------------------------

def read_category(doc: Mapping[str, Any]) -> FinCat:
    builder = doc.get("builder")
    name = doc.get("name")
    if builder == "chain":
        return chain_category(doc["n"])
    if builder == "cyclic":
        return cyclic_group_category(doc["n"])
    if builder == "terminal":
        return terminal_category()
    if builder == "discrete":
        return discrete_category([ident(x) for x in doc["objects"]], name=name or "D")
    if builder == "preorder":
        leq = {tuple(p) for p in _rows(doc["leq"])}
        return preorder_category([ident(x) for x in doc["objects"]],
                                 lambda x, y: x == y or (x, y) in leq, name=name or "P")
    if builder == "monoid":
        table = _table(doc["table"], width=2)
        elements = [ident(x) for x in doc["elements"]]
        return monoid_category(elements, lambda g, f: table[(g, f)], ident(doc["unit"]), name=name or "M")
    return make_category(
        [ident(x) for x in doc["objects"]],
        [(ident(m["id"]), ident(m["src"]), ident(m["tgt"])) for m in doc["morphisms"]],
        _table(doc["identity"]),
        _table(doc["composition"], width=2),
        name=name or "C",
    )


def _functor(dom: FinCat, cod: FinCat, doc: Mapping[str, Any], width: int = 1, name: str = "F") -> FinFunctor:
    return FinFunctor(dom, cod, _table(doc["obj"], width), _table(doc["mor"], width), name=name)


def read_skew_moncat(doc: Mapping[str, Any]):
    base = read_category(doc["base"])
    return SkewMonCat(
        base=base,
        tensor=_functor(product_category(base, base), base, doc["tensor"], width=2, name="(x)"),
        unit=ident(doc["unit"]),
        alpha=_table(doc["alpha"], width=3),
        lam=_table(doc["lambda"]),
        rho=_table(doc["rho"]),
        name=doc.get("name", "C"),
    )


def read_skew_bicat(doc: Mapping[str, Any]):
    homs = {(ident(h["src"]), ident(h["tgt"])): read_category(h["category"]) for h in doc["homs"]}
    functors = {}
    for entry in doc["composition"]:
        x, y, z = (ident(c) for c in entry["cells"])
        dom = product_category(homs[(y, z)], homs[(x, y)])
        functors[(x, y, z)] = _functor(dom, homs[(x, z)], entry, width=2, name="M")
    return SkewBicat(
        cells0=tuple(ident(x) for x in doc["cells0"]),
        hom=homs,
        M=functors,
        j=_table(doc["units"]),
        alpha=_table(doc["alpha"], width=3),
        lam=_table(doc["lambda"]),
        rho=_table(doc["rho"]),
        name=doc.get("name", "B"),
    )


def read_monad(doc: Mapping[str, Any]):
    base = read_category(doc["base"])
    D = _functor(base, base, doc["D"], name="D")
    return Monad(
        base, D,
        NatTrans(compose_functors(D, D), D, _table(doc["mult"]), name="m"),
        NatTrans(identity_functor(base), D, _table(doc["unit"]), name="K"),
        name=doc.get("name", "D"),
    )


def read_mw_monad(doc: Mapping[str, Any]):
    # T rows are (f, Y, Tf) or (X, Y, f, Tf)
    T = {(row[2], row[1]) if len(row) == 4 else row[:2]: row[-1] for row in _rows(doc["T"])}
    return MwMonad(
        read_category(doc["base"]),
        _table(doc["D"]),
        T,
        _table(doc["K"]),
        name=doc.get("name", "T"),
    )


def read_mw_algebra(doc: Mapping[str, Any]):
    return MwAlgebra(read_mw_monad(doc["monad"]), ident(doc["carrier"]), _table(doc["E"]),
                     name=doc.get("name", "A"))


def read_warping(doc: Mapping[str, Any]):
    b = read_skew_bicat(doc["ambient"])
    D = _table(doc["D"])
    T = {}
    for entry in doc["T"]:
        x, y = ident(entry["src"]), ident(entry["tgt"])
        T[(x, y)] = _functor(b.hom[(x, D[y])], b.hom[(D[x], D[y])], entry, name="T")
    return SkewWarping(
        ambient=b, D=D, T=T, K=_table(doc["K"]),
        v=_table(doc["v"], width=3), k=_table(doc["k"], width=2), v0=_table(doc["v0"]),
        name=doc.get("name", "T"),
    )


def read_warping_algebra(doc: Mapping[str, Any]):
    w = read_warping(doc["warping"])
    b, A = w.ambient, ident(doc["carrier"])
    E = {}
    for entry in doc["E"]:
        y = ident(entry["src"])
        E[y] = _functor(b.hom[(y, A)], b.hom[(w.D[y], A)], entry, name="E")
    return WarpingAlgebra(w, A, E, _table(doc["e"], width=2), _table(doc["e0"]), name=doc.get("name", "A"))


def read_profunctor(doc: Mapping[str, Any], dom: Optional[FinCat] = None, cod: Optional[FinCat] = None):
    """A profunctor; dom and cod in the document override the defaults given."""
    cod = read_category(doc["cod"]) if "cod" in doc else cod
    if cod is None:
        raise FormatError("profunctor without a codomain category")
    if "dom" in doc:
        dom = read_category(doc["dom"])
    dom = dom or discrete_category(cod.objects, name=f"ob{cod.name}")
    name = doc.get("name", "P")
    if "relation" in doc:
        return relation_prof(dom, cod, frozenset(tuple(r) for r in _rows(doc["relation"])), name=name)
    values = {(row[0], row[1]): tuple(row[2]) for row in _rows(doc.get("values", []))}
    left = {(row[0], row[1]): dict(row[2]) for row in _rows(doc.get("left", []))}
    right = {(row[0], row[1]): dict(row[2]) for row in _rows(doc.get("right", []))}
    return FinProf(dom, cod, values, left, right, name=name)


def read_hom_bundle(doc: Mapping[str, Any]):
    B = read_category(doc["base"])
    return HomBundle(
        B,
        [read_profunctor(p, dom=B, cod=B) for p in doc.get("endo", [])],
        [read_profunctor(p, cod=B) for p in doc.get("hom", [])],
    )


def read_profunctor_list(doc: Union[Mapping[str, Any], List], B: FinCat, endo: bool) -> List[Any]:
    items = doc["items"] if isinstance(doc, dict) else doc
    return [read_profunctor(p, dom=B if endo else None, cod=B) for p in items]


READERS = {
    "category": read_category,
    "skew-moncat": read_skew_moncat,
    "skew-bicat": read_skew_bicat,
    "monad": read_monad,
    "mw-monad": read_mw_monad,
    "mw-algebra": read_mw_algebra,
    "warping": read_warping,
    "warping-algebra": read_warping_algebra,
    "profunctor": read_profunctor,
    "hom-bundle": read_hom_bundle,
}


def load_document(doc: Mapping[str, Any], kind: Optional[str] = None, location: str = "<input>") -> Tuple[str, Any]:
    """Validate and build a structure.

    [RAISES]
    FormatError
        Schema violation, or a table that references a missing key
    """
    found = validate(doc, kind, location)
    if found not in READERS:
        raise FormatError(f"kind '{found}' cannot be read on its own", location=location)
    try:
        return found, READERS[found](doc)
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError(f"inconsistent {found} document: {e!r}", location=location)


def read_json(path: Union[str, Path]) -> Any:
    try:
        with open(path) as handle:
            return json.load(handle)
    except OSError as e:
        raise FormatError(f"cannot read file: {e.strerror}", location=str(path))
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e.msg}", location=f"{path}:{e.lineno}:{e.colno}")


def load_input(source: str, kinds: Optional[Sequence[str]] = None) -> Tuple[str, Any]:
    """Load 'fixture:NAME' or a JSON file.

    [PARAMETERS]
    source : str
        Fixture reference or path
    kinds : Optional[Sequence[str]]
        Accepted kinds; anything else is a FormatError

    [EXAMPLE]
    >>> kind, c = load_input("fixture:z2-strict")
    >>> kind
    'skew-moncat'
    """
    if source.startswith(FIXTURE_PREFIX):
        fixture = get_fixture(source[len(FIXTURE_PREFIX):])
        kind, value = fixture.kind, fixture.build()
    else:
        kind, value = load_document(read_json(source), location=source)
    if kinds is not None and kind not in kinds:
        raise FormatError(f"expected one of {', '.join(kinds)}, found '{kind}'", location=source)
    logger.debug(f"Loaded {kind} from {source}")
    return kind, value


# ---------------------------------------------------------------------------
# writers
# ---------------------------------------------------------------------------

def _out(rows) -> List[List[Any]]:
    return [[encode(x) for x in row] for row in rows]


def dump_category(c: FinCat) -> Dict[str, Any]:
    return {
        "kind": "category",
        "name": c.name,
        "objects": [encode(x) for x in c.objects],
        "morphisms": [{"id": encode(m), "src": encode(c.src[m]), "tgt": encode(c.tgt[m])}
                      for m in c.morphisms],
        "identity": _out((x, c.identity[x]) for x in c.objects),
        "composition": _out((g, f, h) for (g, f), h in c.comp.items()),
    }


def _dump_functor(F: FinFunctor, pairs: bool = False) -> Dict[str, Any]:
    def row(k, v):
        return (*k, v) if pairs else (k, v)
    return {"obj": _out(row(k, v) for k, v in F.obj_map.items()),
            "mor": _out(row(k, v) for k, v in F.mor_map.items())}


def dump_skew_moncat(c) -> Dict[str, Any]:
    return {
        "kind": "skew-moncat",
        "name": c.name,
        "base": dump_category(c.base),
        "tensor": _dump_functor(c.tensor, pairs=True),
        "unit": encode(c.unit),
        "alpha": _out((*k, v) for k, v in c.alpha.items()),
        "lambda": _out(c.lam.items()),
        "rho": _out(c.rho.items()),
    }


def dump_skew_bicat(b) -> Dict[str, Any]:
    return {
        "kind": "skew-bicat",
        "name": b.name,
        "cells0": [encode(x) for x in b.cells0],
        "homs": [{"src": encode(x), "tgt": encode(y), "category": dump_category(b.hom[(x, y)])}
                 for x, y in b.hom_keys()],
        "composition": [dict(cells=[encode(x) for x in key], **_dump_functor(F, pairs=True))
                        for key, F in b.M.items()],
        "units": _out(b.j.items()),
        "alpha": _out((*k, v) for k, v in b.alpha.items()),
        "lambda": _out(b.lam.items()),
        "rho": _out(b.rho.items()),
    }


def dump_monad(m) -> Dict[str, Any]:
    return {
        "kind": "monad",
        "name": m.name,
        "base": dump_category(m.base),
        "D": _dump_functor(m.D),
        "mult": _out(m.mult.components.items()),
        "unit": _out(m.unit.components.items()),
    }


def dump_mw_monad(t) -> Dict[str, Any]:
    return {
        "kind": "mw-monad",
        "name": t.name,
        "base": dump_category(t.base),
        "D": _out(t.D.items()),
        "T": _out((*k, v) for k, v in t.T.items()),
        "K": _out(t.K.items()),
    }


def dump_warping(w) -> Dict[str, Any]:
    return {
        "kind": "warping",
        "name": w.name,
        "ambient": dump_skew_bicat(w.ambient),
        "D": _out(w.D.items()),
        "T": [dict(src=encode(x), tgt=encode(y), **_dump_functor(F)) for (x, y), F in w.T.items()],
        "K": _out(w.K.items()),
        "v": _out((*k, m) for k, m in w.v.items()),
        "k": _out((*k, m) for k, m in w.k.items()),
        "v0": _out(w.v0.items()),
    }


def dump_profunctor(P) -> Dict[str, Any]:
    return {
        "kind": "profunctor",
        "name": P.name,
        "dom": dump_category(P.dom),
        "cod": dump_category(P.cod),
        "values": [[encode(b), encode(a), [encode(x) for x in xs]] for (b, a), xs in P.values.items()],
        "left": [[encode(k[0]), encode(k[1]), _out(t.items())] for k, t in P.left.items()],
        "right": [[encode(k[0]), encode(k[1]), _out(t.items())] for k, t in P.right.items()],
    }


def dump_hom_bundle(bundle: HomBundle) -> Dict[str, Any]:
    return {
        "kind": "hom-bundle",
        "base": dump_category(bundle.B),
        "endo": [dump_profunctor(P) for P in bundle.endo],
        "hom": [dump_profunctor(P) for P in bundle.hom],
    }


def dump(value: Any) -> Dict[str, Any]:
    """JSON document for any supported structure.

    [RAISES]
    FormatError
        If the value has no document form
    """
    writers = [
        (FinCat, dump_category),
        (SkewMonCat, dump_skew_moncat),
        (SkewBicat, dump_skew_bicat),
        (Monad, dump_monad),
        (MwMonad, dump_mw_monad),
        (SkewWarping, dump_warping),
        (FinProf, dump_profunctor),
        (HomBundle, dump_hom_bundle),
    ]
    for cls, writer in writers:
        if isinstance(value, cls):
            return writer(value)
    raise FormatError(f"no JSON form for {type(value).__name__}")


def write_json(doc: Any, path: Optional[Union[str, Path]] = None, indent: int = 2) -> str:
    text = json.dumps(doc, indent=indent)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text
