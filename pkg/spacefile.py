"""JSON documents for stratified spaces and for the zeros of a vector field.

Space document::

    {"name": ..., "dimension": n, "maximal_simplices": [[...], ...],
     "strata": [{"id": 0, "dim": 2, "name": "regular", "simplices": [[...], ...]}, ...],
     "subdivisions": 0}

Simplices not listed under any stratum belong to the unique stratum of
dimension n. Zeros document::

    {"field_class": "semi-radial",
     "zeros": [{"stratum": 1, "component": 0, "index": 1, "label": "pinch"}, ...]}
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path

from errors import SpaceFileError
from hopf import ZeroDatum
from simplicial import build_complex
from stratified import Stratum, stratify

logger = logging.getLogger('spacefile')


@dataclass(frozen=True)
class LoadedSpace:
    space: object
    subdivisions: int = 0


@dataclass(frozen=True)
class ZerosDocument:
    zeros: tuple
    field_class: str = None


def _read(source):
    if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("{")):
        path = Path(source)
        try:
            source = path.read_text()
        except OSError as e:
            raise SpaceFileError(f"cannot read {path}: {e}")
    try:
        document = json.loads(source)
    except json.JSONDecodeError as e:
        raise SpaceFileError(f"not a JSON document: {e}")
    if not isinstance(document, dict):
        raise SpaceFileError("document must be a JSON object")
    return document


def _require(document, key, kind):
    if key not in document:
        raise SpaceFileError(f"missing field {key!r}")
    value = document[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise SpaceFileError(f"field {key!r} has the wrong type")
    return value


def _optional(document, key, kind, default):
    return _require(document, key, kind) if key in document else default


def space_from_dict(document):
    n = _require(document, "dimension", int)
    maximal = _require(document, "maximal_simplices", list)
    declared = _require(document, "strata", list)
    subdivisions = document.get("subdivisions", 0)
    if not isinstance(subdivisions, int) or subdivisions < 0:
        raise SpaceFileError("subdivisions must be a nonnegative integer")

    K = build_complex(maximal)
    strata, labels = [], {}
    for raw in declared:
        if not isinstance(raw, dict):
            raise SpaceFileError("each stratum must be an object")
        stratum = Stratum(_require(raw, "id", int), _require(raw, "dim", int), raw.get("name", ""))
        strata.append(stratum)
        for simplex in raw.get("simplices", []):
            key = tuple(sorted(simplex))
            if key in labels:
                raise SpaceFileError(f"simplex {key} is listed under two strata")
            labels[key] = stratum.id

    top = [s for s in strata if s.dim == n]
    unlisted = [s for s in K.all_simplices() if s not in labels]
    if unlisted:
        if len(top) != 1:
            raise SpaceFileError(
                f"{len(unlisted)} simplices are unlisted and there is no unique top stratum to hold them")
        for simplex in unlisted:
            labels[simplex] = top[0].id

    space = stratify(K, labels, n, strata, name=document.get("name", ""))
    return LoadedSpace(space, subdivisions)


def space_to_dict(S, subdivisions=0):
    top = [s for s in S.strata if s.dim == S.n]
    implicit = top[0].id if len(top) == 1 else None
    return {
        "name": S.name,
        "dimension": S.n,
        "maximal_simplices": [list(s) for s in S.complex.maximal_simplices],
        "strata": [
            {
                "id": stratum.id,
                "dim": stratum.dim,
                "name": stratum.name,
                "simplices": [] if stratum.id == implicit else [list(s) for s in S.simplices_of(stratum.id)],
            }
            for stratum in S.strata
        ],
        "subdivisions": subdivisions,
    }


def load_space(source):
    """Load a space document from a path or a JSON string"""
    loaded = space_from_dict(_read(source))
    logger.info(f"loaded space {loaded.space.name or '<unnamed>'}: f-vector {loaded.space.complex.f_vector}")
    return loaded


def dump_space(S, subdivisions=0):
    return json.dumps(space_to_dict(S, subdivisions), indent=2, sort_keys=True) + "\n"


def load_zeros(source):
    document = _read(source)
    raw_zeros = _require(document, "zeros", list)
    field_class = document.get("field_class")
    zeros = []
    for raw in raw_zeros:
        if not isinstance(raw, dict):
            raise SpaceFileError("each zero must be an object")
        zeros.append(ZeroDatum(_require(raw, "stratum", int), _optional(raw, "component", int, 0),
                               _require(raw, "index", int), raw.get("label", "")))
    return ZerosDocument(tuple(zeros), field_class)


def dump_zeros(zeros, field_class=None):
    document = {"zeros": [
        {"stratum": z.stratum, "component": z.component, "index": z.index, "label": z.label}
        for z in zeros
    ]}
    if field_class is not None:
        document["field_class"] = field_class
    return json.dumps(document, indent=2, sort_keys=True) + "\n"
