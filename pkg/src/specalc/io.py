"""
JSON formats.

Quiver:        {"vertices": n, "edges": [{"id": 0, "from": i, "to": j, "label": "a"}, ...],
                "vertex_names": [...]}            (labels and names optional)
Presentation:  {"format": 1, "quiver": <quiver>, "relations": ["b*a - d*c", ...]}
               Relation words compose right to left: "b*a" runs a first.
Species:       {"format": 1, "d": [...], "m": [...], "ext1": [[...]],
                "ext_higher": {"2": [[...]]}, "names": [...]}
               ext1[i][j] = dim_Q Ext^1(S_i, S_j), i.e. source and target of the
               extension as written; it gives an edge i -> j.
One-motive:    {"format": 1, "has_lattice": true, "has_torus": true, "lattice_rank": 1,
                "torus_rank": 1, "ext1_Q0_Q1": 0, "ext2_Q0_Q1": 1,
                "abelian_parts": [{"g": 1, "d": 2, "ext1_Q0_A": 1, "ext1_A_Q1": 1}]}
               Abelian Ext^1 entries are dimensions over the skew field D.
"""
from __future__ import annotations

import json
import sys
from importlib import resources
from pathlib import Path as FilePath

from .errors import InconsistentInput
from .motives import OneMotiveInput
from .pathalg import AlgebraPresentation
from .quiver import Edge, Quiver, SpeciesData

FORMAT_VERSION = 1


def quiver_to_dict(q: Quiver) -> dict:
    d = {"vertices": q.n_vertices,
         "edges": [{"id": e.id, "from": e.source, "to": e.target, **({"label": e.label} if e.label else {})}
                   for e in q.edges]}
    if q.vertex_names:
        d["vertex_names"] = list(q.vertex_names)
    return d


def quiver_from_dict(d: dict) -> Quiver:
    try:
        edges = sorted(d.get("edges", []), key=lambda e: e["id"])
        return Quiver(int(d["vertices"]),
                      tuple(Edge(int(e["id"]), int(e["from"]), int(e["to"]), e.get("label")) for e in edges),
                      d.get("vertex_names"))
    except (KeyError, TypeError) as err:
        raise InconsistentInput(f"malformed quiver: {err}") from None


def presentation_to_dict(p: AlgebraPresentation) -> dict:
    return {"format": FORMAT_VERSION, "quiver": quiver_to_dict(p.quiver), "relations": p.relation_words()}


def presentation_from_dict(d: dict) -> AlgebraPresentation:
    if "quiver" not in d:
        raise InconsistentInput("presentation needs a 'quiver' entry")
    return AlgebraPresentation(quiver_from_dict(d["quiver"]), list(d.get("relations", [])))


def species_to_dict(s: SpeciesData) -> dict:
    d = {"format": FORMAT_VERSION, "d": list(s.d), "m": list(s.m), "ext1": [list(r) for r in s.ext1]}
    if s.ext_higher is not None:
        d["ext_higher"] = {str(k): [list(r) for r in v] for k, v in s.ext_higher.items()}
    if s.names:
        d["names"] = list(s.names)
    return d


def species_from_dict(d: dict) -> SpeciesData:
    try:
        eh = d.get("ext_higher")
        return SpeciesData(d["d"], d.get("m", [1] * len(d["d"])), d["ext1"],
                           None if eh is None else {int(k): v for k, v in eh.items()},
                           d.get("names"))
    except (KeyError, TypeError) as err:
        raise InconsistentInput(f"malformed species: {err}") from None


def one_motive_from_dict(d: dict) -> OneMotiveInput:
    try:
        return OneMotiveInput.from_dict(d)
    except TypeError as err:
        raise InconsistentInput(f"malformed one-motive input: {err}") from None


def detect_kind(d: dict) -> str:
    if "quiver" in d:
        return "presentation"
    if "ext1" in d:
        return "species"
    if "has_lattice" in d or "abelian_parts" in d:
        return "one-motive"
    raise InconsistentInput("cannot tell what kind of input this is")


def read_json(path: str) -> dict:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as err:
        raise InconsistentInput(f"invalid JSON in {path}: {err}") from None


def fixture_path(name: str) -> FilePath:
    """Path of a bundled example input, e.g. ``fixture_path("square_tau0")``."""
    if not name.endswith(".json"):
        name += ".json"
    return FilePath(str(resources.files("specalc") / "data" / name))


def load_fixture(name: str) -> dict:
    with open(fixture_path(name)) as fh:
        return json.load(fh)


def list_fixtures() -> list:
    return sorted(p.name[:-5] for p in (resources.files("specalc") / "data").iterdir()
                  if p.name.endswith(".json"))
