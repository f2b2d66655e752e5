"""Knot-table ingestion and serialization.

A knot file is a JSON document: {"knots": [record, ...]} where each
record carries exactly the fields the surgery formulas consume:

    name            string, unique within the file
    alexander       [a_0, a_1, ..., a_g]  (symmetric normalization)
    tau             integer concordance invariant
    genus           integer genus bound g
    V               [V_0, ..., V_g]
    V_neg           optional [V_-1, ..., V_-g]; defaults to the
                    monotone extension V_-k = V_k + k
    H               optional declared [H_0, ..., H_g], cross-checked
                    against H_k = V_-k
    reduced         optional [{"k", "rank", "local_gradings"}, ...]
    seifert         optional row-major integer matrix
    mirror_V        optional [V_0, ..., V_g] of the mirror
    mirror_V_neg    optional negative side of the mirror profile

Validation failures (profile violations, Delta(1) != 1, duplicate
names) are hard errors at ingest, reported with the record's name.
"""

from __future__ import annotations

import json
from pathlib import Path

from .knots import (
    AlexanderPoly,
    KnotData,
    ReducedSummand,
    SeifertMatrix,
    VHProfile,
    vh_errors,
)

_FIXTURE = Path(__file__).parent / "data" / "knots.json"


class KnotFileError(ValueError):
    """A knot file failed to parse or validate."""


def _profile(record: dict, name: str, v_key: str, neg_key: str) -> VHProfile:
    genus = record["genus"]
    declared_h = record.get("H")
    vh = VHProfile(
        genus=genus,
        v_pos=tuple(record[v_key]),
        v_neg=tuple(record[neg_key]) if neg_key in record else None,
        declared_h=tuple(declared_h) if declared_h and v_key == "V" else None,
    )
    errors = vh_errors(vh)
    if errors:
        raise KnotFileError(f"{name}: invalid {v_key} profile: {'; '.join(errors)}")
    return vh


def _knot_from_record(record: dict) -> KnotData:
    name = record.get("name")
    if not isinstance(name, str) or not name:
        raise KnotFileError(f"record without a name: {record!r}")
    try:
        alexander = AlexanderPoly(tuple(record["alexander"]))
        vh = _profile(record, name, "V", "V_neg")
        mirror_vh = (
            _profile(record, name, "mirror_V", "mirror_V_neg")
            if "mirror_V" in record
            else None
        )
        reduced = tuple(
            ReducedSummand(
                k=entry["k"],
                rank=entry["rank"],
                local_gradings=tuple(entry["local_gradings"]),
            )
            for entry in record.get("reduced", [])
        )
        seifert = (
            SeifertMatrix(tuple(tuple(row) for row in record["seifert"]))
            if "seifert" in record
            else None
        )
        return KnotData(
            name=name,
            alexander=alexander,
            tau=record["tau"],
            vh=vh,
            reduced=reduced,
            seifert=seifert,
            mirror_vh=mirror_vh,
        )
    except KnotFileError:
        raise
    except KeyError as exc:
        raise KnotFileError(f"{name}: missing field {exc}") from exc
    except (TypeError, ValueError) as exc:
        raise KnotFileError(f"{name}: {exc}") from exc


def parse_knot_file(path) -> list[KnotData]:
    """Parse and validate a knot file; any invalid record is a hard error."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise KnotFileError(f"{path}: line {exc.lineno}: {exc.msg}") from exc
    records = doc.get("knots") if isinstance(doc, dict) else None
    if not isinstance(records, list):
        raise KnotFileError(f'{path}: expected a top-level {{"knots": [...]}} table')
    knots = [_knot_from_record(r) for r in records]
    seen: set[str] = set()
    for k in knots:
        if k.name in seen:
            raise KnotFileError(f"duplicate knot name: {k.name}")
        seen.add(k.name)
    return knots


def _record_from_knot(k: KnotData) -> dict:
    record: dict = {
        "name": k.name,
        "alexander": list(k.alexander.coeffs),
        "tau": k.tau,
        "genus": k.vh.genus,
        "V": list(k.vh.v_pos),
    }
    if k.vh.v_neg is not None:
        record["V_neg"] = list(k.vh.v_neg)
    if k.vh.declared_h is not None:
        record["H"] = list(k.vh.declared_h)
    if k.reduced:
        record["reduced"] = [
            {"k": s.k, "rank": s.rank, "local_gradings": list(s.local_gradings)}
            for s in k.reduced
        ]
    if k.seifert is not None:
        record["seifert"] = [list(row) for row in k.seifert.entries]
    if k.mirror_vh is not None:
        record["mirror_V"] = list(k.mirror_vh.v_pos)
        if k.mirror_vh.v_neg is not None:
            record["mirror_V_neg"] = list(k.mirror_vh.v_neg)
    return record


def serialize_knot_file(knots: list[KnotData]) -> str:
    """Inverse of parse_knot_file (round-trips all stored fields)."""
    doc = {"knots": [_record_from_knot(k) for k in knots]}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def bundled_knots() -> list[KnotData]:
    """The packaged fixture table (unknot, trefoil, figure-8, 9_44)."""
    return parse_knot_file(_FIXTURE)


def knot_by_name(knots: list[KnotData], name: str) -> KnotData:
    for k in knots:
        if k.name == name:
            return k
    raise KnotFileError(f"no knot named {name!r} in file")
