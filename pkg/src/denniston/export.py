"""Serialization of PdsSets.

Two formats: plain text (sorted group indices, one per line) and JSON carrying
the full field description, so a set can be re-verified without defaults.
"""

from __future__ import annotations

import json

import numpy as np

from .construction import Group, ParamSet, PdsSet
from .gf_tower import DEFAULT_SIZE_CAP, FieldSpec, table_from_spec

SCHEMA = 1


class ExportError(ValueError):
    pass


def to_dict(pds: PdsSet) -> dict:
    spec = pds.group.table.spec
    out = {
        "schema": SCHEMA,
        "kind": pds.kind,
        "field": spec.as_dict(),
        "group_orders": list(pds.group.orders),
    }
    if "r" in pds.meta:
        out["r"] = pds.meta["r"]
        out["basis"] = list(pds.meta["basis"])
    if "mutated" in pds.meta:
        out["mutated"] = pds.meta["mutated"]
    out["claimed"] = {k: v for k, v in pds.claimed.as_dict().items()}
    out["indices"] = [int(i) for i in pds.indices]
    return out


def to_json(pds: PdsSet) -> str:
    return json.dumps(to_dict(pds), indent=2) + "\n"


def to_text(pds: PdsSet) -> str:
    return "".join(f"{int(i)}\n" for i in pds.indices)


def from_dict(data: dict, size_cap: int = DEFAULT_SIZE_CAP) -> PdsSet:
    if data.get("schema") != SCHEMA:
        raise ExportError(f"unsupported schema {data.get('schema')!r}")
    try:
        f = data["field"]
        spec = FieldSpec(
            p=f["p"], d=f["d"], modulus=tuple(f["modulus"]), s=f.get("s"), m=f.get("m")
        )
        table = table_from_spec(spec, size_cap=size_cap)
        group = Group(table, tuple(data["group_orders"]))
        claimed = ParamSet.from_dict(data["claimed"])
        indices = np.asarray(data["indices"], dtype=np.int64)
    except KeyError as exc:
        raise ExportError(f"missing field {exc}") from None
    if len(indices) and (indices.min() < 0 or indices.max() >= group.v):
        raise ExportError("index out of range for the group")
    if len(np.unique(indices)) != len(indices):
        raise ExportError("repeated indices")
    indicator = np.zeros(group.v, dtype=bool)
    indicator[indices] = True
    meta = {}
    if "r" in data:
        meta["r"] = data["r"]
        meta["basis"] = list(data.get("basis", []))
    if "mutated" in data:
        meta["mutated"] = data["mutated"]
    return PdsSet(group, indicator, claimed, data.get("kind", "custom"), meta)


def load(path, size_cap: int = DEFAULT_SIZE_CAP) -> PdsSet:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ExportError(f"{path}: not valid JSON ({exc.msg})") from None
    return from_dict(data, size_cap=size_cap)
