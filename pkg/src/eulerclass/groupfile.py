"""The on-disk group description format.

A group file is a JSON document with integer-only matrices:

    {"name": "p4m", "rank": 2,
     "generators": [[[0,-1],[1,0]], [[0,1],[1,0]]]}

`name` is optional. Ragged rows, non-square matrices and non-integer
entries are rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .intmat import IntMatrix


class GroupFileError(ValueError):
    pass


@dataclass(frozen=True)
class GroupFile:
    rank: int
    generators: tuple[IntMatrix, ...]
    name: str | None = None

    def to_dict(self) -> dict:
        d: dict = {"rank": self.rank, "generators": [[list(row) for row in g.entries] for g in self.generators]}
        if self.name is not None:
            d["name"] = self.name
        return d


def _as_int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise GroupFileError(f"matrix entries must be integers, got {x!r}")
    return x


def parse_group_dict(data) -> GroupFile:
    if not isinstance(data, dict):
        raise GroupFileError("group file must be a JSON object")
    if "rank" not in data or "generators" not in data:
        raise GroupFileError("group file needs keys 'rank' and 'generators'")
    rank = data["rank"]
    if isinstance(rank, bool) or not isinstance(rank, int) or rank < 1:
        raise GroupFileError(f"rank must be a positive integer, got {rank!r}")
    gens_raw = data["generators"]
    if not isinstance(gens_raw, list):
        raise GroupFileError("'generators' must be a list of matrices")
    gens = []
    for k, mat in enumerate(gens_raw):
        if not isinstance(mat, list) or len(mat) != rank:
            raise GroupFileError(f"generator {k} must have {rank} rows")
        for row in mat:
            if not isinstance(row, list) or len(row) != rank:
                raise GroupFileError(f"generator {k} has a ragged or missized row")
        gens.append(IntMatrix.from_rows([[_as_int(x) for x in row] for row in mat]))
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise GroupFileError("'name' must be a string")
    return GroupFile(rank, tuple(gens), name)


def parse_group_text(text: str) -> GroupFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise GroupFileError(f"not valid JSON: {e}") from e
    return parse_group_dict(data)


def load_group_file(path: str) -> GroupFile:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_group_text(fh.read())
    except OSError as e:
        raise GroupFileError(f"cannot read {path}: {e}") from e
