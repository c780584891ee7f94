"""Built-in regression catalog and the JSON-lines catalog format.

Each line of a catalog file is a JSON object ``{"name": ..., "array": "b;c",
"expect": {...}}``. Recognised expectations: ``q_structures``,
``p_structures``, ``feasible``, ``tight``, ``bipartite``, ``antipodal``,
``graph_exists`` (False for formal arrays known to have no graph).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, TextIO

from .scheme import IntersectionArray, parse_array


@dataclass
class CatalogEntry:
    name: str
    array: str
    expect: dict = field(default_factory=dict)

    @property
    def graph_exists(self) -> bool:
        return bool(self.expect.get("graph_exists", True))

    def parsed(self) -> IntersectionArray:
        return parse_array(self.array)

    def to_json(self) -> str:
        return json.dumps({"name": self.name, "array": self.array, "expect": self.expect}, sort_keys=True)


def read_catalog(lines: Iterable[str]) -> Iterator[CatalogEntry]:
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ValueError(f"catalog line {lineno}: {exc}") from None
        entry = CatalogEntry(str(obj["name"]), str(obj["array"]), dict(obj.get("expect", {})))
        entry.parsed()  # entries must parse
        yield entry


def write_catalog(entries: Iterable[CatalogEntry], fh: TextIO) -> None:
    for e in entries:
        fh.write(e.to_json() + "\n")


def _e(name, array, **expect):
    return CatalogEntry(name, array, expect)


# Structure counts below were obtained by brute force over all orderings of the
# eigenspaces (resp. distance classes) and then frozen.
BUILTIN: list[CatalogEntry] = [
    _e("H(3,2)", "3,2,1;1,2,3", q_structures=1, bipartite=True, antipodal=True),
    _e("H(4,2)", "4,3,2,1;1,2,3,4", q_structures=2, bipartite=True, antipodal=True),
    _e("H(5,2)", "5,4,3,2,1;1,2,3,4,5", q_structures=1, bipartite=True, antipodal=True),
    _e("H(6,2)", "6,5,4,3,2,1;1,2,3,4,5,6", q_structures=2, bipartite=True, antipodal=True),
    _e("H(3,3)", "6,4,2;1,2,3", q_structures=1),
    _e("J(6,3)", "9,4,1;1,4,9", q_structures=2, antipodal=True, tight=True),
    _e("J(7,3)", "12,6,2;1,4,9", q_structures=1),
    _e("J(8,4)", "16,9,4,1;1,4,9,16", q_structures=1, tight=True, antipodal=True),
    _e("Petersen", "3,2;1,1", q_structures=2),
    _e("Clebsch (folded 5-cube)", "5,4;1,2", q_structures=2),
    _e("C5", "2,1;1,1", q_structures=2),
    _e("C6", "2,1,1;1,1,2", q_structures=1, bipartite=True),
    _e("C7", "2,1,1;1,1,1", q_structures=3),
    _e("C8", "2,1,1,1;1,1,1,2", q_structures=2, bipartite=True),
    _e("halved 7-cube", "21,10,3;1,6,15", q_structures=2),
    _e("halved 9-cube", "36,21,10,3;1,6,15,28", q_structures=2),
    _e("folded 7-cube", "7,6,5;1,2,3", q_structures=2),
    _e("folded 9-cube", "9,8,7,6;1,2,3,4", q_structures=2),
    _e("dual polar 2A7(2)", "170,168,160,128;1,5,21,85", q_structures=2, p_structures=1),
    _e("dual polar 2A7(3)", "2460,2457,2430,2187;1,10,91,820", q_structures=2),
    _e("Hadamard gamma=4", "8,7,4,1;1,4,7,8", q_structures=2, bipartite=True, antipodal=True),
    _e("Hadamard gamma=6", "12,11,6,1;1,6,11,12", q_structures=2, bipartite=True, antipodal=True),
    _e("self-dual mu=2", "10,5,4,2;1,2,2,10", q_structures=2, p_structures=2, tight=True, graph_exists=False),
    _e("self-dual mu=3", "21,14,9,3;1,3,6,21", q_structures=2, p_structures=2, tight=True, graph_exists=False),
    _e("Heawood", "3,2,2;1,1,3", q_structures=2, bipartite=True),
    _e("Coxeter", "3,2,2,1;1,1,1,2", q_structures=0),
    _e("dodecahedron", "3,2,1,1,1;1,1,1,2,3", q_structures=0, antipodal=True),
    _e("icosahedron", "5,2,1;1,2,5", q_structures=2, antipodal=True, tight=True),
    _e("Taylor k=4 a1=0", "4,3,1;1,3,4", q_structures=1, bipartite=True, antipodal=True),
    _e("odd graph O4", "4,3,3;1,1,2", q_structures=1),
    _e("Gosset", "27,10,1;1,10,27", q_structures=2, antipodal=True, tight=True),
    _e("Wells", "5,4,1,1;1,1,4,5", q_structures=0, antipodal=True),
]


def builtin_catalog() -> list[CatalogEntry]:
    return [CatalogEntry(e.name, e.array, dict(e.expect)) for e in BUILTIN]
