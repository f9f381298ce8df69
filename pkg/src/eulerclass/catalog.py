"""The 13 symmorphic wallpaper point groups with expected Euler-class orders.

Generator conventions (columns act on the lattice basis):
  R90  = [[0,-1],[1,0]]      R120 = [[0,-1],[1,-1]]     R60 = [[1,-1],[1,0]]
  M1   = diag(1,-1)          M2   = [[0,1],[1,0]]       M3  = [[0,-1],[-1,0]]
The p3m1 / p31m assignment (M3 vs M2 next to R120) follows the hexagonal
convention; both have identical verdicts at every characteristic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .euler import OrderResult
from .intmat import IntMatrix

R90 = IntMatrix.from_rows([[0, -1], [1, 0]])
R120 = IntMatrix.from_rows([[0, -1], [1, -1]])
R60 = IntMatrix.from_rows([[1, -1], [1, 0]])
M1 = IntMatrix.from_rows([[1, 0], [0, -1]])
M2 = IntMatrix.from_rows([[0, 1], [1, 0]])
M3 = IntMatrix.from_rows([[0, -1], [-1, 0]])
MINUS_ID = IntMatrix.from_rows([[-1, 0], [0, -1]])
MINUS_M2 = M3  # -M2 happens to equal M3


class UnknownNameError(KeyError):
    def __init__(self, name: str, valid: list[str]):
        super().__init__(name)
        self.name = name
        self.valid = valid

    def __str__(self) -> str:
        return (
            f"unknown group name {self.name!r}; valid symmorphic wallpaper "
            f"symbols are: {', '.join(self.valid)} (pg, pmg, pgg, p4g are "
            "non-symmorphic and not modeled)"
        )


@dataclass(frozen=True)
class CatalogEntry:
    """A symmorphic wallpaper group with its expected verdict per characteristic.

    `expected` maps 0, 2, 3 and "other" (any prime not in {2,3}) to verdicts.
    """

    name: str
    rank: int
    generators: tuple[IntMatrix, ...]
    expected: dict[int | str, OrderResult]
    source: str

    def expected_for(self, p: int) -> OrderResult:
        if p in self.expected:
            return self.expected[p]
        return self.expected["other"]


def _trivial_all() -> dict[int | str, OrderResult]:
    t = OrderResult.trivial(("expected",))
    return {0: t, 2: t, 3: t, "other": t}


def _known_at(p: int, m: int) -> dict[int | str, OrderResult]:
    inf = OrderResult.infinite(("expected",))
    table: dict[int | str, OrderResult] = {0: inf, 2: inf, 3: inf, "other": inf}
    table[p] = OrderResult.known(m, ("expected",))
    return table


def _infinite_all() -> dict[int | str, OrderResult]:
    inf = OrderResult.infinite(("expected",))
    return {0: inf, 2: inf, 3: inf, "other": inf}


_ENTRIES: tuple[CatalogEntry, ...] = (
    CatalogEntry("p1", 2, (), _trivial_all(), "transfer rule, full fixed lattice"),
    CatalogEntry("p2", 2, (MINUS_ID,), _known_at(2, 2), "SL p-group rule"),
    CatalogEntry("pm", 2, (M1,), _trivial_all(), "trivial SL part"),
    CatalogEntry("cm", 2, (M2,), _trivial_all(), "trivial SL part"),
    CatalogEntry("pmm", 2, (M1, MINUS_ID), _known_at(2, 2), "Klein four with -Id"),
    CatalogEntry("cmm", 2, (M2, MINUS_M2), _known_at(2, 2), "Klein four with -Id"),
    CatalogEntry("p4", 2, (R90,), _known_at(2, 4), "SL p-group rule"),
    CatalogEntry("p4m", 2, (R90, M2), _known_at(2, 4), "square-lattice chain complex"),
    CatalogEntry("p3", 2, (R120,), _known_at(3, 3), "SL p-group rule"),
    CatalogEntry("p3m1", 2, (R120, M3), _known_at(3, 3), "hexagonal chain complex"),
    CatalogEntry("p31m", 2, (R120, M2), _known_at(3, 3), "hexagonal chain complex"),
    CatalogEntry("p6", 2, (R60,), _infinite_all(), "SL part C6 is not a p-group"),
    CatalogEntry("p6m", 2, (R60, M2), _infinite_all(), "SL part C6 is not a p-group"),
)

EXPECTED_POINT_GROUP_ORDERS = {
    "p1": 1, "p2": 2, "pm": 2, "cm": 2, "pmm": 4, "cmm": 4, "p4": 4,
    "p4m": 8, "p3": 3, "p3m1": 6, "p31m": 6, "p6": 6, "p6m": 12,
}


def entries() -> list[CatalogEntry]:
    return list(_ENTRIES)


def lookup(name: str) -> CatalogEntry:
    folded = name.strip().lower()
    for entry in _ENTRIES:
        if entry.name == folded:
            return entry
    raise UnknownNameError(name, [e.name for e in _ENTRIES])
