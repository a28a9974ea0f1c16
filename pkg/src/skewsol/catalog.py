"""Built-in named solutions and braces."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .braces import SkewBrace, validate_brace
from .groups import group_catalog
from .solutions import FiniteSolution, disjoint_union, lyubashenko, lyubashenko3, twist, validate_ybe


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    kind: str  # "solution" or "brace"
    payload: FiniteSolution | SkewBrace
    provenance: str


@lru_cache(maxsize=None)
def catalog() -> dict[str, CatalogEntry]:
    entries = [
        CatalogEntry(
            "lyubashenko3",
            "solution",
            lyubashenko3(),
            "3-point example: lambda_x(y) = y+1, rho_y(x) = x-1 (mod 3)",
        ),
        CatalogEntry("flip2", "solution", lyubashenko((1, 0), (1, 0)), "2-point flip r(x,y) = (1-y, 1-x)"),
        CatalogEntry(
            "twist1+lyubashenko3",
            "solution",
            disjoint_union(twist(1), lyubashenko3()),
            "synthetic: decomposable 1 + 3 union",
        ),
    ]
    for n in range(1, 5):
        entries.append(CatalogEntry(f"twist{n}", "solution", twist(n), "twist family r(x,y) = (y,x)"))
    for gname, table in group_catalog().items():
        entries.append(
            CatalogEntry(f"trivial-{gname}", "brace", SkewBrace.trivial(table), f"trivial brace on {gname}")
        )
    out = {}
    for entry in entries:
        if entry.name in out:
            raise AssertionError(f"duplicate catalog name {entry.name}")
        check = validate_ybe if entry.kind == "solution" else validate_brace
        if not check(entry.payload).ok:
            raise AssertionError(f"catalog entry {entry.name} is invalid")
        out[entry.name] = entry
    return out


def get(name: str) -> CatalogEntry:
    try:
        return catalog()[name]
    except KeyError:
        raise KeyError(f"no catalog entry named {name!r}") from None
