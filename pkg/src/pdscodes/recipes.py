"""Named end-to-end configurations reproducing the worked examples.

Every free choice (defining polynomial, class index, quadric kind) is
pinned so that repeated runs produce byte-identical reports.
"""
from __future__ import annotations

from dataclasses import dataclass

from .field import FieldSpec, FieldTower, build_tower
from .pds import FieldSubset, build_cyclotomic_subset, quadric_subset


@dataclass
class RecipeData:
    name: str
    tower: FieldTower
    subset: FieldSubset
    cyclotomic: tuple[int, tuple[int, ...]] | None = None  # (N, J) when applicable
    notes: str = ""


def _example_31() -> RecipeData:
    tower = build_tower(FieldSpec(p=2, e=2, m=4))
    subset = build_cyclotomic_subset(tower, 5, [1, 2, 3, 4])
    return RecipeData("example-3.1", tower, subset, (5, (1, 2, 3, 4)))


def _row1() -> RecipeData:
    tower = build_tower(FieldSpec(p=3, e=1, m=5))
    subset = build_cyclotomic_subset(tower, 11, [0])
    return RecipeData("table-2-row-1", tower, subset, (11, (0,)))


def _row1_complement() -> RecipeData:
    base = _row1()
    return RecipeData(
        "example-3.2-complement", base.tower, base.subset.complement(), (11, tuple(range(1, 11)))
    )


def _example_33(kind: str = "hyperbolic", p: int = 3, m: int = 4) -> RecipeData:
    tower = build_tower(FieldSpec(p=p, e=1, m=m))
    subset, _ = quadric_subset(tower, kind=kind)
    return RecipeData(f"example-3.3-{kind}", tower, subset, None, notes=f"{kind} quadric")


def _row3() -> RecipeData:
    tower = build_tower(FieldSpec(p=3, e=1, m=12))
    subset = build_cyclotomic_subset(tower, 35, [0])
    return RecipeData("table-2-row-3", tower, subset, (35, (0,)),
                      notes="extended scale; exhaustive oracles stay guarded off")


RECIPES = {
    "example-3.1": _example_31,
    "example-3.2": _row1,
    "table-2-row-1": _row1,
    "example-3.2-complement": _row1_complement,
    "example-3.3": _example_33,
    "example-3.3-hyperbolic": lambda: _example_33("hyperbolic"),
    "example-3.3-elliptic": lambda: _example_33("elliptic"),
    "table-2-row-3": _row3,
}


def build_recipe(name: str, kind: str | None = None, p: int | None = None,
                 m: int | None = None) -> RecipeData:
    if name not in RECIPES:
        raise KeyError(f"unknown recipe {name!r}; available: {', '.join(sorted(RECIPES))}")
    if name == "example-3.3":
        return _example_33(kind or "hyperbolic", p or 3, m or 4)
    if kind is not None and not name.startswith("example-3.3"):
        raise ValueError("--kind only applies to the quadric recipe")
    return RECIPES[name]()
