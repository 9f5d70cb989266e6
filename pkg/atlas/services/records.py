# atlas/services/records.py

"""
MODULI COMPONENT RECORDS

One record per component, subfamily or stratum of R(c1, c2, c3).
Ingredients are the published numbers a record's dimension is derived
from; the verifier recomputes every one of them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from atlas.services.exceptions import RegistryFormatError
from spectrum.services.spectra import Spectrum


class ComponentFlag(str, Enum):
    SMOOTH = "Smooth"
    GENERICALLY_SMOOTH = "GenericallySmooth"
    IRREDUCIBLE = "Irreducible"
    UNIRATIONAL = "Unirational"
    RATIONAL = "Rational"
    NON_REDUCED = "NonReduced"
    STRATUM = "Stratum"
    COMPONENT = "Component"
    OPEN = "Open"
    OVERSIZED = "Oversized"


class IngredientKind(str, Enum):
    SERRE = "serre"
    LIAISON = "liaison"
    SUM = "sum"
    LIFT = "lift"


# number of values each ingredient kind carries
INGREDIENT_ARITY = {
    IngredientKind.SERRE: 3,  # dim C, h0(omega_C(n)), h0(F(k))
    IngredientKind.LIAISON: 5,  # dim H, h0(I_C(s)), h0(I_C(t)), h0(I_C'(s)), h0(I_C'(t))
    IngredientKind.SUM: 2,
    IngredientKind.LIFT: 0,
}


@dataclass(frozen=True)
class Ingredient:
    kind: IngredientKind
    values: tuple[int, ...] = ()
    serre_twist: int | None = None
    source: Ingredient | None = None
    kernel: tuple[str, ...] = ()
    cover: tuple[str, ...] = ()

    def __post_init__(self):
        arity = INGREDIENT_ARITY[self.kind]
        if len(self.values) != arity:
            raise RegistryFormatError(
                f"{self.kind.value} ingredient needs {arity} values, got {len(self.values)}"
            )
        if self.kind is IngredientKind.LIFT and not self.cover:
            raise RegistryFormatError("lift ingredient needs a cover")
        if self.source is not None and self.kind is not IngredientKind.SERRE:
            raise RegistryFormatError("only a serre ingredient may name a source for dim C")

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Ingredient:
        source = data.get("source")
        return cls(
            kind=IngredientKind(data["type"]),
            values=tuple(data.get("values", ())),
            serre_twist=data.get("serre_twist"),
            source=cls.from_dict(source) if source else None,
            kernel=tuple(data.get("kernel", ())),
            cover=tuple(data.get("cover", ())),
        )

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"type": self.kind.value}
        if self.values:
            out["values"] = list(self.values)
        if self.serre_twist is not None:
            out["serre_twist"] = self.serre_twist
        if self.source is not None:
            out["source"] = self.source.to_dict()
        if self.kind is IngredientKind.LIFT:
            out["kernel"] = list(self.kernel)
            out["cover"] = list(self.cover)
        return out


@dataclass(frozen=True)
class ExtremalData:
    """Serre curve of a general sheaf is extremal: (c1, d, len Z, xi vanishes on Z)."""

    c1: int
    degree: int
    len_z: int
    xi_vanishes_on_z: bool = False


@dataclass(frozen=True)
class ModuliComponentRecord:
    c1: int
    c2: int
    c3: int
    label: str
    dim: int
    citation: str
    spectrum: Spectrum
    flags: frozenset[ComponentFlag] = field(default_factory=frozenset)
    tangent_dim: int | None = None
    parent: str | None = None
    ingredients: tuple[Ingredient, ...] = ()
    extremal: ExtremalData | None = None

    def __post_init__(self):
        if self.dim < 0:
            raise RegistryFormatError(f"{self.label}: dimension must be >= 0, got {self.dim}")
        if self.has(ComponentFlag.STRATUM) and self.has(ComponentFlag.COMPONENT):
            raise RegistryFormatError(f"{self.label}: Stratum and Component are exclusive")
        if self.has(ComponentFlag.NON_REDUCED) and (self.tangent_dim is None or self.tangent_dim <= self.dim):
            raise RegistryFormatError(f"{self.label}: NonReduced needs tangent_dim > dim")
        if self.has(ComponentFlag.STRATUM) and not self.parent:
            raise RegistryFormatError(f"{self.label}: a Stratum needs a parent")

    def has(self, flag: ComponentFlag) -> bool:
        return flag in self.flags

    @property
    def is_component(self) -> bool:
        """Top-level entries: anything that is neither a stratum nor a subfamily of a parent."""
        return self.parent is None

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "c1": self.c1,
            "c2": self.c2,
            "c3": self.c3,
            "label": self.label,
            "dim": self.dim,
            "citation": self.citation,
            "spectrum": list(self.spectrum.values),
            "flags": sorted(f.value for f in self.flags),
        }
        if self.tangent_dim is not None:
            out["tangent_dim"] = self.tangent_dim
        if self.parent:
            out["parent"] = self.parent
        if self.ingredients:
            out["ingredients"] = [i.to_dict() for i in self.ingredients]
        if self.extremal is not None:
            out["extremal"] = {
                "c1": self.extremal.c1,
                "degree": self.extremal.degree,
                "len_z": self.extremal.len_z,
                "xi_vanishes_on_z": self.extremal.xi_vanishes_on_z,
            }
        return out
