"""Cohomology models: the input data of the spectral sequence engine.

A model is integral cohomology in degrees 0..top with a distinguished
degree-3 twist class, matrices for cupping with the twist and for the
integral square operation (degree +3), and optional constraints on the
differentials the page data cannot determine (each carrying a mandatory
justification that reports echo).

Matrices act on the canonical generator coordinates of each group:
free generators first, then torsion generators in divisor order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from ..cech.fgab import FGAbelianGroup, GroupHom, PresentedGroup
from ..cech.snf import Matrix, zeros


class ModelError(ValueError):
    pass


def presentation_of(G: FGAbelianGroup) -> PresentedGroup:
    n = G.rank + len(G.torsion)
    rels = zeros(n, len(G.torsion))
    for t, d in enumerate(G.torsion):
        rels[G.rank + t][t] = d
    return PresentedGroup(n, rels)


@dataclass
class Constraint:
    differential: str          # "d5", "d7", ...
    p: int                     # source column
    value: str                 # "zero" or "options"
    justification: str
    options: List[dict] = field(default_factory=list)

    @staticmethod
    def from_dict(d: dict) -> "Constraint":
        if not d.get("justification"):
            raise ModelError("constraints need a justification string")
        return Constraint(d["differential"], d.get("p", -1), d["value"],
                          d["justification"], d.get("options", []))

    def to_dict(self) -> dict:
        out = {"differential": self.differential, "p": self.p,
               "value": self.value, "justification": self.justification}
        if self.options:
            out["options"] = self.options
        return out


@dataclass
class CohomologyModel:
    name: str
    top: int
    groups: Dict[int, FGAbelianGroup]
    h: List[int]
    cup_h: Dict[int, Matrix] = field(default_factory=dict)
    cup_h_unit: Dict[int, List[Matrix]] = field(default_factory=dict)
    sq3: Dict[int, Matrix] = field(default_factory=dict)
    constraints: List[Constraint] = field(default_factory=list)

    def __post_init__(self):
        for p in range(self.top + 1):
            self.groups.setdefault(p, FGAbelianGroup())
        if self.cup_h_unit:
            self._recompute_cup()
        self.validate()

    # -- structure -------------------------------------------------------

    def ngens(self, p: int) -> int:
        G = self.group(p)
        return G.rank + len(G.torsion)

    def group(self, p: int) -> FGAbelianGroup:
        return self.groups.get(p, FGAbelianGroup())

    def presentation(self, p: int) -> PresentedGroup:
        return presentation_of(self.group(p))

    def d3_matrix(self, p: int) -> Matrix:
        n_src = self.ngens(p)
        n_dst = self.ngens(p + 3)
        M = [[0] * n_src for _ in range(n_dst)]
        for src, sign in ((self.sq3, 1), (self.cup_h, -1)):
            A = src.get(p)
            if A:
                for i in range(n_dst):
                    for j in range(n_src):
                        M[i][j] += sign * A[i][j]
        return M

    def _recompute_cup(self):
        h3 = self.ngens(3)
        if len(self.h) != h3:
            raise ModelError(
                f"twist coordinates have length {len(self.h)}, "
                f"degree-3 group has {h3} generators")
        cup: Dict[int, Matrix] = {}
        for p, units in self.cup_h_unit.items():
            p = int(p)
            if len(units) != h3:
                raise ModelError(f"cup units at degree {p}: expected "
                                 f"{h3} matrices")
            n_dst, n_src = self.ngens(p + 3), self.ngens(p)
            M = [[0] * n_src for _ in range(n_dst)]
            for coeff, unit in zip(self.h, units):
                for i in range(n_dst):
                    for j in range(n_src):
                        M[i][j] += coeff * unit[i][j]
            cup[p] = M
        self.cup_h = cup

    def with_twist(self, h: List[int]) -> "CohomologyModel":
        if not self.cup_h_unit:
            raise ModelError("model carries no per-generator cup data; "
                             "the twist cannot be overridden")
        return CohomologyModel(self.name, self.top, dict(self.groups),
                               list(h), {}, dict(self.cup_h_unit),
                               dict(self.sq3),
                               list(self.constraints))

    def validate(self):
        # cup and square matrices must be maps of the presented groups
        for p in range(self.top + 1):
            M = self.d3_matrix(p)
            if any(any(row) for row in M):
                GroupHom(self.presentation(p), self.presentation(p + 3), M)
        # the twist is where cupping sends the unit of degree zero
        if self.group(0).rank >= 1 and self.ngens(3):
            unit = [1] + [0] * (self.ngens(0) - 1)
            img = [sum(r[j] * unit[j] for j in range(len(unit)))
                   for r in self.cup_h.get(0, zeros(self.ngens(3),
                                                    self.ngens(0)))]
            red = self.presentation(3).reduce(img)
            expect = self.presentation(3).reduce(self.h)
            if red != expect:
                raise ModelError(
                    f"cup of the degree-0 unit gives {red}, but the "
                    f"declared twist reduces to {expect}")

    # -- serialization -----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "top": self.top,
            "groups": {str(p): self.group(p).to_dict()
                       for p in range(self.top + 1)},
            "h": list(self.h),
            "cup_h_unit": {str(p): m for p, m in self.cup_h_unit.items()},
            "sq3": {str(p): m for p, m in self.sq3.items()},
            "constraints": [c.to_dict() for c in self.constraints],
        }

    @staticmethod
    def from_dict(d: dict) -> "CohomologyModel":
        groups = {int(p): FGAbelianGroup.from_dict(g)
                  for p, g in d.get("groups", {}).items()}
        cup_unit = {int(p): m for p, m in d.get("cup_h_unit", {}).items()}
        cup = {int(p): m for p, m in d.get("cup_h", {}).items()}
        sq3 = {int(p): m for p, m in d.get("sq3", {}).items()}
        cons = [Constraint.from_dict(c) for c in d.get("constraints", [])]
        return CohomologyModel(d.get("name", ""), d["top"], groups,
                               list(d.get("h", [])), cup, cup_unit, sq3, cons)

    @staticmethod
    def load(path: str) -> "CohomologyModel":
        with open(path, "r", encoding="utf-8") as fh:
            return CohomologyModel.from_dict(json.load(fh))

    def save(self, path: str):
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_dict(), fh, indent=1, sort_keys=True)
            fh.write("\n")
