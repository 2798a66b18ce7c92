"""From a simplicial complex to a cohomology model.

Computes the integral cohomology of a complex with canonical
generators, then realizes cupping with each degree-3 generator as exact
matrices between the generator bases; the per-generator matrices let a
twist coordinate vector be chosen (or overridden) afterwards.
"""

from __future__ import annotations

from typing import Dict, List, Optional

from ..cech.complexes import Cochain, CohomologySpace, SimplicialComplex, cup
from ..cech.fgab import FGAbelianGroup
from .model import CohomologyModel


def model_from_complex(K: SimplicialComplex, h: Optional[List[int]] = None,
                       name: str = "") -> CohomologyModel:
    top = K.dimension
    spaces = {p: CohomologySpace(K, p) for p in range(top + 1)}
    groups = {p: spaces[p].group for p in range(top + 1)}
    n3 = groups.get(3, FGAbelianGroup())
    n3gens = n3.rank + len(n3.torsion)
    h = list(h) if h is not None else [0] * n3gens
    cup_unit: Dict[int, List] = {}
    if 3 <= top:
        h_reps = spaces[3].representatives()
        for p in range(top - 2):
            tgt = spaces[p + 3]
            n_dst = len(tgt.divisors)
            units = []
            for rep in h_reps:
                hcoch = Cochain.from_vector(K, 3, rep)
                cols = []
                for xrep in spaces[p].representatives():
                    xcoch = Cochain.from_vector(K, p, xrep)
                    cls = tgt.class_of(cup(hcoch, xcoch))
                    cols.append(list(cls.coords))
                units.append([[c[i] for c in cols] for i in range(n_dst)]
                             if cols else [[] for _ in range(n_dst)])
            cup_unit[p] = units
    return CohomologyModel(name or K.name, top, groups, h,
                           cup_h_unit=cup_unit)
