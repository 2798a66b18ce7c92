"""The spectral sequence: pages, the degree-3 differential, convergence.

The second page is integral cohomology in even fiber degrees (so each
column is stored once), the first possibly nonzero differential is the
integral square operation minus cupping with the twist, and for the
low-dimensional models of interest everything beyond it either vanishes
for degree reasons, is constrained with a justification, or is reported
indeterminate; the engine never guesses a differential.

Convergence assembles the graded pieces of the two twisted K-groups.
In ambient dimension at most three the extension problems split exactly
(the degree-1 column is a subgroup of a torsion-free group, and the
even columns meet in a free group), so the K-groups are produced on the
nose; in higher dimensions the report marks them as associated graded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from ..cech.fgab import (FGAbelianGroup, GroupHom, PresentedGroup,
                         quotient_group)
from ..cech.snf import (Matrix, Solver, hstack, identity, kernel_basis,
                        mat_vec, preimage_lattice, smith_normal_form,
                        solve, zeros)
from .model import CohomologyModel, Constraint, ModelError, presentation_of

INDETERMINATE = "indeterminate"


@dataclass
class Column:
    """One column of a page: a subquotient of the ambient cohomology,
    with generators tracked as ambient coordinate vectors."""

    p: int
    group: FGAbelianGroup
    gens: List[List[int]] = field(default_factory=list)  # ambient coords
    presentation: Optional[PresentedGroup] = None
    # subgroup lattice and relation columns inside the ambient group
    lattice: Optional[Matrix] = None
    relations: Optional[Matrix] = None


@dataclass
class SpectralSequencePage:
    r: int
    columns: Dict[int, Column]

    def group(self, p: int) -> FGAbelianGroup:
        col = self.columns.get(p)
        return col.group if col else FGAbelianGroup()

    def table(self) -> Dict[int, str]:
        return {p: str(self.group(p)) for p in sorted(self.columns)}


def init_pages(model: CohomologyModel) -> SpectralSequencePage:
    """Page 3 (= page 2 by periodicity): plain cohomology columns."""
    cols = {}
    for p in range(model.top + 1):
        G = model.group(p)
        n = model.ngens(p)
        cols[p] = Column(
            p=p, group=G,
            gens=[[1 if i == j else 0 for i in range(n)] for j in range(n)],
            presentation=model.presentation(p),
            lattice=identity(n),
            relations=model.presentation(p).rels)
    return SpectralSequencePage(r=3, columns=cols)


def apply_d3(model: CohomologyModel,
             page: SpectralSequencePage) -> SpectralSequencePage:
    """Kernel of the outgoing degree-3 differential modulo the image of
    the incoming one, per column; the result is page 4 = page 5."""
    if page.r != 3:
        raise ModelError("the degree-3 differential applies to page 3")
    cols: Dict[int, Column] = {}
    for p in range(model.top + 1):
        n = model.ngens(p)
        out_m = model.d3_matrix(p) if p + 3 <= model.top else None
        if out_m is not None and any(any(row) for row in out_m):
            lattice = preimage_lattice(out_m, model.presentation(p + 3).rels)
        else:
            lattice = identity(n)
        rel = model.presentation(p).rels
        if p - 3 >= 0:
            in_m = model.d3_matrix(p - 3)
            if any(any(row) for row in in_m):
                rel = hstack(rel, in_m)
        group, gens, pres = _subquotient(lattice, rel)
        cols[p] = Column(p=p, group=group, gens=gens, presentation=pres,
                         lattice=lattice, relations=rel)
    return SpectralSequencePage(r=5, columns=cols)


def _subquotient(lattice: Matrix, relations: Matrix
                 ) -> Tuple[FGAbelianGroup, List[List[int]], PresentedGroup]:
    """(lattice)/(relations) with tracked ambient generator vectors."""
    k = len(lattice[0]) if lattice and lattice[0] else 0
    if k == 0:
        return FGAbelianGroup(), [], PresentedGroup(0, [])
    cols = []
    ncols = len(relations[0]) if relations and relations[0] else 0
    solver = Solver(lattice)
    for j in range(ncols):
        v = [row[j] for row in relations]
        c = solver.solve(v)
        if c is None:
            raise ModelError("relations escape the kernel lattice")
        cols.append(c)
    rel = [[c[i] for c in cols] for i in range(k)] if cols else zeros(k, 0)
    pres = PresentedGroup(k, rel)
    keep = [i for i, d in enumerate(pres._divisors) if d != 1]
    uinv = _uinverse(pres._snf.U)
    gens = []
    for i in keep:
        e = [1 if j == i else 0 for j in range(k)]
        gens.append(mat_vec(lattice, mat_vec(uinv, e)))
    return pres.group(), gens, pres


def _uinverse(U: Matrix) -> Matrix:
    n = len(U)
    solver = Solver(U)
    cols = [solver.solve([1 if j == i else 0 for j in range(n)])
            for i in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


# ----------------------------------------------------------------------
# Convergence
# ----------------------------------------------------------------------

@dataclass
class Candidate:
    """One consistent resolution of the constrained differentials."""

    label: str
    e_infty: Dict[int, FGAbelianGroup]
    k0: Optional[FGAbelianGroup]
    k1: Optional[FGAbelianGroup]
    resolved: Dict[int, bool]           # per parity; False: graded only
    indeterminate: List[str] = field(default_factory=list)

    def k_str(self, which: int) -> str:
        g = self.k0 if which == 0 else self.k1
        if g is None:
            return INDETERMINATE
        tag = "" if self.resolved.get(which, False) else " (graded)"
        return f"{g}{tag}"


@dataclass
class ConvergenceReport:
    model: CohomologyModel
    page5: SpectralSequencePage
    candidates: List[Candidate]
    constraints_echo: List[str]
    warnings: List[str] = field(default_factory=list)

    @property
    def determinate(self) -> bool:
        return all(not c.indeterminate for c in self.candidates)

    def filtration_table(self, cand: Candidate) -> Dict[str, str]:
        """Orders of the filtration steps of the odd K-group read off
        the graded pieces from the top."""
        table = {}
        for parity, name in ((1, "K1"), (0, "K0")):
            ps = [p for p in sorted(cand.e_infty, reverse=True)
                  if p % 2 == parity]
            acc = FGAbelianGroup()
            for p in ps:
                acc = acc.direct_sum(cand.e_infty[p])
                table[f"F^{p}{name}"] = str(acc) + " (graded)"
        return table

    def to_dict(self) -> dict:
        return {
            "model": self.model.name,
            "h": list(self.model.h),
            "page5": {str(p): str(g) for p, g in
                      sorted(self.page5.table().items())},
            "constraints": self.constraints_echo,
            "warnings": self.warnings,
            "candidates": [
                {
                    "label": c.label,
                    "E_infty": {str(p): str(g)
                                for p, g in sorted(c.e_infty.items())},
                    "K0": c.k_str(0),
                    "K1": c.k_str(1),
                    "resolved_extensions": c.resolved,
                    "indeterminate": c.indeterminate,
                }
                for c in self.candidates
            ],
        }


def _live_higher_differentials(model: CohomologyModel,
                               page: SpectralSequencePage):
    """(r, p) pairs where a differential beyond the third could still be
    nonzero for size reasons."""
    out = []
    r = 5
    while r <= model.top:
        for p in range(0, model.top - r + 1):
            if (not page.group(p).is_trivial()
                    and not page.group(p + r).is_trivial()):
                out.append((r, p))
        r += 2
    return out


def _find_constraint(model: CohomologyModel, r: int, p: int
                     ) -> Optional[Constraint]:
    for c in model.constraints:
        if c.differential == f"d{r}" and (c.p == -1 or c.p == p):
            return c
    return None


def _eval_h_multiple(entry, h_coord: int) -> int:
    scale = Fraction(str(entry))
    val = scale * h_coord
    if val.denominator != 1:
        raise ModelError(f"differential option {entry} * h is not integral "
                         f"for twist {h_coord}")
    return int(val)


def converge(model: CohomologyModel,
             page: Optional[SpectralSequencePage] = None) -> ConvergenceReport:
    if page is None:
        page = apply_d3(model, init_pages(model))
    live = _live_higher_differentials(model, page)
    echoes = []
    base_groups = {p: page.group(p) for p in range(model.top + 1)}

    branches: List[Tuple[str, Dict[int, FGAbelianGroup], List[str]]] = [
        ("", dict(base_groups), [])]
    for (r, p) in live:
        con = _find_constraint(model, r, p)
        if con is None:
            for i in range(len(branches)):
                label, groups, indet = branches[i]
                indet = indet + [f"d{r}: E^{p} -> E^{p + r} undetermined"]
                branches[i] = (label, groups, indet)
            continue
        echoes.append(f"d{r} at p={p}: {con.value} -- {con.justification}")
        if con.value == "zero":
            continue
        if con.value == "options":
            h_coord = model.h[0] if model.h else 0
            new_branches = []
            for label, groups, indet in branches:
                for opt in con.options:
                    mat = [[_eval_h_multiple(x, h_coord) for x in row]
                           for row in opt["matrix_h_multiple"]]
                    src = presentation_of(groups[p])
                    dst = presentation_of(groups[p + r])
                    hom = GroupHom(src, dst, mat)
                    ker = hom.kernel_group()
                    cok = quotient_group(
                        identity(dst.ngens), hstack(dst.rels, mat))
                    g2 = dict(groups)
                    g2[p] = ker
                    g2[p + r] = cok
                    tag = opt.get("label", "option")
                    new_label = f"{label}+{tag}" if label else tag
                    new_branches.append((new_label, g2, list(indet)))
            branches = new_branches
            continue
        raise ModelError(f"unknown constraint value {con.value!r}")

    candidates = []
    for label, groups, indet in branches:
        k0 = k1 = None
        resolved = {0: False, 1: False}
        if not indet:
            k0 = FGAbelianGroup()
            k1 = FGAbelianGroup()
            live = {0: 0, 1: 0}
            for p, g in groups.items():
                if not g.is_trivial():
                    live[p % 2] += 1
                if p % 2 == 0:
                    k0 = k0.direct_sum(g)
                else:
                    k1 = k1.direct_sum(g)
            if model.top <= 3:
                # degree <= 3: the odd filtration splits because the
                # degree-1 column embeds in a torsion-free group, and
                # the even one because the degree-0 column is free
                if model.group(1).torsion:
                    raise ModelError("degree-1 cohomology must be torsion "
                                     "free")
                resolved = {0: True, 1: True}
            else:
                # a single nonzero column leaves nothing to extend
                resolved = {0: live[0] <= 1, 1: live[1] <= 1}
        candidates.append(Candidate(
            label=label or "direct", e_infty=groups, k0=k0, k1=k1,
            resolved=resolved, indeterminate=indet))

    warnings = []
    if any(c.indeterminate for c in candidates):
        warnings.append("some differentials are undetermined; supply "
                        "constraints with justifications to resolve them")
    return ConvergenceReport(model=model, page5=page,
                             candidates=candidates,
                             constraints_echo=echoes, warnings=warnings)


# ----------------------------------------------------------------------
# The invariant factorization targets
# ----------------------------------------------------------------------

@dataclass
class FactorizationTargets:
    """E_infty in the columns housing the three invariants, with the
    inclusions into their quotient codomains as matrices."""

    e1: FGAbelianGroup
    e3: FGAbelianGroup
    e3_inclusion: List[List[int]]        # into H^3/(h cup H^0)
    e3_codomain: FGAbelianGroup
    e5: FGAbelianGroup
    e5_inclusion: List[List[int]]        # into H^5/(h cup H^2)
    e5_codomain: FGAbelianGroup
    comparison_factor: int = 2           # degree-5 comparison carries a 2

    def to_dict(self) -> dict:
        return {
            "E1": str(self.e1),
            "E3": str(self.e3),
            "E3_codomain": str(self.e3_codomain),
            "E3_inclusion": self.e3_inclusion,
            "E5": str(self.e5),
            "E5_codomain": str(self.e5_codomain),
            "E5_inclusion": self.e5_inclusion,
            "degree5_comparison_factor": self.comparison_factor,
        }


def factorization_targets(model: CohomologyModel,
                          report: ConvergenceReport) -> FactorizationTargets:
    page = report.page5
    if len(report.candidates) != 1 or report.candidates[0].indeterminate:
        # only total-degree columns below the first live differential
        # are safe; play it conservative and demand determinacy
        raise ModelError("factorization targets need a determinate "
                         "convergence in the odd columns")
    cand = report.candidates[0]

    def quotient_pres(p: int, cup_from: int) -> PresentedGroup:
        rels = model.presentation(p).rels
        M = model.cup_h.get(cup_from)
        if M and any(any(row) for row in M):
            rels = hstack(rels, M)
        return PresentedGroup(model.ngens(p), rels)

    q3 = quotient_pres(3, 0)
    col3 = page.columns.get(3)
    inc3 = [_coords_in(q3, g) for g in (col3.gens if col3 else [])]
    q5 = quotient_pres(5, 2)
    col5 = page.columns.get(5)
    inc5 = [_coords_in(q5, g) for g in (col5.gens if col5 else [])]
    return FactorizationTargets(
        e1=cand.e_infty.get(1, FGAbelianGroup()),
        e3=cand.e_infty.get(3, FGAbelianGroup()),
        e3_inclusion=_transpose_cols(inc3),
        e3_codomain=q3.group(),
        e5=cand.e_infty.get(5, FGAbelianGroup()),
        e5_inclusion=_transpose_cols(inc5),
        e5_codomain=q5.group(),
    )


def _coords_in(pres: PresentedGroup, vec: List[int]) -> List[int]:
    return pres.reduce(vec)


def _transpose_cols(cols: List[List[int]]) -> List[List[int]]:
    if not cols:
        return []
    return [[c[i] for c in cols] for i in range(len(cols[0]))]
