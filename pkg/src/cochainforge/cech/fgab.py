"""Finitely generated abelian groups, presentations and exact maps.

An FGAbelianGroup is an isomorphism type: free rank, a divisibility
chain of torsion orders, and optionally a count of circle factors (used
when reporting groups with circle coefficients, which are never stored
as sets of elements).

A PresentedGroup is Z^n modulo the column lattice of a relation matrix,
with enough of the Smith data retained to reduce elements to canonical
coordinates, decide membership, and build kernels, images and quotients
of integer-matrix homomorphisms exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from .snf import (Matrix, SNFResult, Solver, coords_in_lattice, hstack,
                  identity, kernel_basis, mat_mul, mat_vec,
                  preimage_lattice, smith_normal_form, solve, zeros)


@dataclass(frozen=True)
class FGAbelianGroup:
    """rank * Z + (+) Z/d_i with d_1 | d_2 | ..., plus torus factors."""

    rank: int = 0
    torsion: Tuple[int, ...] = ()
    torus_rank: int = 0

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a chain")
        if any(d <= 1 for d in self.torsion):
            raise ValueError("torsion orders must exceed 1")

    @staticmethod
    def from_divisors(divisors: Sequence[int],
                      torus_rank: int = 0) -> "FGAbelianGroup":
        rank = sum(1 for d in divisors if d == 0)
        torsion = _rechain([abs(d) for d in divisors if d not in (0, 1, -1)])
        return FGAbelianGroup(rank, tuple(torsion), torus_rank)

    def is_trivial(self) -> bool:
        return not (self.rank or self.torsion or self.torus_rank)

    def order(self) -> Optional[int]:
        if self.rank or self.torus_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def direct_sum(self, other: "FGAbelianGroup") -> "FGAbelianGroup":
        merged = sorted(self.torsion + other.torsion)
        # re-normalize into a divisibility chain prime by prime
        return (FGAbelianGroup.from_divisors(
            [0] * (self.rank + other.rank) + _rechain(merged),
            self.torus_rank + other.torus_rank))

    def __str__(self) -> str:
        bits = []
        if self.rank == 1:
            bits.append("Z")
        elif self.rank:
            bits.append(f"Z^{self.rank}")
        bits += [f"Z/{d}" for d in self.torsion]
        if self.torus_rank == 1:
            bits.append("R/Z")
        elif self.torus_rank:
            bits.append(f"(R/Z)^{self.torus_rank}")
        return " + ".join(bits) if bits else "0"

    def to_dict(self) -> dict:
        out = {"rank": self.rank, "torsion": list(self.torsion)}
        if self.torus_rank:
            out["torus_rank"] = self.torus_rank
        return out

    @staticmethod
    def from_dict(d: dict) -> "FGAbelianGroup":
        return FGAbelianGroup.from_divisors(
            [0] * d.get("rank", 0) + list(d.get("torsion", ())),
            d.get("torus_rank", 0))


def _rechain(divisors: List[int]) -> List[int]:
    """Rebuild a divisibility chain from arbitrary torsion orders."""
    from collections import defaultdict
    primes: dict = defaultdict(list)
    for d in divisors:
        dd = d
        p = 2
        while p * p <= dd:
            if dd % p == 0:
                e = 0
                while dd % p == 0:
                    dd //= p
                    e += 1
                primes[p].append(e)
            p += 1
        if dd > 1:
            primes[dd].append(1)
    if not primes:
        return []
    width = max(len(v) for v in primes.values())
    chain = [1] * width
    for p, exps in primes.items():
        exps = sorted(exps, reverse=True)
        for i, e in enumerate(exps):
            chain[width - 1 - i] *= p ** e
    return [c for c in chain if c > 1]


class PresentedGroup:
    """Z^ngens modulo the column lattice of ``rels``."""

    def __init__(self, ngens: int, rels: Matrix):
        self.ngens = ngens
        self.rels = rels if rels and rels[0] is not None else zeros(ngens, 0)
        if len(self.rels) != ngens:
            raise ValueError("relation matrix has wrong height")
        self._snf = smith_normal_form(self.rels)
        divisors = []
        for i in range(ngens):
            d = (self._snf.D[i][i]
                 if i < self._snf.rank else 0)
            divisors.append(d)
        self._divisors = divisors

    def group(self) -> FGAbelianGroup:
        return FGAbelianGroup.from_divisors(self._divisors)

    def reduce(self, vec: Sequence[int]) -> List[int]:
        """Canonical coordinates: transform by U, reduce mod divisors,
        and drop nothing (callers see all ngens coordinates)."""
        y = mat_vec(self._snf.U, list(vec))
        out = []
        for yi, d in zip(y, self._divisors):
            out.append(yi % d if d else yi)
        return out

    def is_zero(self, vec: Sequence[int]) -> bool:
        return all(x == 0 for x in self.reduce(vec))

    def contains_in_relations(self, vec: Sequence[int]) -> bool:
        return self.is_zero(vec)


def quotient_group(gens: Matrix, rel_vectors: Matrix) -> FGAbelianGroup:
    """Isomorphism type of (column lattice of gens) / (lattice of
    rel_vectors); the relation vectors must lie in the generator
    lattice."""
    k = len(gens[0]) if gens and gens[0] is not None else 0
    if k == 0:
        return FGAbelianGroup()
    cols = []
    ncols = len(rel_vectors[0]) if rel_vectors and rel_vectors[0] else 0
    solver = Solver(gens)
    for j in range(ncols):
        v = [row[j] for row in rel_vectors]
        c = solver.solve(v)
        if c is None:
            raise ValueError("relation vector outside the generator lattice")
        cols.append(c)
    rels = [[c[i] for c in cols] for i in range(k)] if cols else zeros(k, 0)
    return PresentedGroup(k, rels).group()


@dataclass
class GroupHom:
    """A homomorphism between presented groups, as an integer matrix on
    ambient generators; well-definedness (relations map to relations) is
    checked on construction."""

    src: PresentedGroup
    dst: PresentedGroup
    matrix: Matrix

    def __post_init__(self):
        m = len(self.src.rels[0]) if self.src.rels and self.src.rels[0] else 0
        for j in range(m):
            v = [row[j] for row in self.src.rels]
            img = mat_vec(self.matrix, v)
            if not self.dst.is_zero(img):
                raise ValueError("matrix does not respect the relations")

    def kernel_lattice(self) -> Matrix:
        """Columns generating {x in Z^n_src : f(x) = 0 in dst}."""
        return preimage_lattice(self.matrix, self.dst.rels)

    def image_vectors(self) -> Matrix:
        return self.matrix

    def kernel_group(self) -> FGAbelianGroup:
        K = self.kernel_lattice()
        return quotient_group(K, self.src.rels)

    def is_zero_map(self) -> bool:
        n = len(self.matrix[0]) if self.matrix and self.matrix[0] else 0
        for j in range(n):
            col = [row[j] for row in self.matrix]
            if not self.dst.is_zero(col):
                return False
        return True


def homology_at(incoming: Optional[GroupHom],
                outgoing: Optional[GroupHom],
                middle: PresentedGroup) -> Tuple[FGAbelianGroup, Matrix, Matrix]:
    """ker(outgoing) / (im(incoming) + relations) at the middle group.

    Returns (group, kernel_lattice, relation_vectors); the kernel
    lattice columns are the subgroup generators inside Z^n_middle.
    """
    if outgoing is not None:
        K = outgoing.kernel_lattice()
    else:
        K = identity(middle.ngens)
    rel = middle.rels
    if incoming is not None:
        rel = hstack(rel, incoming.matrix)
    group = quotient_group(K, rel)
    return group, K, rel
