"""Finite simplicial complexes and exact cochain algebra.

The nerve of a good cover is modeled by a finite simplicial complex;
cochains assign ring elements to sorted simplices (antisymmetry is
enforced by storing values on sorted vertex tuples only).  Coboundaries
are exact integer (or rational) matrices, cohomology is kernel modulo
image via Smith normal form, and classes come with canonical
coordinates against a computed generator basis.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .fgab import FGAbelianGroup, PresentedGroup, quotient_group
from .snf import (Matrix, Solver, hstack, identity, kernel_basis,
                  mat_vec, smith_normal_form, solve, zeros)

Simplex = Tuple[int, ...]

RING_Z = "Z"
RING_Q = "Q"


class RingMismatch(ValueError):
    pass


def ring_tag(ring) -> str:
    """Rings: "Z", "Q" or "Zmod:n"."""
    if ring in (RING_Z, RING_Q):
        return ring
    if isinstance(ring, str) and ring.startswith("Zmod:"):
        n = int(ring.split(":", 1)[1])
        if n <= 1:
            raise RingMismatch(f"bad modulus in {ring!r}")
        return ring
    raise RingMismatch(f"unknown ring {ring!r}")


@dataclass
class SimplicialComplex:
    nvertices: int
    facets: List[Simplex]
    name: str = ""

    def __post_init__(self):
        seen = set()
        for f in self.facets:
            t = tuple(sorted(f))
            if len(set(t)) != len(t):
                raise ValueError(f"degenerate facet {f}")
            if max(t) >= self.nvertices or min(t) < 0:
                raise ValueError(f"facet {f} outside vertex range")
            seen.add(t)
        self.facets = sorted(seen)
        self._simplices: Dict[int, List[Simplex]] = {}
        self._index: Dict[int, Dict[Simplex, int]] = {}

    def simplices(self, p: int) -> List[Simplex]:
        if p not in self._simplices:
            out = set()
            for f in self.facets:
                if len(f) >= p + 1:
                    out.update(combinations(f, p + 1))
            if p == 0:
                out.update((v,) for v in range(self.nvertices))
            self._simplices[p] = sorted(out)
            self._index[p] = {s: i for i, s in enumerate(self._simplices[p])}
        return self._simplices[p]

    def index(self, s: Simplex) -> int:
        p = len(s) - 1
        self.simplices(p)
        return self._index[p][tuple(s)]

    def has(self, s: Simplex) -> bool:
        p = len(s) - 1
        self.simplices(p)
        return tuple(s) in self._index.get(p, {})

    @property
    def dimension(self) -> int:
        return max((len(f) - 1 for f in self.facets), default=0)

    def euler_characteristic(self) -> int:
        return sum((-1) ** p * len(self.simplices(p))
                   for p in range(self.dimension + 1))

    def coboundary_matrix(self, p: int) -> Matrix:
        """delta_p : C^p -> C^{p+1} on sorted simplices,
        (delta c)(s) = sum_j (-1)^j c(s minus j-th vertex)."""
        rows = self.simplices(p + 1)
        cols = self.simplices(p)
        colindex = {s: i for i, s in enumerate(cols)}
        M = zeros(len(rows), len(cols))
        for r, s in enumerate(rows):
            for j in range(len(s)):
                face = s[:j] + s[j + 1:]
                M[r][colindex[face]] += (-1) ** j
        return M

    def to_dict(self) -> dict:
        return {"name": self.name, "vertices": self.nvertices,
                "facets": [list(f) for f in self.facets]}

    @staticmethod
    def from_dict(d: dict) -> "SimplicialComplex":
        return SimplicialComplex(d["vertices"],
                                 [tuple(f) for f in d["facets"]],
                                 d.get("name", ""))

    @staticmethod
    def load(path: str) -> "SimplicialComplex":
        with open(path, "r", encoding="utf-8") as fh:
            return SimplicialComplex.from_dict(json.load(fh))


def cochain_complex(K: SimplicialComplex, ring="Z") -> List[Matrix]:
    """Coboundary matrices per degree; delta_{p+1} o delta_p = 0."""
    ring_tag(ring)
    return [K.coboundary_matrix(p) for p in range(K.dimension + 1)]


@dataclass
class Cochain:
    complex: SimplicialComplex
    degree: int
    values: Dict[Simplex, Union[int, Fraction]]
    ring: str = RING_Z

    def __post_init__(self):
        self.ring = ring_tag(self.ring)
        norm = {}
        for s, v in self.values.items():
            t = tuple(sorted(s))
            if len(t) != self.degree + 1:
                raise ValueError(f"{s} is not a {self.degree}-simplex")
            norm[t] = v
        self.values = norm

    def __call__(self, s: Simplex):
        return self.values.get(tuple(s), 0)

    def vector(self) -> List:
        return [self.values.get(s, 0) for s in self.complex.simplices(self.degree)]

    @staticmethod
    def from_vector(K: SimplicialComplex, degree: int, vec: Sequence,
                    ring: str = RING_Z) -> "Cochain":
        simps = K.simplices(degree)
        return Cochain(K, degree, {s: v for s, v in zip(simps, vec) if v}, ring)

    def coboundary(self) -> "Cochain":
        M = self.complex.coboundary_matrix(self.degree)
        vec = mat_vec(M, self.vector())
        return Cochain.from_vector(self.complex, self.degree + 1, vec, self.ring)

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check(other)
        out = dict(self.values)
        for s, v in other.values.items():
            out[s] = out.get(s, 0) + v
        return Cochain(self.complex, self.degree,
                       {s: v for s, v in out.items() if v}, self.ring)

    def scale(self, c) -> "Cochain":
        return Cochain(self.complex, self.degree,
                       {s: c * v for s, v in self.values.items()}, self.ring)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + other.scale(-1)

    def _check(self, other: "Cochain"):
        if self.complex is not other.complex:
            raise RingMismatch("cochains live on different complexes")
        if self.ring != other.ring:
            raise RingMismatch(f"ring mismatch {self.ring} vs {other.ring}")

    def to_dict(self) -> dict:
        return {"degree": self.degree, "ring": self.ring,
                "values": {",".join(map(str, s)): str(v)
                           for s, v in sorted(self.values.items())}}

    @staticmethod
    def from_dict(K: SimplicialComplex, d: dict) -> "Cochain":
        vals = {tuple(int(x) for x in key.split(",")): int(v)
                for key, v in d["values"].items()}
        return Cochain(K, d["degree"], vals, d.get("ring", RING_Z))


def cup(a: Cochain, b: Cochain) -> Cochain:
    """(a cup b)(v_0..v_{p+q}) = a(v_0..v_p) * b(v_p..v_{p+q})."""
    a._check(b)
    p, q = a.degree, b.degree
    out = {}
    for s in a.complex.simplices(p + q):
        v = a(s[:p + 1]) * b(s[p:])
        if v:
            out[s] = v
    return Cochain(a.complex, p + q, out, a.ring)


def cup_i(a: Cochain, b: Cochain, i: int) -> Cochain:
    """Steenrod's higher cup product.

    cup_0 is the exact front-face/back-face product over any ring; for
    i >= 1 the operation is implemented over Z/2 (its natural home for
    realizing the squaring operations), summing over all overlap
    patterns 0 <= j_0 < ... < j_i <= p+q-i with a taking the even
    intervals and b the odd ones.
    """
    if i == 0:
        return cup(a, b)
    a._check(b)
    if a.ring != "Zmod:2":
        raise RingMismatch("higher cup products are mod-2 operations here")
    p, q = a.degree, b.degree
    n = p + q - i
    if n < 0:
        return Cochain(a.complex, 0, {}, a.ring)
    out = {}
    for s in a.complex.simplices(n):
        total = 0
        for cuts in combinations(range(n + 1), i + 1):
            bounds = (0,) + cuts + (n,)
            # intervals [bounds[k] .. bounds[k+1]] inclusive, k = 0..i+1
            a_part: List[int] = []
            b_part: List[int] = []
            ok = True
            prev_end = None
            for k in range(i + 2):
                lo = bounds[k] if k == 0 else cuts[k - 1]
                hi = cuts[k] if k < i + 1 else n
                if hi < lo:
                    ok = False
                    break
                seg = list(range(lo, hi + 1))
                (a_part if k % 2 == 0 else b_part).extend(seg)
            if not ok:
                continue
            a_s = tuple(sorted(set(a_part)))
            b_s = tuple(sorted(set(b_part)))
            if len(a_s) != p + 1 or len(b_s) != q + 1:
                continue
            total += a(tuple(s[t] for t in a_s)) * b(tuple(s[t] for t in b_s))
        total %= 2
        if total:
            out[s] = total
    return Cochain(a.complex, n, out, a.ring)


def sq(a: Cochain, k: int) -> Cochain:
    """Steenrod square Sq^k on a mod-2 p-cocycle: a cup_{p-k} a."""
    return cup_i(a, a, a.degree - k)


# ----------------------------------------------------------------------
# Cohomology with canonical generators
# ----------------------------------------------------------------------

@dataclass
class GroupElement:
    coords: Tuple[int, ...]
    divisors: Tuple[int, ...]  # 0 marks a free coordinate

    def __post_init__(self):
        red = []
        for c, d in zip(self.coords, self.divisors):
            red.append(c % d if d else c)
        self.coords = tuple(red)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


class CohomologySpace:
    """H^p = ker(delta_p) / im(delta_{p-1}) with a chosen generator
    basis: canonical coordinates, representatives and class membership
    are all exact."""

    def __init__(self, K: SimplicialComplex, p: int, ring: str = RING_Z,
                 matrices: Optional[List[Matrix]] = None):
        ring_tag(ring)
        if ring != RING_Z:
            raise RingMismatch("canonical generator bases are integral; "
                               "other rings go through cohomology_groups")
        self.complex = K
        self.degree = p
        delta_p = (matrices[p] if matrices is not None and p < len(matrices)
                   else K.coboundary_matrix(p))
        ncoch = len(K.simplices(p))
        # a coboundary with no target simplices is the zero map
        self.kernel = identity(ncoch) if not delta_p else kernel_basis(delta_p)
        kdim = len(self.kernel[0]) if self.kernel and self.kernel[0] else 0
        if p == 0:
            image_cols: Matrix = zeros(len(K.simplices(0)), 0)
        else:
            image_cols = (matrices[p - 1] if matrices is not None
                          else K.coboundary_matrix(p - 1))
        rels = []
        ncols = len(image_cols[0]) if image_cols and image_cols[0] else 0
        self._solver = Solver(self.kernel)
        for j in range(ncols):
            v = [row[j] for row in image_cols]
            c = self._solver.solve(v)
            if c is None:
                raise ValueError("coboundary image escapes the cocycles")
            rels.append(c)
        relmat = ([[r[i] for r in rels] for i in range(kdim)]
                  if rels else zeros(kdim, 0))
        self.presentation = PresentedGroup(kdim, relmat)
        self._divisors = self.presentation._divisors
        self._keep = [i for i, d in enumerate(self._divisors) if d != 1]
        s = self.presentation._snf
        self._uinv = _unimodular_inverse(s.U)

    @property
    def group(self) -> FGAbelianGroup:
        return self.presentation.group()

    @property
    def divisors(self) -> Tuple[int, ...]:
        return tuple(self._divisors[i] for i in self._keep)

    def class_of(self, z: Union[Cochain, Sequence[int]]) -> GroupElement:
        vec = z.vector() if isinstance(z, Cochain) else list(z)
        x = self._solver.solve(vec)
        if x is None:
            raise ValueError("not a cocycle (or not integral)")
        y = self.presentation.reduce(x)
        return GroupElement(tuple(y[i] for i in self._keep), self.divisors)

    def representative(self, gen_index: int) -> List[int]:
        """Cocycle vector representing the chosen generator."""
        i = self._keep[gen_index]
        e = [1 if j == i else 0 for j in range(self.presentation.ngens)]
        x = mat_vec(self._uinv, e)
        return mat_vec(self.kernel, x)

    def representatives(self) -> List[List[int]]:
        return [self.representative(i) for i in range(len(self._keep))]


def _unimodular_inverse(U: Matrix) -> Matrix:
    n = len(U)
    solver = Solver(U)
    cols = []
    for i in range(n):
        e = [1 if j == i else 0 for j in range(n)]
        x = solver.solve(e)
        assert x is not None
        cols.append(x)
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def cohomology_groups(K: SimplicialComplex, ring: str = RING_Z,
                      degrees: Optional[Sequence[int]] = None
                      ) -> Dict[int, FGAbelianGroup]:
    """Cohomology in each requested degree.

    Integral groups come from Smith normal form; rational groups report
    the dimension; Z/n groups follow from the integral ones by universal
    coefficients for a complex of free abelian groups:
    H^p(C* (x) Z/n) = H^p (x) Z/n  (+)  Tor(H^{p+1}, Z/n).
    """
    tag = ring_tag(ring)
    degs = list(degrees) if degrees is not None else list(
        range(K.dimension + 1))
    integral = {p: CohomologySpace(K, p).group
                for p in set(degs) | {p + 1 for p in degs if tag.startswith("Zmod")}
                if 0 <= p <= K.dimension + 1}
    out: Dict[int, FGAbelianGroup] = {}
    for p in degs:
        G = integral.get(p, FGAbelianGroup())
        if tag == RING_Z:
            out[p] = G
        elif tag == RING_Q:
            out[p] = FGAbelianGroup(rank=G.rank)
        else:
            n = int(tag.split(":")[1])
            divisors = [n] * G.rank
            divisors += [_gcd(d, n) for d in G.torsion]
            Gnext = integral.get(p + 1, FGAbelianGroup())
            divisors += [_gcd(d, n) for d in Gnext.torsion]
            out[p] = FGAbelianGroup.from_divisors(
                [d for d in divisors if d > 1])
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


# ----------------------------------------------------------------------
# Quotients housing the invariants
# ----------------------------------------------------------------------

MOD_TORSION_AND_CLASS = "mod_torsion_and_h"
MOD_CLASS_IMAGE = "mod_h_image"
PLAIN = "plain"


def quotient_by_class(group: FGAbelianGroup, h: Sequence[int],
                      mode: str = PLAIN,
                      image: Optional[List[List[Fraction]]] = None
                      ) -> FGAbelianGroup:
    """Quotients of a cohomology group by the span of a class.

    * ``plain``: the full group modulo the subgroup generated by h.
    * ``mod_torsion_and_h``: kill torsion first, then the free image
      of h; the codomain of the degree-3 invariant.
    * ``mod_h_image``: rational quotient by a supplied image matrix
      (columns in the free coordinates); the codomain of the degree-5
      invariant.
    """
    ngens = group.rank + len(group.torsion)
    if mode == PLAIN:
        if len(h) != ngens:
            raise ValueError("coordinate length mismatch")
        rels: Matrix = zeros(ngens, 0)
        for t, d in enumerate(group.torsion):
            col = [0] * ngens
            col[group.rank + t] = d
            rels = hstack(rels, [[c] for c in col])
        rels = hstack(rels, [[c] for c in h])
        return PresentedGroup(ngens, rels).group()
    if mode == MOD_TORSION_AND_CLASS:
        free = list(h[:group.rank])
        if group.rank == 0:
            return FGAbelianGroup()
        return PresentedGroup(group.rank, [[c] for c in free]).group()
    if mode == MOD_CLASS_IMAGE:
        dim = group.rank
        cols = image if image is not None else []
        rank = _rational_rank(cols, dim)
        return FGAbelianGroup(rank=dim - rank)
    raise ValueError(f"unknown quotient mode {mode!r}")


def _rational_rank(cols: List[List[Fraction]], dim: int) -> int:
    rows = [[Fraction(c[i]) for c in cols] for i in range(dim)] if cols else []
    rank = 0
    ncols = len(cols)
    col = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, dim):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        for r in range(dim):
            if r != rank and rows[r][col]:
                f = rows[r][col] / pv
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank
