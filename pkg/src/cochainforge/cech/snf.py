"""Exact integer matrix algebra: Smith normal form and lattice solving.

Matrices are lists of lists of Python ints (arbitrary precision).  The
Smith normal form routine keeps the full unimodular transforms so that
U * A * V = D holds exactly, with the diagonal in a divisibility chain;
pivoting always picks a smallest-magnitude nonzero entry to limit entry
swell.  Everything else (solving, kernels, preimages of lattices) is
built on top of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

Matrix = List[List[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(n: int, m: int) -> Matrix:
    return [[0] * m for _ in range(n)]


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    out = zeros(n, m)
    for i in range(n):
        Ai = A[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                row = out[i]
                for j in range(m):
                    row[j] += a * Bt[j]
    return out


def mat_vec(A: Matrix, v: Sequence[int]) -> List[int]:
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def transpose(A: Matrix) -> Matrix:
    return [list(col) for col in zip(*A)] if A else []


def hstack(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return [row[:] for row in B]
    if not B:
        return [row[:] for row in A]
    return [ra + rb for ra, rb in zip(A, B)]


@dataclass
class SNFResult:
    """U * A * V = D with U, V unimodular and the diagonal of D a
    divisibility chain d1 | d2 | ..."""

    U: Matrix
    V: Matrix
    D: Matrix
    rank: int

    @property
    def divisors(self) -> List[int]:
        return [self.D[i][i] for i in range(self.rank)]


def smith_normal_form(A: Matrix) -> SNFResult:
    n = len(A)
    m = len(A[0]) if n else 0
    D = [row[:] for row in A]
    U = identity(n)
    V = identity(m)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, c):  # row dst += c * row src
        D[dst] = [x + c * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, c):
        for row in D:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    def negate_row(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]

    def row_gcd_transform(t, i):
        """2x2 unimodular row transform zeroing D[i][t] against D[t][t]."""
        a, b = D[t][t], D[i][t]
        g, s0, s1 = _xgcd(a, b)
        p, q = a // g, b // g
        rt, ri = D[t], D[i]
        D[t] = [s0 * x + s1 * y for x, y in zip(rt, ri)]
        D[i] = [-q * x + p * y for x, y in zip(rt, ri)]
        ut, ui = U[t], U[i]
        U[t] = [s0 * x + s1 * y for x, y in zip(ut, ui)]
        U[i] = [-q * x + p * y for x, y in zip(ut, ui)]

    def col_gcd_transform(t, j):
        a, b = D[t][t], D[t][j]
        g, s0, s1 = _xgcd(a, b)
        p, q = a // g, b // g
        for row in D:
            x, y = row[t], row[j]
            row[t] = s0 * x + s1 * y
            row[j] = -q * x + p * y
        for row in V:
            x, y = row[t], row[j]
            row[t] = s0 * x + s1 * y
            row[j] = -q * x + p * y

    t = 0
    while True:
        # smallest-magnitude nonzero pivot in the remaining block
        pivot = None
        best = None
        for i in range(t, n):
            for j in range(t, m):
                v = D[i][j]
                if v and (best is None or abs(v) < best):
                    pivot = (i, j)
                    best = abs(v)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            for i in range(t + 1, n):
                if D[i][t]:
                    if D[i][t] % D[t][t] == 0:
                        add_row(t, i, -(D[i][t] // D[t][t]))
                    else:
                        row_gcd_transform(t, i)
            for j in range(t + 1, m):
                if D[t][j]:
                    if D[t][j] % D[t][t] == 0:
                        add_col(t, j, -(D[t][j] // D[t][t]))
                    else:
                        col_gcd_transform(t, j)
            if any(D[i][t] for i in range(t + 1, n)):
                continue
            # force the pivot to divide the whole trailing block; this
            # drives it to the block gcd and keeps later quotients small
            d = D[t][t]
            offender = None
            for i in range(t + 1, n):
                row = D[i]
                for j in range(t + 1, m):
                    if row[j] % d:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
        if D[t][t] < 0:
            negate_row(t)
        t += 1
    rank = t
    return SNFResult(U=U, V=V, D=D, rank=rank)


def _xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """g = gcd(a, b) > 0 with s*a + t*b = g."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, t0, s1, t1 = s1, t1, s0 - q * s1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


class Solver:
    """Factor A once (Smith form), then solve A x = b repeatedly."""

    def __init__(self, A: Matrix):
        self.n = len(A)
        self.m = len(A[0]) if self.n else 0
        self.s = smith_normal_form(A) if self.n else None

    def solve(self, b: Sequence[int]) -> Optional[List[int]]:
        if self.n == 0:
            return [0] * self.m
        s = self.s
        c = mat_vec(s.U, list(b))
        y = [0] * self.m
        for i in range(self.n):
            d = s.D[i][i] if i < self.m else 0
            if i < self.m and d:
                if c[i] % d:
                    return None
                y[i] = c[i] // d
            elif c[i]:
                return None
        return mat_vec(s.V, y)


def solve(A: Matrix, b: Sequence[int]) -> Optional[List[int]]:
    """One integer solution of A x = b, or None."""
    return Solver(A).solve(b)


def kernel_basis(A: Matrix) -> Matrix:
    """Columns spanning {x : A x = 0} (a saturated sublattice).

    Integer column echelon reduction with only the column transform
    tracked; much lighter than a full Smith form on wide coboundary
    matrices."""
    n = len(A)
    m = len(A[0]) if n else 0
    if n == 0:
        return identity(m)
    # work on columns: each entry cols[j] = (column of A, column of V)
    acols = [[A[i][j] for i in range(n)] for j in range(m)]
    vcols = [[1 if i == j else 0 for i in range(m)] for j in range(m)]
    active = list(range(m))
    for row in range(n):
        live = [j for j in active if acols[j][row]]
        while len(live) > 1:
            live.sort(key=lambda j: abs(acols[j][row]))
            piv = live[0]
            pv = acols[piv][row]
            nxt = []
            for j in live[1:]:
                q = acols[j][row] // pv
                if q:
                    aj, ap = acols[j], acols[piv]
                    for i in range(row, n):
                        aj[i] -= q * ap[i]
                    vj, vp = vcols[j], vcols[piv]
                    for i in range(m):
                        vj[i] -= q * vp[i]
                if acols[j][row]:
                    nxt.append(j)
            live = [piv] + nxt
        if live:
            active.remove(live[0])
    cols = [vcols[j] for j in active]
    return transpose(cols) if cols else [[] for _ in range(m)]


def column_space_contains(A: Matrix, b: Sequence[int]) -> bool:
    return solve(A, b) is not None


def preimage_lattice(F: Matrix, M: Matrix) -> Matrix:
    """Basis of {x : F x lies in the column lattice of M}.

    Computed as the x-projection of the kernel of [F | -M]; the
    projection of a kernel basis generates the projection lattice.
    """
    n1 = len(F[0]) if F else 0
    K = kernel_basis(hstack(F, [[-x for x in row] for row in M]))
    if not K or not K[0]:
        return [[] for _ in range(n1)]
    return [K[i][:] for i in range(n1)]


def coords_in_lattice(G: Matrix, v: Sequence[int]) -> Optional[List[int]]:
    """Coordinates of v in the column lattice spanned by G."""
    return solve(G, v)
