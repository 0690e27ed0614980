"""Exact integer and rational linear algebra on the lattices N = Z^d and M = N*.

Vectors are plain tuples of Python ints and matrices are tuples of rows, so
everything is hashable, immutable and arbitrary precision.

Hermite normal form convention (row style): ``h = u @ m`` is in row echelon
form, the pivot of every nonzero row is positive, entries *above* a pivot lie
in ``[0, pivot)``, and zero rows come last.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .errors import ToricError

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def as_vector(v: Iterable[int]) -> Vector:
    out = tuple(int(x) for x in v)
    if not out:
        raise ToricError("empty vector")
    return out


def as_matrix(rows: Iterable[Iterable[int]]) -> Matrix:
    m = tuple(as_vector(r) for r in rows)
    if not m:
        raise ToricError("empty matrix")
    if len({len(r) for r in m}) != 1:
        raise ToricError("matrix rows have different lengths")
    return m


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def content(v: Sequence[int]) -> int:
    return reduce(gcd, v, 0)


def primitive(v: Sequence) -> Vector:
    """Scale a nonzero rational vector to the primitive integer vector on its ray."""
    fr = [Fraction(x) for x in v]
    den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in fr), 1)
    ints = [int(x * den) for x in fr]
    g = content(ints)
    if g == 0:
        raise ToricError("zero vector has no primitive representative")
    return tuple(x // g for x in ints)


def is_primitive(v: Sequence[int]) -> bool:
    return content(v) == 1


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(dot(row, col) for col in cols) for row in a)


def transpose(m: Sequence[Sequence[int]]) -> Matrix:
    return tuple(zip(*m))


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    a = [list(r) for r in m]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ToricError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def row_reduce(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q. Returns (rref rows, pivot columns)."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return [], []
    ncols = len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_reduce(rows)[1])


def nullspace(rows: Sequence[Sequence], dim: int | None = None) -> list[Vector]:
    """Primitive integer basis of {x : row . x = 0 for every row}."""
    if dim is None:
        dim = len(rows[0])
    if not rows:
        return list(identity(dim))
    rref, pivots = row_reduce(rows)
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * dim
        x[f] = Fraction(1)
        for row, p in zip(rref, pivots):
            x[p] = -row[f]
        basis.append(primitive(x))
    return basis


def solve(rows: Sequence[Sequence], rhs: Sequence) -> tuple[Fraction, ...] | None:
    """A rational solution x of rows @ x = rhs, or None if inconsistent.

    When the solution is not unique the free variables are set to zero.
    """
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    rref, pivots = row_reduce(aug)
    n = len(rows[0])
    if pivots and pivots[-1] == n:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(rref, pivots):
        x[p] = row[n]
    return tuple(x)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g, a gcd of a and b.

    When a divides b this is (a, 1, 0), so elimination never disturbs a pivot
    that already divides everything (otherwise row and column clearing can
    undo each other forever).  Otherwise g >= 0.
    """
    if a and b % a == 0:
        return a, 1, 0
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def hermite_normal_form(m: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form.

    Returns ``(h, u)`` with ``u`` unimodular and ``u @ m == h``; see the module
    docstring for the normalization of ``h``.
    """
    a = [list(r) for r in as_matrix(m)]
    nrows, ncols = len(a), len(a[0])
    u = [list(r) for r in identity(nrows)]
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        for i in range(r + 1, nrows):
            if a[i][c] == 0:
                continue
            g, s, t = _xgcd(a[r][c], a[i][c])
            x, y = a[r][c] // g, a[i][c] // g
            # [[s, t], [-y, x]] has determinant s*x + t*y = 1.
            a[r], a[i] = (
                [s * p + t * q for p, q in zip(a[r], a[i])],
                [-y * p + x * q for p, q in zip(a[r], a[i])],
            )
            u[r], u[i] = (
                [s * p + t * q for p, q in zip(u[r], u[i])],
                [-y * p + x * q for p, q in zip(u[r], u[i])],
            )
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
            u[r] = [-x for x in u[r]]
        piv = a[r][c]
        for i in range(r):
            q = a[i][c] // piv
            if q:
                a[i] = [p - q * s for p, s in zip(a[i], a[r])]
                u[i] = [p - q * s for p, s in zip(u[i], u[r])]
        r += 1
    return tuple(map(tuple, a)), tuple(map(tuple, u))


def smith_normal_form(m: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Smith invariant factors d1 | d2 | ... (length min(rows, cols), zeros last)."""
    a = [list(r) for r in as_matrix(m)]
    nrows, ncols = len(a), len(a[0])
    k = min(nrows, ncols)
    for t in range(k):
        nz = [(abs(a[i][j]), i, j) for i in range(t, nrows) for j in range(t, ncols) if a[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            done = True
            for i in range(t + 1, nrows):
                if a[i][t]:
                    g, s, x = _xgcd(a[t][t], a[i][t])
                    p, q = a[t][t] // g, a[i][t] // g
                    a[t], a[i] = (
                        [s * u + x * v for u, v in zip(a[t], a[i])],
                        [-q * u + p * v for u, v in zip(a[t], a[i])],
                    )
            for j in range(t + 1, ncols):
                if a[t][j]:
                    done = False
                    g, s, x = _xgcd(a[t][t], a[t][j])
                    p, q = a[t][t] // g, a[t][j] // g
                    for row in a:
                        row[t], row[j] = s * row[t] + x * row[j], -q * row[t] + p * row[j]
            if done and all(a[i][t] == 0 for i in range(t + 1, nrows)):
                # Divisibility: fold any entry not divisible by the pivot into row t.
                bad = next(
                    (i for i in range(t + 1, nrows) for j in range(t + 1, ncols)
                     if a[i][j] % a[t][t]),
                    None,
                )
                if bad is None:
                    break
                a[t] = [u + v for u, v in zip(a[t], a[bad])]
    return tuple(abs(a[i][i]) for i in range(k))


def extends_to_basis(vs: Sequence[Sequence[int]]) -> bool:
    """True iff the vectors can be completed to a Z-basis of Z^d."""
    if not vs:
        return True
    m = as_matrix(vs)
    if rank(m) != len(m):
        raise ToricError("not independent")
    return all(f == 1 for f in smith_normal_form(m))


def lattice_index(vs: Sequence[Sequence[int]]) -> int:
    """Index of the lattice spanned by ``vs`` inside its saturation (span ∩ Z^d)."""
    m = as_matrix(vs)
    if rank(m) != len(m):
        raise ToricError("not independent")
    out = 1
    for f in smith_normal_form(m):
        out *= f
    return out


def maximal_minors_gcd(m: Sequence[Sequence[int]]) -> int:
    """gcd of the maximal minors; equals the product of the Smith invariant factors."""
    m = as_matrix(m)
    r = len(m)
    return reduce(gcd, (abs(determinant([[row[j] for j in cols] for row in m]))
                        for cols in combinations(range(len(m[0])), r)), 0)
