"""Exact linear algebra over Z/m for composite m.

The cohomology engine needs three primitives over Z/m where m need not be
prime: a canonical spanning form for submodules of (Z/m)^n, exact solving
of linear systems, and invariant factors of a quotient of nested
submodules.  All three are built on the Howell form, the strong echelon
form that is canonical over Z/m (Storjohann-Mulders).  The quotient step
diagonalizes a relation matrix with Smith-style integer row/column
operations; entries may be reduced mod m at any time because the relation
lattice always contains m*Z^r, so everything stays in [0, m) and int64.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from math import gcd

import numpy as np


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with s*a + t*b = g = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@lru_cache(maxsize=None)
def _units(m: int) -> tuple[int, ...]:
    return tuple(u for u in range(1, m) if gcd(u, m) == 1)


@lru_cache(maxsize=None)
def _normalizing_unit(a: int, m: int) -> int:
    """A unit u of Z/m with u*a = gcd(a, m) mod m."""
    target = gcd(a, m)
    for u in _units(m):
        if (u * a) % m == target:
            return u
    raise ArithmeticError(f"no normalizing unit for {a} mod {m}")


def _leading(row: np.ndarray) -> int:
    nz = np.nonzero(row)[0]
    return int(nz[0])


def howell_form(matrix, m: int) -> np.ndarray:
    """Canonical Howell basis of the row span of ``matrix`` over Z/m.

    Rows come out with strictly increasing pivot columns; each pivot
    divides m, and entries above a pivot are reduced below it.  The key
    property beyond echelon form: every element of the span whose leading
    entry sits in column >= j already lies in the span of the rows with
    pivot column >= j.
    """
    a = np.atleast_2d(np.asarray(matrix, dtype=np.int64)) % m
    ncols = a.shape[1]
    pending: dict[int, list[np.ndarray]] = defaultdict(list)
    for row in a:
        if row.any():
            pending[_leading(row)].append(row.copy())
    basis: list[np.ndarray] = []
    for j in range(ncols):
        rows = pending.pop(j, None)
        if not rows:
            continue
        piv = rows[0]
        for r in rows[1:]:
            pa, pb = int(piv[j]), int(r[j])
            g, s, t = xgcd(pa, pb)
            combined = (s * piv + t * r) % m
            rest = ((pa // g) * r - (pb // g) * piv) % m
            piv = combined
            if rest.any():
                pending[_leading(rest)].append(rest)
        piv = (_normalizing_unit(int(piv[j]), m) * piv) % m
        d = int(piv[j])
        annihilated = ((m // d) * piv) % m
        if annihilated.any():
            pending[_leading(annihilated)].append(annihilated)
        for row in basis:
            q = int(row[j]) // d
            if q:
                row -= q * piv
                row %= m
        basis.append(piv)
    if not basis:
        return np.zeros((0, ncols), dtype=np.int64)
    return np.array(basis, dtype=np.int64)


def module_size(howell_rows: np.ndarray, m: int) -> int:
    """Number of elements of the module spanned by a Howell basis."""
    size = 1
    for row in np.atleast_2d(howell_rows):
        if row.any():
            size *= m // int(row[_leading(row)])
    return size


def kernel_mod(matrix, m: int) -> np.ndarray:
    """Howell basis of the right kernel {v : matrix @ v = 0 mod m}.

    Works by row-reducing [matrix^T | I]: the rows of the span are
    (matrix @ c | c), so the rows whose left block vanished carry kernel
    vectors -- and by the Howell property they generate the whole kernel.
    """
    a = np.atleast_2d(np.asarray(matrix, dtype=np.int64)) % m
    nrows, ncols = a.shape
    aug = np.hstack([a.T, np.eye(ncols, dtype=np.int64)])
    h = howell_form(aug, m)
    kernel_rows = [row[nrows:] for row in h if not row[:nrows].any()]
    if not kernel_rows:
        return np.zeros((0, ncols), dtype=np.int64)
    return np.array(kernel_rows, dtype=np.int64)


def solve_mod(matrix, rhs, m: int) -> np.ndarray | None:
    """One solution x of matrix @ x = rhs over Z/m, or None."""
    a = np.atleast_2d(np.asarray(matrix, dtype=np.int64)) % m
    b = np.asarray(rhs, dtype=np.int64) % m
    neqs, nvars = a.shape
    aug = np.hstack([a.T, np.eye(nvars, dtype=np.int64)])
    h = howell_form(aug, m)
    residual = np.concatenate([b, np.zeros(nvars, dtype=np.int64)])
    for row in h:
        j = _leading(row)
        if j >= neqs:
            break
        d = int(row[j])
        rj = int(residual[j])
        if rj % d:
            return None
        residual = (residual - (rj // d) * row) % m
    if residual[:neqs].any():
        return None
    return (-residual[neqs:]) % m


def _diagonalize_with_basis(relations: np.ndarray, r: int, m: int):
    """Diagonalize a relation matrix for Z^r mod the implicit m*I rows.

    Returns (orders, basis) where orders[i] is the order of the i-th new
    basis vector in Z^r / (row span + m*Z^r) and basis rows express the
    new basis in the original coordinates (mod m, which is all the
    quotient can see).
    """
    a = np.atleast_2d(np.asarray(relations, dtype=np.int64)).copy() % m
    if a.size == 0:
        a = np.zeros((0, r), dtype=np.int64)
    basis = np.eye(r, dtype=np.int64)
    nrows = a.shape[0]
    rank = 0
    while rank < min(nrows, r):
        sub = a[rank:, rank:]
        if not sub.any():
            break
        # move the smallest nonzero entry to the pivot position
        nz = np.nonzero(sub)
        k = int(np.argmin(sub[nz]))
        i, j = int(nz[0][k]) + rank, int(nz[1][k]) + rank
        if i != rank:
            a[[rank, i]] = a[[i, rank]]
        if j != rank:
            a[:, [rank, j]] = a[:, [j, rank]]
            basis[[rank, j]] = basis[[j, rank]]
        p = int(a[rank, rank])
        col = a[rank + 1:, rank]
        row = a[rank, rank + 1:]
        if not col.any() and not (row % p).any():
            # clear the pivot row; column ops update the tracked basis
            for jj in range(rank + 1, r):
                q = int(a[rank, jj]) // p
                if q:
                    a[:, jj] = (a[:, jj] - q * a[:, rank]) % m
                    basis[rank] = (basis[rank] + q * basis[jj]) % m
            rank += 1
            continue
        # reduce column entries; remainders become new (smaller) pivots
        for ii in range(rank + 1, nrows):
            q = int(a[ii, rank]) // p
            if q:
                a[ii] = (a[ii] - q * a[rank]) % m
        # reduce row entries mod p so a smaller entry surfaces if p divides none
        for jj in range(rank + 1, r):
            q = int(a[rank, jj]) // p
            if q:
                a[:, jj] = (a[:, jj] - q * a[:, rank]) % m
                basis[rank] = (basis[rank] + q * basis[jj]) % m
    orders = []
    for i in range(r):
        d = int(a[i, i]) if i < min(nrows, r) else 0
        orders.append(m if d == 0 else gcd(d, m))
    return orders, basis


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def quotient_invariant_factors(
    span_rows, sub_rows, m: int
) -> tuple[list[int], list[np.ndarray]]:
    """Invariant factors (ascending chain) and generators of K/J over Z/m.

    K and J are given by spanning rows with J contained in K; the result
    describes the finite abelian group K/J, and each generator is a vector
    of (Z/m)^n whose class generates the corresponding cyclic factor.
    """
    k_basis = howell_form(span_rows, m)
    if k_basis.shape[0] == 0:
        return [], []
    r, n = k_basis.shape
    j_rows = np.atleast_2d(np.asarray(sub_rows, dtype=np.int64)) % m
    if j_rows.size == 0:
        j_rows = np.zeros((0, n), dtype=np.int64)
    stacked = np.vstack([k_basis, j_rows])
    left_kernel = kernel_mod(stacked.T, m)
    relation_coeffs = left_kernel[:, :r] if left_kernel.size else left_kernel.reshape(0, r)
    orders, new_basis = _diagonalize_with_basis(relation_coeffs, r, m)
    # regroup cyclic orders into an invariant-factor chain, prime by prime
    slots: dict[int, list[tuple[int, int]]] = defaultdict(list)  # prime -> [(exp, pos)]
    for pos, c in enumerate(orders):
        for p, e in _factorize(c).items():
            slots[p].append((e, pos))
    for p in slots:
        slots[p].sort(reverse=True)
    depth = max((len(v) for v in slots.values()), default=0)
    factors: list[int] = []
    generators: list[np.ndarray] = []
    for k in range(depth):
        value = 1
        combo = np.zeros(r, dtype=np.int64)
        for p, entries in slots.items():
            if k < len(entries):
                e, pos = entries[k]
                value *= p**e
                cofactor = orders[pos] // p**e
                combo = (combo + cofactor * new_basis[pos]) % m
        factors.append(value)
        generators.append((combo @ k_basis) % m)
    order = np.argsort(factors, kind="stable")
    return [factors[i] for i in order], [generators[i] for i in order]
