"""Dense linear algebra over GF(p): row reduction, rank, null space."""

from __future__ import annotations

import numpy as np


def gf_rref(mat: np.ndarray, p: int) -> tuple:
    """Reduced row-echelon form and pivot columns of ``mat`` over GF(p)."""
    a = np.array(mat, dtype=np.int64) % p
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        sel = None
        for i in range(r, rows):
            if a[i, c] % p:
                sel = i
                break
        if sel is None:
            continue
        if sel != r:
            a[[r, sel]] = a[[sel, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        pivots.append(c)
        r += 1
    return a, pivots


def gf_rank(mat: np.ndarray, p: int) -> int:
    return len(gf_rref(mat, p)[1])


def gf_row_basis(mat: np.ndarray, p: int) -> np.ndarray:
    """A full-rank matrix with the same row space."""
    rref, pivots = gf_rref(mat, p)
    return rref[: len(pivots)]


def gf_nullspace(mat: np.ndarray, p: int) -> np.ndarray:
    """Basis (rows) of the right null space of ``mat`` over GF(p)."""
    a = np.asarray(mat, dtype=np.int64) % p
    _, cols = a.shape
    rref, pivots = gf_rref(a, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = (-rref[r, fc]) % p
    return basis


def gf_solve_homogeneous(mat: np.ndarray, p: int) -> np.ndarray:
    """All nonzero solutions x of mat @ x = 0, one per projective class.

    Intended for tiny systems (a handful of columns); each returned solution
    is scaled so its first nonzero entry is 1.
    """
    ns = gf_nullspace(mat, p)
    if ns.shape[0] == 0:
        return np.zeros((0, mat.shape[1]), dtype=np.int64)
    seen = set()
    out = []
    dim = ns.shape[0]
    # enumerate the projective points of the null space
    for digits in np.ndindex(*([p] * dim)):
        vec = np.zeros(mat.shape[1], dtype=np.int64)
        for d, row in zip(digits, ns):
            if d:
                vec = (vec + d * row) % p
        if not vec.any():
            continue
        lead = vec[np.nonzero(vec)[0][0]]
        vec = (vec * pow(int(lead), p - 2, p)) % p
        key = tuple(vec)
        if key not in seen:
            seen.add(key)
            out.append(vec)
    return np.array(out, dtype=np.int64)
