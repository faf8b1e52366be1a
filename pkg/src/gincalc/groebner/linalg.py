"""Dense linear algebra over F_p with int64 numpy arrays.

Graded pieces of homogeneous ideals are stored as matrices whose columns are
the degree-t monomials in revlex-descending order, so the first nonzero entry
of a row is its leading term.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from gincalc.monomials import monomials_of_degree


def matmul_mod(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """Exact ``A @ B mod p`` for reduced int64 inputs."""
    k = A.shape[1]
    if k == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    if k * (p - 1) ** 2 < 2 ** 53:
        # float64 BLAS is exact below 2^53
        return np.rint(A.astype(np.float64) @ B.astype(np.float64)).astype(np.int64) % p
    if (p - 1) ** 2 < 2 ** 62 // k:
        return (A @ B) % p
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for j in range(k):
        out = (out + np.outer(A[:, j], B[j]) % p) % p
    return out


def rref_simple(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p, one pivot at a time."""
    A = np.array(M, dtype=np.int64) % p
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if len(nz) == 0:
            continue
        k = r + nz[0]
        if k != r:
            A[[r, k]] = A[[k, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        col = A[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if len(hit):
            A[hit] = (A[hit] - np.outer(col[hit], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def _inverse(P: np.ndarray, p: int) -> np.ndarray:
    k = len(P)
    R, piv = rref_simple(np.hstack([P, np.eye(k, dtype=np.int64)]), p)
    if piv[:k] != list(range(k)):
        raise ZeroDivisionError("singular block")
    return R[:, k:]


def rref(M: np.ndarray, p: int, block: int = 48) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p; returns (nonzero rows, pivot columns).

    Pivots are located on one column block at a time using only that block;
    the chosen rows are then normalised and eliminated from every other row
    with a single matrix product.
    """
    A = np.array(M, dtype=np.int64) % p
    rows, cols = A.shape
    if rows * cols < 20_000:
        return rref_simple(A, p)
    pivots: list[int] = []
    r = 0
    for c0 in range(0, cols, block):
        if r == rows:
            break
        c1 = min(cols, c0 + block)
        S = A[r:, c0:c1].copy()
        order = np.arange(len(S))
        local: list[int] = []
        rr = 0
        for c in range(c1 - c0):
            if rr == len(S):
                break
            nz = np.flatnonzero(S[rr:, c])
            if len(nz) == 0:
                continue
            k = rr + nz[0]
            if k != rr:
                S[[rr, k]] = S[[k, rr]]
                order[[rr, k]] = order[[k, rr]]
            S[rr] = S[rr] * pow(int(S[rr, c]), -1, p) % p
            below = S[rr + 1:, c]
            hit = np.flatnonzero(below)
            if len(hit):
                S[rr + 1 + hit] = (S[rr + 1 + hit] - np.outer(below[hit], S[rr])) % p
            local.append(c0 + c)
            rr += 1
        if rr == 0:
            continue
        chosen = r + order[:rr]
        rest = np.setdiff1d(np.arange(r, rows), chosen)
        P = matmul_mod(_inverse(A[chosen][:, local], p), A[chosen], p)
        top, bottom = A[:r], A[rest]
        if len(top):
            top = (top - matmul_mod(top[:, local], P, p)) % p
        if len(bottom):
            bottom = (bottom - matmul_mod(bottom[:, local], P, p)) % p
        A = np.vstack([top, P, bottom])
        pivots += local
        r += rr
    return A[:r], pivots


def reduce_rows(X: np.ndarray, R: np.ndarray, pivots: list[int], p: int) -> np.ndarray:
    """Reduce the rows of ``X`` against an RREF basis ``R``."""
    if len(pivots) == 0 or len(X) == 0:
        return X % p
    return (X - matmul_mod(X[:, pivots], R, p)) % p


def merge(R: np.ndarray, pivots: list[int], X: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """RREF of the row space of ``R`` plus the rows of ``X``."""
    res = reduce_rows(X, R, pivots, p)
    res = res[np.any(res != 0, axis=1)]
    if len(res) == 0:
        return R, pivots
    return rref(np.vstack([R, res]), p)


def nullspace(M: np.ndarray, p: int) -> np.ndarray:
    """Basis of ``{v : M v = 0}`` as rows; each row is 1 at its free column."""
    R, pivots = rref(M, p)
    n = M.shape[1]
    free = [c for c in range(n) if c not in set(pivots)]
    K = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        K[i, f] = 1
        if pivots:
            K[i, pivots] = (-R[:, f]) % p
    return K


# ---------------------------------------------------------------------------
# monomial bookkeeping


@lru_cache(maxsize=None)
def monomial_index(arity: int, t: int) -> dict:
    return {m: k for k, m in enumerate(monomials_of_degree(arity, t))}


@lru_cache(maxsize=None)
def shift_index(arity: int, t: int) -> np.ndarray:
    """``S[j, k]`` = column of ``x_j * m_k`` in degree ``t + 1``."""
    idx = monomial_index(arity, t + 1)
    mons = monomials_of_degree(arity, t)
    S = np.empty((arity, len(mons)), dtype=np.int64)
    for j in range(arity):
        for k, m in enumerate(mons):
            S[j, k] = idx[m[:j] + (m[j] + 1,) + m[j + 1:]]
    return S


def multiply_by_variables(B: np.ndarray, arity: int, t: int) -> np.ndarray:
    """Rows ``x_j * b`` for every row ``b`` of a degree-``t`` piece and every ``j``."""
    S = shift_index(arity, t)
    n_next = len(monomials_of_degree(arity, t + 1))
    out = np.zeros((arity * len(B), n_next), dtype=np.int64)
    for j in range(arity):
        out[j * len(B):(j + 1) * len(B), S[j]] = B
    return out


def sym_power(A: np.ndarray, t: int, p: int) -> np.ndarray:
    """Matrix of ``f(x) -> f(A x)`` on degree-``t`` forms (rows: input monomials)."""
    n = A.shape[0]
    cur = np.ones((1, 1), dtype=np.int64)
    for s in range(t):
        mons = monomials_of_degree(n, s + 1)
        prev_idx = monomial_index(n, s)
        S = shift_index(n, s)
        nxt = np.zeros((len(mons), len(mons)), dtype=np.int64)
        for k, m in enumerate(mons):
            i = next(j for j, e in enumerate(m) if e)
            parent = cur[prev_idx[m[:i] + (m[i] - 1,) + m[i + 1:]]]
            row = np.zeros(len(mons), dtype=np.int64)
            for j in range(n):
                if A[i, j]:
                    row[S[j]] += parent * A[i, j]
            nxt[k] = row % p
        cur = nxt
    return cur


def random_invertible(n: int, p: int, rng: np.random.Generator) -> np.ndarray:
    while True:
        A = rng.integers(0, p, size=(n, n), dtype=np.int64)
        _, piv = rref(A, p)
        if len(piv) == n:
            return A
