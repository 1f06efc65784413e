"""Exact linear algebra over the prime fields F_2, F_3, F_5.

Field elements are plain ints in range(q); vectors and matrices are
tuples (of tuples) so they can be dict keys.  Subspaces are canonically
represented by the reduced row echelon form of a spanning matrix with
zero rows dropped, which is unique per subspace.
"""

from __future__ import annotations

from functools import lru_cache

__all__ = [
    "check_prime",
    "mat_mul",
    "mat_vec",
    "identity",
    "rref",
    "row_space",
    "mat_inv",
    "transpose",
]

SUPPORTED_PRIMES = (2, 3, 5)

Vec = tuple[int, ...]
Mat = tuple[Vec, ...]


def check_prime(q: int) -> int:
    if q not in SUPPORTED_PRIMES:
        raise ValueError(f"field size must be one of {SUPPORTED_PRIMES}, got {q}")
    return q


def identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a))


def mat_mul(a: Mat, b: Mat, q: int) -> Mat:
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) % q for col in bt) for row in a
    )


def mat_vec(a: Mat, v: Vec, q: int) -> Vec:
    return tuple(sum(x * y for x, y in zip(row, v)) % q for row in a)


def rref(rows, q: int) -> Mat:
    """Reduced row echelon form with zero rows dropped."""
    work = [list(r) for r in rows]
    m = len(work)
    ncols = len(work[0]) if m else 0
    pivot_row = 0
    for col in range(ncols):
        pivot = next(
            (r for r in range(pivot_row, m) if work[r][col] % q != 0), None
        )
        if pivot is None:
            continue
        work[pivot_row], work[pivot] = work[pivot], work[pivot_row]
        inv = pow(work[pivot_row][col], -1, q)
        work[pivot_row] = [(x * inv) % q for x in work[pivot_row]]
        for r in range(m):
            if r != pivot_row and work[r][col] % q:
                factor = work[r][col]
                work[r] = [
                    (x - factor * y) % q for x, y in zip(work[r], work[pivot_row])
                ]
        pivot_row += 1
        if pivot_row == m:
            break
    return tuple(tuple(r) for r in work[:pivot_row] if any(r))


def row_space(rows, q: int) -> Mat:
    return rref(rows, q)


def mat_inv(a: Mat, q: int) -> Mat:
    """Inverse of a square matrix, by Gauss-Jordan on [a | I]."""
    n = len(a)
    work = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] % q != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv = pow(work[col][col], -1, q)
        work[col] = [(x * inv) % q for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] % q:
                factor = work[r][col]
                work[r] = [(x - factor * y) % q for x, y in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


@lru_cache(maxsize=None)
def all_vectors(dim: int, q: int):
    """All vectors of F_q^dim in lexicographic order."""
    out = [()]
    for _ in range(dim):
        out = [v + (c,) for v in out for c in range(q)]
    return tuple(out)
