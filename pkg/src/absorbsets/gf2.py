"""Dense linear algebra over GF(2).

Matrices are ``numpy.uint8`` arrays with entries in {0, 1}.  Row reduction
packs each row into a Python integer so that row operations are single XORs.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

import numpy as np
import numpy.typing as npt

BitMatrix = npt.NDArray[np.uint8]
BitVector = npt.NDArray[np.uint8]


def as_bits(data: Sequence[int] | Sequence[Sequence[int]] | np.ndarray, ndim: int | None = None) -> np.ndarray:
    """Coerce ``data`` to a uint8 array, rejecting anything that is not 0/1."""
    arr = np.asarray(data)
    if arr.size == 0:
        arr = arr.astype(np.uint8)
    if ndim is not None and arr.ndim != ndim:
        raise ValueError(f"expected a {ndim}-dimensional bit array, got shape {arr.shape}")
    if arr.size and not np.isin(arr, (0, 1)).all():
        raise ValueError("bit arrays may only contain 0 and 1")
    return arr.astype(np.uint8)


def zeros(rows: int, cols: int) -> BitMatrix:
    return np.zeros((rows, cols), dtype=np.uint8)


def identity(n: int) -> BitMatrix:
    return np.eye(n, dtype=np.uint8)


def weight(v: BitVector) -> int:
    return int(np.count_nonzero(v))


def indicator(support: Iterable[int], length: int) -> BitVector:
    """0/1 vector of ``length`` with ones at the (0-based) ``support``."""
    v = np.zeros(length, dtype=np.uint8)
    for i in support:
        if not 0 <= i < length:
            raise ValueError(f"index {i} out of range for length {length}")
        v[i] = 1
    return v


def support(v: BitVector) -> tuple[int, ...]:
    return tuple(int(i) for i in np.flatnonzero(v))


def _pack_rows(M: BitMatrix) -> list[int]:
    # bit j of the packed integer holds column j
    weights = [1 << j for j in range(M.shape[1])]
    return [sum(w for w, b in zip(weights, row) if b) for row in M.tolist()]


def _pack_vector(v: BitVector) -> int:
    return sum(1 << j for j, b in enumerate(v.tolist()) if b)


def _echelon(rows: list[int]) -> dict[int, int]:
    """Leftmost-pivot elimination; returns {pivot column: reduced row}."""
    basis: dict[int, int] = {}
    for r in rows:
        for col in sorted(basis):
            if r >> col & 1:
                r ^= basis[col]
        if r:
            pivot = (r & -r).bit_length() - 1
            for col, b in basis.items():
                if b >> pivot & 1:
                    basis[col] = b ^ r
            basis[pivot] = r
    return basis


def rank(M: BitMatrix) -> int:
    """Row rank of ``M`` over GF(2)."""
    M = as_bits(M, ndim=2)
    if M.size == 0:
        return 0
    return len(_echelon(_pack_rows(M)))


def rowspace_contains(M: BitMatrix, v: BitVector) -> bool:
    """True iff ``v`` is a GF(2) combination of the rows of ``M``."""
    M = as_bits(M, ndim=2)
    v = as_bits(v, ndim=1)
    if M.shape[1] != v.shape[0]:
        raise ValueError(f"vector length {v.shape[0]} does not match {M.shape[1]} columns")
    target = _pack_vector(v)
    if target == 0:
        return True
    if M.shape[0] == 0:
        return False
    basis = _echelon(_pack_rows(M))
    for col in sorted(basis):
        if target >> col & 1:
            target ^= basis[col]
    return target == 0


def product(A: BitMatrix, B: BitMatrix) -> BitMatrix:
    """Matrix product over GF(2)."""
    A = as_bits(A, ndim=2)
    B = as_bits(B, ndim=2)
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"cannot multiply {A.shape} by {B.shape}")
    return ((A.astype(np.int64) @ B.astype(np.int64)) % 2).astype(np.uint8)


def kronecker(A: BitMatrix, B: BitMatrix) -> BitMatrix:
    """Kronecker product; entry (i*rB + k, j*cB + l) is A[i, j] * B[k, l]."""
    A = as_bits(A, ndim=2)
    B = as_bits(B, ndim=2)
    return np.kron(A, B).astype(np.uint8)


def transpose(M: BitMatrix) -> BitMatrix:
    return np.ascontiguousarray(as_bits(M, ndim=2).T)


def hstack(*blocks: BitMatrix) -> BitMatrix:
    return np.hstack([as_bits(b, ndim=2) for b in blocks]).astype(np.uint8)
