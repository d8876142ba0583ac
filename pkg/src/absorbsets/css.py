"""CSS codes, the symplectic product and the hypergraph-product construction.

Pauli operators are represented by binary pairs ``(x | z)``: X is (1, 0),
Z is (0, 1) and Y is (1, 1) on each qubit.  Phases are not tracked.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from absorbsets import gf2


@dataclass(frozen=True)
class CssCode:
    """Stabilizer code with block check matrix diag(H_X, H_Z)."""

    H_X: gf2.BitMatrix
    H_Z: gf2.BitMatrix

    def __post_init__(self) -> None:
        hx = gf2.as_bits(self.H_X, ndim=2)
        hz = gf2.as_bits(self.H_Z, ndim=2)
        if hx.shape[1] != hz.shape[1]:
            raise ValueError(f"H_X has {hx.shape[1]} columns but H_Z has {hz.shape[1]}")
        object.__setattr__(self, "H_X", hx)
        object.__setattr__(self, "H_Z", hz)

    @property
    def n(self) -> int:
        return self.H_X.shape[1]

    def stabilizer_matrix(self) -> gf2.BitMatrix:
        """The 2n-column binary matrix with rows (h_x | 0) and (0 | h_z)."""
        top = gf2.hstack(self.H_X, gf2.zeros(self.H_X.shape[0], self.n))
        bottom = gf2.hstack(gf2.zeros(self.H_Z.shape[0], self.n), self.H_Z)
        return np.vstack([top, bottom]).astype(np.uint8)


def css_valid(code: CssCode) -> bool:
    """True iff H_X H_Z^T vanishes over GF(2)."""
    return not gf2.product(code.H_X, gf2.transpose(code.H_Z)).any()


def symplectic_product(h: tuple[gf2.BitVector, gf2.BitVector], g: tuple[gf2.BitVector, gf2.BitVector]) -> int:
    """h_x g_z^T + h_z g_x^T mod 2."""
    hx, hz = (gf2.as_bits(p, ndim=1) for p in h)
    gx, gz = (gf2.as_bits(p, ndim=1) for p in g)
    n = hx.shape[0]
    if any(p.shape[0] != n for p in (hz, gx, gz)):
        raise ValueError("all four halves must have the same length")
    return int(hx.astype(np.int64) @ gz + hz.astype(np.int64) @ gx) & 1


def symplectic_orthogonal(h: tuple[gf2.BitVector, gf2.BitVector], g: tuple[gf2.BitVector, gf2.BitVector]) -> bool:
    return symplectic_product(h, g) == 0


def hypergraph_product(H1: gf2.BitMatrix, H2: gf2.BitMatrix) -> CssCode:
    """Hypergraph product of two classical check matrices.

    With H1 of shape r1 x n1 and H2 of shape r2 x n2::

        H_X = [ H1 (x) I_n2 | I_r1 (x) H2^T ]     shape r1*n2 x (n1*n2 + r1*r2)
        H_Z = [ I_n1 (x) H2 | H1^T (x) I_r2 ]     shape n1*r2 x (n1*n2 + r1*r2)

    The first n1*n2 columns index pairs (variable of H1, variable of H2) as
    ``i * n2 + j``.
    """
    H1 = gf2.as_bits(H1, ndim=2)
    H2 = gf2.as_bits(H2, ndim=2)
    r1, n1 = H1.shape
    r2, n2 = H2.shape
    H_X = gf2.hstack(gf2.kronecker(H1, gf2.identity(n2)), gf2.kronecker(gf2.identity(r1), gf2.transpose(H2)))
    H_Z = gf2.hstack(gf2.kronecker(gf2.identity(n1), H2), gf2.kronecker(gf2.transpose(H1), gf2.identity(r2)))
    code = CssCode(H_X, H_Z)
    if not css_valid(code):
        raise AssertionError("hypergraph product violated the CSS condition")
    return code
