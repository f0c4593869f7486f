"""Random ensembles: Haar unitaries and exactly uniform Clifford elements.

The Clifford sampler draws a uniformly random symplectic basis of F_2^{2n}
pair by pair (each step solves a linear system over GF(2)), attaches uniform
sign bits, and synthesizes the dense unitary from the stabilizer projector of
the image generators.  Phases are fixed deterministically, so equal seeds give
byte-identical matrices.

Symplectic vectors are 2n-bit integers: bits 0..n-1 hold the X part, bits
n..2n-1 the Z part.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .paulis import PauliString, _dense_pauli


def haar_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary on n qubits (Ginibre + QR with phase fix)."""
    if n < 1:
        raise ValueError("need at least one qubit")
    d = 1 << n
    g = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2.0)
    q, r = np.linalg.qr(g)
    lam = np.diagonal(r).copy()
    lam /= np.abs(lam)
    return q * lam


# ---------------------------------------------------------------------------
# GF(2) linear algebra on integer bitmasks


def _gf2_rref(rows, width):
    """Reduced row echelon form; returns list of (pivot_col, row).

    Pivot is the lowest set bit, so with an augmented column placed at the
    highest position a pivot landing there means the system is inconsistent.
    """
    pivots: list[tuple[int, int]] = []
    for r in rows:
        for c, pr in pivots:
            if (r >> c) & 1:
                r ^= pr
        if r:
            c = (r & -r).bit_length() - 1
            pivots = [(pc, pr ^ r if (pr >> c) & 1 else pr) for pc, pr in pivots]
            pivots.append((c, r))
    return pivots


def _gf2_nullspace(rows, width):
    """Basis of {v : parity(v & r) = 0 for all rows r}."""
    pivots = _gf2_rref(rows, width)
    pivot_cols = {c for c, _ in pivots}
    basis = []
    for f in range(width):
        if f in pivot_cols:
            continue
        v = 1 << f
        for c, r in pivots:
            if (r >> f) & 1:
                v |= 1 << c
        basis.append(v)
    return basis


def _gf2_affine_solve(rows, rhs, width):
    """One solution of parity(v & rows[i]) = rhs[i], plus the nullspace basis."""
    aug = [r | (b << width) for r, b in zip(rows, rhs)]
    pivots = _gf2_rref(aug, width + 1)
    part = 0
    for c, r in pivots:
        if c == width:
            raise ValueError("inconsistent GF(2) system")
        if (r >> width) & 1:
            part |= 1 << c
    return part, _gf2_nullspace(rows, width)


def _combine(basis, coeff: int) -> int:
    v = 0
    i = 0
    while coeff:
        if coeff & 1:
            v ^= basis[i]
        coeff >>= 1
        i += 1
    return v


def _sp_swap(v: int, n: int) -> int:
    mask = (1 << n) - 1
    return (v >> n) | ((v & mask) << n)


def symplectic_product(u: int, v: int, n: int) -> int:
    return (u & _sp_swap(v, n)).bit_count() & 1


# ---------------------------------------------------------------------------
# Clifford sampling


@dataclass(frozen=True)
class CliffordTableau:
    """Images of the generators under conjugation: X_j -> (-1)^{sx_j} P(xs_j),
    Z_j -> (-1)^{sz_j} P(zs_j), as symplectic bitmask integers."""

    n: int
    xs: tuple[int, ...]
    zs: tuple[int, ...]
    sx: tuple[int, ...]
    sz: tuple[int, ...]

    def x_image(self, j: int) -> tuple[int, PauliString]:
        mask = (1 << self.n) - 1
        v = self.xs[j]
        return (-1) ** self.sx[j], PauliString(self.n, v & mask, v >> self.n)

    def z_image(self, j: int) -> tuple[int, PauliString]:
        mask = (1 << self.n) - 1
        v = self.zs[j]
        return (-1) ** self.sz[j], PauliString(self.n, v & mask, v >> self.n)


def sample_clifford_tableau(n: int, rng: np.random.Generator) -> CliffordTableau:
    """Uniform random symplectic basis plus uniform sign bits.

    Step j picks the image of X_j uniformly among nonzero vectors of the
    symplectic complement of the pairs fixed so far, then the image of Z_j
    uniformly among vectors with unit product against it (and zero against
    the rest).  The choice counts multiply to |Sp(2n,2)|, so every tableau
    is hit exactly once.
    """
    if n < 1:
        raise ValueError("need at least one qubit")
    width = 2 * n
    rows: list[int] = []  # constraint rows: swapped images fixed so far
    xs: list[int] = []
    zs: list[int] = []
    for _ in range(n):
        basis = _gf2_nullspace(rows, width)
        m = len(basis)
        a = _combine(basis, int(rng.integers(1, 1 << m)))
        part, null2 = _gf2_affine_solve(
            rows + [_sp_swap(a, n)], [0] * len(rows) + [1], width
        )
        b = part ^ _combine(null2, int(rng.integers(0, 1 << len(null2))))
        xs.append(a)
        zs.append(b)
        rows.extend([_sp_swap(a, n), _sp_swap(b, n)])
    signs = rng.integers(0, 2, size=width)
    return CliffordTableau(
        n, tuple(xs), tuple(zs), tuple(int(s) for s in signs[:n]), tuple(int(s) for s in signs[n:])
    )


def clifford_dense(t: CliffordTableau) -> np.ndarray:
    """Dense unitary realizing a tableau (global phase fixed arbitrarily).

    The joint +1 eigenvector psi of the Z images is extracted from the
    product of projectors (I + R_j)/2; column x of the unitary is then
    prod_j Q_j^{x_j} psi with Q_j the X images.
    """
    n = t.n
    d = 1 << n
    mask = d - 1
    qs = []
    m = np.eye(d, dtype=np.complex128)
    for j in range(n):
        sr, pr = t.z_image(j)
        sq, pq = t.x_image(j)
        r = sr * _dense_pauli(n, pr.x, pr.z)
        qs.append(sq * _dense_pauli(n, pq.x, pq.z))
        m = m @ (np.eye(d) + r)
    m /= d
    norms = np.linalg.norm(m, axis=0)
    c = int(np.argmax(norms))
    if norms[c] < 1e-12:
        raise ValueError("projector collapsed; tableau not symplectic?")
    cols = (m[:, c] / norms[c]).reshape(d, 1)
    for j in range(n - 1, -1, -1):
        cols = np.concatenate([cols, qs[j] @ cols], axis=1)
    return cols


def uniform_clifford(n: int, rng: np.random.Generator) -> np.ndarray:
    """Dense unitary drawn uniformly from the n-qubit Clifford group mod phase."""
    return clifford_dense(sample_clifford_tableau(n, rng))


def random_pauli(
    n: int, rng: np.random.Generator, include_identity: bool = False
) -> PauliString:
    """Uniform random Pauli string (by default excluding the identity)."""
    lo = 0 if include_identity else 1
    v = int(rng.integers(lo, 1 << (2 * n)))
    mask = (1 << n) - 1
    return PauliString(n, v & mask, v >> n)
