"""Exact Ihara zeta function of small explicit graphs.

The reciprocal of the zeta function is the polynomial

    (1 - u^2)^(r-1) * det(I + u^2 (B - I) - u A)

with A the adjacency matrix, B the diagonal degree matrix and
r - 1 = Tr(B - 2I)/2.  The determinant is evaluated exactly over the
integer polynomial ring by fraction-free elimination, so the coefficients
come out as exact integers.

Independently, the zeta function is the exponential of the generating
series of closed backtrackless tailless path counts.  count_closed_paths
enumerates those paths by brute force; series_consistency multiplies the
exponential of their series (in exact rationals) against the reciprocal
polynomial and reports the worst deviation from 1.  On a correct build the
deviation is exactly zero through the requested order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .percolation import circuit_rank_term

__all__ = [
    "ReciprocalZeta",
    "ihara_det_reciprocal",
    "zeta_reciprocal_polynomial",
    "count_closed_paths",
    "series_consistency",
]

MAX_EXACT_VERTICES = 12
MAX_PATH_VERTICES = 10
MAX_PATH_LENGTH = 12


# ---------------------------------------------------------------------------
# integer polynomial helpers; a polynomial is a list of int coefficients
# indexed by degree, normalized to no trailing zeros ([] is the zero poly)

def _trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p

def _padd(a, b):
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)

def _psub(a, b):
    return _padd(a, [-c for c in b])

def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca == 0:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)

def _pdiv_exact(num, den):
    """Exact division in the integer polynomial ring; raises if inexact."""
    if not den:
        raise ZeroDivisionError("polynomial division by zero")
    num = list(num)
    quot = [0] * (max(len(num) - len(den), 0) + 1)
    while len(num) >= len(den):
        lead, shift = num[-1], len(num) - len(den)
        if lead % den[-1] != 0:
            raise ValueError("determinant not divisible - graph/implementation inconsistency")
        q = lead // den[-1]
        quot[shift] = q
        num = _psub(num, _pmul([0] * shift + [q], den))
        if not num:
            break
        if len(num) - len(den) == shift:  # no degree drop: division cannot terminate
            raise ValueError("determinant not divisible - graph/implementation inconsistency")
    if num:
        raise ValueError("determinant not divisible - graph/implementation inconsistency")
    return _trim(quot)

def _poly_det_bareiss(mat: list[list[list[int]]]) -> list[int]:
    """Fraction-free determinant of a matrix of integer polynomials."""
    n = len(mat)
    m = [[list(entry) for entry in row] for row in mat]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not m[k][k]:
            for swap in range(k + 1, n):
                if m[swap][k]:
                    m[k], m[swap] = m[swap], m[k]
                    sign = -sign
                    break
            else:
                return []
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = _psub(_pmul(m[i][j], m[k][k]), _pmul(m[i][k], m[k][j]))
                m[i][j] = _pdiv_exact(num, prev) if num else []
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return [-c for c in det] if sign < 0 else det


@dataclass(frozen=True)
class ReciprocalZeta:
    """Exact integer coefficients of the reciprocal zeta polynomial."""

    coefficients: tuple[int, ...]
    n_vertices: int
    n_edges: int
    rank_term: float  # r - 1

    def __call__(self, u: float) -> float:
        out = 0.0
        for c in reversed(self.coefficients):
            out = out * u + c
        return out

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def as_list(self) -> list[int]:
        return list(self.coefficients)


def _validate_small_graph(adj: np.ndarray, limit: int) -> np.ndarray:
    adj = np.asarray(adj)
    if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
        raise ValueError("adjacency matrix must be square")
    if adj.shape[0] > limit:
        raise ValueError(f"graph too large for exact budget ({adj.shape[0]} > {limit})")
    if np.any(adj != adj.T):
        raise ValueError("adjacency matrix must be symmetric")
    if np.any(np.diag(adj) != 0):
        raise ValueError("graph must have no loops")
    if np.any((adj != 0) & (adj != 1)):
        raise ValueError("graph must be simple (0/1 entries)")
    return adj.astype(np.int64)


def ihara_det_reciprocal(adj: np.ndarray, u: float) -> float:
    """Numeric reciprocal zeta value (1-u^2)^(r-1) det(I + u^2(B-I) - uA)."""
    adj = _validate_small_graph(adj, limit=10**6)
    rank = int(circuit_rank_term(adj.sum(axis=1)))
    if abs(abs(u) - 1.0) < 1e-15 and rank < 0:
        raise ValueError("u = +-1 is a pole of the prefactor for forests")
    n = adj.shape[0]
    degrees = adj.sum(axis=1)
    mat = np.eye(n) + u * u * (np.diag(degrees) - np.eye(n)) - u * adj
    return float((1.0 - u * u) ** rank * np.linalg.det(mat))


def zeta_reciprocal_polynomial(adj: np.ndarray) -> ReciprocalZeta:
    """Exact coefficients of the reciprocal zeta polynomial.

    For forests r - 1 < 0 and the determinant must be exactly divisible by
    (1 - u^2)^(1-r); inexact division signals an inconsistent input.
    """
    adj = _validate_small_graph(adj, limit=MAX_EXACT_VERTICES)
    n = adj.shape[0]
    degrees = adj.sum(axis=1)
    n_edges = int(degrees.sum()) // 2
    rank = n_edges - n  # r - 1 as an exact integer
    mat = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(_trim([1, 0, int(degrees[i]) - 1]))
            else:
                row.append(_trim([0, -int(adj[i, j])]))
        mat.append(row)
    det = _poly_det_bareiss(mat)
    one_minus_u2 = [1, 0, -1]
    poly = det
    if rank >= 0:
        for _ in range(rank):
            poly = _pmul(poly, one_minus_u2)
    else:
        for _ in range(-rank):
            poly = _pdiv_exact(poly, one_minus_u2)
    if not poly or poly[0] != 1:
        raise ValueError("reciprocal zeta polynomial must have constant term 1")
    return ReciprocalZeta(
        coefficients=tuple(poly),
        n_vertices=n,
        n_edges=n_edges,
        rank_term=float(rank),
    )


def count_closed_paths(adj: np.ndarray, k: int, tailless: bool = True) -> int:
    """Number of closed backtrackless tailless paths of length k.

    Paths are counted individually: each starting vertex and each direction
    contributes one, so a triangle has 6 paths of length 3.  Enumeration
    walks the directed-edge space forbidding immediate reversal; the
    tailless condition rejects closed paths whose first step reverses their
    last step.
    """
    adj = _validate_small_graph(adj, limit=MAX_PATH_VERTICES)
    if k < 1:
        raise ValueError("path length must be >= 1")
    if k > MAX_PATH_LENGTH:
        raise ValueError(f"path length {k} beyond enumeration budget {MAX_PATH_LENGTH}")
    nbrs = [list(np.nonzero(adj[x])[0]) for x in range(adj.shape[0])]
    count = 0

    def extend(start: int, first: int, prev: int, here: int, steps_left: int) -> None:
        nonlocal count
        if steps_left == 0:
            if here == start and (not tailless or prev != first):
                count += 1
            return
        for nxt in nbrs[here]:
            if nxt == prev:  # backtracking
                continue
            extend(start, first, here, int(nxt), steps_left - 1)

    for start in range(adj.shape[0]):
        for first in nbrs[start]:
            extend(start, int(first), start, int(first), k - 1)
    return count


def series_consistency(adj: np.ndarray, order: int) -> Fraction:
    """Largest |coefficient - delta_{j,0}| of exp(path series) * poly.

    Both factors are exact (rational series coefficients against integer
    polynomial coefficients), so a correct pairing returns Fraction(0).
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    counts = [0] + [count_closed_paths(adj, k) for k in range(1, order + 1)]
    # exp of S = sum_k counts[k) u^k / k via E' = S'E, all in Fractions
    exp_coeffs = [Fraction(1)]
    for m in range(1, order + 1):
        acc = Fraction(0)
        for i in range(1, m + 1):
            acc += Fraction(counts[i]) * exp_coeffs[m - i]
        exp_coeffs.append(acc / m)
    poly = zeta_reciprocal_polynomial(adj).coefficients
    worst = Fraction(0)
    for j in range(order + 1):
        c = sum(
            exp_coeffs[i] * poly[j - i]
            for i in range(max(0, j - len(poly) + 1), j + 1)
        )
        target = 1 if j == 0 else 0
        worst = max(worst, abs(c - target))
    return worst
