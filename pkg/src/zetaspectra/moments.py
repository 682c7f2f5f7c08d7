"""Exact limiting-moment recurrences for the percolation spectral ensemble.

Everything here is closed-form combinatorics in the two parameters
(v, phi1): no sampling, no linear algebra.  The central objects are

* tree_weight(k, r): total weight of tree-type closed walks of k steps
  with r steps leaving the root; the limiting spectral moment is
  m_k = sum_r tree_weight(k, r).
* adjacency_weight(p, r): the analogous array for the normalized adjacency
  matrix alone, whose even moments are L_p = sum_r adjacency_weight(p, r).
* dense limits: as phi1 -> infinity the arrays collapse to the moments of a
  semicircle distribution shifted by v^2 (dense_moment, catalan_moment).

Two independent routes compute the tree weights: the flattened five-fold
recurrence (tree_weight) and its factored form through the first-edge
decomposition (tree_weight_split).  They must agree to rounding error; the
brute-force enumeration oracle lives in the walks module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

__all__ = [
    "extended_binomial",
    "extended_binomial_other_hits",
    "reset_extended_binomial_counter",
    "tree_weight_table",
    "tree_weight",
    "first_edge_weight",
    "tree_weight_split",
    "limit_moment",
    "limit_moments",
    "adjacency_weight_table",
    "adjacency_weight",
    "adjacency_moment",
    "dense_moments",
    "dense_moment",
    "dense_tree_weight_table",
    "dense_tree_weight",
    "catalan_moment",
    "weighted_adjacency_sum",
    "BoundReport",
    "adjacency_bound_report",
    "tree_bound_report",
    "admissible_constant",
]

# Count of extended_binomial calls falling outside the two sanctioned
# degenerate patterns.  The recurrence index ranges never produce such a
# call, so validation asserts this stays zero.
_OTHER_HITS = 0


def extended_binomial(a: int, b: int) -> int:
    """Binomial coefficient extended to the degenerate rows the weight
    recurrences touch.

    Rules: C(a, b) for a >= b >= 0; 1 for b == 0 (including a == -1);
    0 for a == b - 1 with b > 0; 0 for anything else (counted as a misuse,
    see extended_binomial_other_hits).
    """
    global _OTHER_HITS
    if a < -1:
        raise ValueError(f"extended binomial undefined for a={a} < -1")
    if b < 0:
        raise ValueError(f"extended binomial needs b >= 0, got {b}")
    if b == 0:
        return 1
    if a >= b:
        return math.comb(a, b)
    if a == b - 1:
        return 0
    _OTHER_HITS += 1
    return 0


def extended_binomial_other_hits() -> int:
    return _OTHER_HITS


def reset_extended_binomial_counter() -> None:
    global _OTHER_HITS
    _OTHER_HITS = 0


def _check_params(phi1: float) -> None:
    if phi1 <= 0.0:
        raise ValueError(f"phi1 must be positive, got {phi1}")


def tree_weight_table(k_max: int, v: float, phi1: float) -> list[list[float]]:
    """Triangular table T[k][r] of tree-type walk weights, 0 <= r <= k <= k_max.

    Row 0 is the empty walk: T[0][0] = 1 and T[k][0] = 0 for k >= 1.  The
    five-fold sum splits a walk at its first root edge: g root steps along
    it, an s-step remainder at the root, w doubled (paired) traversals, h
    out-and-back excursions from the far endpoint back to the root, and a
    t-branch sub-walk hanging off the far endpoint.
    """
    _check_params(phi1)
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    v2 = v * v
    table = [[0.0] * (k + 1) for k in range(k_max + 1)]
    table[0][0] = 1.0
    for k in range(1, k_max + 1):
        for r in range(1, k + 1):
            total = 0.0
            for g in range(1, r + 1):
                for s in range(r - g, k - g + 1):
                    outer = extended_binomial(r - 1, g - 1) * table[s][r - g]
                    if outer == 0.0:
                        continue
                    inner = 0.0
                    for w in range(0, g + 1):
                        cgw = extended_binomial(g, w)
                        for h in range(0, k - s - g - w + 1):
                            c_wh = extended_binomial(w + h - 1, h)
                            if c_wh == 0:
                                continue
                            scale = v2 ** (g + h) / phi1 ** (g + h - 1) * cgw * c_wh
                            for t in range(0, k - s - g - w - h + 1):
                                c_t = extended_binomial(w + h + t - 1, t)
                                if c_t == 0:
                                    continue
                                inner += scale * c_t * table[k - s - g - w - h][t]
                    total += outer * inner
            table[k][r] = total
    return table


def tree_weight(k: int, r: int, v: float, phi1: float) -> float:
    """Total weight of k-step tree-type walks with r root exits."""
    if r < 0 or r > k:
        raise ValueError(f"need 0 <= r <= k, got r={r}, k={k}")
    return tree_weight_table(k, v, phi1)[k][r]


def first_edge_weight(ks: int, g: int, v: float, phi1: float) -> float:
    """Weight of walks confined to a single root edge with g root exits.

    Defined for 1 <= g <= ks; satisfies the closed form
    first_edge_weight(g, g) = v^(2g)/phi1^(g-1).
    """
    _check_params(phi1)
    if g < 1 or g > ks:
        raise ValueError(f"need 1 <= g <= ks, got g={g}, ks={ks}")
    table = tree_weight_table(max(ks - g, 0), v, phi1)
    return _first_edge_weight_from(table, ks, g, v, phi1)


def _first_edge_weight_from(table, ks: int, g: int, v: float, phi1: float) -> float:
    v2 = v * v
    total = 0.0
    for w in range(0, g + 1):
        cgw = extended_binomial(g, w)
        for h in range(0, ks - g + 1):
            c_wh = extended_binomial(w + h - 1, h)
            if c_wh == 0:
                continue
            scale = v2 ** (g + h) / phi1 ** (g + h - 1) * cgw * c_wh
            for t in range(0, ks - g - w - h + 1):
                c_t = extended_binomial(w + h + t - 1, t)
                if c_t == 0:
                    continue
                total += scale * c_t * table[ks - g - w - h][t]
    return total


def tree_weight_split(k: int, r: int, v: float, phi1: float) -> float:
    """Tree walk weights by the two-stage route: first-edge decomposition
    composed with the single-edge weights.  Must equal tree_weight exactly
    up to float rounding; kept as an independent code path."""
    _check_params(phi1)
    if r < 0 or r > k:
        raise ValueError(f"need 0 <= r <= k, got r={r}, k={k}")
    table = [[0.0] * (kk + 1) for kk in range(k + 1)]
    table[0][0] = 1.0
    for kk in range(1, k + 1):
        for rr in range(1, kk + 1):
            total = 0.0
            for g in range(1, rr + 1):
                for s in range(rr - g, kk - g + 1):
                    outer = extended_binomial(rr - 1, g - 1) * table[s][rr - g]
                    if outer == 0.0:
                        continue
                    total += outer * _first_edge_weight_from(table, kk - s, g, v, phi1)
            table[kk][rr] = total
    return table[k][r]


def limit_moments(k_max: int, v: float, phi1: float) -> list[float]:
    """Limiting spectral moments m_0..m_k_max of the rescaled ensemble."""
    table = tree_weight_table(k_max, v, phi1)
    out = [1.0]
    for k in range(1, k_max + 1):
        out.append(sum(table[k][r] for r in range(1, k + 1)))
    return out


def limit_moment(k: int, v: float, phi1: float) -> float:
    if k < 0:
        raise ValueError("k must be >= 0")
    return limit_moments(k, v, phi1)[k]


def adjacency_weight_table(p_max: int, v: float, phi1: float) -> list[list[float]]:
    """Triangular table of root-exit-resolved adjacency walk weights."""
    _check_params(phi1)
    if p_max < 0:
        raise ValueError("p_max must be >= 0")
    v2 = v * v
    table = [[0.0] * (p + 1) for p in range(p_max + 1)]
    table[0][0] = 1.0
    for p in range(1, p_max + 1):
        for r in range(1, p + 1):
            total = 0.0
            for g in range(1, r + 1):
                coef = v2**g / phi1 ** (g - 1) * extended_binomial(r - 1, g - 1)
                for s in range(r - g, p - g + 1):
                    left = table[s][r - g]
                    if left == 0.0:
                        continue
                    inner = 0.0
                    for t in range(0, p - s - g + 1):
                        inner += extended_binomial(g + t - 1, t) * table[p - s - g][t]
                    total += coef * left * inner
            table[p][r] = total
    return table


def adjacency_weight(p: int, r: int, v: float, phi1: float) -> float:
    if r < 0 or r > p:
        raise ValueError(f"need 0 <= r <= p, got r={r}, p={p}")
    return adjacency_weight_table(p, v, phi1)[p][r]


def adjacency_moment(k: int, v: float, phi1: float) -> float:
    """Moment of order k of the normalized adjacency matrix in the limit:
    zero for odd k, the Catalan-like sum L_p for k = 2p."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return 1.0
    if k % 2 == 1:
        return 0.0
    p = k // 2
    table = adjacency_weight_table(p, v, phi1)
    return sum(table[p][r] for r in range(1, p + 1))


def dense_moments(k_max: int, v: float) -> list[float]:
    """Moments mu_0..mu_k_max of the v^2-shifted semicircle law, by the
    quadratic convolution recurrence."""
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    v2 = v * v
    mu = [1.0]
    if k_max >= 1:
        mu.append(v2)
    for k in range(2, k_max + 1):
        conv = sum(mu[j] * mu[k - j - 2] for j in range(0, k - 1))
        mu.append(v2 * mu[k - 1] + v2 * conv)
    return mu


def dense_moment(k: int, v: float) -> float:
    return dense_moments(k, v)[k]


def dense_tree_weight_table(k_max: int, v: float) -> list[list[float]]:
    """Dense-degree limit of the tree weight table (phi1 -> infinity)."""
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    v2 = v * v
    table = [[0.0] * (k + 1) for k in range(k_max + 1)]
    table[0][0] = 1.0
    for k in range(1, k_max + 1):
        for r in range(1, k + 1):
            val = v2 * table[k - 1][r - 1]
            for s in range(r - 1, k):
                row = k - s - 2
                if row < 0:
                    continue
                branch = sum(table[row][t] for t in range(0, row + 1))
                val += v2 * table[s][r - 1] * branch
            table[k][r] = val
    return table


def dense_tree_weight(k: int, r: int, v: float) -> float:
    if r < 0 or r > k:
        raise ValueError(f"need 0 <= r <= k, got r={r}, k={k}")
    return dense_tree_weight_table(k, v)[k][r]


def catalan_moment(p: int, v: float) -> float:
    """Even moment of the Wigner semicircle law: v^(2p) (2p)!/(p!(p+1)!)."""
    if p < 0:
        raise ValueError("p must be >= 0")
    return v ** (2 * p) * math.comb(2 * p, p) / (p + 1)


def weighted_adjacency_sum(i: int, p: int, v: float, phi1: float) -> float:
    """Adjacency weights summed with rising-factorial coefficients:
    sum_r [(r+1)(r+2)...(r+i-1)/(i-1)!] * adjacency_weight(p, r).

    Order i = 1 has unit weight and reproduces the adjacency moment L_p.
    """
    if i < 1:
        raise ValueError("order i must be >= 1")
    if p < 0:
        raise ValueError("p must be >= 0")
    table = adjacency_weight_table(p, v, phi1)
    total = 0.0
    for r in range(0, p + 1):
        coeff = 1.0
        for j in range(1, i):
            coeff *= r + j
        coeff /= math.factorial(i - 1)
        total += coeff * table[p][r]
    return total


@dataclass
class BoundReport:
    """Outcome of sweeping an upper bound over orders 1..order_max."""

    passed: bool
    constant: float
    order_max: int
    tightest_ratio: float
    ratios: list[float] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "passed": self.passed,
            "constant": self.constant,
            "order_max": self.order_max,
            "tightest_ratio": self.tightest_ratio,
            "ratios": list(self.ratios),
        }


def adjacency_bound_report(p_max: int, constant: float, v: float, phi1: float) -> BoundReport:
    """Check max_r adjacency_weight(p, r) <= (C v^2)^p p^(2p) for p <= p_max.

    Admissibility requires C >= 1 and C*phi1 >= 1.
    """
    # boundary tolerance: C = 1/phi1 must stay admissible under rounding
    if constant < 1.0 - 1e-12 or constant * phi1 < 1.0 - 1e-12:
        raise ValueError("C inadmissible: need C >= 1 and C*phi1 >= 1")
    table = adjacency_weight_table(p_max, v, phi1)
    ratios = []
    for p in range(1, p_max + 1):
        biggest = max(table[p][r] for r in range(1, p + 1))
        bound = (constant * v * v) ** p * float(p) ** (2 * p)
        ratios.append(biggest / bound)
    ok = all(rho <= 1.0 for rho in ratios)
    return BoundReport(ok, constant, p_max, max(ratios), ratios)


def _tree_bound_inequalities(constant: float, v: float, phi1: float) -> tuple[float, float]:
    c = constant
    lhs1 = (1.0 / c) * (1.0 + 1.0 / (c * v * v)) * math.exp(1.0 / (c * phi1))
    lhs2 = (1.0 / (c * phi1)) * (1.0 + 1.0 / (c * v * v))
    return lhs1, lhs2


def admissible_constant(v: float, phi1: float, tol: float = 1e-12) -> float:
    """Smallest C > 0 satisfying both admissibility inequalities of the
    tree-weight bound, found by bisection (both sides decrease in C)."""
    lo, hi = tol, 1.0
    while max(_tree_bound_inequalities(hi, v, phi1)) > 1.0:
        hi *= 2.0
        if hi > 1e12:
            raise ArithmeticError("no admissible constant below 1e12")
    while hi - lo > tol * hi:
        mid = 0.5 * (lo + hi)
        if max(_tree_bound_inequalities(mid, v, phi1)) <= 1.0:
            hi = mid
        else:
            lo = mid
    return hi


def tree_bound_report(k_max: int, constant: float, v: float, phi1: float) -> BoundReport:
    """Check max_r tree_weight(k, r) <= (C v^2 k)^k for k <= k_max, and the
    corollary m_k <= (C v^2)^k k^(k+1) on the summed moments."""
    lhs1, lhs2 = _tree_bound_inequalities(constant, v, phi1)
    if lhs1 > 1.0 or lhs2 > 1.0:
        raise ValueError(
            f"C inadmissible: inequality values {lhs1:.6g}, {lhs2:.6g} exceed 1"
        )
    table = tree_weight_table(k_max, v, phi1)
    ratios = []
    for k in range(1, k_max + 1):
        biggest = max(table[k][r] for r in range(1, k + 1))
        bound = (constant * v * v * k) ** k
        ratios.append(biggest / bound)
        m_k = sum(table[k][r] for r in range(1, k + 1))
        moment_bound = (constant * v * v) ** k * float(k) ** (k + 1)
        ratios.append(m_k / moment_bound)
    ok = all(rho <= 1.0 for rho in ratios)
    return BoundReport(ok, constant, k_max, max(ratios), ratios)
