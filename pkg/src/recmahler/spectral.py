"""Exact spectral core: the moment matrix of reciprocal-polynomial measures,
its determinant identity, and the closed distribution form it produces.

The central objects, all exact:

* coeff_c(n, J): integer coefficients expanding the circle integrals below
  in a common Fourier-like basis,

      c_n(J) = C(J-1, (J+n)/2 - 1) - C(J-1, (J+n)/2)   for 1 <= n <= J,
                                                        n == J (mod 2),
  zero otherwise, with c_J(J) = 1.  The bracket order is pinned by the
  (J, K) = (1, 3) integral, which direct quadrature shows equals
  +2*pi*(r^2 + r^-2); the reversed bracket gives the wrong sign there.

* i_entry(J, K) = pi * sum_n c_n(J) c_n(K) * 2s/(s^2 - n^2): the (J, K)
  moment of the two-sided radial kernel, a rational function of s with one
  grade of pi.

* det of the N x N moment matrix equals prod_{n<=N} 2*pi*s/(s^2 - n^2)
  exactly; h_product builds that product, det_ratfun recomputes the left
  side by exact elimination, and the acceptance suite holds them equal
  for N up to 8.

* rho(N, n): residue of the Mellin transform hhat_N = H_N/(2s) at s = n,

      rho(n) = pi^N 2^{N-1} n^N (-1)^{N-n} / ((N+n)! (N-n)!),

  with rho(-n) = (-1)^N rho(n); summing residues against the inverse
  Mellin kernel gives the closed distribution form

      h_N(xi) = sum_{n=1}^N 2 rho(n) (xi^{2n} + (-1)^N xi^{-2n}),

  which vanishes at xi = 1 and transforms back to hhat_N term by term
  (the xi^{+2n} term owns the pole at s = +n under this package's Mellin
  convention; swapping the pair is detectable for odd N and breaks the
  transform identity).

* volume_exact(N) = 2*pi*hhat_N(N+1) = 2^N pi^{N+1} (N+1)^N / (2N+1)!:
  the volume of the star body {mu_rec <= 1} in C^{N+1}.

The factorization behind the determinant: the moment matrix is C^T D C
with C the unitriangular integer matrix of c_n(J) and D the diagonal of
2*pi*s/(s^2 - n^2).  The last diagonal entry is also reachable through a
rank-one identity: any exact kernel vector psi of the first N-1 rows of C
satisfies I psi = d_N (omega_N . psi) omega_N, and omega_psi_check verifies
that, the factorization, and det C = 1 in exact arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

import mpmath

from .errors import (
    DimensionTooLarge,
    IndexOutOfRange,
    KernelNotFound,
)
from .exact import (
    LaurentPi,
    PiScaled,
    PolyQ,
    RatFunPi,
    RatFunQ,
    laurent_mellin,
)


# ---------------------------------------------------------------------------
# expansion coefficients and matrices


def coeff_c(n: int, j: int) -> int:
    """Expansion coefficient c_n(J); zero off-parity and for n > J."""
    if n < 1 or j < 1:
        raise IndexOutOfRange("c_n(J) needs n >= 1 and J >= 1")
    if n > j or (j - n) % 2:
        return 0
    m = (j + n) // 2
    return math.comb(j - 1, m - 1) - math.comb(j - 1, m)


def d_term(n: int) -> RatFunPi:
    """Diagonal kernel factor 2*pi*s / (s^2 - n^2)."""
    return RatFunPi.from_coeffs(1, (0, 2), (-n * n, 0, 1))


@dataclass(frozen=True)
class CMatrix:
    """Integer matrix rows[n-1][J-1] = c_n(J); unitriangular by parity."""

    size: int
    rows: tuple[tuple[int, ...], ...]

    def validate(self) -> None:
        for n in range(1, self.size + 1):
            for j in range(1, self.size + 1):
                v = self.rows[n - 1][j - 1]
                if n > j and v != 0:
                    raise ValueError(f"nonzero below the diagonal at ({n}, {j})")
                if (j - n) % 2 and v != 0:
                    raise ValueError(f"nonzero off-parity entry at ({n}, {j})")
                if n == j and v != 1:
                    raise ValueError(f"diagonal entry at ({n}, {n}) is {v}")


@dataclass(frozen=True)
class IMatrix:
    """Moment matrix entries[J-1][K-1] = i_entry(J, K)."""

    size: int
    entries: tuple[tuple[RatFunPi, ...], ...]

    def validate(self) -> None:
        for a in range(self.size):
            for b in range(self.size):
                e = self.entries[a][b]
                if e != self.entries[b][a]:
                    raise ValueError(f"asymmetric at ({a + 1}, {b + 1})")
                if (a - b) % 2:
                    if not e.is_zero:
                        raise ValueError(f"nonzero off-parity at ({a + 1}, {b + 1})")
                    continue
                if e.is_zero or e.pi_power != 1:
                    raise ValueError(f"bad grade at ({a + 1}, {b + 1})")
                if e.fun.num.coeffs[0] != 0:
                    raise ValueError(f"entry ({a + 1}, {b + 1}) nonzero at s = 0")
                if not e.is_odd():
                    raise ValueError(f"entry ({a + 1}, {b + 1}) is not odd in s")


def c_matrix(n_order: int) -> CMatrix:
    return CMatrix(
        n_order,
        tuple(
            tuple(coeff_c(n, j) for j in range(1, n_order + 1))
            for n in range(1, n_order + 1)
        ),
    )


def i_entry(j: int, k: int) -> RatFunPi:
    """Moment i_entry(J, K) = pi * sum_n c_n(J) c_n(K) 2s/(s^2 - n^2)."""
    if j < 1 or k < 1:
        raise IndexOutOfRange("moment indices start at 1")
    total = RatFunPi.zero()
    for n in range(1, min(j, k) + 1):
        w = coeff_c(n, j) * coeff_c(n, k)
        if w:
            total = total + d_term(n) * Fraction(w)
    return total


def i_matrix(n_order: int) -> IMatrix:
    if n_order < 1:
        raise IndexOutOfRange("matrix order must be at least 1")
    ent = tuple(
        tuple(i_entry(j, k) for k in range(1, n_order + 1))
        for j in range(1, n_order + 1)
    )
    return IMatrix(n_order, ent)


# ---------------------------------------------------------------------------
# closed radial integrals for single entries


def hJK_closed(j: int, k: int) -> LaurentPi:
    """Radial form of the (J, K) moment:
    2*pi * sum_n c_n(J) c_n(K) (r^{2n} + r^{-2n}); zero off parity."""
    if j < 1 or k < 1:
        raise IndexOutOfRange("moment indices start at 1")
    coeffs: dict[int, Fraction] = {}
    for n in range(1, min(j, k) + 1):
        w = coeff_c(n, j) * coeff_c(n, k)
        if w:
            coeffs[2 * n] = Fraction(2 * w)
            coeffs[-2 * n] = Fraction(2 * w)
    if not coeffs:
        return LaurentPi.zero()
    return LaurentPi(1, coeffs)


def hJK_quadrature(j: int, k: int, r: float, nodes: int) -> float:
    """Same moment by direct trapezoid integration over the circle.

    The integrand is a Laurent polynomial in e^{i theta} of degree J + K,
    so any node count above 2(J + K) integrates it exactly; the arithmetic
    runs in extended precision because the result can be a perfect
    cancellation (off-parity pairs), which doubles would only reach to
    their own rounding level, not to the comparison tolerances used here.
    """
    if j < 1 or k < 1:
        raise IndexOutOfRange("moment indices start at 1")
    if nodes <= 2 * (j + k):
        raise ValueError(f"need more than {2 * (j + k)} nodes")
    if not (r > 0):
        raise ValueError("radius must be positive")
    with mpmath.workdps(40 + 2 * (j + k)):
        rr = mpmath.mpf(r)
        total = mpmath.mpc(0)
        for idx in range(nodes):
            z = mpmath.expjpi(mpmath.mpf(2 * idx) / nodes)
            w = rr * z
            a = w - 1 / w
            b = rr / z - z / rr
            f1 = w + 1 / w
            f2 = rr / z + z / rr
            total += a * b * f1 ** (j - 1) * f2 ** (k - 1)
        value = 2 * mpmath.pi * total / nodes
        return float(mpmath.re(value))


# ---------------------------------------------------------------------------
# determinants


def _as_entry_rows(matrix) -> list[list]:
    if isinstance(matrix, IMatrix):
        rows = [list(r) for r in matrix.entries]
    else:
        rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("expected a nonempty square matrix")
    return rows


def det_ratfun(matrix) -> RatFunPi:
    """Exact determinant of a matrix of RatFunPi by pivoted elimination.

    Deterministic partial pivoting: the first row with a nonzero entry in
    the current column is the pivot.  Intermediate entries are ratios of
    minors, which for the structured matrices here stay small after
    reduction, so plain field elimination is fast.
    """
    rows = _as_entry_rows(matrix)
    n = len(rows)
    sign = 1
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if not rows[r][col].is_zero:
                pivot_row = r
                break
        if pivot_row is None:
            return RatFunPi.zero()
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            sign = -sign
        pivot = rows[col][col]
        for r in range(col + 1, n):
            if rows[r][col].is_zero:
                continue
            factor = rows[r][col] / pivot
            for c2 in range(col, n):
                rows[r][c2] = rows[r][c2] - factor * rows[col][c2]
    det = RatFunPi.one()
    for idx in range(n):
        det = det * rows[idx][idx]
    return det * Fraction(sign)


def det_double_sum(matrix):
    """Determinant via the symmetrized double permutation sum

        det M = (1/n!) sum_{tau} sum_{sigma} sgn(tau) sgn(sigma)
                prod_k M[tau(k)][sigma(k)],

    an O((n!)^2) oracle deliberately capped at n = 6.  Works over any
    exact scalar type with +, *, and division by an integer.
    """
    rows = _as_entry_rows(matrix)
    n = len(rows)
    if n > 6:
        raise DimensionTooLarge("double permutation sum capped at 6 x 6")
    perms = []
    for p in permutations(range(n)):
        inversions = sum(
            1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b]
        )
        perms.append((p, -1 if inversions % 2 else 1))
    total = None
    for tau, sg_t in perms:
        for sigma, sg_s in perms:
            prod = None
            for k in range(n):
                e = rows[tau[k]][sigma[k]]
                prod = e if prod is None else prod * e
            term = prod * Fraction(sg_t * sg_s)
            total = term if total is None else total + term
    return total / math.factorial(n)


def h_product(n_order: int) -> RatFunPi:
    """prod_{n=1}^{N} 2*pi*s/(s^2 - n^2): the closed determinant value."""
    if n_order < 1:
        raise IndexOutOfRange("order must be at least 1")
    total = RatFunPi.one()
    for n in range(1, n_order + 1):
        total = total * d_term(n)
    return total


def h_hat(n_order: int) -> RatFunPi:
    """Mellin transform of the distribution: H_N(s)/(2s)."""
    two_s = RatFunPi.from_coeffs(0, (0, 2), (1,))
    return h_product(n_order) / two_s


# ---------------------------------------------------------------------------
# residues, closed distribution form, volume


def rho(n_order: int, n: int) -> PiScaled:
    """Residue of h_hat at s = n, 1 <= n <= N:
    pi^N 2^{N-1} n^N (-1)^{N-n} / ((N+n)!(N-n)!)."""
    big_n = n_order
    if n < 1 or n > big_n:
        raise IndexOutOfRange(f"residue index {n} outside 1..{big_n}")
    num = 2 ** (big_n - 1) * n ** big_n * (-1) ** (big_n - n)
    den = math.factorial(big_n + n) * math.factorial(big_n - n)
    return PiScaled(Fraction(num, den), big_n)


def h_closed(n_order: int) -> LaurentPi:
    """Closed distribution form

        h_N(xi) = sum_n 2 rho(n) (xi^{2n} + (-1)^N xi^{-2n}),

    a Laurent polynomial of grade pi^N that vanishes at xi = 1."""
    if n_order < 1:
        raise IndexOutOfRange("order must be at least 1")
    sign = (-1) ** n_order
    coeffs: dict[int, Fraction] = {}
    for n in range(1, n_order + 1):
        c = 2 * rho(n_order, n).coeff
        coeffs[2 * n] = c
        coeffs[-2 * n] = sign * c
    return LaurentPi(n_order, coeffs)


def h_eval(n_order: int, xi: float, pi_value: float = math.pi) -> float:
    """Numeric distribution value; 0 below the support edge xi = 1.

    Uses the anchored Laurent evaluation, so h_eval(N, 1.0) is exactly 0.0
    and the grid monotonicity checks are not fighting cancellation noise.
    """
    if xi < 1.0:
        return 0.0
    return h_closed(n_order).eval(float(xi), pi_value)


def volume_exact(n_order: int) -> PiScaled:
    """Volume of the star body {mu_rec <= 1} in C^{N+1}:
    2^N pi^{N+1} (N+1)^N / (2N+1)!."""
    if n_order < 1:
        raise IndexOutOfRange("order must be at least 1")
    big_n = n_order
    return PiScaled(
        Fraction(2 ** big_n * (big_n + 1) ** big_n, math.factorial(2 * big_n + 1)),
        big_n + 1,
    )


# ---------------------------------------------------------------------------
# rank-one structure of the top kernel slot


@dataclass(frozen=True)
class RankOneReport:
    """Outcome of the exact rank-one verification for one order."""

    order: int
    psi: tuple[Fraction, ...]
    checks: tuple[tuple[str, bool, str], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)


def _kernel_vector(rows: list[list[Fraction]], width: int) -> list[Fraction]:
    """One nonzero rational kernel vector of a (width-1) x width system."""
    mat = [list(r) for r in rows]
    m = len(mat)
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(width):
        sel = None
        for r in range(row, m):
            if mat[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        mat[row], mat[sel] = mat[sel], mat[row]
        inv = 1 / mat[row][col]
        mat[row] = [x * inv for x in mat[row]]
        for r in range(m):
            if r != row and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[row])]
        pivots.append((row, col))
        row += 1
        if row == m:
            break
    pivot_cols = {c for _, c in pivots}
    free = [c for c in range(width) if c not in pivot_cols]
    if not free:
        raise KernelNotFound("system has full column rank")
    fc = free[-1]
    psi = [Fraction(0)] * width
    psi[fc] = Fraction(1)
    for r, c in pivots:
        psi[c] = -mat[r][fc]
    # clear denominators for a tidy integer vector
    lcm = 1
    for x in psi:
        lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
    psi = [x * lcm for x in psi]
    return psi


def omega_psi_check(n_order: int) -> RankOneReport:
    """Exact verification of the rank-one identity at order N >= 2.

    omega_n is the n-th row of the C matrix.  psi is an exact kernel vector
    of the rows omega_1 .. omega_{N-1}; the checks confirm, all in exact
    arithmetic:

      * I psi = d_N * (omega_N . psi) * omega_N  (row by row),
      * I = C^T D C entry by entry,
      * det C = 1.
    """
    if n_order < 2:
        raise IndexOutOfRange("rank-one check needs order >= 2")
    big_n = n_order
    cm = c_matrix(big_n)
    rows = [
        [Fraction(cm.rows[n][j]) for j in range(big_n)] for n in range(big_n - 1)
    ]
    psi = _kernel_vector(rows, big_n)
    if all(x == 0 for x in psi):
        raise KernelNotFound("kernel vector is zero")

    checks: list[tuple[str, bool, str]] = []

    im = i_matrix(big_n)
    omega_last = [Fraction(cm.rows[big_n - 1][j]) for j in range(big_n)]
    dot = sum((w * p for w, p in zip(omega_last, psi)), Fraction(0))
    dn = d_term(big_n)
    ok_rank_one = True
    for j in range(big_n):
        lhs = RatFunPi.zero()
        for k in range(big_n):
            if psi[k] != 0:
                lhs = lhs + im.entries[j][k] * psi[k]
        rhs = dn * (dot * omega_last[j])
        if lhs != rhs:
            ok_rank_one = False
            break
    checks.append(
        (
            "rank-one action",
            ok_rank_one,
            "I psi == (2 pi s/(s^2 - N^2)) (omega_N . psi) omega_N, exact",
        )
    )

    ok_fact = True
    for j in range(big_n):
        for k in range(big_n):
            acc = RatFunPi.zero()
            for n in range(big_n):
                w = cm.rows[n][j] * cm.rows[n][k]
                if w:
                    acc = acc + d_term(n + 1) * Fraction(w)
            if acc != im.entries[j][k]:
                ok_fact = False
                break
        if not ok_fact:
            break
    checks.append(("factorization", ok_fact, "I == C^T D C entry by entry, exact"))

    det_c = _fraction_det([[Fraction(v) for v in row] for row in cm.rows])
    checks.append(("unimodular C", det_c == 1, f"det C = {det_c}, expected 1"))

    return RankOneReport(big_n, tuple(psi), tuple(checks))


def _fraction_det(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    mat = [list(r) for r in rows]
    sign = 1
    for col in range(n):
        sel = None
        for r in range(col, n):
            if mat[r][col] != 0:
                sel = r
                break
        if sel is None:
            return Fraction(0)
        if sel != col:
            mat[col], mat[sel] = mat[sel], mat[col]
            sign = -sign
        piv = mat[col][col]
        for r in range(col + 1, n):
            if mat[r][col] != 0:
                f = mat[r][col] / piv
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[col])]
    det = Fraction(sign)
    for idx in range(n):
        det *= mat[idx][idx]
    return det
