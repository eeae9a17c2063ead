"""Dimension engines: Weyl formula, tableau counting, Cauchy decomposition.

The graded invariant ring attached to (n, r, s) is measured by counting
semistandard tableaux.  A degree-m invariant basis vector corresponds to a
semistandard filling of the r x m rectangle over {1..n} whose number of
entries at most s equals r*s*m/n; equivalently, reading columns as Plücker
indices, to a componentwise-increasing chain of r-subsets of total weight
zero.  The chain form gives a fast dynamic program; the cell-by-cell
enumerator is kept for small shapes and cross-checks.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from . import plucker
from .errors import (CalibrationError, EnumerationCapError,
                     UnsupportedCaseError, enumeration_cap)
from .params import GrassParams
from .quotient import detect_induction_case
from .semistability import all_subsets, plucker_weight

__all__ = [
    "weyl_dim", "ssyt_count", "invariant_hilbert", "hilbert_values",
    "partitions_of", "dual_weight", "HighestWeightPair", "cauchy_sections",
    "decompose_sections", "Calibration", "calibrate_descent",
    "generation_in_degree_one",
]

# Explicit quotient models with no fibration structure behind them; the
# (4, 2, 2) quotient is P^3 = P(M_{2,2}) with the four weight-zero Plücker
# coordinates as linear coordinates.
_GOLDEN_MATRIX_MODEL = {(4, 2, 2): (2, 2)}


def weyl_dim(m: int, parts) -> int:
    """Dimension of the SL(m) module with highest weight ``parts``.

    ``parts`` is a weakly decreasing tuple with at most m entries; adding a
    constant to every entry does not change the result.

    >>> weyl_dim(2, (1,))
    2
    >>> weyl_dim(3, (1, 1))
    3
    """
    parts = tuple(parts)
    if len(parts) > m:
        raise ValueError(f"weight has {len(parts)} parts, more than m={m}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"weight must be weakly decreasing: {parts}")
    lam = parts + (0,) * (m - len(parts))
    value = Fraction(1)
    for i in range(m):
        for j in range(i + 1, m):
            value *= Fraction(lam[i] - lam[j] + j - i, j - i)
    assert value.denominator == 1
    return int(value)


def ssyt_count(shape, alphabet: int, *, max_small: int | None = None,
               exact_small: int | None = None) -> int:
    """Count semistandard tableaux of ``shape`` with entries in {1..alphabet}.

    With ``exact_small`` given, count only fillings having exactly that
    many entries <= ``max_small``.  Plain recursive enumeration; intended
    for modest shapes and as an independent check of the closed formulas.
    """
    shape = tuple(shape)
    if any(a < b for a, b in zip(shape, shape[1:])):
        raise ValueError(f"shape must be a partition: {shape}")
    if not shape:
        return 1 if exact_small in (None, 0) else 0
    rows = len(shape)
    cells_after_row = [sum(shape[i + 1:]) for i in range(rows)]

    def fill_row(i, row_above, count):
        if i == rows:
            return 1 if exact_small is None or count == exact_small else 0
        total = 0
        width = shape[i]
        row = [0] * width

        def cell(j, cnt):
            nonlocal total
            if j == width:
                total += fill_row(i + 1, row, cnt)
                return
            lo = row[j - 1] if j > 0 else 1
            if row_above is not None and j < len(row_above):
                lo = max(lo, row_above[j] + 1)
            for v in range(lo, alphabet + 1):
                nc = cnt + (1 if max_small is not None and v <= max_small else 0)
                if exact_small is not None:
                    rest = width - j - 1 + cells_after_row[i]
                    if nc > exact_small or nc + rest < exact_small:
                        continue
                row[j] = v
                cell(j + 1, nc)
        cell(0, count)
        return total

    return fill_row(0, None, 0)


@lru_cache(maxsize=None)
def _chain_transitions(n: int, r: int):
    subsets = list(combinations(range(1, n + 1), r))
    index = {sub: i for i, sub in enumerate(subsets)}
    below = [[index[other] for other in subsets
              if all(a <= b for a, b in zip(other, sub))]
             for sub in subsets]
    return subsets, below


def invariant_hilbert(params: GrassParams, m: int) -> int:
    """Dimension of the degree-m piece of the invariant ring.

    Counts r x m rectangular tableaux over {1..n} with exactly r*s*m/n
    entries at most s; zero when that quantity is not an integer.
    Implemented as a dynamic program over componentwise-increasing chains
    of column subsets.

    >>> invariant_hilbert(GrassParams(3, 2, 2), 3)
    3
    >>> invariant_hilbert(GrassParams(4, 2, 2), 2)
    10
    """
    if m < 0:
        raise ValueError(f"degree must be nonnegative, got {m}")
    n, r, s = params.n, params.r, params.s
    if m == 0:
        return 1
    total_small = r * s * m
    if total_small % n != 0:
        return 0
    target = total_small // n
    num_subsets = math.comb(n, r)
    cap = enumeration_cap()
    if num_subsets * (target + 1) > cap:
        raise EnumerationCapError(
            f"chain DP over C({n},{r}) = {num_subsets} subsets with "
            f"{target + 1} weight levels exceeds the enumeration cap", cap)
    subsets, below = _chain_transitions(n, r)
    smalls = [sum(1 for i in sub if i <= s) for sub in subsets]
    # state[j][t]: chains of length filled so far ending at subset j with t
    # small entries used
    state = [[0] * (target + 1) for _ in subsets]
    for j, a in enumerate(smalls):
        if a <= target:
            state[j][a] = 1
    for _ in range(m - 1):
        new = [[0] * (target + 1) for _ in subsets]
        for j, a in enumerate(smalls):
            col = new[j]
            for i in below[j]:
                prev = state[i]
                for t in range(target + 1 - a):
                    if prev[t]:
                        col[t + a] += prev[t]
        state = new
    return sum(state[j][target] for j in range(len(subsets)))


def hilbert_values(params: GrassParams, degrees) -> dict:
    """Map m -> invariant Hilbert value for every requested degree."""
    return {m: invariant_hilbert(params, m) for m in degrees}


def partitions_of(total: int, max_parts: int):
    """Partitions of ``total`` with at most ``max_parts`` parts.

    >>> list(partitions_of(3, 2))
    [(3,), (2, 1)]
    """
    if total == 0:
        yield ()
        return
    if max_parts <= 0:
        return

    def rec(rem, largest, parts):
        if rem == 0:
            yield tuple(parts)
            return
        if len(parts) == max_parts:
            return
        for x in range(min(rem, largest), 0, -1):
            parts.append(x)
            yield from rec(rem - x, x, parts)
            parts.pop()

    yield from rec(total, total, [])


def _strip_zeros(parts) -> tuple:
    parts = tuple(parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def dual_weight(parts, m: int) -> tuple:
    """Highest weight of the dual SL(m) module, normalized to a partition."""
    lam = tuple(parts) + (0,) * (m - len(parts))
    top = lam[0]
    return _strip_zeros(top - lam[m - 1 - i] for i in range(m))


@dataclass(frozen=True)
class HighestWeightPair:
    """A summand V(left) x V(right) of a section module, with its dimension."""
    left: tuple
    right: tuple
    dim: int


def cauchy_sections(u: int, v: int, a: int) -> list:
    """Degree-a sections on the projectivized u x v matrix space.

    One summand per partition of a with at most min(u, v) parts, paired
    with itself across the two factors; total dimension C(uv + a - 1, a).

    >>> [pair.dim for pair in cauchy_sections(2, 2, 2)]
    [9, 1]
    """
    if u < 1 or v < 1:
        raise ValueError(f"matrix shape must be positive, got {u} x {v}")
    if a < 0:
        raise ValueError(f"degree must be nonnegative, got {a}")
    out = []
    for mu in partitions_of(a, min(u, v)):
        out.append(HighestWeightPair(mu, mu, weyl_dim(u, mu) * weyl_dim(v, mu)))
    return out


def decompose_sections(params: GrassParams, a: int, b: int) -> list:
    """Highest-weight pairs of the section module at fiber twist a, base twist b.

    Left weights live on SL(s), right weights on SL(n-s).  One candidate
    summand per partition mu of a with at most min(s-p, r-p) parts; the
    factor carrying the stabilizer parabolic receives the twist b*omega and
    the lifted block weight, and the summand is dropped when that lift is
    not dominant (its section space vanishes).  The free factor is labelled
    by the dual weight when the lift sits on the other side, following the
    matrix-space convention; all returned pairs are distinct.
    """
    if a < 0 or b < 0:
        raise ValueError(f"twists must be nonnegative, got a={a}, b={b}")
    n, r, s, p = params.n, params.r, params.s, params.p
    key = (n, r, s)
    if key in _GOLDEN_MATRIX_MODEL:
        if b != 0:
            raise ValueError(f"{params} has no base factor; b must be 0")
        u, v = _GOLDEN_MATRIX_MODEL[key]
        return [HighestWeightPair(dual_weight(mu, u), mu,
                                  weyl_dim(u, mu) * weyl_dim(v, mu))
                for mu in partitions_of(a, min(u, v))]
    if not detect_induction_case(params):
        raise UnsupportedCaseError(
            f"section decomposition needs the induction case, got {params}")
    u, v = s - p, r - p
    out = []
    if params.boundary:
        if b != 0:
            raise ValueError(f"{params} has no base factor; b must be 0")
        for mu in partitions_of(a, min(u, v)):
            out.append(HighestWeightPair(
                dual_weight(mu, s), mu, weyl_dim(s, mu) * weyl_dim(n - s, mu)))
        return out
    for mu in partitions_of(a, min(u, v)):
        first = mu[0] if mu else 0
        if first > b:
            continue  # lifted weight not dominant, no sections
        if p == 0:
            # parabolic in the SL(n-s) factor at node v = r
            mu_v = mu + (0,) * (v - len(mu))
            right = _strip_zeros(b - mu_v[v - 1 - i] for i in range(v))
            left = dual_weight(mu, s)
            dim = weyl_dim(s, mu) * weyl_dim(n - s, right)
        else:
            # parabolic in the SL(s) factor at node p
            left = _strip_zeros((b,) * p + mu)
            right = mu
            dim = weyl_dim(s, left) * weyl_dim(n - s, mu)
        out.append(HighestWeightPair(left, right, dim))
    return out


@dataclass(frozen=True)
class Calibration:
    d_min: int
    a: int
    b: int
    dimension: int
    convention: str = "block-lift, non-dominant summands dropped"


def calibrate_descent(params: GrassParams, a_max: int = 8) -> Calibration:
    """Locate (a, b) realizing the descended bundle on the fibration.

    ``d_min`` is the least degree at which the invariant ring is nonzero;
    the returned (a, b) is the lexicographically first grid point whose
    section decomposition has total dimension equal to the invariant
    Hilbert value at d_min.
    """
    d_min = next(d for d in range(1, params.n + 1)
                 if (params.r * params.s * d) % params.n == 0)
    target = invariant_hilbert(params, d_min)
    if target <= 0:
        raise CalibrationError(
            f"invariant ring vanishes in its first admissible degree {d_min}"
            f" for {params}", target, [])
    boundary_like = params.boundary or (params.n, params.r, params.s) in _GOLDEN_MATRIX_MODEL
    attempts = []
    for a in range(a_max + 1):
        for b in ([0] if boundary_like else range(a_max + 1)):
            total = sum(pair.dim for pair in decompose_sections(params, a, b))
            if total == target:
                return Calibration(d_min, a, b, target)
            attempts.append(((a, b), total))
    raise CalibrationError(
        f"no (a, b) in 0..{a_max} matches h({d_min}) = {target} for {params}",
        target, attempts)


# --- finite projective-normality check -----------------------------------

def _invariant_monomials(params: GrassParams, degree: int) -> list:
    """Weight-zero Plücker monomials of the given degree, as subset multisets."""
    return [mono for mono in combinations_with_replacement(all_subsets(params), degree)
            if sum(plucker_weight(i, params) for i in mono) == 0]


def generation_in_degree_one(params: GrassParams, max_degree: int) -> bool:
    """Check that lowest-degree invariants generate up to ``max_degree``.

    Regrades the invariant ring so that degree one is the first nonzero
    Plücker degree d_min, then verifies for each m <= max_degree that
    products of m degree-one invariants span a space of dimension equal to
    the invariant Hilbert value at m*d_min.  Products are expanded into
    honest polynomials in the entries of a generic r x n matrix, so all
    Plücker relations are accounted for exactly.
    """
    if params.n > 5:
        raise EnumerationCapError(
            f"generation check expands generic minors; limited to n <= 5, got n={params.n}",
            enumeration_cap())
    if max_degree <= 1:
        return True
    d_min = next(d for d in range(1, params.n + 1)
                 if (params.r * params.s * d) % params.n == 0)
    gens = _invariant_monomials(params, d_min)
    gen_polys = [plucker.monomial_poly(mono, params.r, params.n) for mono in gens]
    if plucker.rank_of_polys(gen_polys) != invariant_hilbert(params, d_min):
        return False
    for m in range(2, max_degree + 1):
        products = [plucker.poly_product(combo)
                    for combo in combinations_with_replacement(gen_polys, m)]
        if plucker.rank_of_polys(products) != invariant_hilbert(params, m * d_min):
            return False
    return True
