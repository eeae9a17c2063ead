"""Structural description of the quotient of the semistable Grassmannian.

When p = 0, or p = r + s - n with r + s >= n, the semistable locus is the
saturation of the minimal Schubert cell under the Levi factor
H = SL(s) x SL(n-s) and the quotient X fibers over a single Grassmannian
of one H-factor with projectivized-matrix fibers.  This module detects
that situation, resolves which factor carries the stabilizer parabolic,
and assembles the orbit, Picard, Fano and automorphism data into one
report.  Outside the induction case only the case-independent fields are
filled; the two small quotients with explicit models, (3,2,2) and
(4,2,2), additionally carry their known identifications.
"""

from dataclasses import dataclass

from . import semistability, weyl
from .errors import InvariantViolationError, UnsupportedCaseError
from .params import GrassParams

__all__ = [
    "detect_induction_case", "BaseFibration", "base_fibration",
    "fibration_data", "orbit_stratification", "picard_rank",
    "QuotientReport", "report", "EXPLICIT_MODELS",
]

#: Quotients the theory does not cover but whose models are known exactly:
#: projective space of the stated dimension with the stated bundle degree.
EXPLICIT_MODELS = {(3, 2, 2): ("P^1", 2), (4, 2, 2): ("P^3", 1)}


def detect_induction_case(params: GrassParams) -> bool:
    """Whether the quotient is a parabolic induction over one H-factor.

    Holds iff p = 0, or p = r + s - n with r + s >= n; equivalently the
    reflection s_s does not occur below the complementary factor w~.

    >>> detect_induction_case(GrassParams(5, 2, 2))
    True
    >>> detect_induction_case(GrassParams(4, 2, 2))
    False
    """
    p = params.p
    return p == 0 or (params.r + params.s >= params.n
                      and p == params.r + params.s - params.n)


@dataclass(frozen=True)
class BaseFibration:
    """Base of the fibration: a Grassmannian of one SL factor, or a point."""
    point: bool
    factor: str | None          # "SL(s)" or "SL(n-s)"
    factor_rank: int | None     # the m of SL(m)
    index: int | None           # crossed node inside the factor
    dim: int
    ambient_index: int | None   # the same node as a root index of SL(n)
    geometric: bool = True      # False when derived formally outside induction

    @property
    def grassmannian(self) -> tuple | None:
        if self.point:
            return None
        return (self.index, self.factor_rank)


def fibration_data(params: GrassParams, formal: bool = False) -> BaseFibration:
    """Resolve the base of the fibration.

    In the induction case the crossed node is the ambient index k read
    inside the factor that makes the dimension identity

        dim base + (r - p)(s - p) - 1 = r(n - r) - 1

    hold; candidate relabelings are tried in turn.  With ``formal`` set,
    inputs outside the induction case are accepted whenever k is defined
    and the k-natural candidate is returned without the dimension
    requirement (the fibration then carries no geometric meaning and is
    marked as such).
    """
    n, r, s, p = params.n, params.r, params.s, params.p
    induction = detect_induction_case(params)
    if not induction and not formal:
        raise UnsupportedCaseError(
            f"{params} is outside the induction case (p={p}, r+s-n={r + s - n})")
    if params.boundary:
        if not induction:
            raise UnsupportedCaseError(
                f"{params} sits at r+s=n with p={p} > 0; no fibration data")
        return BaseFibration(point=True, factor=None, factor_rank=None,
                             index=None, dim=0, ambient_index=None)
    k = params.k
    candidates = []
    if 1 <= k <= s - 1:
        candidates.append(("SL(s)", s, k))
    if 1 <= k - s <= n - s - 1:
        candidates.append(("SL(n-s)", n - s, k - s))
    if 1 <= k <= n - s - 1:
        candidates.append(("SL(n-s)", n - s, k))
    if not candidates:
        raise InvariantViolationError(f"no parabolic relabeling of k={k} fits {params}")
    if not induction:
        factor, rank, idx = candidates[0]
        return BaseFibration(point=False, factor=factor, factor_rank=rank,
                             index=idx, dim=idx * (rank - idx), ambient_index=k,
                             geometric=False)
    required = r * (n - r) - (r - p) * (s - p)
    for factor, rank, idx in candidates:
        if idx * (rank - idx) == required:
            return BaseFibration(point=False, factor=factor, factor_rank=rank,
                                 index=idx, dim=required, ambient_index=k)
    raise InvariantViolationError(
        f"no relabeling of k={k} matches the base dimension {required} for {params}; "
        f"tried {[(f, m, i, i * (m - i)) for f, m, i in candidates]}")


def base_fibration(params: GrassParams) -> BaseFibration:
    """Verified fibration base for an induction-case input."""
    return fibration_data(params, formal=False)


def orbit_stratification(params: GrassParams) -> list:
    """Strata (t, orbit_dim, closure_dim) of the Levi action, t ascending.

    There are min(r-p, s-p) orbits, classified by matrix rank t on the
    fiber; the stratum of rank at most t has fiber dimension
    t(r + s - 2p - t) - 1, and each orbit is dense in its closure.
    """
    base = base_fibration(params)
    r, s, p = params.r, params.s, params.p
    out = []
    for t in range(1, min(r - p, s - p) + 1):
        dim = base.dim + t * (r + s - 2 * p - t) - 1
        out.append((t, dim, dim))
    return out


def picard_rank(params: GrassParams) -> int:
    """Rank of the Picard group per the fibration case split: 2 unless r = n-s.

    Pure arithmetic in (n, r, s); geometrically meaningful in the
    induction case with a positive-dimensional fiber.
    """
    return 1 if params.r == params.n - params.s else 2


@dataclass(frozen=True)
class QuotientReport:
    params: GrassParams
    induction_case: bool
    fiber_dims: tuple[int, int]
    dim_X: int
    ss_eq_stable: bool
    wonderful: bool
    base: BaseFibration | None = None
    orbit_count: int | None = None
    orbit_dims: tuple | None = None
    strata: tuple | None = None
    picard: int | None = None
    fano: bool | None = None
    aut0: str | None = None
    explicit_model: tuple | None = None

    def to_dict(self) -> dict:
        base = None
        if self.base is not None:
            base = {
                "point": self.base.point,
                "factor": self.base.factor,
                "grassmannian": list(self.base.grassmannian) if self.base.grassmannian else None,
                "dim": self.base.dim,
                "ambient_index": self.base.ambient_index,
            }
        return {
            "induction_case": self.induction_case,
            "fiber_dims": list(self.fiber_dims),
            "dim_X": self.dim_X,
            "ss_eq_stable": self.ss_eq_stable,
            "wonderful": self.wonderful,
            "base": base,
            "orbit_count": self.orbit_count,
            "orbit_dims": list(self.orbit_dims) if self.orbit_dims is not None else None,
            "strata": [list(row) for row in self.strata] if self.strata is not None else None,
            "picard_rank": self.picard,
            "fano": self.fano,
            "aut0": self.aut0,
            "explicit_model": list(self.explicit_model) if self.explicit_model else None,
        }


def report(params: GrassParams) -> QuotientReport:
    """Assemble every structural invariant of the quotient for one input.

    Induction-case inputs get the full fibration, orbit, Picard, Fano and
    automorphism data; others get a partial report, upgraded with golden
    data for the two explicitly known small quotients.
    """
    n, r, s, p = params.n, params.r, params.s, params.p
    induction = detect_induction_case(params)
    u, v = s - p, r - p
    explicit = EXPLICIT_MODELS.get((n, r, s))
    wonderful = induction and u == 2 and v == 2
    common = dict(
        params=params,
        induction_case=induction,
        fiber_dims=(u, v),
        dim_X=r * (n - r) - 1,
        ss_eq_stable=semistability.ss_equals_stable(params),
        wonderful=wonderful,
        explicit_model=explicit,
    )
    if not induction:
        return QuotientReport(
            **common,
            picard=1 if explicit else None,
            fano=True if explicit else None,
        )
    strata = tuple(orbit_stratification(params))
    return QuotientReport(
        **common,
        base=base_fibration(params),
        orbit_count=min(u, v),
        orbit_dims=tuple(dim for _, dim, _ in strata),
        strata=strata,
        picard=picard_rank(params),
        fano=True,
        aut0=f"PSL({s}) x PSL({n - s})",
    )
