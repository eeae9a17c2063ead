"""Line bundle cohomology on the quotient via its two-factor splitting.

A line bundle on the fibration is a pair (a, b): fiber twist a on the
projectivized matrix space and base twist b on the Grassmannian factor.
Each factor has cohomology in at most one degree (Borel-Weil-Bott on the
base, the classical computation on projective space for the fiber), so the
cohomology of the product sits in the single degree p + q with dimension
the product of the factor dimensions.

The factor data (which SL factor, which node) is derived from the ambient
stabilizer index k, which is defined whenever r + s differs from n; inputs
outside the induction case are evaluated with the same formulas and the
usual caveat that no geometric fibration backs them there.
"""

from .errors import UnsupportedCaseError
from .params import GrassParams
from .quotient import fibration_data
from .reps import weyl_dim

__all__ = ["bott_line_bundle", "proj_space_cohomology", "cohomology_on_X",
           "euler_characteristic"]


def bott_line_bundle(m: int, weight) -> tuple | None:
    """Cohomology of the SL(m) homogeneous line bundle L(weight) on the flag.

    ``weight`` lists the m-1 coefficients on the fundamental weights,
    arbitrary integers.  Returns (degree, dimension) for the single
    nonvanishing degree, or None when the shifted weight is singular.

    The shifted weight lambda + rho is computed in epsilon coordinates; a
    repeated entry means every cohomology group vanishes, otherwise the
    number of inversions needed to sort it is the degree and the Weyl
    dimension of the sorted weight minus rho is the dimension.

    >>> bott_line_bundle(2, (2,))
    (0, 3)
    >>> bott_line_bundle(2, (-1,)) is None
    True
    """
    weight = tuple(weight)
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    if len(weight) != m - 1:
        raise ValueError(f"need {m - 1} fundamental-weight coefficients, got {len(weight)}")
    eps = [sum(weight[i:]) for i in range(m - 1)] + [0]
    shifted = [eps[i] + (m - 1 - i) for i in range(m)]
    if len(set(shifted)) < m:
        return None
    degree = sum(1 for i in range(m) for j in range(i + 1, m)
                 if shifted[i] < shifted[j])
    ordered = sorted(shifted, reverse=True)
    dominant = tuple(ordered[i] - (m - 1 - i) for i in range(m))
    floor = dominant[-1]
    return degree, weyl_dim(m, tuple(x - floor for x in dominant))


def proj_space_cohomology(dim: int, a: int) -> tuple | None:
    """Cohomology of O(a) on projective space of the given dimension.

    Nonzero only in degree 0 (a >= 0) or the top degree (a <= -dim-1);
    dimension 0 is allowed and denotes a point, where O(a) is trivial.

    >>> proj_space_cohomology(1, 2)
    (0, 3)
    >>> proj_space_cohomology(3, -2) is None
    True
    >>> proj_space_cohomology(3, -5)
    (3, 4)
    """
    from math import comb
    if dim < 0:
        raise ValueError(f"projective space dimension must be >= 0, got {dim}")
    if dim == 0:
        return (0, 1)
    if a >= 0:
        return (0, comb(dim + a, a))
    if a <= -dim - 1:
        return (dim, comb(-a - 1, dim))
    return None


def cohomology_on_X(params: GrassParams, a: int, b: int) -> dict:
    """Cohomology table {degree: dimension} of the (a, b) line bundle.

    The table has at most one entry.  At the boundary r + s = n the bundle
    has no base component and b must be zero; boundary inputs with p > 0
    admit no factor data at all and raise UnsupportedCaseError.
    """
    u, v = params.fiber_shape
    fiber = proj_space_cohomology(u * v - 1, a)
    if params.boundary:
        if params.p != 0:
            raise UnsupportedCaseError(
                f"{params} sits at r+s=n with p={params.p} > 0; no factor data")
        if b != 0:
            raise ValueError(f"{params} has no base factor; b must be 0")
        base = (0, 1)
    else:
        data = fibration_data(params, formal=True)
        coeffs = [0] * (data.factor_rank - 1)
        coeffs[data.index - 1] = b
        base = bott_line_bundle(data.factor_rank, coeffs)
    if base is None or fiber is None:
        return {}
    return {base[0] + fiber[0]: base[1] * fiber[1]}


def euler_characteristic(params: GrassParams, a: int, b: int) -> int:
    """Alternating sum of the cohomology table; equals h^0 for nef twists."""
    return sum(dim if degree % 2 == 0 else -dim
               for degree, dim in cohomology_on_X(params, a, b).items())
