"""Type-A Weyl group combinatorics behind the semistable-locus description.

Conventions
-----------
A permutation of {1..n} is a tuple in one-line notation: ``w[i-1]`` is the
image of i.  A word is a tuple of simple-reflection indices in 1..n-1 and
evaluates to the product ``s_{l1} s_{l2} ... s_{lk}`` acting on positions,
rightmost letter first.  Concretely, :func:`evaluate_word` starts from the
identity and multiplies by ``s_letter`` on the right, reading the word left
to right, which yields exactly that product.

>>> evaluate_word((2, 1, 3, 2), 5)
(3, 4, 1, 2, 5)

Sorted r-subsets of {1..n} play three simultaneous roles: Plücker indices,
torus fixed points of G(r, n), and minimal-length coset representatives for
the maximal parabolic deleting node r.  The representative of a subset
lists it in increasing order followed by its complement in increasing
order; Bruhat order between such representatives is the componentwise
order on subsets (:func:`bruhat_leq`).
"""

from .errors import InvariantViolationError
from .params import GrassParams

__all__ = [
    "evaluate_word", "inversion_count", "is_reduced", "reduced_word",
    "compose", "inverse_perm", "coset_subset", "min_coset_rep",
    "bruhat_leq", "contains_reflection",
    "build_w_sr", "build_w0_coset", "factor_w_tilde",
]


def evaluate_word(word, n: int) -> tuple:
    """Evaluate a word of simple reflections to a permutation of {1..n}.

    >>> evaluate_word((1,), 2)
    (2, 1)
    >>> evaluate_word((), 4)
    (1, 2, 3, 4)
    """
    cur = list(range(1, n + 1))
    for letter in word:
        if not 1 <= letter <= n - 1:
            raise ValueError(f"letter {letter} out of range 1..{n - 1}")
        cur[letter - 1], cur[letter] = cur[letter], cur[letter - 1]
    return tuple(cur)


def inversion_count(perm) -> int:
    """Number of inversions, i.e. the Coxeter length.

    >>> inversion_count((3, 4, 1, 2, 5))
    4
    """
    n = len(perm)
    return sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])


def is_reduced(word, n: int) -> bool:
    """A word is reduced iff its evaluation has length equal to the word."""
    return inversion_count(evaluate_word(word, n)) == len(word)


def reduced_word(perm) -> tuple:
    """A reduced word evaluating to ``perm`` (leftmost-descent ordering).

    >>> w = (3, 4, 1, 2, 5)
    >>> evaluate_word(reduced_word(w), 5) == w
    True
    """
    p = list(perm)
    rev = []
    while True:
        i = next((i for i in range(len(p) - 1) if p[i] > p[i + 1]), None)
        if i is None:
            break
        rev.append(i + 1)
        p[i], p[i + 1] = p[i + 1], p[i]
    return tuple(reversed(rev))


def compose(u, v) -> tuple:
    """Product u*v as functions: (u*v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def inverse_perm(perm) -> tuple:
    return tuple(perm.index(i) + 1 for i in range(1, len(perm) + 1))


def coset_subset(perm, r: int) -> tuple:
    """The sorted image of {1..r}, i.e. the subset labelling the coset of perm.

    >>> coset_subset((4, 3, 2, 1), 2)
    (3, 4)
    """
    n = len(perm)
    if not 1 <= r <= n - 1:
        raise ValueError(f"need 1 <= r <= n-1, got r={r}, n={n}")
    return tuple(sorted(perm[:r]))


def min_coset_rep(subset, n: int) -> tuple:
    """Minimal-length coset representative with image set ``subset``.

    >>> min_coset_rep((2, 4), 5)
    (2, 4, 1, 3, 5)
    """
    subset = tuple(subset)
    rest = tuple(i for i in range(1, n + 1) if i not in subset)
    return subset + rest


def bruhat_leq(lhs, rhs) -> bool:
    """Bruhat order on same-size sorted subsets: componentwise comparison.

    >>> bruhat_leq((1, 2), (3, 4))
    True
    >>> bruhat_leq((1, 4), (2, 3)) or bruhat_leq((2, 3), (1, 4))
    False
    """
    if len(lhs) != len(rhs):
        raise ValueError(f"subset sizes differ: {len(lhs)} vs {len(rhs)}")
    return all(a <= b for a, b in zip(lhs, rhs))


def contains_reflection(word, i: int, n: int | None = None) -> bool:
    """Whether s_i <= w in Bruhat order, for w the evaluation of ``word``.

    Stable under enlarging n.  For a reduced word this coincides with the
    letter i occurring in the word; the permutation-level test used here
    (the image of {1..i} is not {1..i}) is correct for arbitrary words.

    >>> contains_reflection((2, 1, 3, 2), 1)
    True
    >>> contains_reflection((2, 1, 3, 2), 4)
    False
    """
    if i < 1:
        raise ValueError(f"reflection index must be positive, got {i}")
    if n is None:
        n = max([i, *word]) + 1
    perm = evaluate_word(word, n)
    return set(perm[:i]) != set(range(1, i + 1))


def _descending_run(a: int, b: int) -> tuple:
    """(s_a, s_{a-1}, ..., s_b); empty when a < b."""
    return tuple(range(a, b - 1, -1)) if a >= b else ()


def build_w_sr(params: GrassParams) -> tuple:
    """Reduced word of the minimal coset element with semistable points.

    Block j runs from s+j-1 down to p+j, for j = 1..r-p.  Its coset subset
    is {1..p} union {s+1..s+r-p}, the componentwise-minimal Plücker index
    of nonpositive weight.

    >>> build_w_sr(GrassParams(5, 2, 2))
    (2, 1, 3, 2)
    >>> build_w_sr(GrassParams(3, 2, 2))
    (2,)
    """
    p, r, s = params.p, params.r, params.s
    word = ()
    for j in range(1, r - p + 1):
        word += _descending_run(s + j - 1, p + j)
    return word


def build_w0_coset(params: GrassParams) -> tuple:
    """Reduced word of the maximal coset element, of length r(n-r).

    >>> build_w0_coset(GrassParams(4, 2, 2))
    (2, 1, 3, 2)
    """
    n, r = params.n, params.r
    word = ()
    for j in range(1, r + 1):
        word += _descending_run(n - r + j - 1, j)
    return word


def _w_tilde_parsed(params: GrassParams) -> tuple:
    n, r, s, p = params.n, params.r, params.s, params.p
    word = ()
    if p == 0:
        for j in range(1, r + 1):
            word += _descending_run(n - r + j - 1, s + j)
    else:
        for j in range(1, p + 1):
            word += _descending_run(n - r + j - 1, j)
        for j in range(p + 1, r + 1):
            word += _descending_run(n - r + j - 1, s + j - p)
    return word


def factor_w_tilde(params: GrassParams) -> tuple:
    """The complementary factor w~ with w0^coset = w~ * w_sr, lengths adding.

    Returns the reduced word of w~.  The closed-form word is checked
    against the factorization; if it ever failed, w~ would be recomputed
    from the permutation quotient, and a length mismatch there raises
    InvariantViolationError.

    >>> factor_w_tilde(GrassParams(5, 2, 2))
    (3, 4)
    >>> factor_w_tilde(GrassParams(4, 1, 3))
    ()
    """
    n = params.n
    w_sr = build_w_sr(params)
    w0 = build_w0_coset(params)
    word = _w_tilde_parsed(params)
    target = evaluate_word(w0, n)
    if (len(word) + len(w_sr) == len(w0)
            and is_reduced(word, n)
            and compose(evaluate_word(word, n), evaluate_word(w_sr, n)) == target):
        return word
    # Closed form failed; divide on the right and re-derive the word.
    quot = compose(target, inverse_perm(evaluate_word(w_sr, n)))
    word = reduced_word(quot)
    if len(word) + len(w_sr) != len(w0):
        raise InvariantViolationError(
            f"length not additive in w0 = w~ * w_sr for {params}: "
            f"{len(word)} + {len(w_sr)} != {len(w0)}")
    return word
