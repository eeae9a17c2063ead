"""The configuration triple (n, r, s) threaded through every computation.

``n`` is the ambient dimension, ``r`` the subspace dimension of the
Grassmannian G(r, n), and ``s`` selects the diagonal one-parameter subgroup
with weights n - s (s times) followed by -s (n - s times).  Two derived
integers recur everywhere:

* ``p = floor(r*s / n)``, the number of leading columns in the minimal
  semistable Plücker index;
* ``k``, the ambient simple-root index of the stabilizer parabolic, equal
  to r + s when r + s <= n - 1 and r + s - n when r + s >= n + 1.  At the
  boundary r + s = n there is no such index and ``k`` is None.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class GrassParams:
    n: int
    r: int
    s: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need n >= 2, got n={self.n}")
        if not 1 <= self.r <= self.n - 1:
            raise ValueError(f"need 1 <= r <= n-1, got r={self.r}, n={self.n}")
        if not 1 <= self.s <= self.n - 1:
            raise ValueError(f"need 1 <= s <= n-1, got s={self.s}, n={self.n}")

    @property
    def p(self) -> int:
        return (self.r * self.s) // self.n

    @property
    def boundary(self) -> bool:
        """True when r + s = n, where the stabilizer index degenerates."""
        return self.r + self.s == self.n

    @property
    def k(self):
        """Ambient stabilizer index, or None at the boundary r + s = n."""
        if self.r + self.s <= self.n - 1:
            return self.r + self.s
        if self.r + self.s >= self.n + 1:
            return self.r + self.s - self.n
        return None

    @property
    def fiber_shape(self) -> tuple[int, int]:
        """(s - p, r - p), the matrix-space shape of the minimal-cell quotient."""
        return (self.s - self.p, self.r - self.p)

    def dual(self) -> "GrassParams":
        """Parameters of the orthogonal-complement picture G(n-r, n), s -> n-s."""
        return GrassParams(self.n, self.n - self.r, self.n - self.s)

    def __str__(self):
        return f"(n={self.n}, r={self.r}, s={self.s})"
