"""Simplex lattice enumeration and exact combinatorics for the polynomial sums.

States and polynomial degrees are multi-indices x in N_0^n with
|x| = x_1 + ... + x_n <= N. The lattice fixes a graded lexicographic order
(by |x|, then lexicographically) so that every matrix and table in the
package has a reproducible layout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

MultiIndex = tuple[int, ...]


def _compositions(n: int, total: int) -> Iterator[MultiIndex]:
    """All x in N_0^n with |x| = total, lexicographically ascending."""
    if n == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(n - 1, total - head):
            yield (head, *rest)


@dataclass(frozen=True)
class Lattice:
    """All multi-indices with |x| <= N, in graded lexicographic order."""

    n: int
    N: int
    points: tuple[MultiIndex, ...]
    position: dict[MultiIndex, int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.points)

    def index(self, x: MultiIndex) -> int:
        return self.position[tuple(x)]

    def unit(self, j: int) -> MultiIndex:
        """Unit multi-index e_j for direction j in 1..n."""
        if not 1 <= j <= self.n:
            raise ValueError(f"direction {j} outside 1..{self.n}")
        return tuple(1 if i == j - 1 else 0 for i in range(self.n))


def enumerate_lattice(n: int, N: int) -> Lattice:
    """Enumerate {x in N_0^n : |x| <= N}; the cardinality is binomial(N+n, n)."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    if N < 0:
        raise ValueError("level must be >= 0")
    points = tuple(p for degree in range(N + 1) for p in _compositions(n, degree))
    position = {p: k for k, p in enumerate(points)}
    return Lattice(n=n, N=N, points=points, position=position)


def multinomial_coefficient(x: MultiIndex, N: int) -> int:
    """Exact N! / (x_1! ... x_n! x_0!) with the leftover cell x_0 = N - |x|."""
    if any(xi < 0 for xi in x):
        raise ValueError(f"negative entry in {x}")
    if sum(x) > N:
        raise ValueError(f"|{tuple(x)}| = {sum(x)} exceeds the level {N}")
    coefficient, remaining = 1, N
    for xi in x:
        coefficient *= math.comb(remaining, xi)
        remaining -= xi
    return coefficient


def shifted_factorial(a, k: int):
    """Rising product (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.

    Exactly zero once the factors cross zero, i.e. for integer a <= 0 with
    k > -a; this is what terminates the hypergeometric sums. Integer input
    stays exact integer arithmetic.
    """
    if k < 0:
        raise ValueError("order must be >= 0")
    out = 1
    for i in range(k):
        out *= a + i
    return out


def enumerate_coefficient_matrices(
    x: MultiIndex, m: MultiIndex, N: int
) -> Iterator[tuple[MultiIndex, ...]]:
    """Square nonnegative-integer matrices c with row sums bounded by x,
    column sums bounded by m and total bounded by N.

    These are exactly the matrices contributing a nonzero term to the
    terminating polynomial sum: an entry pushing row i past x_i or column j
    past m_j kills the term through a vanishing rising factorial, so pruning
    preserves the value exactly. Enumeration is depth-first over cells in
    row-major order with ascending entries, giving a canonical stream order.
    """
    n = len(x)
    if len(m) != n:
        raise ValueError("x and m must have the same dimension")
    cells = [(i, j) for i in range(n) for j in range(n)]
    row_rem = list(x)
    col_rem = list(m)
    flat = [0] * (n * n)

    def walk(k: int, total_rem: int) -> Iterator[tuple[MultiIndex, ...]]:
        if k == n * n:
            yield tuple(tuple(flat[i * n : (i + 1) * n]) for i in range(n))
            return
        i, j = cells[k]
        top = min(row_rem[i], col_rem[j], total_rem)
        for value in range(top + 1):
            row_rem[i] -= value
            col_rem[j] -= value
            flat[k] = value
            yield from walk(k + 1, total_rem - value)
            row_rem[i] += value
            col_rem[j] += value

    yield from walk(0, N)
