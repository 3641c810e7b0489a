"""Independent reference implementations used only by the tests.

Nothing here imports the package: braids are handled through their action on
a free group, order maps as plain functions, matrices as nested lists.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product


# --- braids via the Artin action on the free group F_n ----------------------------


def _free_reduce(word):
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _apply(images, word):
    out = []
    for x in word:
        out.extend(images[x] if x > 0 else [-y for y in reversed(images[-x])])
    return _free_reduce(out)


def artin_images(n, letters):
    """Images of x_1..x_n after applying ``letters`` (``(i, sign)`` pairs, first acts first)."""
    images = {j: (j,) for j in range(1, n + 1)}
    for i, sign in letters:
        step = {j: (j,) for j in range(1, n + 1)}
        if sign > 0:
            step[i], step[i + 1] = (i, i + 1, -i), (i,)
        else:
            step[i], step[i + 1] = (i + 1,), (-(i + 1), i, i + 1)
        images = {j: _apply(step, images[j]) for j in images}
    return tuple(images[j] for j in range(1, n + 1))


def same_braid(n, a, b):
    return artin_images(n, a) == artin_images(n, b)


def strand_permutation(n, letters):
    """1-based: bottom position -> top position, following each strand."""
    where = list(range(1, n + 1))  # where[s-1] = current position of strand starting at s
    for i, _ in letters:
        where = [i + 1 if p == i else i if p == i + 1 else p for p in where]
    return tuple(where)


# --- finite sets -----------------------------------------------------------------------


def compose_maps(f, g):
    """``f o g`` for 1-based image tuples."""
    return tuple(f[x - 1] for x in g)


def order_maps(n, m):
    return [t for t in product(range(1, m + 1), repeat=n) if list(t) == sorted(t)]


def pullback_size(f, g, k):
    return sum(sum(1 for x in f if x == j) * sum(1 for y in g if y == j) for j in range(1, k + 1))


def block_permutation(perm, weights):
    """Permutation of ``sum(weights)`` points moving block ``j`` (size ``weights[j]``) to ``perm[j]``."""
    n = len(perm)
    top_weights = [0] * n
    for j in range(n):
        top_weights[perm[j] - 1] = weights[j]
    top_start = [sum(top_weights[:k]) for k in range(n)]
    out = []
    for j in range(n):
        start = top_start[perm[j] - 1]
        out.extend(start + t + 1 for t in range(weights[j]))
    return tuple(out)


# --- matrices over Q or F_p as nested lists ----------------------------------------------


class Matrices:
    def __init__(self, p=None):
        self.p = p

    def norm(self, x):
        return x % self.p if self.p else Fraction(x)

    def eye(self, n):
        return [[self.norm(1 if i == j else 0) for j in range(n)] for i in range(n)]

    def mul(self, a, b):
        cols = len(b[0])
        return [[self.norm(sum(a[i][k] * b[k][j] for k in range(len(b)))) for j in range(cols)]
                for i in range(len(a))]

    def kron(self, *ms):
        out = ms[0]
        for b in ms[1:]:
            out = [[self.norm(x * y) for x in ra for y in rb] for ra in out for rb in b]
        return out

    def chain(self, *ms):
        """Product ``ms[0] . ms[1] . ...`` (the last factor acts first)."""
        out = ms[-1]
        for m in reversed(ms[:-1]):
            out = self.mul(m, out)
        return out


def braided_line_reference(p=7, q=2):
    """Basis maps of F_p[x]/(x^d), ``d`` the order of ``q``, from closed formulas."""
    d = next(k for k in range(1, p) if pow(q, k, p) == 1)

    def qbinom(n, k):
        num = den = 1
        for i in range(k):
            num *= 1 - pow(q, n - i, p)
            den *= 1 - pow(q, i + 1, p)
        return num * pow(den % p, -1, p) % p

    R = [[0] * (d * d) for _ in range(d * d)]
    mul = [[0] * (d * d) for _ in range(d)]
    comul = [[0] * d for _ in range(d * d)]
    for a in range(d):
        for b in range(d):
            R[b * d + a][a * d + b] = pow(q, a * b, p)
            if a + b < d:
                mul[a + b][a * d + b] = 1
    for n in range(d):
        for k in range(n + 1):
            comul[k * d + n - k][n] = qbinom(n, k)
    unit = [[1]] + [[0]] * (d - 1)
    counit = [[1] + [0] * (d - 1)]
    return d, R, mul, unit, comul, counit
