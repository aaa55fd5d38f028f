"""Naive reference implementations the tests compare against.

Everything here favors obviousness over speed: textbook elimination on
Fractions, cofactor determinants, brute-force kernel enumeration over
the two-element field.  None of it shares code with the package.
"""

from fractions import Fraction


def naive_rank(rows) -> int:
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def cofactor_det(rows):
    """Laplace expansion; exponential, keep n small."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = Fraction(rows[0][j]) * cofactor_det(minor)
        total += term if j % 2 == 0 else -term
    return total


def brute_mod2_kernel_dim(rows, ncols: int) -> int:
    """Count kernel vectors by enumerating all of F_2^ncols."""
    count = 0
    for mask in range(1 << ncols):
        vec = [(mask >> j) & 1 for j in range(ncols)]
        if all(sum(row[j] * vec[j] for j in range(ncols)) % 2 == 0
               for row in rows):
            count += 1
    assert count & (count - 1) == 0, "kernel size must be a power of two"
    return count.bit_length() - 1


def random_unimodular(n: int, rng, steps: int = 12):
    """Random integer matrix of determinant +-1 (product of shears)."""
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-2, 2)
        for k in range(n):
            m[i][k] += c * m[j][k]
    if n >= 2 and rng.random() < 0.5:
        m[0], m[1] = m[1], m[0]
    return m


def conjugate_form(matrix, s):
    """S^T Q S for integer matrices, as nested tuples."""
    n = len(matrix)
    qs = [[sum(matrix[i][k] * s[k][j] for k in range(n)) for j in range(n)]
          for i in range(n)]
    return tuple(
        tuple(sum(s[k][i] * qs[k][j] for k in range(n)) for j in range(n))
        for i in range(n))


def matmul(a, b):
    n, mid, m = len(a), len(b), len(b[0])
    return [[sum(a[i][k] * b[k][j] for k in range(mid)) for j in range(m)]
            for i in range(n)]
