"""Independent derivations of the SU(2) Hodge numbers.

Nothing here performs polynomial division or calls into the quotient ring:

* :func:`structure_constants` builds ``[j][k]`` in the named basis from the
  rule ``[1][k] = [k+1] + w_k [k-1]`` (with ``[r-1] = 0``) and linearity;
* :func:`matrix_oracle` represents ``[k]`` by the matrix ``chi_{M_k}(M)``
  acting on named-basis coordinates;
* :func:`determinant_oracle` expands ``det(X - M_k)`` by cofactors;
* :func:`pascal_oracle` is the closed form for ``(r, s) = (5, 3)``.
"""
from __future__ import annotations

from math import comb
from typing import Iterator, Sequence

from .frobenius import UniPoly
from .laurent import ONE, ZERO, LaurentPoly, invert_monomial, sum_of_products, sum_polys
from .su2_model import ModelParams, matrix_of_multiplication_by_one, validate, weight_sequence

__all__ = [
    "structure_constants",
    "sc_multiply",
    "sc_boundary_vector",
    "sc_hodge_polynomial",
    "determinant_oracle",
    "matrix_oracle",
    "matrix_boundary_vector",
    "pascal_oracle",
    "fibonacci",
    "multisets",
]

Vector = list[LaurentPoly]


# -- structure constants ------------------------------------------------------

def _times_one(x: Sequence[LaurentPoly], w: Sequence[LaurentPoly]) -> Vector:
    """Multiply a named-basis vector by [1]; the [N] term is dropped."""
    n = len(x)
    out: list[list[LaurentPoly]] = [[] for _ in range(n)]
    for l, c in enumerate(x):
        if not c:
            continue
        if l + 1 < n:
            out[l + 1].append(c)
        if l >= 1:
            out[l - 1].append(c * w[l - 1])
    return [sum_polys(t) for t in out]


def structure_constants(params: ModelParams) -> list[list[Vector]]:
    """``c[j][k]`` = named-basis coordinates of ``[j][k]``."""
    validate(params)
    w = weight_sequence(params)
    n = params.rank

    def unit(i: int) -> Vector:
        return [ONE if l == i else ZERO for l in range(n)]

    c: list[list[Vector]] = [[unit(k) for k in range(n)]]
    if n > 1:
        c.append([_times_one(unit(k), w) for k in range(n)])
    for j in range(1, n - 1):
        # [j+1] = [1][j] - w_j [j-1]
        c.append([
            [a - w[j - 1] * b for a, b in zip(_times_one(c[j][k], w), c[j - 1][k])]
            for k in range(n)
        ])
    return c


def sc_multiply(c: list[list[Vector]], x: Sequence[LaurentPoly], y: Sequence[LaurentPoly]) -> Vector:
    n = len(x)
    out: list[list[tuple[LaurentPoly, LaurentPoly]]] = [[] for _ in range(n)]
    for j, a in enumerate(x):
        if not a:
            continue
        for k, b in enumerate(y):
            if not b:
                continue
            ab = a * b
            for l, s in enumerate(c[j][k]):
                if s:
                    out[l].append((ab, s))
    return [sum_of_products(t) for t in out]


def _sc_times_basis(c: list[list[Vector]], x: Sequence[LaurentPoly], k: int) -> Vector:
    n = len(x)
    out: list[list[LaurentPoly]] = [[] for _ in range(n)]
    for j, a in enumerate(x):
        if a:
            for l, s in enumerate(c[j][k]):
                if s:
                    out[l].append(a * s)
    return [sum_polys(t) for t in out]


def sc_omega(c: list[list[Vector]]) -> Vector:
    n = len(c)
    terms: list[list[LaurentPoly]] = [[] for _ in range(n)]
    for k in range(n):
        scale = invert_monomial(c[k][k][0])
        for l, s in enumerate(c[k][k]):
            if s:
                terms[l].append(s * scale)
    return [sum_polys(t) for t in terms]


def sc_boundary_vector(params: ModelParams, colors: Sequence[int], genus: int = 0,
                       c: list[list[Vector]] | None = None) -> Vector:
    if c is None:
        c = structure_constants(params)
    n = params.rank
    x = [ONE] + [ZERO] * (n - 1)
    for col in colors:
        if not 0 <= col < n:
            raise ValueError(f"color {col} outside 0..{n - 1}")
        x = _sc_times_basis(c, x, col)
    om = sc_omega(c)
    for _ in range(genus):
        x = sc_multiply(c, x, om)
    return x


def sc_hodge_polynomial(params: ModelParams, colors: Sequence[int], genus: int = 0,
                        output_color: int | None = None) -> LaurentPoly:
    return sc_boundary_vector(params, colors, genus)[output_color or 0]


# -- determinants and matrices ------------------------------------------------

def _det(rows: list[list[UniPoly]]) -> UniPoly:
    """Laplace expansion along the last row, skipping zero entries."""
    k = len(rows)
    if k == 0:
        return UniPoly([ONE])
    last = rows[-1]
    total = UniPoly()
    for j, entry in enumerate(last):
        if not entry.coeffs:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[:-1]]
        term = entry * _det(minor)
        total = total + term if (k - 1 + j) % 2 == 0 else total - term
    return total


def determinant_oracle(k: int, params: ModelParams) -> UniPoly:
    """``det(X I_k - M_k)`` with ``M_k`` the leading k x k block of M."""
    validate(params)
    if not 0 <= k <= params.rank:
        raise ValueError(f"k must lie in 0..{params.rank}")
    m = matrix_of_multiplication_by_one(params)
    rows = []
    for i in range(k):
        row = []
        for j in range(k):
            entry = UniPoly([-m[i][j]])
            if i == j:
                entry = entry + UniPoly([ZERO, ONE])
            row.append(entry)
        rows.append(row)
    return _det(rows)


Matrix = list[list[LaurentPoly]]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(sum_of_products((a[i][t], b[t][j]) for t in range(n) if a[i][t] and b[t][j]))
        out.append(row)
    return out


def _matvec(a: Matrix, x: Sequence[LaurentPoly]) -> Vector:
    n = len(a)
    return [sum_of_products((a[i][t], x[t]) for t in range(n) if a[i][t] and x[t]) for i in range(n)]


def _poly_of_matrix(p: UniPoly, m: Matrix) -> Matrix:
    n = len(m)
    acc = [[ZERO] * n for _ in range(n)]
    for c in reversed(p.coeffs):
        acc = _matmul(acc, m)
        for i in range(n):
            acc[i][i] = acc[i][i] + c
    return acc


class _MatrixModel:
    def __init__(self, params: ModelParams):
        m = matrix_of_multiplication_by_one(params)
        n = params.rank
        self.basis = [_poly_of_matrix(determinant_oracle(k, params), m) for k in range(n)]
        omega = [[ZERO] * n for _ in range(n)]
        for k in range(n):
            sq = _matmul(self.basis[k], self.basis[k])
            scale = invert_monomial(sq[0][0])
            for i in range(n):
                for j in range(n):
                    if sq[i][j]:
                        omega[i][j] = omega[i][j] + sq[i][j] * scale
        self.omega = omega


_MATRIX_MODELS: dict[ModelParams, _MatrixModel] = {}


def _matrix_model(params: ModelParams) -> _MatrixModel:
    mm = _MATRIX_MODELS.get(params)
    if mm is None:
        mm = _MATRIX_MODELS[params] = _MatrixModel(params)
    return mm


def matrix_boundary_vector(params: ModelParams, colors: Sequence[int], genus: int = 0) -> Vector:
    """Column 0 of ``[l_1](M) ... [l_n](M) Omega(M)^genus``."""
    validate(params)
    mm = _matrix_model(params)
    n = params.rank
    x = [ONE] + [ZERO] * (n - 1)
    for _ in range(genus):
        x = _matvec(mm.omega, x)
    for col in colors:
        if not 0 <= col < n:
            raise ValueError(f"color {col} outside 0..{n - 1}")
        x = _matvec(mm.basis[col], x)
    return x


def matrix_oracle(params: ModelParams, d) -> LaurentPoly:
    """Hodge polynomial of a surface datum via the matrix representation."""
    mu = 0 if d.output_color is None else d.output_color
    return matrix_boundary_vector(params, d.colors, d.genus)[mu]


# -- closed forms -------------------------------------------------------------

def pascal_oracle(n: int) -> LaurentPoly:
    """``sum_{p+q=n} C(q-1, p-1) u^p v^q`` for (r, s) = (5, 3), colors all 2."""
    if n < 2:
        raise ValueError("n must be at least 2")
    terms = {}
    for p in range(1, n):
        q = n - p
        c = comb(q - 1, p - 1) if p - 1 <= q - 1 else 0
        if c:
            terms[(p, q)] = c
    return LaurentPoly(terms)


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def multisets(n_colors: int, max_size: int) -> Iterator[tuple[int, ...]]:
    """Non-decreasing color tuples of length <= max_size, by size then colex."""
    def rec(size: int, hi: int) -> Iterator[tuple[int, ...]]:
        if size == 0:
            yield ()
            return
        for last in range(hi):
            for head in rec(size - 1, last + 1):
                yield head + (last,)
    for size in range(max_size + 1):
        yield from rec(size, n_colors)
