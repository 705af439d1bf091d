"""The Frobenius algebra of the SU(2) modular functor of level 2r, r odd.

For parameters ``(r, s)`` the weights ``w_1..w_{r-2}`` are the monomials
``u`` or ``v`` chosen by the parity of ``floor(2s/r) + floor(ks/r) +
floor((k+1)s/r)``.  They fill the superdiagonal of an ``(r-1) x (r-1)``
tridiagonal matrix ``M`` with unit subdiagonal; the named basis element
``[k]`` is the characteristic polynomial of the leading ``k x k`` block and
the ring is ``Z[u^{+-1}, v^{+-1}][X]/det(X - M)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .frobenius import FrobeniusAlgebra, UniPoly
from .laurent import ONE, U, V, ZERO, LaurentPoly

__all__ = [
    "ModelParams",
    "InvalidParams",
    "InvalidR",
    "InvalidS",
    "validate",
    "weight_sequence",
    "char_poly_sequence",
    "build_algebra",
    "matrix_of_multiplication_by_one",
    "signature_point",
    "VALID_SWEEP",
]


class InvalidParams(ValueError):
    pass


class InvalidR(InvalidParams):
    pass


class InvalidS(InvalidParams):
    pass


@dataclass(frozen=True)
class ModelParams:
    r: int
    s: int

    @property
    def rank(self) -> int:
        return self.r - 1

    @property
    def colors(self) -> range:
        return range(self.r - 1)


def validate(params: ModelParams) -> ModelParams:
    r, s = params.r, params.s
    if not isinstance(r, int) or r < 3 or r % 2 == 0:
        raise InvalidR(f"r must be odd and ≥ 3 (got r={r})")
    if not isinstance(s, int) or not 0 < s < r:
        raise InvalidS(f"s must satisfy 0 < s < r (got s={s}, r={r})")
    if s % 2 == 0:
        raise InvalidS(f"s must be odd (got s={s})")
    if gcd(s, r) != 1:
        raise InvalidS(f"s must be prime to r (got gcd({s}, {r}) = {gcd(s, r)})")
    return params


def weight_sequence(params: ModelParams) -> tuple[LaurentPoly, ...]:
    """``(w_1, ..., w_{r-2})``, each the monomial ``u`` or ``v``."""
    r, s = params.r, params.s
    base = 2 * s // r
    return tuple(
        U if (base + k * s // r + (k + 1) * s // r) % 2 == 0 else V
        for k in range(1, r - 1)
    )


def char_poly_sequence(w) -> tuple[UniPoly, ...]:
    """``chi_{M_0}, ..., chi_{M_{len(w)+1}}`` via the three-term recurrence.

    ``chi_{M_k} = X chi_{M_{k-1}} - w_{k-1} chi_{M_{k-2}}``; the last entry is
    the characteristic polynomial of the full matrix.
    """
    w = tuple(w)
    seq = [UniPoly([ONE]), UniPoly([ZERO, ONE])]
    for k in range(2, len(w) + 2):
        seq.append(seq[k - 1].times_x() - seq[k - 2] * w[k - 2])
    return tuple(seq)


@lru_cache(maxsize=None)
def build_algebra(params: ModelParams) -> FrobeniusAlgebra:
    validate(params)
    chis = char_poly_sequence(weight_sequence(params))
    return FrobeniusAlgebra(chis[-1], chis[:-1])


def matrix_of_multiplication_by_one(params: ModelParams) -> list[list[LaurentPoly]]:
    """The tridiagonal matrix M: zero diagonal, ones below, weights above.

    Column ``k`` holds the named-basis coordinates of ``[1][k]``.
    """
    validate(params)
    w = weight_sequence(params)
    n = params.rank
    m = [[ZERO] * n for _ in range(n)]
    for k in range(n - 1):
        m[k + 1][k] = ONE
        m[k][k + 1] = w[k]
    return m


def signature_point(params: ModelParams) -> tuple[int, int]:
    """Point ``(u, v)`` at which Hodge polynomials specialize to signatures."""
    return (-1, 1) if (2 * params.s // params.r) % 2 == 0 else (1, -1)


def admissible_params(r_max: int) -> list[ModelParams]:
    return [ModelParams(r, s) for r in range(3, r_max + 1, 2)
            for s in range(1, r, 2) if gcd(r, s) == 1]


VALID_SWEEP = tuple(ModelParams(r, s) for r, s in
                    [(3, 1), (5, 1), (5, 3), (7, 1), (7, 3), (7, 5), (9, 5), (9, 7), (11, 3)])
