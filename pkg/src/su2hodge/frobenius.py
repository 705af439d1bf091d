"""Quotient rings ``R[X]/chi(X)`` over ``R = Z[u^{+-1}, v^{+-1}]`` with a Frobenius structure.

Elements are stored in the power basis ``1, X, ..., X^{N-1}``.  The named
basis ``[0], ..., [N-1]`` (``[k]`` monic of degree ``k``) is a view computed
by unitriangular back-substitution, and the counit reads the ``[0]``
coordinate of that view.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .laurent import ONE, ZERO, LaurentPoly, invert_monomial, sum_of_products, sum_polys

__all__ = [
    "UniPoly",
    "RingElement",
    "FrobeniusAlgebra",
    "MalformedAlgebra",
    "NonMonomialNorm",
    "reduce",
    "ring_mul",
    "to_named_basis",
    "epsilon",
    "eta",
    "omega",
    "power",
]


class MalformedAlgebra(ValueError):
    pass


class NonMonomialNorm(MalformedAlgebra):
    pass


def _trim(coeffs) -> tuple[LaurentPoly, ...]:
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class UniPoly:
    """Polynomial in X with Laurent coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[LaurentPoly | int] = ()):
        self.coeffs = _trim(
            c if isinstance(c, LaurentPoly) else LaurentPoly.constant(c) for c in coeffs
        )

    @classmethod
    def x_power(cls, k: int, c: LaurentPoly = ONE) -> UniPoly:
        return cls([ZERO] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def leading(self) -> LaurentPoly:
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == ONE

    def __getitem__(self, i: int) -> LaurentPoly:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def __add__(self, other: UniPoly) -> UniPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] + other[i] for i in range(n)])

    def __neg__(self) -> UniPoly:
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other: UniPoly) -> UniPoly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return UniPoly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [[] for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j].append(a * b)
        return UniPoly([sum_polys(ts) for ts in out])

    __rmul__ = __mul__

    def times_x(self) -> UniPoly:
        return UniPoly((ZERO,) + self.coeffs) if self.coeffs else UniPoly()

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            xs = "" if k == 0 else ("X" if k == 1 else f"X^{k}")
            if not xs:
                parts.append(f"({c})")
            elif c == ONE:
                parts.append(xs)
            else:
                parts.append(f"({c})*{xs}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly({self})"


@dataclass(frozen=True)
class RingElement:
    """Element of a quotient ring, as power-basis coordinates."""

    coords: tuple[LaurentPoly, ...]

    def __len__(self) -> int:
        return len(self.coords)

    def __add__(self, other: RingElement) -> RingElement:
        return RingElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: RingElement) -> RingElement:
        return RingElement(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, c: LaurentPoly | int) -> RingElement:
        return RingElement(tuple(a * c for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def as_unipoly(self) -> UniPoly:
        return UniPoly(self.coords)


class FrobeniusAlgebra:
    """The ring ``Z[u^{+-1}, v^{+-1}][X]/modulus`` with a named basis and counit.

    Parameters
    ----------
    modulus : UniPoly
        Monic polynomial of degree ``N``.
    named_basis : sequence of UniPoly
        ``N`` polynomials, the ``k``-th monic of degree ``k``.
    involution : sequence of int, optional
        Permutation of ``range(N)`` fixing 0 and squaring to the identity.
        Defaults to the identity.

    The handle element ``omega`` and the Gram matrix of ``eta`` are computed
    once at construction.
    """

    def __init__(self, modulus: UniPoly, named_basis: Sequence[UniPoly],
                 involution: Sequence[int] | None = None):
        n = len(named_basis)
        if n < 1:
            raise MalformedAlgebra("rank must be at least 1")
        if modulus.degree != n or not modulus.is_monic():
            raise MalformedAlgebra(f"modulus must be monic of degree {n}")
        for k, b in enumerate(named_basis):
            if b.degree != k or not b.is_monic():
                raise MalformedAlgebra(f"named basis element {k} must be monic of degree {k}")
        inv = tuple(range(n)) if involution is None else tuple(involution)
        if sorted(inv) != list(range(n)) or inv[0] != 0 or any(inv[inv[k]] != k for k in range(n)):
            raise MalformedAlgebra(f"invalid involution {inv}")

        self.rank = n
        self.modulus = modulus
        self.named_basis = tuple(named_basis)
        self.involution = inv
        # reduction rule X^N = -sum_i m_i X^i, nonzero terms only
        self._tail = tuple((i, -c) for i, c in enumerate(modulus.coeffs[:n]) if c)
        self._basis_terms = tuple(
            tuple((i, c) for i, c in enumerate(b.coeffs[:k]) if c)
            for k, b in enumerate(self.named_basis)
        )
        self._basis_elems = tuple(self.reduce(b) for b in self.named_basis)
        self._omega = self._build_omega()
        self._gram = tuple(
            tuple(self.eta(self.basis(j), self.basis(k)) for k in range(n)) for j in range(n)
        )

    # -- construction helpers -----------------------------------------------

    def zero(self) -> RingElement:
        return RingElement((ZERO,) * self.rank)

    def one(self) -> RingElement:
        return self.basis(0)

    def basis(self, k: int) -> RingElement:
        """The named basis element ``[k]``."""
        return self._basis_elems[k]

    def from_named_basis(self, coeffs: Sequence[LaurentPoly]) -> RingElement:
        out = [[] for _ in range(self.rank)]
        for k, c in enumerate(coeffs):
            if c:
                for i, b in enumerate(self._basis_elems[k].coords):
                    if b:
                        out[i].append(c * b)
        return RingElement(tuple(sum_polys(t) for t in out))

    # -- core operations ----------------------------------------------------

    def _reduce_list(self, c: list[LaurentPoly]) -> RingElement:
        n = self.rank
        for d in range(len(c) - 1, n - 1, -1):
            top = c[d]
            if top:
                base = d - n
                for i, m in self._tail:
                    c[base + i] = c[base + i] + top * m
        c = c[:n] + [ZERO] * (n - len(c))
        return RingElement(tuple(c))

    def reduce(self, p: UniPoly) -> RingElement:
        """Remainder of ``p`` modulo the (monic) modulus."""
        return self._reduce_list(list(p.coeffs))

    def mul(self, a: RingElement, b: RingElement) -> RingElement:
        ac = [(i, x) for i, x in enumerate(a.coords) if x]
        bc = [(j, y) for j, y in enumerate(b.coords) if y]
        if not ac or not bc:
            return self.zero()
        buckets = [[] for _ in range(2 * self.rank - 1)]
        for i, x in ac:
            for j, y in bc:
                buckets[i + j].append((x, y))
        return self._reduce_list([sum_of_products(t) if t else ZERO for t in buckets])

    def power(self, a: RingElement, g: int) -> RingElement:
        if g < 0:
            raise ValueError("exponent must be non-negative")
        result, base = self.one(), a
        while g:
            if g & 1:
                result = self.mul(result, base)
            g >>= 1
            if g:
                base = self.mul(base, base)
        return result

    def to_named_basis(self, a: RingElement) -> tuple[LaurentPoly, ...]:
        """Coefficients ``c_k`` with ``a = sum_k c_k [k]``."""
        work = list(a.coords)
        out = [ZERO] * self.rank
        for k in range(self.rank - 1, -1, -1):
            c = work[k]
            if c:
                out[k] = c
                for i, b in self._basis_terms[k]:
                    work[i] = work[i] - c * b
        return tuple(out)

    def epsilon(self, a: RingElement) -> LaurentPoly:
        return self.to_named_basis(a)[0]

    def eta(self, a: RingElement, b: RingElement) -> LaurentPoly:
        return self.epsilon(self.mul(a, b))

    def _build_omega(self) -> RingElement:
        total = self.zero()
        for k in range(self.rank):
            sq = self.mul(self.basis(k), self.basis(self.involution[k]))
            norm = self.epsilon(sq)
            if not norm.is_unit_monomial():
                raise NonMonomialNorm(f"epsilon([{k}][{self.involution[k]}]) = {norm} is not a unit monomial")
            total = total + sq.scale(invert_monomial(norm))
        return total

    @property
    def omega(self) -> RingElement:
        """Handle element ``sum_k eps([k][k*])^{-1} [k][k*]``."""
        return self._omega

    def gram_matrix(self) -> tuple[tuple[LaurentPoly, ...], ...]:
        """Matrix of ``eta`` on the named basis."""
        return self._gram

    def __repr__(self) -> str:
        return f"FrobeniusAlgebra(rank={self.rank}, modulus={self.modulus})"


def reduce(p: UniPoly, A: FrobeniusAlgebra) -> RingElement:
    return A.reduce(p)


def ring_mul(a: RingElement, b: RingElement, A: FrobeniusAlgebra) -> RingElement:
    return A.mul(a, b)


def to_named_basis(a: RingElement, A: FrobeniusAlgebra) -> tuple[LaurentPoly, ...]:
    return A.to_named_basis(a)


def epsilon(a: RingElement, A: FrobeniusAlgebra) -> LaurentPoly:
    return A.epsilon(a)


def eta(a: RingElement, b: RingElement, A: FrobeniusAlgebra) -> LaurentPoly:
    return A.eta(a, b)


def omega(A: FrobeniusAlgebra) -> RingElement:
    return A.omega


def power(a: RingElement, g: int, A: FrobeniusAlgebra) -> RingElement:
    return A.power(a, g)
