"""Exact arithmetic in the bivariate Laurent ring Z[u, u^-1, v, v^-1].

A :class:`LaurentPoly` is an immutable, zero-free map from exponent pairs
``(p, q)`` to Python integers.  Internally each pair is packed into one
integer ``p * 2**32 + q``; packing is additive, so monomial multiplication is
key addition and sorted keys are sorted lexicographically by ``(p, q)``.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

__all__ = [
    "LaurentPoly",
    "LaurentError",
    "NotAMonomial",
    "NotAUnit",
    "ZeroSubstitution",
    "ParseError",
    "add",
    "mul",
    "sum_polys",
    "sum_of_products",
    "invert_monomial",
    "specialize",
    "is_homogeneous",
    "parse",
    "ZERO",
    "ONE",
    "U",
    "V",
]

_SHIFT = 32
_HALF = 1 << (_SHIFT - 1)
_MASK = (1 << _SHIFT) - 1


def _pack(p: int, q: int) -> int:
    if not (-_HALF <= q < _HALF and -_HALF <= p < _HALF):
        raise OverflowError(f"exponent pair {(p, q)} out of range")
    return (p << _SHIFT) + q


def _unpack(key: int) -> tuple[int, int]:
    q = ((key + _HALF) & _MASK) - _HALF
    return (key - q) >> _SHIFT, q


class LaurentError(ValueError):
    pass


class NotAMonomial(LaurentError):
    pass


class NotAUnit(LaurentError):
    pass


class ZeroSubstitution(LaurentError):
    pass


class ParseError(LaurentError):
    pass


class LaurentPoly:
    """Element of Z[u^{+-1}, v^{+-1}].

    Construct from a mapping ``{(p, q): coeff}``; zero coefficients are
    dropped.  Supports ``+``, ``-``, ``*`` (with other polys or ints),
    equality, hashing, and a text form round-tripped by :func:`parse`.

    >>> u, v = LaurentPoly.monomial(1, 0), LaurentPoly.monomial(0, 1)
    >>> str((u + v) * (u - v))
    '-v^2 + u^2'
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        t: dict[int, int] = {}
        if terms:
            for (p, q), c in terms.items():
                c = int(c)
                if c:
                    k = _pack(int(p), int(q))
                    t[k] = t.get(k, 0) + c
                    if not t[k]:
                        del t[k]
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t: dict[int, int]) -> LaurentPoly:
        # t must already be zero-free
        obj = object.__new__(cls)
        obj._t = t
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls._raw({0: int(c)} if c else {})

    @classmethod
    def monomial(cls, p: int, q: int, c: int = 1) -> LaurentPoly:
        return cls._raw({_pack(p, q): int(c)} if c else {})

    # -- inspection ---------------------------------------------------------

    def terms(self) -> dict[tuple[int, int], int]:
        """Term map ordered lexicographically by ``(p, q)``."""
        return {_unpack(k): self._t[k] for k in sorted(self._t)}

    def items(self) -> Iterator[tuple[int, int, int]]:
        for k in sorted(self._t):
            p, q = _unpack(k)
            yield p, q, self._t[k]

    def coefficient(self, p: int, q: int) -> int:
        return self._t.get(_pack(p, q), 0)

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def is_unit_monomial(self) -> bool:
        return len(self._t) == 1 and next(iter(self._t.values())) in (1, -1)

    def constant_value(self) -> int | None:
        """The integer this poly equals, or None if it is not constant."""
        if not self._t:
            return 0
        if len(self._t) == 1 and 0 in self._t:
            return self._t[0]
        return None

    def total_degrees(self) -> set[int]:
        return {sum(_unpack(k)) for k in self._t}

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, c in b.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -c for k, c in self._t.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({k: c * other for k, c in self._t.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a, b = self._t, other._t
        if not a or not b:
            return ZERO
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (kb, cb), = b.items()
            if cb == 1:
                return LaurentPoly._raw({k + kb: c for k, c in a.items()})
            return LaurentPoly._raw({k + kb: c * cb for k, c in a.items()})
        out: dict[int, int] = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return LaurentPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return invert_monomial(self) ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, p: int, q: int) -> LaurentPoly:
        """Multiply by the monomial ``u^p v^q``."""
        d = _pack(p, q)
        return LaurentPoly._raw({k + d: c for k, c in self._t.items()})

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self.constant_value() == other
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # -- text form ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._t:
            return "0"
        out = []
        for i, (p, q, c) in enumerate(self.items()):
            factors = []
            for name, e in (("u", p), ("v", q)):
                if e == 1:
                    factors.append(name)
                elif e > 0:
                    factors.append(f"{name}^{e}")
                elif e < 0:
                    factors.append(f"{name}^({e})")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if i == 0:
                out.append(body if c > 0 else "-" + body)
            else:
                out.append((" + " if c > 0 else " - ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
U = LaurentPoly.monomial(1, 0)
V = LaurentPoly.monomial(0, 1)


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def sum_polys(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    out: dict[int, int] = {}
    for a in polys:
        for k, c in a._t.items():
            out[k] = out.get(k, 0) + c
    return LaurentPoly._raw({k: c for k, c in out.items() if c})


def sum_of_products(pairs: Iterable[tuple[LaurentPoly, LaurentPoly]]) -> LaurentPoly:
    """``sum(a * b for a, b in pairs)`` accumulated in a single dict."""
    out: dict[int, int] = {}
    get = out.get
    for a, b in pairs:
        at, bt = a._t, b._t
        if len(at) < len(bt):
            at, bt = bt, at
        for kb, cb in bt.items():
            if cb == 1:
                for ka, ca in at.items():
                    k = ka + kb
                    out[k] = get(k, 0) + ca
            else:
                for ka, ca in at.items():
                    k = ka + kb
                    out[k] = get(k, 0) + ca * cb
    return LaurentPoly._raw({k: c for k, c in out.items() if c})


def invert_monomial(a: LaurentPoly) -> LaurentPoly:
    """Inverse of a unit monomial ``+-u^p v^q``."""
    if len(a._t) != 1:
        raise NotAMonomial(f"{a} has {len(a._t)} terms, expected 1")
    (k, c), = a._t.items()
    if c not in (1, -1):
        raise NotAUnit(f"coefficient {c} of {a} is not a unit")
    return LaurentPoly._raw({-k: c})


def specialize(a: LaurentPoly, u0: int, v0: int) -> Fraction:
    """Exact value of ``a`` at ``(u, v) = (u0, v0)``; both must be nonzero."""
    if u0 == 0 or v0 == 0:
        raise ZeroSubstitution("cannot substitute 0 into a Laurent polynomial")
    u0, v0 = Fraction(u0), Fraction(v0)
    return sum((c * u0**p * v0**q for p, q, c in a.items()), Fraction(0))


def is_homogeneous(a: LaurentPoly, m) -> bool:
    """True iff every term has total degree ``p + q == m``."""
    return all(p + q == m for p, q, _ in a.items())


_FACTOR_RE = re.compile(r"^([uv])(?:\^(\d+|\(-?\d+\)))?$")


def _split_terms(s: str) -> list[tuple[int, str]]:
    out: list[tuple[int, str]] = []
    depth, sign, cur = 0, 1, []
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parenthesis in {s!r}")
        if depth == 0 and ch in "+-":
            if cur:
                out.append((sign, "".join(cur)))
            elif i != 0:
                raise ParseError(f"empty term in {s!r}")
            sign, cur = (-1 if ch == "-" else 1), []
            continue
        cur.append(ch)
    if depth:
        raise ParseError(f"unbalanced parenthesis in {s!r}")
    if not cur:
        raise ParseError(f"empty term in {s!r}")
    out.append((sign, "".join(cur)))
    return out


def parse(text: str) -> LaurentPoly:
    """Parse the text form produced by ``str(LaurentPoly)``.

    Terms look like ``-3*u^2*v^(-1)``; whitespace is ignored and negative
    exponents must be parenthesized.
    """
    s = "".join(text.split())
    if not s:
        raise ParseError("empty polynomial text")
    terms: dict[tuple[int, int], int] = {}
    for sign, chunk in _split_terms(s):
        coeff, p, q = 1, 0, 0
        for i, factor in enumerate(chunk.split("*")):
            if factor.isdigit():
                if i != 0:
                    raise ParseError(f"coefficient must lead the term: {chunk!r}")
                coeff = int(factor)
                continue
            fm = _FACTOR_RE.match(factor)
            if not fm:
                raise ParseError(f"bad factor {factor!r} in {text!r}")
            e = fm.group(2)
            e = 1 if e is None else int(e.strip("()"))
            if fm.group(1) == "u":
                p += e
            else:
                q += e
        terms[(p, q)] = terms.get((p, q), 0) + sign * coeff
    return LaurentPoly(terms)
