"""Exhaustive cross-check of the quotient-ring, structure-constant and matrix paths.

Color multisets are walked depth-first so every path extends the product of
the parent multiset by one color instead of recomputing it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import oracles
from .hodge import SurfaceDatum, gap_scan, hodge_polynomial, parity_vanishes, weight_of
from .laurent import U, V, LaurentPoly, specialize
from .su2_model import VALID_SWEEP, ModelParams, build_algebra, signature_point

__all__ = [
    "SweepPoint",
    "sweep_vectors",
    "Mismatch",
    "check_point",
    "positivity_violations",
    "run_sweep",
    "signature_sign_violations",
    "reference_value_violations",
    "selftest",
]


@dataclass(frozen=True)
class SweepPoint:
    params: ModelParams
    colors: tuple[int, ...]
    genus: int
    quotient: tuple[LaurentPoly, ...]
    structure: tuple[LaurentPoly, ...]
    matrix: tuple[LaurentPoly, ...]


def sweep_vectors(params: ModelParams, genus_max: int, n_max: int) -> Iterator[SweepPoint]:
    """Boundary vectors from all three paths for every multiset and genus."""
    A = build_algebra(params)
    n = params.rank
    sc = oracles.structure_constants(params)
    sc_om = oracles.sc_omega(sc)
    mm = oracles._matrix_model(params)

    def emit(colors, q_elem, s_vec, m_vec):
        for g in range(genus_max + 1):
            if g:
                q_elem = A.mul(q_elem, A.omega)
                s_vec = oracles.sc_multiply(sc, s_vec, sc_om)
                m_vec = oracles._matvec(mm.omega, m_vec)
            yield SweepPoint(params, colors, g, A.to_named_basis(q_elem),
                             tuple(s_vec), tuple(m_vec))

    def rec(colors, q_elem, s_vec, m_vec, lo):
        yield from emit(colors, q_elem, s_vec, m_vec)
        if len(colors) == n_max:
            return
        for c in range(lo, n):
            yield from rec(colors + (c,),
                           A.mul(q_elem, A.basis(c)),
                           oracles._sc_times_basis(sc, s_vec, c),
                           oracles._matvec(mm.basis[c], m_vec),
                           c)

    unit = [LaurentPoly.constant(1)] + [LaurentPoly()] * (n - 1)
    yield from rec((), A.one(), unit, unit, 0)


@dataclass(frozen=True)
class Mismatch:
    point: SweepPoint
    reason: str

    def __str__(self) -> str:
        p = self.point
        return (f"(r={p.params.r}, s={p.params.s}, g={p.genus}, colors={list(p.colors)}): "
                f"{self.reason}")


def check_point(pt: SweepPoint) -> list[str]:
    """Every identity the sweep enforces at one point; empty when all hold."""
    problems = []
    for name, other in (("structure-constant", pt.structure), ("matrix", pt.matrix)):
        if pt.quotient != other:
            diff = next(k for k in range(len(other)) if pt.quotient[k] != other[k])
            problems.append(f"quotient vs {name} at [{diff}]: "
                            f"{pt.quotient[diff]} != {other[diff]}")
    for mu, e in enumerate(pt.quotient):
        d = SurfaceDatum(pt.genus, pt.colors, mu if mu else None)
        if parity_vanishes(d):
            if e:
                problems.append(f"odd parity but e(mu={mu}) = {e}")
            continue
        m = weight_of(d)
        if any(p + q != m for p, q, _ in e.items()):
            problems.append(f"e(mu={mu}) = {e} not homogeneous of weight {m}")
            continue
        if gap_scan(e).has_type2_gap:
            problems.append(f"type 2 gap in e(mu={mu}) = {e}")
    return problems


def positivity_violations(e: LaurentPoly) -> list[str]:
    """Terms of a closed Hodge polynomial that are not ``c u^p v^q`` with c, p, q >= 0."""
    return [f"{c}*u^{p}*v^{q}" for p, q, c in e.items() if c < 0 or p < 0 or q < 0]


def run_sweep(params_list, genus_max: int, n_max: int, stop_first: bool = True):
    """Check every point; returns ``(n_points, mismatches)``."""
    count, bad = 0, []
    for params in params_list:
        for pt in sweep_vectors(params, genus_max, n_max):
            count += 1
            for reason in check_point(pt):
                bad.append(Mismatch(pt, reason))
                if stop_first:
                    return count, bad
    return count, bad


def signature_sign_violations(params: ModelParams) -> list[str]:
    """Compare the sign of ``V_0(k-1; k, 1)`` with ``-(-1)^(floor(ks/r) + floor((k+1)s/r))``."""
    A = build_algebra(params)
    r, s = params.r, params.s
    point = signature_point(params)
    out = []
    for k in range(1, r - 1):
        e = hodge_polynomial(A, SurfaceDatum(0, (k, 1), k - 1))
        got = specialize(e, *point)
        want = -((-1) ** (k * s // r + (k + 1) * s // r))
        if got != want:
            out.append(f"(r={r}, s={s}) sign of V_0({k - 1}; {k}, 1): e = {e} "
                       f"specializes to {got}, expected {want}")
    return out


def reference_value_violations(n_max: int = 20) -> list[str]:
    """Frozen values for (r, s) = (5, 3): the relation for [2]^2 and the Pascal rows."""
    params = ModelParams(5, 3)
    A = build_algebra(params)
    out = []
    sq = A.to_named_basis(A.mul(A.basis(2), A.basis(2)))
    if sq != (U * V, LaurentPoly(), V, LaurentPoly()):
        out.append(f"(r=5, s=3) [2]*[2] = {[str(c) for c in sq]}, expected uv[0] + v[2]")
    for n in range(2, n_max + 1):
        e = hodge_polynomial(A, SurfaceDatum(0, (2,) * n))
        want = oracles.pascal_oracle(n)
        if e != want:
            out.append(f"(r=5, s=3, g=0, colors=[2]*{n}): {e} != {want}")
        elif specialize(e, 1, 1) != oracles.fibonacci(n - 1):
            out.append(f"(r=5, s=3, g=0, colors=[2]*{n}): dimension != F_{n - 1}")
    return out


QUICK = dict(params=(ModelParams(3, 1), ModelParams(5, 3)), genus_max=2, n_max=4)


def selftest(depth: str = "quick") -> tuple[bool, list[str], int]:
    """Run every oracle identity; returns ``(ok, messages, points_checked)``."""
    if depth == "quick":
        plist, gmax, nmax = QUICK["params"], QUICK["genus_max"], QUICK["n_max"]
    elif depth == "full":
        plist, gmax, nmax = VALID_SWEEP, 3, 6
    else:
        raise ValueError(f"unknown depth {depth!r}")
    msgs = reference_value_violations()
    for p in plist:
        msgs += signature_sign_violations(p)
    if msgs:
        return False, msgs[:1], 0
    count, bad = run_sweep(plist, gmax, nmax, stop_first=True)
    if bad:
        return False, [str(bad[0])], count
    return True, [], count
