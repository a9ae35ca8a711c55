"""Exact verification of the Q-tilde polynomial identities.

Every check computes both sides as explicit polynomials in x_1..x_n and
returns an :class:`~ogqh.report.IdentityReport` whose residual is their
difference.  All checks run on integral Q~ objects; identities stated for
P~ are multiplied through by the appropriate power of 2 first.
"""

from __future__ import annotations

from collections.abc import Iterable
from math import comb

from .errors import InvalidIndexError
from .partitions import (
    as_partition,
    c_set,
    is_strict,
    normalize_composition,
    partitions,
    strict_partitions,
)
from .polyengine import GenPoly, box_difference, monomial_pair, substitute_negate_first
from .qtilde import qtilde_x
from .report import IdentityReport


def _pfaffian_shape(lam):
    ell = len(lam)
    r = 2 * ((ell + 1) // 2)
    return r, tuple(lam) + (0,) * (r - ell)


def check_pfaffian_identity(lam, n: int) -> IdentityReport:
    """sum_j (-1)^(j-1) box(Q~_{lam_j, lam_r}) box(Q~_{lam minus {lam_j, lam_r}}) = 0."""
    lam = as_partition(lam)
    if not is_strict(lam) or lam[0] > n:
        raise InvalidIndexError(f"{lam} is not in D_{n}")
    if len(lam) < 3:
        raise InvalidIndexError("the Pfaffian identity needs length >= 3")
    n = max(n, 2)
    r, padded = _pfaffian_shape(lam)
    acc = GenPoly.zero(n)
    for j in range(r - 1):
        pair = box_difference(qtilde_x((padded[j], padded[r - 1]), n))
        rest = normalize_composition(padded[:j] + padded[j + 1:r - 1])
        term = pair * box_difference(qtilde_x(rest, n))
        acc = acc + term if j % 2 == 0 else acc - term
    return IdentityReport("pfaffian", {"lam": lam, "n": n}, acc)


def _embed_lower(poly: GenPoly, n: int) -> GenPoly:
    """Polynomial in X'' = (x3..xn) viewed inside n variables."""
    return poly.shift(n - poly.nvars)


def check_box_two_row(a: int, b: int, n: int) -> IdentityReport:
    """The two-row case of the box-operator formula."""
    if not a > b >= 0:
        raise InvalidIndexError(f"need a > b >= 0, got ({a}, {b})")
    if n < max(a, 3):
        raise ValueError(f"need n >= max(a, 3), got n={n}")
    lhs = box_difference(qtilde_x((a, b), n))
    low = n - 2
    x1x2 = GenPoly.monomial((1, 1) + (0,) * low)
    rhs = 2 * _embed_lower(qtilde_x((a - 1, b), low) + qtilde_x((a, b - 1), low), n)
    rhs = rhs + 2 * x1x2 * _embed_lower(
        qtilde_x((a - 2, b - 1), low) + qtilde_x((a - 1, b - 2), low), n)
    return IdentityReport("box_two_row", {"a": a, "b": b, "n": n}, lhs - rhs)


def boxprop_rhs(lam, n: int) -> GenPoly:
    """Right side of the box-operator formula, before the overall factor 2."""
    low = n - 2
    ell = len(lam)
    acc = GenPoly.zero(n)
    for r in range(ell + 1):
        for s in range(r + 1):
            if (r + s) % 2:
                continue
            inner = GenPoly.zero(low)
            for b in range(s + 1):
                a = r + s + 1 - 2 * b
                coef = comb(a - 1, s - b)
                if not coef:
                    continue
                for mu in c_set(lam, a, b):
                    inner = inner + coef * qtilde_x(mu, low)
            if inner.is_zero():
                continue
            m_rs = monomial_pair(r, s).integer_terms()
            lifted = {e12 + e: c12 * c for e12, c12 in m_rs.items()
                      for e, c in inner.integer_terms().items()}
            acc = acc + GenPoly(n, lifted)
    return acc


def check_boxprop(lam, n: int) -> IdentityReport:
    """box(Q~_lam(X)) against its expansion over C(lam, a, b) in X''."""
    lam = normalize_composition(lam)
    if not lam or not is_strict(lam):
        raise InvalidIndexError(f"need a nonzero strict partition, got {lam}")
    if n < lam[0] + 2:
        raise ValueError(f"need n >= lam_1 + 2, got n={n}")
    residual = box_difference(qtilde_x(lam, n)) - 2 * boxprop_rhs(lam, n)
    return IdentityReport("boxprop", {"lam": lam, "n": n}, residual)


def check_appendix(lam, n: int) -> IdentityReport:
    """Doubled Q~ form of the first-variable sign-change identity.

    2 sum_i (-1)^(i-1) Q~_{lam minus lam_i}(X) Q~_{lam_i}(X')
        = Q~_lam(-x1, x2, ...) + (-1)^(l+1) Q~_lam(X)
    """
    lam = as_partition(lam)
    if not lam:
        raise InvalidIndexError("need a partition of length >= 1")
    if n < lam[0] + 1:
        raise ValueError(f"need n >= lam_1 + 1, got n={n}")
    ell = len(lam)
    lhs = GenPoly.zero(n)
    for i, part in enumerate(lam):
        rest = lam[:i] + lam[i + 1:]
        term = qtilde_x(rest, n) * qtilde_x((part,), n - 1).shift(1)
        lhs = lhs + term if i % 2 == 0 else lhs - term
    full = qtilde_x(lam, n)
    rhs = substitute_negate_first(full) + (full if ell % 2 else -full)
    return IdentityReport("appendix", {"lam": lam, "n": n}, 2 * lhs - rhs)


# -- sweeps ----------------------------------------------------------------------

def pfaffian_cases(n_max: int, lengths: Iterable[int] = (3, 4, 5)):
    lengths = set(lengths)
    for n in range(3, n_max + 1):
        for lam in strict_partitions(n):
            if len(lam) in lengths:
                yield lam, n


def box_two_row_cases(a_max: int):
    for a in range(1, a_max + 1):
        for b in range(a):
            yield a, b, max(a, 3)


def boxprop_cases(top: int):
    for lam in strict_partitions(top):
        if lam:
            yield lam, lam[0] + 2


def appendix_cases(bound: int, max_weight: int, n: int | None = None):
    n = bound + 1 if n is None else n
    for m in range(1, max_weight + 1):
        for lam in partitions(m, max_part=bound):
            yield lam, n


def identity_suite(n_max: int = 5) -> list[tuple]:
    """(function, args) jobs covering the standard parameter ranges.

    ``n_max`` caps the Pfaffian sweep and sizes the others: two-row cases
    with a <= n_max, box cases with lam_1 <= n_max - 1, and the sign-change
    identity over E_{n_max - 1} up to weight 10.
    """
    jobs = [(check_pfaffian_identity, args) for args in pfaffian_cases(n_max)]
    jobs += [(check_box_two_row, args) for args in box_two_row_cases(n_max)]
    jobs += [(check_boxprop, args) for args in boxprop_cases(max(n_max - 1, 1))]
    jobs += [(check_appendix, args)
             for args in appendix_cases(max(n_max - 1, 1), 10)]
    return jobs


def run_jobs(jobs) -> list[IdentityReport]:
    return [fn(*args) for fn, args in jobs]
