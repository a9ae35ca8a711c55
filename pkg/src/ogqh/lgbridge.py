"""Gromov-Witten invariants of LG(n-1, 2n-2) through OG(n+1, 2n+2).

LG invariants are defined here by the OG correspondence.  Odd-degree
invariants also have an independent route through e-coefficients, used
only as a witness: :func:`lg_gw_odd`.  On LG(n-1, 2n-2), q has degree n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InadmissibleQueryError, InvalidDegreeError, InvalidIndexError, InvariantViolation
from .ogring import gw, gw_total_degree
from .partitions import Partition, as_strict, lg_dual, star
from .qtilde import e_coeffs
from .report import IdentityReport


def lg_total_degree(n: int, e: int) -> int:
    """|lam| + |mu| + |nu| for a degree-e invariant on LG(n-1, 2n-2)."""
    return (n - 1) * n // 2 + n * e


@dataclass(frozen=True)
class LGQuery:
    n: int
    a: Partition
    b: Partition
    c: Partition
    e: int

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_strict(getattr(self, name), self.n - 1))
        if self.e < 0:
            raise InvalidDegreeError("degree must be nonnegative")

    @property
    def admissible(self) -> bool:
        return sum(self.a) + sum(self.b) + sum(self.c) == lg_total_degree(self.n, self.e)


def _og_partner(lam: Partition, e: int, n: int) -> tuple[Partition, int] | None:
    """OG class and degree d matching sigma_lam in degree e, or None if l(lam) < e."""
    excess = len(lam) - e
    if excess < 0:
        return None
    lam_star = star(lam, n)
    if excess % 2:
        return lam_star, (excess - 1) // 2
    return (n,) + lam_star, excess // 2


def lg_gw(query: LGQuery) -> int:
    """<sigma_a, sigma_b, sigma_c>_e on LG(n-1, 2n-2)."""
    if not query.admissible:
        raise InadmissibleQueryError(
            f"|a|+|b|+|c| = {sum(query.a) + sum(query.b) + sum(query.c)} but degree "
            f"{query.e} needs {lg_total_degree(query.n, query.e)}"
        )
    n = query.n
    partner = _og_partner(query.a, query.e, n)
    if partner is None:
        return 0
    big, d = partner
    return gw(big, lg_dual(query.b, n), lg_dual(query.c, n), d, n)


def lg_gw_odd(lam, mu, nu, degree: int, n: int) -> int:
    """Odd-degree LG invariant as 2^-(2d+1) e(lam, mu; (n^(2d+1), nu'))."""
    lam, mu, nu = (as_strict(p, n - 1) for p in (lam, mu, nu))
    if degree < 0 or degree % 2 == 0:
        raise InvalidDegreeError(f"odd degree required, got {degree}")
    if sum(lam) + sum(mu) + sum(nu) != lg_total_degree(n, degree):
        # the e-coefficient lives in the wrong degree
        return 0
    kappa = (n,) * degree + lg_dual(nu, n)
    value = e_coeffs(lam, mu, n).get(kappa, 0)
    q, r = divmod(value, 1 << degree)
    if r:
        raise InvariantViolation(f"e{(lam, mu, kappa)} = {value} is not divisible by 2^{degree}")
    return q


def lg_admissible_degree(a, b, c, n: int) -> int | None:
    excess = sum(a) + sum(b) + sum(c) - (n - 1) * n // 2
    if excess < 0 or excess % n:
        return None
    return excess // n


# -- correspondence checks ----------------------------------------------------

def _og_gw_or_zero(a, b, c, d, n):
    if sum(a) + sum(b) + sum(c) != gw_total_degree(n, d):
        raise InvariantViolation(f"expected an admissible OG query, got {(a, b, c, d)}")
    return gw(a, b, c, d, n)


def ogsymmetry_check(lam, mu, nu, d: int, e: int, n: int) -> IdentityReport:
    """Power-of-two weighted equality between <tau_lam, tau_mu, tau_nu>_d and its partner."""
    lam = as_strict(lam, n)
    mu, nu = as_strict(mu, n - 1), as_strict(nu, n - 1)
    if not lam or d < 0 or e < 0 or 2 * d + e + 1 != len(lam):
        raise InvalidIndexError("need lam nonzero and 2d + e + 1 = l(lam)")
    delta = 1 if lam[0] == n else 0
    g, odd = divmod(e, 2)
    partner = star(lam, n) if odd else (n,) + star(lam, n)
    left = 2 ** (len(mu) + len(nu) + e + delta) * _og_gw_or_zero(lam, mu, nu, d, n)
    right = 2 ** (n + 2 * d) * _og_gw_or_zero(partner, lg_dual(mu, n), lg_dual(nu, n), g, n)
    return IdentityReport("og_symmetry", {"lam": lam, "mu": mu, "nu": nu, "d": d, "e": e,
                                          "n": n}, _IntResidual(left - right))


def oglg_check(lam, mu, nu, d: int, n: int) -> IdentityReport:
    """<tau_lam, tau_mu, tau_nu>_d against <sigma_lam*, sigma_mu', sigma_nu'>_e.

    When l(lam) < 2d + 1 (or lam = 0) the OG invariant must vanish instead.
    Odd e is cross-checked against :func:`lg_gw_odd` as well.
    """
    lam = as_strict(lam, n)
    mu, nu = as_strict(mu, n - 1), as_strict(nu, n - 1)
    og = _og_gw_or_zero(lam, mu, nu, d, n)
    params = {"lam": lam, "mu": mu, "nu": nu, "d": d, "n": n}
    e = len(lam) - 2 * d - 1
    if not lam or e < 0:
        return IdentityReport("oglg_vanishing", params, _IntResidual(og))
    params["e"] = e
    query = LGQuery(n, star(lam, n), lg_dual(mu, n), lg_dual(nu, n), e)
    diff = og - lg_gw(query)
    if e % 2:
        diff = abs(diff) + abs(og - lg_gw_odd(query.a, query.b, query.c, e, n))
    return IdentityReport("oglg", params, _IntResidual(diff))


class _IntResidual(int):
    """Integer residual with the small interface IdentityReport expects."""

    def is_zero(self):
        return self == 0

    def json_terms(self):
        return [int(self)]
