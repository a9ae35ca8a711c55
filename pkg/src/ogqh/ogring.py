"""Classical and small quantum cohomology of OG(n+1, 2n+2).

Schubert classes tau_lam are indexed by lam in D_n and q has degree 2n.
Quantum structure constants come from the P~ structure constants:
the coefficient of tau_nu q^d in tau_lam * tau_mu is f(lam, mu; (n^(2d), nu)).
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from functools import lru_cache

from .errors import InadmissibleQueryError, InvalidDegreeError, InvalidIndexError
from .partitions import (
    Partition,
    as_strict,
    dual,
    format_partition,
    horizontal_strips,
    is_strict,
    lg_dual,
    normalize_composition,
    remove_parts,
    star,
)
from .qtilde import e_coeffs, e_to_f
from .report import IdentityReport


class QuantumClass:
    """Element ``sum(c * tau_nu * q^d)`` of QH*(OG(n+1, 2n+2))."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple[Partition, int], int] | None = None):
        clean: dict = defaultdict(int)
        for (nu, d), c in (terms or {}).items():
            nu = normalize_composition(nu)
            if not is_strict(nu) or (nu and nu[0] > n):
                # tau_nu = 0 outside D_n
                continue
            if d < 0:
                raise ValueError("negative power of q")
            clean[(nu, d)] += c
        self.n = n
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def basis(cls, nu: Sequence[int], n: int, d: int = 0) -> QuantumClass:
        return cls(n, {(tuple(nu), d): 1})

    @classmethod
    def q(cls, n: int, d: int = 1) -> QuantumClass:
        return cls(n, {((), d): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        """Set of |nu| + 2nd over the support; a singleton for homogeneous classes."""
        return {sum(nu) + 2 * self.n * d for nu, d in self.terms}

    def __getitem__(self, key):
        nu, d = key
        return self.terms.get((tuple(nu), d), 0)

    def __add__(self, other):
        if not isinstance(other, QuantumClass) or other.n != self.n:
            return NotImplemented
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, 0) + v
        return QuantumClass(self.n, acc)

    def __neg__(self):
        return QuantumClass(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QuantumClass(self.n, {k: v * other for k, v in self.terms.items()})
        if not isinstance(other, QuantumClass) or other.n != self.n:
            return NotImplemented
        acc: dict = defaultdict(int)
        for (nu1, d1), c1 in self.terms.items():
            for (nu2, d2), c2 in other.terms.items():
                for (nu, d), c in _quantum_product(nu1, nu2, self.n).items():
                    acc[(nu, d + d1 + d2)] += c1 * c2 * c
        return QuantumClass(self.n, acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QuantumClass):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (t[0][1], t[0][0]))

    def json_terms(self) -> list:
        return [{"nu": list(nu), "d": d, "coeff": c} for (nu, d), c in self.sorted_terms()]

    def to_json(self) -> dict:
        return {"n": self.n, "terms": self.json_terms()}

    def render(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for (nu, d), c in self.sorted_terms():
            factors = []
            if nu:
                factors.append(f"τ[{format_partition(nu)}]")
            if d:
                factors.append("q" if d == 1 else f"q^{d}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "·".join(factors)
            else:
                body = "·".join([str(mag)] + factors)
            out.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(out)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"QuantumClass(n={self.n}, {self.render()})"


def tau(nu: Sequence[int], n: int) -> QuantumClass:
    """tau_nu, with tau_nu = 0 for nu non-strict or outside D_n."""
    return QuantumClass.basis(normalize_composition(nu), n)


def _special(i: int, n: int) -> QuantumClass:
    if i < 0 or i > n:
        return QuantumClass(n)
    return tau((i,) if i else (), n)


# -- products --------------------------------------------------------------------

def _check(lam, n) -> Partition:
    return as_strict(lam, n)


def classical_product(lam, mu, n: int) -> dict[Partition, int]:
    """Structure constants of tau_lam tau_mu in H*(OG)."""
    lam, mu = _check(lam, n), _check(mu, n)
    out = {}
    for nu, e in e_coeffs(lam, mu, n).items():
        if is_strict(nu):
            out[nu] = e_to_f(e, lam, mu, nu)
    return {nu: c for nu, c in out.items() if c}


@lru_cache(maxsize=None)
def _quantum_product(lam: Partition, mu: Partition, n: int) -> dict:
    if lam < mu:
        return _quantum_product(mu, lam, n)
    out = {}
    for kappa, e in e_coeffs(lam, mu, n).items():
        t = sum(1 for p in kappa if p == n)
        d = t // 2
        nu = kappa[2 * d:]
        if not is_strict(nu):
            continue
        c = e_to_f(e, lam, mu, kappa)
        if c:
            out[(nu, d)] = c
    return out


def quantum_product(lam, mu, n: int) -> QuantumClass:
    """tau_lam * tau_mu in QH*(OG(n+1, 2n+2))."""
    lam, mu = _check(lam, n), _check(mu, n)
    return QuantumClass(n, _quantum_product(lam, mu, n))


def quantum_pieri(lam, k: int, n: int) -> QuantumClass:
    """tau_lam * tau_k from horizontal strips, with the q-term for mu containing (n, n)."""
    lam = _check(lam, n)
    if not 0 <= k <= n:
        raise InvalidDegreeError(f"special class degree must be in [0, {n}], got {k}")
    acc: dict = defaultdict(int)
    for mu, exp in horizontal_strips(lam, k, n):
        if is_strict(mu):
            acc[(mu, 0)] += 1 << exp
        elif len(mu) >= 2 and mu[0] == mu[1] == n and is_strict(mu[2:]):
            acc[(mu[2:], 1)] += 1 << exp
    return QuantumClass(n, acc)


def multiply_by_top(lam, n: int) -> QuantumClass:
    """tau_n * tau_lam: one term, tau_(n, lam) or tau_(lam minus n) q."""
    lam = _check(lam, n)
    if not lam or lam[0] < n:
        return QuantumClass.basis((n,) + lam, n)
    return QuantumClass.basis(lam[1:], n, 1)


def rho_product(lam, n: int) -> QuantumClass:
    """tau_lam * tau_rho(n-1) through the two involutions on D_(n-1)."""
    lam = _check(lam, n)
    d, odd = divmod(len(lam), 2)
    base = lg_dual(star(lam, n), n)
    if odd:
        base = (n,) + base
    return QuantumClass.basis(base, n, d)


# -- Gromov-Witten invariants ------------------------------------------------------

def gw_total_degree(n: int, d: int) -> int:
    """|lam| + |mu| + |nu| needed for a degree-d three-point invariant."""
    return n * (n + 1) // 2 + 2 * n * d


@dataclass(frozen=True)
class GWQuery:
    n: int
    a: Partition
    b: Partition
    c: Partition
    d: int

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_strict(getattr(self, name), self.n))
        if self.d < 0:
            raise InvalidDegreeError("degree must be nonnegative")

    @property
    def admissible(self) -> bool:
        return sum(self.a) + sum(self.b) + sum(self.c) == gw_total_degree(self.n, self.d)


def gw_invariant(query: GWQuery) -> int:
    """<tau_a, tau_b, tau_c>_d; raises for an inadmissible degree."""
    if not query.admissible:
        raise InadmissibleQueryError(
            f"|a|+|b|+|c| = {sum(query.a) + sum(query.b) + sum(query.c)} but degree "
            f"{query.d} needs {gw_total_degree(query.n, query.d)}"
        )
    prod = _quantum_product(query.a, query.b, query.n)
    return prod.get((dual(query.c, query.n), query.d), 0)


def gw(a, b, c, d: int, n: int) -> int:
    return gw_invariant(GWQuery(n, tuple(a), tuple(b), tuple(c), d))


def admissible_degree(a, b, c, n: int) -> int | None:
    """The unique d with an admissible query, or None."""
    excess = sum(a) + sum(b) + sum(c) - n * (n + 1) // 2
    if excess < 0 or excess % (2 * n):
        return None
    return excess // (2 * n)


def vanishing_bounds(lam, mu, nu, n: int) -> tuple[int, int]:
    """Closed interval for 2d outside of which <tau_lam, tau_mu, tau_nu>_d vanishes.

    lam is a nonzero element of D_n and mu, nu lie in D_(n-1).
    """
    lam = _check(lam, n)
    if not lam:
        raise InvalidIndexError("lam must be nonzero")
    mu, nu = as_strict(mu, n - 1), as_strict(nu, n - 1)
    delta = 1 if lam[0] == n else 0
    return len(mu) + len(nu) - n + delta, len(lam) + len(mu) + len(nu) - n


# -- presentation and Giambelli --------------------------------------------------------

def giambelli_check(lam, n: int) -> IdentityReport:
    """tau_lam minus its Pfaffian expansion along the last row, quantum products throughout."""
    lam = _check(lam, n)
    if len(lam) < 3:
        raise InvalidIndexError("Giambelli check needs length >= 3")
    r = 2 * ((len(lam) + 1) // 2)
    padded = lam + (0,) * (r - len(lam))
    last = padded[r - 1]
    rhs = QuantumClass(n)
    for j in range(r - 1):
        pair = tau(normalize_composition((padded[j], last)), n)
        rest = remove_parts(lam, {padded[j], last})
        term = pair * tau(rest, n)
        rhs = rhs + term if j % 2 == 0 else rhs - term
    return IdentityReport("quantum_giambelli", {"lam": lam, "n": n}, tau(lam, n) - rhs)


def presentation_check(n: int) -> list[IdentityReport]:
    """The ring relations, tau_n^2 = q, and the two-condition Giambelli formula."""
    if n < 2:
        raise ValueError("need n >= 2")
    t = [_special(i, n) for i in range(2 * n + 1)]
    reports = []
    for i in range(1, n):
        rel = t[i] * t[i]
        for k in range(1, i):
            rel = rel + t[i + k] * t[i - k] * (2 * (-1) ** k)
        rel = rel + t[2 * i] * (-1) ** i
        reports.append(IdentityReport("ring_relation", {"i": i, "n": n}, rel))
    reports.append(IdentityReport("quantum_relation", {"n": n},
                                  t[n] * t[n] - QuantumClass.q(n)))
    for i in range(2, n + 1):
        for j in range(1, i):
            rhs = t[i] * t[j]
            for k in range(1, j):
                rhs = rhs + t[i + k] * t[j - k] * (2 * (-1) ** k)
            rhs = rhs + t[i + j] * (-1) ** j
            reports.append(IdentityReport("two_row_giambelli", {"i": i, "j": j, "n": n},
                                          tau((i, j), n) - rhs))
    return reports
