"""Q-tilde and P-tilde polynomials and their structure constants.

Everything is computed in elementary coordinates (polynomials in
e_1, ..., e_n, see :mod:`ogqh.polyengine`) where ``Q~_i = e_i``.  Products
are cheap there and the Q-tilde basis is unitriangular against
e-monomials, so basis expansion is a back substitution.  The
unitriangularity is re-checked for every basis element used; a general
fraction-free solve in monomial symmetric coordinates is available as
``method="elimination"`` and is the fallback if a check ever fails.
"""

from __future__ import annotations

import json
import logging
import os
import threading
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from .errors import InvalidIndexError, InvariantViolation
from .linalg import solve_exact
from .partitions import (
    Composition,
    Partition,
    as_partition,
    b_set,
    bounded_partitions,
    format_partition,
    has_negative,
    horizontal_strips,
    is_strict,
    normalize_composition,
    parse_partition,
    partitions,
)
from .polyengine import (
    GenPoly,
    SymPoly,
    _add_into,
    elementary_exponent,
    elementary_generator,
    elementary_to_sym,
    elementary_to_x,
    exponent_partition,
    remove_leading_vars,
    sym_to_elementary,
)

log = logging.getLogger(__name__)

#: How ``Q~_{i,j}`` is read when ``i < j``.  "verbatim" applies the two-index
#: formula as written; "antisymmetric" uses ``-Q~_{j,i}`` instead.
PAIR_CONVENTION = "verbatim"


# -- construction ------------------------------------------------------------

@lru_cache(maxsize=None)
def _pair_e(i: int, j: int, n: int) -> GenPoly:
    if i < 0 or j < 0:
        return GenPoly.zero(n)
    if i < j and PAIR_CONVENTION == "antisymmetric":
        return -_pair_e(j, i, n)
    # the k = j term carries Q~_0 = 1, so j = 0 gives Q~_i
    acc = elementary_generator(i, n) * elementary_generator(j, n)
    for k in range(1, j + 1):
        acc = acc + 2 * (-1) ** k * (elementary_generator(i + k, n)
                                     * elementary_generator(j - k, n))
    return acc


@lru_cache(maxsize=None)
def _qtilde_e(nu: Composition, n: int) -> GenPoly:
    if has_negative(nu):
        return GenPoly.zero(n)
    ell = len(nu)
    if ell == 0:
        return GenPoly.constant(1, n)
    if ell == 1:
        return elementary_generator(nu[0], n)
    if ell == 2:
        return _pair_e(nu[0], nu[1], n)
    g = ell + (ell % 2)
    padded = nu + (0,) * (g - ell)
    last = padded[g - 1]
    acc = GenPoly.zero(n)
    for j in range(g - 1):
        pair = _pair_e(padded[j], last, n)
        if pair.is_zero():
            continue
        rest = normalize_composition(padded[:j] + padded[j + 1:g - 1])
        term = pair * _qtilde_e(rest, n)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def qtilde_elementary(nu: Sequence[int], n: int) -> GenPoly:
    """Q~_nu(X) in elementary coordinates, for any composition nu."""
    return _qtilde_e(normalize_composition(nu), n)


def pfaffian_expansion(nu: Sequence[int], n: int, g: int) -> GenPoly:
    """Expand Q~_nu along position g (even, at least len(nu)) once.

    Gives the same polynomial as :func:`qtilde_elementary` for every valid
    padding; exposed so tests can check padding independence.
    """
    nu = normalize_composition(nu)
    if g % 2 or g < len(nu) or g < 2:
        raise ValueError(f"padding {g} must be even and >= {max(len(nu), 2)}")
    if has_negative(nu):
        return GenPoly.zero(n)
    padded = nu + (0,) * (g - len(nu))
    acc = GenPoly.zero(n)
    for j in range(g - 1):
        rest = normalize_composition(padded[:j] + padded[j + 1:g - 1])
        term = _pair_e(padded[j], padded[g - 1], n) * _qtilde_e(rest, n)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def qtilde(nu: Sequence[int], n: int) -> SymPoly:
    """Q~_nu(X) in n variables, monomial symmetric coordinates."""
    return elementary_to_sym(qtilde_elementary(nu, n), n)


@lru_cache(maxsize=None)
def _qtilde_x(nu: Composition, n: int) -> GenPoly:
    return elementary_to_x(_qtilde_e(nu, n), n)


def qtilde_x(nu: Sequence[int], n: int) -> GenPoly:
    """Q~_nu(X) as an explicit polynomial in x_1, ..., x_n."""
    return _qtilde_x(normalize_composition(nu), n)


def ptilde(nu: Sequence[int], n: int) -> GenPoly:
    """P~_nu(X) = 2^(-l) Q~_nu(X), l the number of nonzero parts."""
    nu = normalize_composition(nu)
    return qtilde_x(nu, n).scaled(-sum(1 for p in nu if p))


# -- basis expansion -----------------------------------------------------------

@dataclass(frozen=True)
class QTildeVector:
    """Finitely supported combination ``sum(c_nu * Q~_nu)`` over E_n."""

    n: int
    coeffs: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", {k: v for k, v in self.coeffs.items() if v})

    def __getitem__(self, nu):
        return self.coeffs.get(tuple(nu), 0)

    def items(self):
        return sorted(self.coeffs.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def to_elementary(self) -> GenPoly:
        acc = GenPoly.zero(self.n)
        for nu, c in self.coeffs.items():
            acc = acc + c * _qtilde_e(nu, self.n)
        return acc

    def to_sympoly(self) -> SymPoly:
        return elementary_to_sym(self.to_elementary(), self.n)

    def __eq__(self, other):
        if isinstance(other, Mapping):
            return self.coeffs == {tuple(k): v for k, v in other.items() if v}
        if not isinstance(other, QTildeVector):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))


@lru_cache(maxsize=None)
def _basis_element(kappa: Partition, n: int) -> dict:
    """Q~_kappa in elementary coordinates, checked to be e_kappa + higher terms."""
    poly = _qtilde_e(kappa, n)
    terms = poly.integer_terms()
    lead = elementary_exponent(kappa, n)
    if terms.get(lead) != 1 or any(
        exponent_partition(m) < kappa for m in terms if sum(exponent_partition(m)) == sum(kappa)
    ):
        raise InvariantViolation(f"Q~_{kappa} is not unitriangular over e-monomials")
    return terms


def _expand_triangular(g: GenPoly, n: int) -> dict:
    rem = dict(g.integer_terms())
    keys = {m: exponent_partition(m) for m in rem}
    out = {}
    while rem:
        m = min(rem, key=lambda e: (sum(keys[e]), keys[e]))
        kappa = keys[m]
        c = rem[m]
        basis = _basis_element(kappa, n)
        for e in basis:
            if e not in keys:
                keys[e] = exponent_partition(e)
        _add_into(rem, basis, -c)
        out[kappa] = c
    return out


def _expand_elimination(f: SymPoly, n: int) -> dict:
    out = {}
    for m in sorted({sum(mu) for mu in f.coeffs}):
        basis = bounded_partitions(n, m)
        rows = list(partitions(m, max_len=n))
        index = {mu: i for i, mu in enumerate(rows)}
        if len(rows) != len(basis):
            raise InvariantViolation("basis size mismatch in degree %d" % m)
        matrix = [[0] * len(basis) for _ in rows]
        for col, kappa in enumerate(basis):
            for mu, c in qtilde(kappa, n).coeffs.items():
                matrix[index[mu]][col] = c
        part = f.homogeneous_part(m)
        rhs = [[part.coeffs.get(mu, 0)] for mu in rows]
        sol = solve_exact(matrix, rhs)
        for kappa, (x,) in zip(basis, sol):
            if x.denominator != 1:
                raise InvariantViolation(f"non-integral Q~ coefficient {x} at {kappa}")
            if x:
                out[kappa] = int(x)
    return out


def expand_elementary(g: GenPoly, n: int) -> QTildeVector:
    """Expand a polynomial given in elementary coordinates in the Q~ basis."""
    try:
        return QTildeVector(n, _expand_triangular(g, n))
    except InvariantViolation:
        log.warning("triangular expansion failed; falling back to elimination")
        return QTildeVector(n, _expand_elimination(elementary_to_sym(g, n), n))


def expand(f: SymPoly | GenPoly, n: int | None = None,
           method: str = "triangular") -> QTildeVector:
    """Unique coefficients c_nu, nu in E_n, with f = sum c_nu Q~_nu(X).

    ``f`` is a :class:`SymPoly` or a polynomial in x_1..x_n.  ``method`` is
    "triangular" (back substitution in elementary coordinates) or
    "elimination" (fraction-free solve in monomial symmetric coordinates).
    """
    if isinstance(f, GenPoly):
        f = SymPoly.from_genpoly(f)
    n = f.nvars if n is None else n
    if n != f.nvars:
        raise ValueError("variable count mismatch")
    if method == "elimination":
        return QTildeVector(n, _expand_elimination(f, n))
    if method != "triangular":
        raise ValueError(f"unknown method {method!r}")
    return expand_elementary(sym_to_elementary(f), n)


def clear_caches() -> None:
    """Drop every in-memory memo table (needed after changing PAIR_CONVENTION)."""
    for fn in (_pair_e, _qtilde_e, _qtilde_x, _basis_element, _e_coeffs):
        fn.cache_clear()
    _disk._loaded.clear()


# -- structure constants -------------------------------------------------------

class _DiskCache:
    """Append-only newline-delimited JSON store of e-coefficient tables."""

    filename = "e_coeffs.ndjson"

    def __init__(self):
        self._lock = threading.Lock()
        self._loaded: dict[str, dict] = {}

    def _table(self, directory: str) -> dict:
        table = self._loaded.get(directory)
        if table is None:
            table = {}
            path = Path(directory) / self.filename
            if path.exists():
                with path.open() as fh:
                    for line in fh:
                        if not line.strip():
                            continue
                        rec = json.loads(line)
                        key = (rec["n"], tuple(rec["lhs"]), tuple(rec["rhs"]))
                        table[key] = {parse_partition(k): v for k, v in rec["terms"].items()}
            self._loaded[directory] = table
        return table

    def get(self, n, lhs, rhs):
        directory = os.environ.get("OGQ_CACHE_DIR")
        if not directory:
            return None
        with self._lock:
            return self._table(directory).get((n, lhs, rhs))

    def put(self, n, lhs, rhs, terms):
        directory = os.environ.get("OGQ_CACHE_DIR")
        if not directory:
            return
        with self._lock:
            table = self._table(directory)
            if (n, lhs, rhs) in table:
                return
            table[(n, lhs, rhs)] = dict(terms)
            Path(directory).mkdir(parents=True, exist_ok=True)
            rec = {"n": n, "lhs": list(lhs), "rhs": list(rhs),
                   "terms": {format_partition(k): v for k, v in sorted(terms.items())}}
            with (Path(directory) / self.filename).open("a") as fh:
                fh.write(json.dumps(rec) + "\n")


_disk = _DiskCache()


def _check_bounded(lam, n) -> Partition:
    lam = as_partition(lam)
    if lam and lam[0] > n:
        raise InvalidIndexError(f"{lam} is not in E_{n}")
    return lam


@lru_cache(maxsize=None)
def _e_coeffs(lam: Partition, mu: Partition, n: int) -> dict:
    cached = _disk.get(n, lam, mu)
    if cached is not None:
        return cached
    prod = _qtilde_e(lam, n) * _qtilde_e(mu, n)
    terms = expand_elementary(prod, n).coeffs
    _disk.put(n, lam, mu, terms)
    return terms


def e_coeffs(lam: Sequence[int], mu: Sequence[int], n: int) -> dict[Partition, int]:
    """Coefficients e(lam, mu; nu) of Q~_lam Q~_mu in the Q~ basis of E_n."""
    lam, mu = _check_bounded(lam, n), _check_bounded(mu, n)
    if lam < mu:
        lam, mu = mu, lam
    return dict(_e_coeffs(lam, mu, n))


def e_to_f(e: int, lam, mu, nu) -> int:
    """Convert e(lam, mu; nu) to f(lam, mu; nu) = 2^(l(nu)-l(lam)-l(mu)) e."""
    shift = len(nu) - len(lam) - len(mu)
    if shift >= 0:
        return e << shift
    q, r = divmod(e, 1 << -shift)
    if r:
        raise InvariantViolation(f"f({lam}, {mu}; {nu}) = {e}/2^{-shift} is not an integer")
    return q


def f_coeff(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Structure constant f(lam, mu; nu) of the P~ basis (may be negative)."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    n = max(lam[:1] + mu[:1] + nu[:1] + (1,))
    return f_coeff_in(lam, mu, nu, n)


def f_coeff_in(lam, mu, nu, n: int) -> int:
    """f(lam, mu; nu) computed with exactly n variables."""
    nu = _check_bounded(nu, n)
    e = e_coeffs(lam, mu, n).get(nu, 0)
    return e_to_f(e, lam, mu, nu)


def f_coeffs(lam: Sequence[int], mu: Sequence[int], n: int) -> dict[Partition, int]:
    """All nonzero f(lam, mu; nu), nu in E_n."""
    return {nu: e_to_f(e, lam, mu, nu) for nu, e in e_coeffs(lam, mu, n).items()}


class StructureTable:
    """Lazily filled table (lam, mu) -> {nu: e(lam, mu; nu)} for fixed n."""

    def __init__(self, n: int):
        self.n = n
        self._rows: dict = {}

    def __getitem__(self, key) -> dict[Partition, int]:
        lam, mu = (tuple(k) for k in key)
        if lam < mu:
            lam, mu = mu, lam
        row = self._rows.get((lam, mu))
        if row is None:
            row = self._rows[(lam, mu)] = e_coeffs(lam, mu, self.n)
        return row

    def __len__(self):
        return len(self._rows)


# -- Pieri ---------------------------------------------------------------------

def pieri_expand(lam: Sequence[int], k: int, n: int | None = None) -> dict[Partition, int]:
    """P~_lam P~_k = sum 2^N'(lam, mu) P~_mu over horizontal strips mu/lam."""
    lam = normalize_composition(lam)
    if not is_strict(lam):
        raise InvalidIndexError(f"Pieri rule needs a strict partition, got {lam}")
    if n is not None and lam and lam[0] > n:
        raise InvalidIndexError(f"{lam} is not in D_{n}")
    cap = (lam[0] if lam else 0) + k
    return {mu: 1 << exp for mu, exp in horizontal_strips(lam, k, cap)}


# -- first variable split ------------------------------------------------------

def first_variable_expansion(lam: Sequence[int], n: int) -> dict[int, QTildeVector]:
    """Per power of x1, the X' = (x2..xn) part of Q~_lam(X), as Q~ vectors.

    Built from the sets B(lam, k): the x1^k coefficient is the sum of
    Q~_mu(X') over mu in B(lam, k).
    """
    lam = as_partition(lam)
    if n < 2:
        raise ValueError("need at least two variables")
    out = {}
    for k in range(len(lam) + 1):
        acc = GenPoly.zero(n - 1)
        for mu in b_set(lam, k):
            acc = acc + _qtilde_e(mu, n - 1)
        vec = expand_elementary(acc, n - 1)
        if vec.coeffs:
            out[k] = vec
    return out


def first_variable_split(lam: Sequence[int], n: int) -> dict[int, QTildeVector]:
    """Direct route: substitute and collect powers of x1 in Q~_lam(X)."""
    out = {}
    for lead, poly in remove_leading_vars(qtilde_x(lam, n), 1).items():
        out[lead[0]] = expand(SymPoly.from_genpoly(poly), n - 1)
    return out
