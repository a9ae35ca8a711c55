"""Exact sparse polynomials over Z[1/2] and divided difference operators.

A :class:`GenPoly` in ``n`` variables is ``2**scale`` times a polynomial
with integer coefficients, stored as a dict from exponent tuples to ints.
The scale is normalized to be maximal, so every value has a single
canonical form.  :class:`SymPoly` holds a symmetric polynomial in the
monomial symmetric basis.

Symmetric polynomials are also handled in elementary coordinates: a
GenPoly whose ``i``-th "variable" stands for ``e_{i+1}(X)``.  The helpers
:func:`elementary_to_sym`, :func:`sym_to_elementary` and
:func:`elementary_to_x` convert between the three pictures.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import ArgumentOrderError, InvariantViolation
from .partitions import Partition, conjugate, normalize_composition, partitions

Exponent = tuple[int, ...]


def _two_adic(c: int) -> int:
    return (c & -c).bit_length() - 1


def _add_into(acc: dict, terms: Mapping, factor: int = 1) -> None:
    for m, c in terms.items():
        v = acc.get(m, 0) + factor * c
        if v:
            acc[m] = v
        else:
            acc.pop(m, None)


class GenPoly:
    """Sparse polynomial ``2**scale * sum(c * x**e)`` in ``nvars`` variables.

    Instances are immutable; do not modify ``terms``.
    """

    __slots__ = ("nvars", "terms", "scale", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | None = None,
                 scale: int = 0):
        clean = {}
        if terms:
            for m, c in terms.items():
                if c:
                    if len(m) != nvars:
                        raise ValueError(f"exponent {m} has wrong length for {nvars} variables")
                    clean[tuple(m)] = int(c)
        if not clean:
            scale = 0
        else:
            v = min(_two_adic(c) for c in clean.values())
            if v:
                clean = {m: c >> v for m, c in clean.items()}
                scale += v
        self.nvars = nvars
        self.terms = clean
        self.scale = scale
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> GenPoly:
        return cls(nvars)

    @classmethod
    def constant(cls, c, nvars: int) -> GenPoly:
        c = Fraction(c)
        den = c.denominator
        s = 0
        while den % 2 == 0:
            den //= 2
            s -= 1
        if den != 1:
            raise ValueError(f"{c} is not in Z[1/2]")
        return cls(nvars, {(0,) * nvars: c.numerator}, s)

    @classmethod
    def variable(cls, i: int, nvars: int) -> GenPoly:
        """The variable x_i, 1-based."""
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1) -> GenPoly:
        return cls(len(exps), {tuple(exps): coeff})

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return Fraction(self.terms.get(tuple(exps), 0)) * Fraction(2) ** self.scale

    def coefficients(self) -> dict[Exponent, Fraction]:
        f = Fraction(2) ** self.scale
        return {m: c * f for m, c in self.terms.items()}

    def integer_terms(self) -> dict[Exponent, int]:
        """Coefficients as ints; raises if the value is not integral."""
        if self.scale < 0:
            raise ValueError("polynomial has non-integral coefficients")
        return {m: c << self.scale for m, c in self.terms.items()}

    def is_integral(self) -> bool:
        return self.scale >= 0

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> GenPoly:
        if isinstance(other, GenPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return GenPoly.constant(other, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.terms:
            return other
        if not other.terms:
            return self
        s = min(self.scale, other.scale)
        acc = {m: c << (self.scale - s) for m, c in self.terms.items()}
        _add_into(acc, other.terms, 1 << (other.scale - s))
        return GenPoly(self.nvars, acc, s)

    __radd__ = __add__

    def __neg__(self):
        return GenPoly(self.nvars, {m: -c for m, c in self.terms.items()}, self.scale)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return GenPoly(self.nvars, {m: c * other for m, c in self.terms.items()},
                           self.scale)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict = defaultdict(int)
        n = self.nvars
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                acc[tuple(m1[i] + m2[i] for i in range(n))] += c1 * c2
        return GenPoly(n, acc, self.scale + other.scale)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = GenPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scaled(self, s: int) -> GenPoly:
        """Multiply by 2**s."""
        return GenPoly(self.nvars, self.terms, self.scale + s)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = GenPoly.constant(other, self.nvars)
        if not isinstance(other, GenPoly):
            return NotImplemented
        return (self.nvars == other.nvars and self.scale == other.scale
                and self.terms == other.terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, self.scale, frozenset(self.terms.items())))
        return self._hash

    # -- substitutions -----------------------------------------------------

    def map_exponents(self, fn) -> GenPoly:
        """Apply ``fn(exps) -> (new_exps, sign)`` termwise."""
        acc: dict = defaultdict(int)
        nv = None
        for m, c in self.terms.items():
            m2, sign = fn(m)
            nv = len(m2)
            acc[m2] += sign * c
        return GenPoly(self.nvars if nv is None else nv, acc, self.scale)

    def swap(self, i: int, j: int) -> GenPoly:
        """Interchange x_i and x_j (1-based)."""
        i -= 1
        j -= 1

        def fn(m):
            m = list(m)
            m[i], m[j] = m[j], m[i]
            return tuple(m), 1

        return self.map_exponents(fn)

    def shift(self, k: int) -> GenPoly:
        """Re-index into ``nvars + k`` variables by prepending k new ones."""
        pad = (0,) * k
        return GenPoly(self.nvars + k, {pad + m: c for m, c in self.terms.items()},
                       self.scale)

    # -- rendering ---------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Terms in graded lexicographic order, highest first."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def render(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        pieces = []
        for m, c in self.sorted_terms():
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(pieces)
        text = text[2:] if text.startswith("+ ") else "-" + text[2:]
        if self.scale:
            return f"2^{self.scale}*({text})"
        return text

    def json_terms(self) -> list:
        return [{"exp": list(m), "coeff": str(c)} for m, c in
                ((m, self.coefficient(m)) for m, _ in self.sorted_terms())]

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"GenPoly({self.nvars}, {self.render()})"


# -- divided differences -----------------------------------------------------

def _divide_by_binomial(f: GenPoly, b: int, a: int, c: int) -> GenPoly:
    """Exact quotient of f by (x_b - c * x_a), 0-based indices, c = +-1."""
    levels: dict[int, dict] = defaultdict(dict)
    for m, coef in f.terms.items():
        levels[m[b]][m] = coef
    quotient: dict = {}
    top = max(levels, default=0)
    for k in range(top, 0, -1):
        for m, coef in levels.pop(k, {}).items():
            q = list(m)
            q[b] -= 1
            q = tuple(q)
            quotient[q] = quotient.get(q, 0) + coef
            r = list(q)
            r[a] += 1
            r = tuple(r)
            lower = levels[k - 1]
            v = lower.get(r, 0) + c * coef
            if v:
                lower[r] = v
            else:
                lower.pop(r, None)
    if any(levels.values()):
        raise InvariantViolation("divided difference is not exact")
    return GenPoly(f.nvars, quotient, f.scale)


def divided_difference(i: int, f: GenPoly) -> GenPoly:
    """(f - s_i f) / (x_{i+1} - x_i), where s_i swaps x_i and x_{i+1}."""
    if not 1 <= i < f.nvars:
        raise ValueError(f"need 1 <= i < {f.nvars}, got {i}")
    return _divide_by_binomial(f - f.swap(i, i + 1), i, i - 1, 1)


def box_reflection(f: GenPoly) -> GenPoly:
    """Send (x1, x2) to (-x2, -x1)."""
    def fn(m):
        return (m[1], m[0]) + m[2:], (-1) ** (m[0] + m[1])

    return f.map_exponents(fn)


def box_difference(f: GenPoly) -> GenPoly:
    """(f - s f) / (x1 + x2) for the reflection (x1, x2) -> (-x2, -x1)."""
    if f.nvars < 2:
        raise ValueError("box difference needs at least two variables")
    return _divide_by_binomial(f - box_reflection(f), 1, 0, -1)


def substitute_negate_first(f: GenPoly) -> GenPoly:
    """f(-x1, x2, ..., xn)."""
    return f.map_exponents(lambda m: (m, -1 if m[0] % 2 else 1))


def remove_leading_vars(f: GenPoly, k: int) -> dict[Exponent, GenPoly]:
    """Split f as sum over x1..xk monomials of polynomials in x_{k+1}..x_n.

    Returns a dict from the leading exponent tuple to the coefficient
    polynomial in ``n - k`` re-indexed variables.
    """
    if not 0 <= k <= f.nvars:
        raise ValueError(f"cannot split {k} of {f.nvars} variables")
    parts: dict = defaultdict(dict)
    for m, c in f.terms.items():
        parts[m[:k]][m[k:]] = c
    return {lead: GenPoly(f.nvars - k, t, f.scale) for lead, t in parts.items()}


def monomial_pair(r: int, s: int) -> GenPoly:
    """Monomial symmetric function m_{r,s}(x1, x2)."""
    if r < s:
        raise ArgumentOrderError(f"monomial_pair needs r >= s, got ({r}, {s})")
    if r == s:
        return GenPoly(2, {(r, r): 1})
    return GenPoly(2, {(r, s): 1, (s, r): 1})


# -- symmetric polynomials ---------------------------------------------------

def _distinct_permutations(items: Sequence[int]):
    counts: dict = defaultdict(int)
    for x in items:
        counts[x] += 1
    keys = sorted(counts)
    n = len(items)
    buf = [0] * n

    def rec(pos):
        if pos == n:
            yield tuple(buf)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                buf[pos] = k
                yield from rec(pos + 1)
                counts[k] += 1

    yield from rec(0)


class SymPoly:
    """Symmetric polynomial ``sum(c_mu * m_mu(X))`` in ``nvars`` variables."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs: Mapping[Partition, int] | None = None):
        clean = {}
        for mu, c in (coeffs or {}).items():
            mu = normalize_composition(mu)
            if len(mu) > nvars:
                if c:
                    raise ValueError(f"m_{mu} vanishes in {nvars} variables")
                continue
            if c:
                clean[mu] = clean.get(mu, 0) + int(c)
        self.nvars = nvars
        self.coeffs = {mu: c for mu, c in clean.items() if c}

    @classmethod
    def from_genpoly(cls, f: GenPoly) -> SymPoly:
        if not f.is_integral():
            raise ValueError("SymPoly holds integer coefficients only")
        terms = f.integer_terms()
        coeffs = {}
        seen = set()
        for m, c in terms.items():
            if m in seen:
                continue
            orbit = list(_distinct_permutations(m))
            for p in orbit:
                if terms.get(p) != c:
                    raise ValueError(
                        f"not symmetric: x^{m} has coefficient {c} but x^{p} has "
                        f"{terms.get(p, 0)}"
                    )
                seen.add(p)
            coeffs[normalize_composition(sorted(m, reverse=True))] = c
        return cls(f.nvars, coeffs)

    def to_genpoly(self) -> GenPoly:
        terms = {}
        for mu, c in self.coeffs.items():
            padded = tuple(mu) + (0,) * (self.nvars - len(mu))
            for p in _distinct_permutations(padded):
                terms[p] = c
        return GenPoly(self.nvars, terms)

    def is_zero(self):
        return not self.coeffs

    def degree(self) -> int:
        return max((sum(mu) for mu in self.coeffs), default=-1)

    def homogeneous_part(self, m: int) -> SymPoly:
        return SymPoly(self.nvars, {mu: c for mu, c in self.coeffs.items() if sum(mu) == m})

    def __add__(self, other):
        if not isinstance(other, SymPoly) or other.nvars != self.nvars:
            return NotImplemented
        acc = dict(self.coeffs)
        _add_into(acc, other.coeffs)
        return SymPoly(self.nvars, acc)

    def __neg__(self):
        return SymPoly(self.nvars, {mu: -c for mu, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SymPoly(self.nvars, {mu: c * other for mu, c in self.coeffs.items()})
        if not isinstance(other, SymPoly) or other.nvars != self.nvars:
            return NotImplemented
        prod = elementary_to_x(
            sym_to_elementary(self) * sym_to_elementary(other), self.nvars
        )
        return SymPoly.from_genpoly(prod)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = SymPoly(self.nvars, {(): other})
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.nvars, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "SymPoly(0)"
        body = " + ".join(
            f"{c}*m{list(mu)}" for mu, c in sorted(self.coeffs.items(), reverse=True)
        )
        return f"SymPoly({self.nvars}, {body})"


def elementary(i: int, n: int) -> SymPoly:
    """e_i in n variables."""
    if i < 0 or i > n:
        return SymPoly(n)
    return SymPoly(n, {(1,) * i: 1})


# -- elementary coordinates --------------------------------------------------

def elementary_exponent(lam: Iterable[int], n: int) -> Exponent:
    """Exponent vector of e_lam in the elementary-coordinate ring."""
    e = [0] * n
    for p in lam:
        if p:
            e[p - 1] += 1
    return tuple(e)


def exponent_partition(exps: Sequence[int]) -> Partition:
    """Inverse of :func:`elementary_exponent`."""
    out = []
    for i in range(len(exps), 0, -1):
        out.extend([i] * exps[i - 1])
    return tuple(out)


def elementary_generator(i: int, n: int) -> GenPoly:
    """e_i as an element of the elementary-coordinate ring (0 for i > n)."""
    if i == 0:
        return GenPoly.constant(1, n)
    if i < 0 or i > n:
        return GenPoly.zero(n)
    return GenPoly(n, {elementary_exponent((i,), n): 1})


@lru_cache(maxsize=None)
def _zero_one_count(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    """Number of 0-1 matrices with the given row and column sums.

    ``cols`` is kept sorted decreasing since columns are interchangeable.
    """
    if not rows:
        return 1 if not any(cols) else 0
    r, rest = rows[0], rows[1:]
    groups: dict = defaultdict(int)
    for v in cols:
        if v:
            groups[v] += 1
    values = sorted(groups, reverse=True)
    zeros = len(cols) - sum(groups.values())
    total = 0

    def rec(idx, need, ways, new_cols):
        nonlocal total
        if idx == len(values):
            if need == 0:
                state = tuple(sorted(new_cols + [0] * zeros, reverse=True))
                total += ways * _zero_one_count(rest, state)
            return
        v, mult = values[idx], groups[values[idx]]
        for t in range(min(mult, need) + 1):
            rec(idx + 1, need - t, ways * comb(mult, t),
                new_cols + [v - 1] * t + [v] * (mult - t))

    rec(0, r, 1, [])
    return total


@lru_cache(maxsize=None)
def _elementary_monomial_in_m(lam: Partition, n: int) -> dict:
    m = sum(lam)
    out = {}
    for mu in partitions(m, max_part=len(lam), max_len=n):
        cols = tuple(sorted(list(mu) + [0] * (n - len(mu)), reverse=True))
        c = _zero_one_count(tuple(lam), cols)
        if c:
            out[mu] = c
    return out


def elementary_to_sym(g: GenPoly, n: int | None = None) -> SymPoly:
    """Convert from elementary coordinates to the monomial symmetric basis."""
    n = g.nvars if n is None else n
    if not g.is_integral():
        raise ValueError("need integral coefficients")
    acc: dict = {}
    for exps, c in g.integer_terms().items():
        _add_into(acc, _elementary_monomial_in_m(exponent_partition(exps), n), c)
    return SymPoly(n, acc)


def sym_to_elementary(f: SymPoly) -> GenPoly:
    """Write a symmetric polynomial as a polynomial in e_1, ..., e_n."""
    n = f.nvars
    rem = dict(f.coeffs)
    out = {}
    while rem:
        mu = max(rem)
        c = rem[mu]
        kappa = conjugate(mu)
        out[elementary_exponent(kappa, n)] = c
        _add_into(rem, _elementary_monomial_in_m(kappa, n), -c)
        if rem.get(mu):
            raise InvariantViolation(f"symmetric reduction stalled at m_{mu}")
    return GenPoly(n, out)


@lru_cache(maxsize=None)
def _elementary_monomial_x(exps: Exponent) -> GenPoly:
    n = len(exps)
    top = max((i for i, e in enumerate(exps) if e), default=-1)
    if top < 0:
        return GenPoly.constant(1, n)
    rest = list(exps)
    rest[top] -= 1
    return _elementary_monomial_x(tuple(rest)) * elementary(top + 1, n).to_genpoly()


def elementary_to_x(g: GenPoly, n: int | None = None) -> GenPoly:
    """Expand a polynomial in e_1..e_n into a polynomial in x_1..x_n."""
    n = g.nvars if n is None else n
    if g.nvars != n:
        raise ValueError("elementary coordinates must match the variable count")
    acc: dict = {}
    for exps, c in g.terms.items():
        _add_into(acc, _elementary_monomial_x(exps).integer_terms(), c)
    return GenPoly(n, acc, g.scale)
