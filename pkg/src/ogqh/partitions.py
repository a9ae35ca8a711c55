"""Partitions, strict partitions and compositions.

All three are plain tuples of ints.  A partition is weakly decreasing with
positive parts, a strict partition is strictly decreasing, and a composition
is any finite sequence with trailing zeros removed.  The empty tuple is the
zero partition ``(0)``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from itertools import combinations

from .errors import InvalidIndexError

Partition = tuple[int, ...]
Composition = tuple[int, ...]


def normalize_composition(parts: Iterable[int]) -> Composition:
    """Drop trailing zeros."""
    c = list(parts)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def has_negative(comp: Sequence[int]) -> bool:
    return any(p < 0 for p in comp)


def is_partition(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def is_strict(parts: Sequence[int]) -> bool:
    return all(p > 0 for p in parts) and all(
        parts[i] > parts[i + 1] for i in range(len(parts) - 1)
    )


def as_partition(parts: Iterable[int]) -> Partition:
    p = normalize_composition(parts)
    if not is_partition(p):
        raise InvalidIndexError(f"{p} is not a partition")
    return p


def as_strict(parts: Iterable[int], n: int | None = None) -> Partition:
    """Validate a strict partition, optionally as a member of D_n."""
    p = normalize_composition(parts)
    if not is_strict(p):
        raise InvalidIndexError(f"{p} is not a strict partition")
    if n is not None and p and p[0] > n:
        raise InvalidIndexError(f"{p} has a part larger than n={n}")
    return p


def in_strict_set(parts: Sequence[int], n: int) -> bool:
    """Membership in D_n."""
    return is_strict(parts) and (not parts or parts[0] <= n)


def weight(parts: Sequence[int]) -> int:
    return sum(parts)


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def rho(n: int) -> Partition:
    """The staircase (n, n-1, ..., 1)."""
    return tuple(range(n, 0, -1))


# -- enumeration -----------------------------------------------------------

def partitions(m: int, max_part: int | None = None,
               max_len: int | None = None) -> Iterator[Partition]:
    """Partitions of m in reverse lexicographic order."""
    if max_part is None:
        max_part = m
    if max_len is None:
        max_len = m

    def rec(rem, cap, slots):
        if rem == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rem, cap), 0, -1):
            for tail in rec(rem - first, first, slots - 1):
                yield (first,) + tail

    yield from rec(m, max_part, max_len)


def bounded_partitions(n: int, m: int) -> list[Partition]:
    """Elements of E_n (partitions with largest part <= n) of weight m."""
    return list(partitions(m, max_part=n))


def strict_partitions(n: int) -> list[Partition]:
    """All of D_n, sorted by weight then reverse lex."""
    out = []
    for k in range(n + 1):
        for parts in combinations(range(n, 0, -1), k):
            out.append(tuple(parts))
    out.sort(key=lambda p: (sum(p), [-x for x in p]))
    return out


# -- involutions -----------------------------------------------------------

def dual(lam: Sequence[int], n: int) -> Partition:
    """Complement of the parts of lam in {1, ..., n}."""
    if not in_strict_set(lam, n):
        raise InvalidIndexError(f"{tuple(lam)} is not in D_{n}")
    used = set(lam)
    return tuple(i for i in range(n, 0, -1) if i not in used)


def star(lam: Sequence[int], n: int) -> Partition:
    """(n - lam_l, ..., n - lam_1) with zero entries dropped."""
    if not in_strict_set(lam, n):
        raise InvalidIndexError(f"{tuple(lam)} is not in D_{n}")
    return tuple(n - p for p in reversed(lam) if n - p > 0)


def lg_dual(lam: Sequence[int], n: int) -> Partition:
    """Duality involution on D_{n-1}: complement in {1, ..., n-1}."""
    if not in_strict_set(lam, n - 1):
        raise InvalidIndexError(f"{tuple(lam)} is not in D_{n - 1}")
    return dual(lam, n - 1)


def remove_parts(lam: Sequence[int], parts: Iterable[int]) -> Partition:
    """lam minus mu for strict partitions: the parts of lam not among ``parts``."""
    drop = set(parts)
    return tuple(p for p in lam if p not in drop)


def remove_positions(comp: Sequence[int], positions: Iterable[int]) -> Composition:
    """Delete entries by 0-based position and renormalize."""
    drop = set(positions)
    return normalize_composition(p for i, p in enumerate(comp) if i not in drop)


# -- strips ----------------------------------------------------------------

def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def skew_components(lam: Sequence[int], mu: Sequence[int]) -> int:
    """Number of connected components of mu/lam, boxes joined by edge or vertex."""
    boxes = []
    for r, m in enumerate(mu):
        lo = lam[r] if r < len(lam) else 0
        boxes.extend((r, c) for c in range(lo, m))
    index = {b: i for i, b in enumerate(boxes)}
    parent = list(range(len(boxes)))
    for (r, c), i in index.items():
        for dr in (0, 1):
            for dc in (-1, 0, 1):
                if dr == 0 and dc != 1:
                    continue
                j = index.get((r + dr, c + dc))
                if j is not None:
                    a, b = _find(parent, i), _find(parent, j)
                    if a != b:
                        parent[a] = b
    return len({_find(parent, i) for i in range(len(boxes))})


def strip_exponent(lam: Sequence[int], mu: Sequence[int]) -> int:
    """N'(lam, mu): one less than the number of components, 0 for an empty strip."""
    comps = skew_components(lam, mu)
    return comps - 1 if comps else 0


def horizontal_strips(lam: Sequence[int], k: int, cap: int) -> list[tuple[Partition, int]]:
    """All mu with mu/lam a horizontal strip of size k and mu_1 <= cap.

    Each mu is paired with its strip exponent N'(lam, mu).
    """
    lam = as_partition(lam)
    rows = list(lam) + [0]
    out = []

    def rec(i, rem, acc):
        if i == len(rows):
            if rem == 0:
                out.append(normalize_composition(acc))
            return
        hi = cap if i == 0 else rows[i - 1]
        for v in range(rows[i], min(hi, rows[i] + rem) + 1):
            rec(i + 1, rem - (v - rows[i]), acc + [v])

    if k >= 0:
        rec(0, k, [])
    out.sort(reverse=True)
    return [(mu, strip_exponent(lam, mu)) for mu in out]


# -- composition sets ------------------------------------------------------

def c_set(lam: Sequence[int], a: int, b: int) -> list[Composition]:
    """Compositions mu with lam_i - mu_i in {0,1,2}, a ones and b twos.

    Entries may go negative; consumers treat those as zero polynomials.
    """
    ell = len(lam)
    out = []
    for ones in combinations(range(ell), a):
        rest = [i for i in range(ell) if i not in ones]
        for twos in combinations(rest, b):
            mu = list(lam)
            for i in ones:
                mu[i] -= 1
            for i in twos:
                mu[i] -= 2
            out.append(normalize_composition(mu))
    return sorted(out, reverse=True)


def b_set(lam: Sequence[int], k: int) -> list[Composition]:
    """Compositions mu with |lam| - |mu| = k and lam_i - mu_i in {0, 1}."""
    return c_set(lam, k, 0)


# -- text syntax -----------------------------------------------------------

def parse_partition(text: str) -> Partition:
    """Parse the comma-separated syntax; the empty string is (0)."""
    text = text.strip()
    if not text or text == "0":
        return ()
    try:
        parts = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise InvalidIndexError(f"cannot parse partition {text!r}") from None
    if any(p <= 0 for p in parts):
        raise InvalidIndexError(f"parts must be positive in {text!r}")
    return parts


def format_partition(parts: Sequence[int]) -> str:
    return ",".join(str(p) for p in parts)
