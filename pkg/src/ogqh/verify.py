"""Verification sweeps used by the ``verify`` and ``table`` commands.

A sweep is a list of ``(function, args)`` jobs, each returning an
IdentityReport (or a list of them), so sweeps can be farmed out to a
process pool without sharing any state.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

from . import identities
from .lgbridge import (
    LGQuery,
    _IntResidual,
    lg_admissible_degree,
    lg_gw,
    lg_gw_odd,
    oglg_check,
    ogsymmetry_check,
)
from .ogring import (
    QuantumClass,
    admissible_degree,
    classical_product,
    dual,
    giambelli_check,
    gw,
    presentation_check,
    quantum_pieri,
    quantum_product,
    rho_product,
)
from .partitions import rho, strict_partitions
from .report import IdentityReport


def pieri_vs_product(lam, k, n) -> IdentityReport:
    res = quantum_pieri(lam, k, n) - quantum_product(lam, (k,) if k else (), n)
    return IdentityReport("quantum_pieri", {"lam": lam, "k": k, "n": n}, res)


def rho_vs_product(lam, n) -> IdentityReport:
    res = rho_product(lam, n) - quantum_product(lam, rho(n - 1), n)
    return IdentityReport("rho_product", {"lam": lam, "n": n}, res)


def duality_check(lam, n) -> IdentityReport:
    """Top-degree coefficient of tau_lam tau_mu is 1 exactly when mu is the dual."""
    top = rho(n)
    bad = QuantumClass(n)
    for mu in strict_partitions(n):
        got = classical_product(lam, mu, n).get(top, 0) if sum(lam) + sum(mu) == sum(top) else 0
        want = 1 if mu == dual(lam, n) else 0
        if got != want:
            bad = bad + QuantumClass.basis(mu, n) * (got - want)
    return IdentityReport("poincare_duality", {"lam": lam, "n": n}, bad)


def ring_jobs(n_max: int) -> list:
    jobs = []
    for n in range(2, n_max + 1):
        jobs.append((presentation_check, (n,)))
        for lam in strict_partitions(n):
            if len(lam) >= 3:
                jobs.append((giambelli_check, (lam, n)))
            for k in range(n + 1):
                jobs.append((pieri_vs_product, (lam, k, n)))
            jobs.append((rho_vs_product, (lam, n)))
            jobs.append((duality_check, (lam, n)))
    return jobs


def lg_route_check(a, b, c, e, n) -> IdentityReport:
    value = lg_gw(LGQuery(n, a, b, c, e))
    diff = 0
    for perm in ((b, a, c), (c, b, a), (a, c, b), (b, c, a), (c, a, b)):
        diff += abs(lg_gw(LGQuery(n, *perm, e)) - value)
    if e % 2:
        diff += abs(lg_gw_odd(a, b, c, e, n) - value)
    if value < 0:
        diff += abs(value)
    return IdentityReport("lg_routes", {"a": a, "b": b, "c": c, "e": e, "n": n},
                          _IntResidual(diff))


def oglg_tuples(n: int):
    """All admissible (lam, mu, nu, d) with lam in D_n and mu, nu in D_(n-1)."""
    small = strict_partitions(n - 1)
    for lam in strict_partitions(n):
        for mu in small:
            for nu in small:
                d = admissible_degree(lam, mu, nu, n)
                if d is not None:
                    yield lam, mu, nu, d


def _oglg_bundle(lam, mu, nu, d, n) -> list[IdentityReport]:
    out = [oglg_check(lam, mu, nu, d, n)]
    e = len(lam) - 2 * d - 1
    if lam and e >= 0:
        out.append(ogsymmetry_check(lam, mu, nu, d, e, n))
    return out


def lg_jobs(n_max: int) -> list:
    jobs = []
    for n in range(2, n_max + 1):
        jobs += [(_oglg_bundle, (*t, n)) for t in oglg_tuples(n)]
        small = strict_partitions(n - 1)
        for a in small:
            for b in small:
                for c in small:
                    e = lg_admissible_degree(a, b, c, n)
                    if e is not None:
                        jobs.append((lg_route_check, (a, b, c, e, n)))
    return jobs


SUITES = {
    "identities": identities.identity_suite,
    "ring": ring_jobs,
    "lg": lg_jobs,
}


def _call(job):
    fn, args = job
    out = fn(*args)
    return out if isinstance(out, list) else [out]


def run(jobs, workers: int = 1) -> list[IdentityReport]:
    """Run jobs, in a process pool when ``workers > 1``; order is preserved."""
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_call, jobs, chunksize=8))
    else:
        chunks = [_call(job) for job in jobs]
    return [r for chunk in chunks for r in chunk]


# -- GW tables ---------------------------------------------------------------

def _table_rows(n, d_max, a, b):
    rows = []
    parts = strict_partitions(n)
    for c in parts[parts.index(b):]:
        d = admissible_degree(a, b, c, n)
        if d is not None and d <= d_max:
            rows.append({"a": list(a), "b": list(b), "c": list(c), "d": d,
                         "value": gw(a, b, c, d, n)})
    return rows


def gw_table(n: int, d_max: int, workers: int = 1) -> list[dict]:
    """Every admissible <tau_a, tau_b, tau_c>_d with d <= d_max, a <= b <= c."""
    parts = strict_partitions(n)
    jobs = [(_table_rows, (n, d_max, a, b))
            for i, a in enumerate(parts) for b in parts[i:]]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_call_rows, jobs))
    else:
        chunks = [_call_rows(j) for j in jobs]
    return [row for chunk in chunks for row in chunk]


def _call_rows(job):
    fn, args = job
    return fn(*args)
