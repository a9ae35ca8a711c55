import pytest

from ogqh.errors import InadmissibleQueryError, InvalidDegreeError, InvalidIndexError
from ogqh.lgbridge import (
    LGQuery,
    _IntResidual,
    lg_admissible_degree,
    lg_gw,
    lg_gw_odd,
    oglg_check,
    ogsymmetry_check,
)
from ogqh.partitions import lg_dual, rho, strict_partitions
from ogqh.qtilde import e_coeffs
from ogqh.report import IdentityReport
from ogqh.verify import lg_route_check, oglg_tuples


def test_lg_gw_examples():
    assert lg_gw(LGQuery(2, (1,), (1,), (1,), 1)) == 1
    for n in (2, 3, 4):
        for lam in strict_partitions(n - 1):
            assert lg_gw(LGQuery(n, lam, (), lg_dual(lam, n), 0)) == 1


def test_lg_gw_both_routes_n4():
    q = LGQuery(4, (3, 1), (2, 1), (2, 1), 1)
    assert q.admissible
    assert lg_gw(q) == lg_gw_odd(q.a, q.b, q.c, 1, 4) == 2


def test_lg_gw_rejects_inadmissible():
    # 9 boxes, but degree 1 on LG(3, 6) needs 6 + 4
    with pytest.raises(InadmissibleQueryError):
        lg_gw(LGQuery(4, (2, 1), (2, 1), (2, 1), 1))
    assert lg_admissible_degree((2, 1), (2, 1), (2, 1), 4) is None


def test_lg_gw_odd_examples():
    assert e_coeffs((1,), (1,), 2)[(2,)] == 2
    assert lg_gw_odd((1,), (1,), (1,), 1, 2) == 1
    assert lg_gw_odd((1,), (), (), 1, 2) == 0
    n = 3
    for b in strict_partitions(n - 1):
        for c in strict_partitions(n - 1):
            e = lg_admissible_degree(rho(n - 1), b, c, n)
            if e is not None and e % 2:
                assert lg_gw_odd(rho(n - 1), b, c, e, n) == lg_gw(LGQuery(n, rho(n - 1), b, c, e))
    with pytest.raises(InvalidDegreeError):
        lg_gw_odd((1,), (1,), (1,), 2, 2)


def test_lg_query_validation():
    with pytest.raises(InvalidIndexError):
        LGQuery(3, (3,), (), (), 0)
    with pytest.raises(InvalidDegreeError):
        LGQuery(3, (1,), (), (), -1)


def test_lg2_is_projective_line():
    # LG(1, 2) = P^1 with deg q = 2 = n
    assert lg_gw(LGQuery(2, (), (), (1,), 0)) == 1
    assert lg_gw(LGQuery(2, (1,), (1,), (1,), 1)) == 1


@pytest.mark.parametrize("n", [2, 3, 4])
def test_oglg_exhaustive(n):
    count = 0
    for lam, mu, nu, d in oglg_tuples(n):
        assert oglg_check(lam, mu, nu, d, n).passed
        e = len(lam) - 2 * d - 1
        if lam and e >= 0:
            assert ogsymmetry_check(lam, mu, nu, d, e, n).passed
        count += 1
    assert count > 0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_routes_and_symmetry(n):
    small = strict_partitions(n - 1)
    for a in small:
        for b in small:
            for c in small:
                e = lg_admissible_degree(a, b, c, n)
                if e is not None:
                    assert lg_route_check(a, b, c, e, n).passed


def test_ogsymmetry_index_conditions():
    with pytest.raises(InvalidIndexError):
        ogsymmetry_check((), (), (), 0, 0, 3)
    with pytest.raises(InvalidIndexError):
        ogsymmetry_check((3, 1), (), (), 0, 0, 3)


def test_oglg_vanishing_branch():
    rep = oglg_check((), (2, 1), (2, 1), 0, 3)
    assert rep.identity == "oglg_vanishing" and rep.passed


def test_report_residual_is_exact():
    rep = ogsymmetry_check((3, 2, 1), (2, 1), (2, 1), 1, 0, 3)
    assert rep.passed
    assert rep.to_json()["residual_terms"] == []
    bad = IdentityReport("og_symmetry", {}, _IntResidual(-3))
    assert not bad.passed
    assert bad.to_json() == {"identity": "og_symmetry", "params": {}, "pass": False,
                             "residual_terms": [-3]}
