import random

import pytest

from threepoint.errors import NotCoprime, ParamsInvalid
from threepoint.groups import pgl2_model, profile
from threepoint.pglsearch import (
    ExampleRecord,
    SearchParams,
    is_prime_power,
    mult_order,
    search,
    validate_params,
)

from oracles import sieve_example_parameters


def test_validate_params():
    assert validate_params(SearchParams(m=2, n=1, p=5, q_max=100)) is True
    assert validate_params(SearchParams(m=2, n=1, p=3, q_max=100)) is False  # p = m+1
    assert validate_params(SearchParams(m=3, n=1, p=7, q_max=100)) is True
    assert validate_params(SearchParams(m=2, n=1, p=4, q_max=100)) is False  # composite
    assert validate_params(SearchParams(m=4, n=1, p=7, q_max=100)) is False  # 7 != 1 mod 4


def test_is_prime_power():
    assert is_prime_power(64) == (2, 6)
    assert is_prime_power(19) == (19, 1)
    assert is_prime_power(12) is None


def test_mult_order():
    assert mult_order(4, 5, 1) == 2
    assert mult_order(1, 5, 1) == 1
    assert mult_order(2, 5, 1) == 4
    assert mult_order(49, 5, 2) == 2
    with pytest.raises(NotCoprime):
        mult_order(10, 5, 1)


def test_mult_order_random_against_naive():
    rng = random.Random(97)
    for _ in range(100):
        p = rng.choice([3, 5, 7, 11])
        n = rng.choice([1, 2])
        modulus = p**n
        q = rng.randrange(2, 200)
        if q % p == 0:
            continue
        got = mult_order(q, p, n)
        x, naive = q % modulus, 1
        while x != 1:
            x = x * q % modulus
            naive += 1
        assert got == naive


def test_search_worked_family():
    records = search(SearchParams(m=2, n=1, p=5, q_max=100))
    assert [r.q for r in records] == [4, 9, 19, 29, 49, 59, 64, 79, 89]
    r19 = next(r for r in records if r.q == 19)
    assert r19.sylow_order_exponent == 1  # v_5(19^2 - 1) = v_5(360)
    assert r19.group_order == 6840
    assert r19.verdict.status == "PotentiallyGood"
    assert r19.verdict.good_reduction_outright
    assert r19.ell == 19 and r19.d == 1 and r19.mult_order == 2


def test_search_deeper_congruence():
    records = search(SearchParams(m=2, n=2, p=5, q_max=100))
    assert [r.q for r in records] == [49]
    assert records[0].sylow_order_exponent == 2  # v_5(2400) = 2


def test_search_m3():
    records = search(SearchParams(m=3, n=1, p=7, q_max=60))
    assert [r.q for r in records] == [2, 4, 9, 11, 16, 23, 25, 32, 37, 53]
    for r in records:
        assert r.mult_order == 3
        assert r.verdict.good_reduction_outright


def test_search_rejects_invalid_params():
    with pytest.raises(ParamsInvalid):
        search(SearchParams(m=2, n=1, p=3, q_max=100))
    with pytest.raises(ParamsInvalid):
        search(SearchParams(m=4, n=1, p=5, q_max=100))  # m = p - 1 not allowed


def test_search_matches_sieve_oracle():
    for m, n, p, q_max in [(2, 1, 5, 200), (3, 1, 7, 150), (2, 2, 5, 300), (2, 1, 13, 150)]:
        got = [r.q for r in search(SearchParams(m=m, n=n, p=p, q_max=q_max))]
        assert got == sieve_example_parameters(m, n, p, q_max), (m, n, p)


def test_search_records_congruence_and_exponent():
    for record in search(SearchParams(m=2, n=1, p=13, q_max=200)):
        modulus = 13
        assert pow(record.q, 2, modulus) == 1
        assert record.q % modulus != 1
        assert record.sylow_order_exponent >= 1
        assert record.q == record.ell**record.d


def test_search_group_order_matches_model():
    records = search(SearchParams(m=2, n=1, p=5, q_max=30))
    for record in records:
        gp = profile(pgl2_model(record.q), 5)
        assert gp.order == record.group_order
        assert gp.p_valuation == record.sylow_order_exponent


def test_record_invariants_enforced():
    from threepoint.criterion import INCONCLUSIVE, Verdict

    records = search(SearchParams(m=2, n=1, p=5, q_max=10))
    good = records[0]
    inconclusive = Verdict(
        status=INCONCLUSIVE, tame_degree_divides=None,
        good_reduction_outright=False, reasons=("hypothesis fails",),
    )
    with pytest.raises(ValueError):
        ExampleRecord(
            q=good.q, ell=good.ell, d=good.d, mult_order=good.mult_order,
            sylow_order_exponent=good.sylow_order_exponent,
            group_order=good.group_order,
            verdict=inconclusive,
            ramification_note=good.ramification_note,
        )
