"""Character values by both routes, specialization and orthogonality."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import pytest

from superhecke.characters import (
    CharacterTable,
    build_table,
    centralizer_order,
    char_oracle,
    char_rsk,
    code_version,
    dimension,
    specialize_table,
    verify_frobenius,
)
from superhecke.combinatorics import (
    HookParams,
    Multipartition,
    Partition,
    enumerate_multipartitions,
)
from superhecke.exactalg import Cyclotomic, MPoly, parse_poly
from superhecke.rsk import certify
from superhecke.superfunctions import P_mu, schur_super

from oracles import mn_character, wreath_classes


@lru_cache(maxsize=None)
def table(m: int, n: int) -> CharacterTable:
    return build_table(m, n)


@lru_cache(maxsize=None)
def spec_table(m: int, n: int):
    return specialize_table(table(m, n))


def mp(text: str, m: int | None = None) -> Multipartition:
    return Multipartition.parse(text, m)


# ---------------------------------------------------------------------------
# pinned values at the smallest size


def test_char_rsk_m1_n2_pinned():
    params = HookParams.default(1, 2)
    certify(params, 2)
    u = params.universe()
    assert char_rsk(mp("(2)"), mp("(2)"), params) == parse_poly(u, "q*Q1")
    assert char_rsk(mp("(1,1)"), mp("(2)"), params) == parse_poly(u, "-q^-1*Q1")
    assert char_rsk(mp("(2)"), mp("(1,1)"), params) == parse_poly(u, "Q1^2")
    assert char_rsk(mp("(1,1)"), mp("(1,1)"), params) == parse_poly(u, "Q1^2")


def test_char_oracle_m1_n2_pinned():
    params = HookParams.default(1, 2)
    u = params.universe()
    col = char_oracle(mp("(2)"), params)
    assert col[mp("(2)")] == parse_poly(u, "q*Q1")
    assert col[mp("(1,1)")] == parse_poly(u, "-q^-1*Q1")


def test_char_rsk_size_mismatch():
    params = HookParams.default(1, 2)
    with pytest.raises(ValueError):
        char_rsk(mp("(2)"), mp("(3)"), params)


# ---------------------------------------------------------------------------
# the two routes agree (table-level regression; full grid in acceptance)


@pytest.mark.parametrize("m,n", [(1, 2), (1, 3), (2, 2)])
def test_routes_agree(m, n):
    t = table(m, n)
    params = t.params
    for mu in t.shapes:
        oracle_col = char_oracle(mu, params)
        for lam in t.shapes:
            assert t.entry(lam, mu) == oracle_col[lam], (lam, mu)


def test_verify_frobenius_smallest():
    report = verify_frobenius(1, 2)
    assert report.passed
    assert "PASS" in report.summary()


# ---------------------------------------------------------------------------
# centralizer orders


def test_centralizer_order_examples():
    assert centralizer_order(mp("(4)")) == 4
    assert centralizer_order(mp("(1,1,1)")) == 6
    assert centralizer_order(mp("(1,1);-", 2)) == 8
    assert centralizer_order(mp("(2,2,1)")) == 2 * 2 * 2 * 1
    # m = 3, one 2-cycle of each color: each contributes (2*3)^1
    assert centralizer_order(mp("(2);(2);(2)", 3)) == 6**3


def test_centralizer_orders_match_brute_force():
    for m in (1, 2):
        for n in (1, 2, 3):
            classes = wreath_classes(m, n)
            order = math.factorial(n) * m**n
            shapes = enumerate_multipartitions(n, m)
            assert len(classes) == len(shapes)
            assert sum(classes.values()) == order
            for label, size in classes.items():
                mu = Multipartition(tuple(Partition(p) for p in label))
                assert centralizer_order(mu) == order // size, label


def test_class_sizes_sum_against_centralizers():
    # the class equation: sum over classes of |G|/Z_mu = |G|
    for m, n in ((1, 3), (2, 2), (3, 2)):
        order = math.factorial(n) * m**n
        total = sum(
            Fraction(order, centralizer_order(mu))
            for mu in enumerate_multipartitions(n, m)
        )
        assert total == order


# ---------------------------------------------------------------------------
# specialization to the finite group


def test_specialized_table_m1_n2():
    st = spec_table(1, 2)
    two, oneone = mp("(2)"), mp("(1,1)")
    assert st.entry(two, two).as_rational() == 1
    assert st.entry(two, oneone).as_rational() == 1
    assert st.entry(oneone, two).as_rational() == -1
    assert st.entry(oneone, oneone).as_rational() == 1


@pytest.mark.parametrize("n", [2, 3])
def test_specialized_tables_match_murnaghan_nakayama(n):
    st = spec_table(1, n)
    for lam in st.shapes:
        for mu in st.shapes:
            got = st.entry(lam, mu)
            expected = mn_character(lam.component(1).parts, mu.component(1).parts)
            assert got.is_rational() and got.as_rational() == expected, (lam, mu)


@pytest.mark.parametrize("m,n", [(1, 2), (1, 3), (2, 2), (2, 3)])
def test_column_orthogonality(m, n):
    st = spec_table(m, n)
    for mu in st.shapes:
        total = Cyclotomic.zero(m)
        for lam in st.shapes:
            total = total + st.entry(lam, mu).norm_squared()
        assert total.is_rational()
        assert total.as_rational() == centralizer_order(mu), mu


@pytest.mark.parametrize("m,n", [(1, 3), (2, 2), (2, 3)])
def test_identity_column_gives_dimensions(m, n):
    # the identity class puts every 1-cycle in the last component (where the
    # specialized Q power is 1)
    st = spec_table(m, n)
    parts = ";".join(["-"] * (m - 1) + ["(" + ",".join("1" * n) + ")"])
    identity = mp(parts.replace("1" * n, ",".join(["1"] * n)), m)
    for lam in st.shapes:
        got = st.entry(lam, identity)
        assert got.is_rational() and got.as_rational() == dimension(lam), lam


def test_row_at_trivial_shape_is_Q_monomial_sizes():
    # the one-row shape carries the "trivial-like" character: at q = 1 and
    # Q specialized its values all have absolute value 1 for m = 1
    st = spec_table(1, 3)
    top = mp("(3)")
    for mu in st.shapes:
        assert st.entry(top, mu).as_rational() == 1


# ---------------------------------------------------------------------------
# the character-to-Schur inversion


@pytest.mark.parametrize("m,n", [(1, 2), (1, 3), (2, 2), (2, 3)])
def test_schur_from_characters(m, n):
    # S_lambda = sum over mu of chi_1^lambda(mu) / Z_mu * P_mu over the
    # cyclotomic field
    params = HookParams.default(m, n)
    st = spec_table(m, n)
    u = params.universe()
    for lam in st.shapes:
        rhs = MPoly.zero(u)
        for mu in st.shapes:
            coeff = MPoly.const(u, st.entry(lam, mu)) * MPoly.const(
                u, Fraction(1, centralizer_order(mu))
            )
            rhs = rhs + coeff * P_mu(mu, params)
        assert rhs == schur_super(lam, params), lam


# ---------------------------------------------------------------------------
# dimension identities


@pytest.mark.parametrize(
    "m,n,ktext",
    [
        (1, 3, "1|2"),
        (1, 3, "2|1"),
        (1, 3, "3|0"),
        (1, 3, "0|3"),
        (2, 2, "1|1,1|1"),
        (2, 2, "2|0,1|1"),
        (2, 2, "0|2,2|0"),
    ],
)
def test_dimension_identity_with_full_alphabets(m, n, ktext):
    # with k_c + l_c = n every shape of size n is hook, and the squared
    # dimensions sum to the group order
    from superhecke.combinatorics import is_hook

    params = HookParams.parse(ktext)
    assert all(params.k[c] + params.l[c] == n for c in range(m))
    total = 0
    for shape in enumerate_multipartitions(n, m):
        if is_hook(shape, params):
            total += dimension(shape) ** 2
    assert total == math.factorial(n) * m**n


# ---------------------------------------------------------------------------
# table plumbing


def test_table_text_and_json_forms():
    t = table(1, 2)
    text = t.to_text()
    assert "(2)" in text and "(1,1)" in text
    data = t.to_json_dict()
    assert data["m"] == 1 and data["n"] == 2
    assert len(data["entries"]) == 2


def test_build_table_cache_round_trip(tmp_path):
    fresh = build_table(1, 2, cache_dir=tmp_path)
    files = list(tmp_path.glob("chartable-*.json"))
    assert len(files) == 1
    reloaded = build_table(1, 2, cache_dir=tmp_path)
    assert reloaded.entries == fresh.entries
    assert list(tmp_path.glob("chartable-*.json")) == files


def test_oracle_provenance_table_matches():
    rsk_t = table(1, 2)
    oracle_t = build_table(1, 2, provenance="oracle")
    assert rsk_t.entries == oracle_t.entries


def test_code_version_is_stable_hex():
    v = code_version()
    assert v == code_version()
    int(v, 16)
