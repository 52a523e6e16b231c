"""Catalog structure: enumeration, the canonical map, ranks, serialization."""

from fractions import Fraction

import pytest

from branchlab import catalog
from branchlab.catalog import (
    CaseId,
    alternating_concat,
    build_records,
    dump_catalog,
    enumerate_disc,
    load_catalog,
    pi_tau,
    rank_triple,
)


@pytest.fixture(scope="module")
def records():
    return {(r.id.tag, r.id.n): r for r in build_records(3)}


def rec(records, tag, n=None):
    return records[(tag, n)]


def test_all_cases_population():
    ids = [str(r.id) for r in build_records(1)]
    assert "vi" in ids and "star" in ids
    assert "i[n=1]" in ids
    assert "xiii" not in ids  # needs the n=3 base case
    ids3 = [str(r.id) for r in build_records(3)]
    assert {"xii", "xiii", "xiii_prime", "xiv"} <= set(ids3)
    assert [s for s in ids3 if s.startswith("i[")] == ["i[n=1]", "i[n=2]", "i[n=3]"]


def test_all_cases_count_max_n_2():
    # 13 parametrized instances + 11 fixed/alias-capable rows minus the three
    # aliases that need n=3 bases
    assert len(build_records(2)) == 21
    assert len(build_records(3)) == 31


def test_star_group_names():
    star = build_records(1)[-1]
    assert star.groups["k"].name == "Spin(7)"
    assert star.groups["g"].name == "Spin(8)"


def test_enumerate_disc_examples(records):
    r = rec(records, "i", 2)
    assert [e.params for e in enumerate_disc(r, 1)] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    r = rec(records, "vi")
    assert [e.params for e in enumerate_disc(r, 2)] == [(0, 0), (1, 1), (2, 0), (2, 2)]
    r = rec(records, "x")
    assert [e.params for e in enumerate_disc(r, 3)] == [(0,), (1,), (2,), (3,)]


def test_enumerate_disc_lex_sorted_and_constrained(records):
    for r in records.values():
        elems = [e.params for e in enumerate_disc(r, 4)]
        assert elems == sorted(elems)
        assert len(set(elems)) == len(elems)
        for p in elems:
            assert r.theta.contains(p)


def test_enumerate_disc_star_triangle(records):
    r = rec(records, "star")
    got = {e.params for e in enumerate_disc(r, 2)}
    expected = {
        (j, jp, a)
        for j in range(3)
        for jp in range(3)
        for a in range(3)
        if abs(j - jp) <= a <= j + jp and (j + jp - a) % 2 == 0
    }
    assert got == expected


def test_pi_tau_examples(records):
    r = rec(records, "i", 2)
    pi, tau = pi_tau(r, (2, 1))
    assert pi.highest_weight == (Fraction(3), Fraction(0), Fraction(0))
    assert tau.highest_weight == (Fraction(0), Fraction(0), Fraction(1))

    r = rec(records, "vi")
    pi, tau = pi_tau(r, (4, 2))
    assert pi.highest_weight == tuple(Fraction(x) for x in (4, 0, 0, 0, 0, 0, 0, 0))
    assert tau.highest_weight == tuple(Fraction(1) for _ in range(4))

    r = rec(records, "star")
    pi, tau = pi_tau(r, (1, 1, 2))
    assert pi.highest_weight == tuple(Fraction(x) for x in (1, 0, 0, 0, 1, 0, 0, 0))
    assert tau.highest_weight == (Fraction(1), Fraction(1), Fraction(1))


def test_pi_tau_rejects_invalid_theta(records):
    with pytest.raises(ValueError):
        pi_tau(rec(records, "vi"), (1, 2))  # k > j
    with pytest.raises(ValueError):
        pi_tau(rec(records, "vi"), (3, 2))  # parity fails
    with pytest.raises(ValueError):
        pi_tau(rec(records, "star"), (1, 1, 1))  # parity fails


def test_pi_tau_injective_on_box(records):
    for r in records.values():
        seen = set()
        for e in enumerate_disc(r, 4):
            pi, tau = pi_tau(r, e.params)
            key = (pi.highest_weight, tau.highest_weight)
            assert key not in seen, (r.id, e.params)
            seen.add(key)


def test_alternating_concat():
    assert alternating_concat((3, 1), (2, 0)) == (3, 2, 1, 0)
    assert alternating_concat((5, 0), (2,)) == (5, 2, 0)
    assert alternating_concat((7,), (4,)) == (7, 4)
    with pytest.raises(ValueError):
        alternating_concat((1, 2, 3), (1,))


def test_rank_triples(records):
    assert rank_triple(rec(records, "iv", 2)) == (2, 2, 4)
    assert rank_triple(rec(records, "xi")) == (1, 0, 1)
    assert rank_triple(rec(records, "star")) == (2, 1, 3)
    assert rank_triple(rec(records, "ii_odd", 3)) == (2, 1, 3)
    for r in records.values():
        a, b, c = r.rank3
        assert a + b == c, r.id


def test_generator_degree_counts(records):
    for r in records.values():
        assert len(r.degrees_p) + len(r.degrees_q) == r.degrees_rank, r.id


def test_aliases_delegate(records):
    xii = rec(records, "xii")
    xi = rec(records, "xi")
    assert xii.alias_of == xi.id
    assert xii.relations == xi.relations
    assert xii.transfer_matrix == xi.transfer_matrix
    assert [e.params for e in enumerate_disc(xii, 3)] == [
        e.params for e in enumerate_disc(xi, 3)
    ]
    xiv = rec(records, "xiv")
    assert xiv.alias_of == CaseId("ii_odd", 3)
    assert xiv.groups["k"].name == "Spin(6)"
    assert xiv.triality_note


def test_tau_space_validation(records):
    r = rec(records, "vi")
    assert r.tau_space.contains((2,))
    assert not r.tau_space.contains((-1,))
    r = rec(records, "viii")
    assert r.tau_space.contains((2, -2))
    assert not r.tau_space.contains((2, 3))
    r = rec(records, "v_prime", 1)
    assert r.tau_space.contains((2, 0))
    assert not r.tau_space.contains((2, 1))  # parity


def test_json_round_trip():
    recs = build_records(2)
    text = dump_catalog(recs)
    back = load_catalog(text)
    assert dump_catalog(back) == text
    assert [r.id for r in back] == [r.id for r in recs]
    # behavioural spot-checks on the reloaded records
    vi = next(r for r in back if r.id.tag == "vi")
    from branchlab import verify

    assert verify.evaluate_generator(vi, "C_Gt", (2, 0)) == 32
    assert verify.check_relations(vi, 4).passed


def test_bundled_catalog_is_fresh():
    bundled = catalog.bundled_path().read_text().rstrip("\n")
    assert bundled == dump_catalog(build_records(catalog.BUNDLED_MAX_N))


def test_load_default_env_override(tmp_path, monkeypatch):
    p = tmp_path / "cat.json"
    p.write_text(dump_catalog(build_records(1)))
    monkeypatch.setenv("BRANCHLAB_CATALOG", str(p))
    recs = catalog.load_default(max_n=1)
    assert {r.id.tag for r in recs} >= {"i", "vi", "star"}
    # asking for more than the file holds falls back to a fresh build
    recs3 = catalog.load_default(max_n=3)
    assert CaseId("i", 3) in {r.id for r in recs3}


def test_schema_guard():
    with pytest.raises(ValueError):
        load_catalog('{"schema": 99, "cases": []}')
