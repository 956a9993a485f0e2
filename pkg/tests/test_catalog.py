import random

import pytest

import _oracle
from wiploop import OrderTooLarge, Permutation, find_isomorphisms, validate_loop
from wiploop.catalog import (
    build_catalog,
    canonical_key,
    canonical_loop,
    catalog_up_to,
    enumerate_loops,
    load_catalog,
    normalize,
    save_catalog,
)
from wiploop.errors import LoopFormatError

from conftest import NONASSOC_WIP5


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 1), (4, 4), (5, 56)])
def test_enumeration_counts(n, count):
    loops = list(enumerate_loops(n))
    assert len(loops) == count
    assert all(L.identity == 0 for L in loops)
    assert [L.table for L in loops] == sorted(L.table for L in loops)


def test_enumeration_matches_oracle_with_other_cell_order():
    got = {L.table for L in enumerate_loops(5)}
    assert got == set(_oracle.reduced_squares(5))


def test_guard():
    with pytest.raises(OrderTooLarge):
        list(enumerate_loops(7))
    with pytest.raises(OrderTooLarge):
        build_catalog(6, max_order=5)
    with pytest.raises(ValueError):
        list(enumerate_loops(0))


def test_canonical_key_basics(z, t1):
    assert canonical_key(z[2]) == bytes([0, 1, 1, 0])
    for phi in find_isomorphisms(t1, t1):
        assert canonical_key(t1.relabel(phi)) == canonical_key(t1)
    assert canonical_loop(t1) == z[5]


def test_keys_separate_flags(non_wip5, t1):
    assert canonical_key(non_wip5) != canonical_key(t1)


def test_normalize(t1):
    M = t1.relabel(Permutation([3, 1, 2, 0, 4]))
    assert M.identity == 3
    N = normalize(M)
    assert N.identity == 0
    assert canonical_key(N) == canonical_key(t1)


@pytest.mark.parametrize("n,classes", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 6)])
def test_class_counts(n, classes):
    assert len(build_catalog(n)) == classes


def test_z2_entry():
    (e,) = build_catalog(2)
    assert e.loop.table == ((0, 1), (1, 0))
    assert all(e.flags.to_dict().values())
    assert e.name == "n2_0000"


def test_wip_filter_contains_table1(t1, nonassoc_wip5):
    wips = build_catalog(5, "wip")
    keys = {e.canonical_key for e in wips}
    assert canonical_key(t1) in keys and canonical_key(nonassoc_wip5) in keys
    assert len(wips) == 2
    assert [e.iso_class_id for e in wips] == [0, 1]
    assert "/".join("".join(map(str, r)) for r in wips[0].loop.table) == NONASSOC_WIP5


def test_predicate_filter():
    full = build_catalog(5)
    cips = build_catalog(5, lambda f: f.cip)
    assert cips == [e for e in full if e.flags.cip]
    with pytest.raises(ValueError):
        build_catalog(5, "moufang")


def test_workers_do_not_change_results():
    assert build_catalog(5, workers=1) == build_catalog(5, workers=2)


def test_dedup_against_search():
    loops = list(enumerate_loops(5))
    keys = [canonical_key(L) for L in loops]
    rng = random.Random(5)
    for i, G in enumerate(loops):
        for j in rng.sample(range(len(loops)), 8) + [i]:
            iso = bool(find_isomorphisms(G, loops[j]))
            assert iso == (keys[i] == keys[j])


def test_class_keys_match_oracle():
    # independent dedupe: group the oracle's squares by brute-force isomorphism
    squares = [[list(r) for r in t] for t in _oracle.reduced_squares(5)]
    reps = []
    for t in squares:
        if not any(_oracle.isomorphisms(t, r) for r in reps):
            reps.append(t)
    assert len(reps) == 6


def test_catalog_up_to():
    assert [e.order for e in catalog_up_to(4)] == [1, 2, 3, 4, 4]


def test_persistence_round_trip(tmp_path):
    entries = catalog_up_to(5)
    index = save_catalog(entries, tmp_path)
    lines = index.read_text().splitlines()
    assert lines[0].startswith("# path\torder\tflags(commutative,associative,exponent2,wip,cip,aip,m_inverse_1)")
    assert len(lines) == 1 + len(entries)
    assert lines[1] == "loops/n1_0000.loop\t1\t1111111\t0"
    back = load_catalog(tmp_path)
    assert back == sorted(entries, key=lambda e: (e.order, e.canonical_key))


def test_load_rejects_tampered_flags(tmp_path):
    save_catalog(build_catalog(3), tmp_path)
    idx = tmp_path / "index.tsv"
    idx.write_text(idx.read_text().replace("\t1101111\t", "\t0000000\t"))
    with pytest.raises(LoopFormatError) as exc:
        load_catalog(tmp_path)
    assert exc.value.line == 2


def test_entries_validate():
    for e in catalog_up_to(5):
        assert validate_loop(e.loop.table) == e.loop
