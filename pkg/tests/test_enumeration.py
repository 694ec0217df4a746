import pytest

from ninfty import (Kind, MemoryCapExceeded, complexity, enumerate_systems,
                    find_basis, generation_statistics, is_saturated,
                    maximally_generated, saturated_filter)

import oracles


def test_c4_all(c4_store):
    assert len(c4_store) == 5
    assert c4_store.layer_sizes == [1, 3, 1]
    assert complexity(c4_store) == 2


def test_s3_kinds(s3):
    assert len(enumerate_systems(s3, Kind.ALL)) == 9
    assert len(enumerate_systems(s3, Kind.UNDERLYING)) == 36
    assert len(enumerate_systems(s3, Kind.CONJUGACY)) == 10


def test_q8_count(q8_store):
    assert len(q8_store) == 68


def test_kind_accepts_strings(s3):
    assert len(enumerate_systems(s3, "conjugacy")) == 10


def test_oracle_equivalence_small_lattices(c4, chain3, diamond, pentagon, c2c2):
    for lat in (c4, chain3, diamond, pentagon, c2c2):
        assert lat.edge_count <= 10
        store = enumerate_systems(lat)
        assert set(store.systems) == oracles.brute_force_masks(lat)


def test_oracle_equivalence_s3_with_conjugation(s3):
    store = enumerate_systems(s3)
    assert set(store.systems) == oracles.brute_force_masks(s3)


def test_layers_equal_basis_size(c4_store, c8_store, s3_store, q8_store):
    for store in (c4_store, c8_store, s3_store, q8_store):
        for t in store.transfer_systems():
            assert store.layer_of[t.mask] == len(find_basis(t))


def test_determinism_across_workers(s3, c30):
    for lat in (s3, c30):
        base = enumerate_systems(lat, workers=1)
        for w in (2, 5):
            other = enumerate_systems(lat, workers=w)
            assert other.systems == base.systems
            assert other.layer_of == base.layer_of
            assert other.layer_sizes == base.layer_sizes


def test_memory_cap(c30):
    with pytest.raises(MemoryCapExceeded) as exc:
        enumerate_systems(c30, memory_cap=1024)
    assert exc.value.layer >= 1


def test_invalid_worker_count(c4):
    with pytest.raises(ValueError):
        enumerate_systems(c4, workers=0)


def test_maximally_generated_c4(c4_store):
    tops = maximally_generated(c4_store)
    assert len(tops) == 1
    assert c4_store.layer_of[tops[0].mask] == complexity(c4_store)


def test_generation_statistics_totals(c4_store, q8_store):
    for store in (c4_store, q8_store):
        assert sum(generation_statistics(store)) == len(store)


def test_saturated_filter_matches_opposite_count(c4, c30):
    for lat in (c4, c30):
        store = enumerate_systems(lat)
        sats = saturated_filter(store)
        assert all(is_saturated(t) for t in sats)
        assert len(sats) == len(enumerate_systems(lat, Kind.SATURATED_OPPOSITE))


def test_cosaturated_are_subset_of_all(c4):
    all_masks = set(enumerate_systems(c4).systems)
    cosat = enumerate_systems(c4, Kind.COSATURATED)
    assert set(cosat.systems) <= all_masks
    assert len(cosat) == 4


def test_conjugacy_store_has_no_transfer_systems(s3):
    store = enumerate_systems(s3, Kind.CONJUGACY)
    with pytest.raises(TypeError):
        store.transfer_systems()
