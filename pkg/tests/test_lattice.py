import json

import pytest

from ninfty import (SubgroupLattice, TransferSystem, ValidationError,
                    conjugacy_quotient, is_transfer_system, load_lattice,
                    opposite, serialize)
from ninfty.lattice import lattice_from_dict, lattice_from_order, validate

from datafiles import data_file


def test_trivial_file_has_no_edges():
    lat = load_lattice(data_file("trivial"))
    assert lat.node_count == 1
    assert lat.edge_count == 0
    assert lat.bottom == lat.top == 0


def test_s3_file_nodes_and_classes():
    lat = load_lattice(data_file("S3"))
    assert lat.node_count == 6
    assert [list(c) for c in lat.node_classes] == [[0], [1, 2, 3], [4], [5]]


def test_pentagon_file():
    lat = load_lattice(data_file("Pentagon"))
    assert lat.node_count == 5
    assert len(lat.leq) == 8
    assert all(len(o) == 1 for o in lat.edge_orbits)


def test_round_trip(s3, q8, pentagon):
    for lat in (s3, q8, pentagon):
        doc = json.loads(serialize(lat))
        again = lattice_from_dict(doc)
        assert again == lat


def test_meet_join_laws(c30, s3, q8, pentagon):
    for lat in (c30, s3, q8, pentagon):
        n = lat.node_count
        for a in range(n):
            assert lat.meet[a][a] == a and lat.join[a][a] == a
            for b in range(n):
                m, j = lat.meet[a][b], lat.join[a][b]
                assert m == lat.meet[b][a] and j == lat.join[b][a]
                assert lat.le(m, a) and lat.le(m, b)
                assert lat.le(a, j) and lat.le(b, j)
                if lat.le(a, b):
                    assert m == a and j == b


def test_edge_orbits_partition_edges(s3, s4, q8):
    for lat in (s3, s4, q8):
        seen = sorted(k for orb in lat.edge_orbits for k in orb)
        assert seen == list(range(lat.edge_count))


def test_is_transfer_system_trivial_and_complete(s3, c4, pentagon):
    for lat in (s3, c4, pentagon):
        assert is_transfer_system(0, lat)
        assert is_transfer_system((1 << lat.edge_count) - 1, lat)


def test_is_transfer_system_restriction_failure(s3):
    k = s3.edge_index[(0, 5)]
    assert not is_transfer_system({k}, s3)


def test_opposite_involution(c4, s3, pentagon):
    for lat in (c4, s3, pentagon):
        op, _ = opposite(lat)
        back, _ = opposite(op)
        assert set(back.leq) == set(lat.leq)
        assert back.meet == lat.meet and back.join == lat.join


def test_opposite_of_chain(c4):
    op, edge_map = opposite(c4)
    assert op.bottom == c4.top and op.top == c4.bottom
    assert op.edge_count == 3
    for k, (a, b) in enumerate(c4.edges):
        assert op.edges[edge_map[k]] == (b, a)


def test_opposite_of_pentagon(pentagon):
    op, _ = opposite(pentagon)
    # the long side 0<2<3<4 becomes 4<3<2<0 and the short side flips too
    assert (4, 3) in op.leq and (3, 2) in op.leq and (4, 1) in op.leq
    assert op.le(4, 0) and not op.le(0, 4)


def test_quotient_of_dedekind_input(c30, q8):
    for lat in (c30, q8):
        q = conjugacy_quotient(lat)
        assert q.class_count == lat.node_count
        assert q.leq == frozenset(lat.leq)
        assert q.is_lattice


def test_quotient_of_s3_is_diamond(s3):
    q = conjugacy_quotient(s3)
    assert q.class_count == 4
    assert sorted(q.leq) == [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)]
    assert q.is_lattice


def test_quotient_of_q8_shape(q8):
    q = conjugacy_quotient(q8)
    assert q.class_count == 6
    assert sorted(q.leq) == [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
                             (1, 2), (1, 3), (1, 4), (1, 5),
                             (2, 5), (3, 5), (4, 5)]


def test_validate_rejects_broken_meet(c4):
    meet = [list(r) for r in c4.meet]
    meet[1][2] = 2
    broken = SubgroupLattice(c4.name, c4.kind, c4.node_names, c4.node_orders,
                             c4.leq, meet, c4.join,
                             [list(c) for c in c4.node_classes],
                             [[c4.edges[k] for k in o] for o in c4.edge_orbits])
    with pytest.raises(ValidationError):
        validate(broken)


def test_lattice_from_order_closes_covers():
    lat = lattice_from_order("chain", ["a", "b", "c"], [1, 2, 4],
                             [(0, 1), (1, 2)])
    assert (0, 2) in lat.leq


def test_lattice_from_order_rejects_non_lattice():
    with pytest.raises(ValidationError):
        lattice_from_order("bad", ["a", "b", "c", "d"], [1, 1, 2, 2],
                           [(0, 2), (0, 3), (1, 2), (1, 3)])


def test_load_rejects_mismatched_tables(tmp_path, c4):
    doc = json.loads(serialize(c4))
    doc["meet"][0] = doc["meet"][0][:-1]
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(doc))
    with pytest.raises(ValidationError):
        load_lattice(str(p))


def test_transfer_system_constructors(c4):
    t = TransferSystem.from_pairs(c4, [(0, 1), (1, 2)])
    assert t == TransferSystem.from_mask(c4, t.mask)
    assert t.pairs == ((0, 1), (1, 2))
    assert len(t) == 2
