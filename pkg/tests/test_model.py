import pytest

from ninfty import (ModelScan, PreconditionError, TransferSystem,
                    enumerate_systems, intervals, is_compatible, model_check,
                    weak_equivalences)
from ninfty.classify import complete_system, trivial_system


def sys_of(lat, *pairs):
    return TransferSystem.from_pairs(lat, pairs)


def all_pairs(lat):
    n = lat.node_count
    return frozenset((a, b) for a in range(n) for b in range(n)
                     if lat.le(a, b))


def test_w_trivial_trivial(c4):
    t = trivial_system(c4)
    assert weak_equivalences(t, t) == all_pairs(c4)


def test_w_complete_complete(c4):
    t = complete_system(c4)
    assert weak_equivalences(t, t) == all_pairs(c4)


def test_w_example_on_c4(c4):
    af = sys_of(c4, (0, 1))
    w = weak_equivalences(af, complete_system(c4))
    identities = {(i, i) for i in range(3)}
    assert w == frozenset(identities | {(0, 1)})


def test_model_check_trivial_pair(c4):
    t = trivial_system(c4)
    assert model_check(t, t) == 2


def test_model_check_requires_nesting(c4):
    with pytest.raises(PreconditionError):
        model_check(complete_system(c4), trivial_system(c4))


def test_mixed_lattices_rejected(c4, c8):
    with pytest.raises(PreconditionError):
        is_compatible(trivial_system(c4), complete_system(c8))


def test_intervals_c4(c4_store):
    pairs = intervals(c4_store)
    assert len(pairs) == 13
    masks = c4_store.systems
    assert all(masks[i] & ~masks[j] == 0 for i, j in pairs)


def test_model_counts_c4(c4_store):
    scan = ModelScan(c4_store)
    assert scan.counts() == {"premodel": 13, "cclosed": 12, "quillen": 10,
                             "wetypes": 4, "compatible": 12}


def test_model_check_agrees_with_scan(c4_store):
    systems = c4_store.transfer_systems()
    cclosed = quillen = 0
    for af in systems:
        for f in systems:
            if af <= f:
                cls = model_check(af, f)
                cclosed += cls >= 1
                quillen += cls == 2
    assert (cclosed, quillen) == (12, 10)


def test_compatible_trivial_member(c4_store):
    t = trivial_system(c4_store.structure)
    for other in c4_store.transfer_systems():
        assert is_compatible(t, other)


def test_self_incompatible_witness(c30):
    t = sys_of(c30, (0, 1), (0, 2), (0, 4))
    assert not is_compatible(t, t)


def test_quillen_and_fuss_catalan_laws(c2, c4, c8):
    # Quillen counts C(2n+1, n); compatible = composition closed = A(3,1)
    for lat, want_q, want_c in ((c2, 3, 3), (c4, 10, 12), (c8, 35, 55)):
        scan = ModelScan(enumerate_systems(lat))
        assert scan.quillen == want_q
        assert scan.compatible == want_c
        assert scan.cclosed == want_c


def test_weak_equivalences_contain_af_and_identities(c4_store):
    systems = c4_store.transfer_systems()
    for af in systems:
        for f in systems:
            if not af <= f:
                continue
            w = weak_equivalences(af, f)
            assert set(af.pairs) <= w
            assert {(i, i) for i in range(3)} <= w
