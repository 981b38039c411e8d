import json

import pytest

from hadz.cocycle import CoboundarySet, assemble
from hadz.hadamard import is_hadamard, is_hadamard_set
from hadz.io import format_paper_style
from hadz.orbits import NoSymmetricMember, closure, factorize_orbit, representative, total_orbit
from hadz.ops import to_rows
from hadz.reference import ORBIT_REPRESENTATIVES, representatives

FACTORS = {
    3: [(2, 3, 4, 1)],
    5: [(2, 5, 12, 1)],
    7: [(2, 7, 24, 1), (2, 7, 12, 3)],
    9: [(2, 9, 12, 3), (2, 9, 24, 3), (2, 9, 24, 1)],
    11: [(2, 11, 24, 5)],
    13: [(2, 13, 24, 6), (2, 13, 24, 3), (2, 13, 24, 3), (2, 13, 12, 3)],
}

ASYMMETRIC_T9 = (2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 14, 15, 16, 18, 20, 23, 25, 28, 31, 32, 34)


def cases(ts):
    return [(t, i) for t in ts for i in range(len(ORBIT_REPRESENTATIVES[t]))]


@pytest.mark.parametrize("t, i", cases([3, 5, 7, 9, 11, 13]))
def test_small_orbits(t, i):
    groups, size = ORBIT_REPRESENTATIVES[t][i]
    s = CoboundarySet.from_classes(t, groups)
    rec = total_orbit(s)
    assert rec.size == size
    f = rec.factors
    assert (f.complement, f.rotation, f.swap, f.dilate) == FACTORS[t][i]
    assert f.is_product and f.product == size
    assert f.swap in (1, 4, 6, 12, 24)
    assert representative(rec) == s
    assert rec.symmetric


def test_t13_second_orbit_example():
    s = CoboundarySet.from_classes(13, [[18, 22, 30, 34], [7, 15, 39, 47], [8, 12, 24, 32, 44, 48], [1, 5, 21, 29, 45, 49]])
    assert total_orbit(s).size == 1872


def test_t15_fourth_factors():
    s = representatives(15)[3]
    f = total_orbit(s).factors
    assert (f.complement, f.rotation, f.swap, f.dilate) == (2, 15, 12, 4)


def test_representative_idempotent():
    for t in (3, 5, 7):
        for s in representatives(t):
            rec = total_orbit(s)
            assert representative(total_orbit(representative(rec))) == representative(rec)


@pytest.mark.parametrize("t", [3, 5, 7])
def test_members_hadamard_and_orbits_partition(census, t):
    sets = census(t)
    recs = [total_orbit(s) for s in representatives(t)]
    union = set()
    for rec in recs:
        assert not (union & rec.members)
        union |= rec.members
        for m in rec.member_sets():
            assert is_hadamard(assemble(m))
    assert len(union) == len(sets)
    # the orbit of any member is the same orbit
    for rec in recs:
        other = total_orbit(rec.member_sets()[-1], factors=False)
        assert other.members == rec.members


def test_member_sets_are_distinct_matrices():
    rec = total_orbit(representatives(7)[0])
    keys = rec.member_keys()
    assert len(keys) == len(set(keys)) == rec.size


def test_json():
    rec = total_orbit(representatives(5)[0])
    obj = json.loads(rec.to_json(members=True))
    assert obj["size"] == 120 and len(obj["members"]) == 120
    assert obj["factors"]["swap"] == 12
    assert "members" not in json.loads(rec.to_json())


def test_closure_families():
    s = representatives(5)[0]
    rows = to_rows(s)
    assert len(closure(rows, 5, "C")) == 2
    assert len(closure(rows, 5, "CT")) == 10
    assert len(closure(rows, 5, "CTSV")) == 120


def test_paper_style_listing():
    rec = total_orbit(representatives(5)[0])
    assert format_paper_style(rec.representative) == "{{10}, {11}, {8, 16}, {1, 17}}"


def test_asymmetric_orbit_flagged():
    s = CoboundarySet.from_indices(9, ASYMMETRIC_T9)
    assert is_hadamard_set(s)
    with pytest.warns(NoSymmetricMember):
        rec = total_orbit(s)
    assert rec.size == 864 and not rec.symmetric
    assert str(rec.factors) == "2 x 9 x 24 x 2 = 864"


def test_non_product_label():
    rec = total_orbit(representatives(3)[0])
    f = factorize_orbit(rec)
    assert "NON-PRODUCT" not in str(f)
