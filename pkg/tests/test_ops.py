import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hadz.cocycle import CoboundarySet, assemble, canonical_key, eight_expressions
from hadz.diagram import symmetry_axes, to_diagram
from hadz.hadamard import is_hadamard
from hadz.ops import (
    SWAP_GENERATORS,
    NotCoprime,
    Operation,
    SwapSpec,
    apply_ops,
    complement,
    compose_swaps,
    coprimes,
    dilate,
    dilate_index,
    from_rows,
    operation_family,
    parse_op,
    parse_ops,
    preserves_hadamard_suite,
    rotate,
    swap,
    to_rows,
)
from hadz.reference import representatives

from conftest import sets_strategy


def grouped(t, groups):
    return CoboundarySet.from_classes(t, groups)


class TestWorkedExamples:
    def test_complement(self):
        s = grouped(7, [[14, 10, 6], [11], [28, 12, 4], [25, 21, 9]])
        assert complement(s) == grouped(7, [[26, 22, 18, 2], [11], [28, 12, 4], [25, 21, 9]])

    def test_rotation(self, worked):
        assert rotate(worked, 2) == grouped(7, [[6, 2, 26], [3], [12, 4, 24], [17, 13, 1]])

    def test_swap23(self, worked):
        out = swap(worked, "23")
        assert out == grouped(7, [[10], [15, 11, 7], [20, 12, 4], [25, 21, 9]])
        assert is_hadamard(assemble(out))

    def test_dilate2(self, worked):
        assert dilate(worked, 2) == grouped(7, [[26, 18, 10], [19], [20, 8, 4], [21, 17, 13]])
        assert dilate_index(20, 2, 7) == 8


class TestLaws:
    def test_identities(self, worked):
        assert rotate(worked, 0) == worked
        assert dilate(worked, 1) == worked
        assert complement(complement(worked)) == worked
        for g in SWAP_GENERATORS:
            assert swap(swap(worked, g), g) == worked

    def test_rotation_group(self, worked):
        for a, b in itertools.product(range(7), repeat=2):
            assert rotate(rotate(worked, a), b) == rotate(worked, (a + b) % 7)

    def test_rotation_range(self, worked):
        with pytest.raises(ValueError):
            rotate(worked, 7)

    def test_complement_class_range(self, worked):
        with pytest.raises(ValueError):
            complement(worked, 5)

    def test_complement_count(self, worked):
        k0 = len(worked.classes()[2])
        assert len(complement(worked).classes()[2]) == 7 - k0

    def test_not_coprime(self):
        s = CoboundarySet.from_indices(9, [2])
        with pytest.raises(NotCoprime):
            dilate(s, 3)

    def test_dilate_bijection(self):
        for t in (5, 7, 9):
            for r in coprimes(t):
                image = [dilate_index(k, r, t) for k in range(1, 4 * t + 1)]
                assert sorted(image) == list(range(1, 4 * t + 1))
                assert all((k - h) % 4 == 0 for k, h in zip(range(1, 4 * t + 1), image))

    def test_swap_shifts_derived(self):
        # s23 sends c2 -> c3 (+1) and c3 -> c2 (-1); s41 sends class 4 to 1 (-3)
        assert SwapSpec.generator("23").shifts == (0, 1, -1, 0)
        assert SwapSpec.generator("41").shifts == (3, 0, 0, -3)
        assert SwapSpec.generator("24").shifts == (0, 2, 0, -2)

    def test_swaps_generate_s4(self):
        rows = (0b001, 0b010, 0b100, 0b011)
        seen = {rows}
        frontier = [rows]
        while frontier:
            cur = frontier.pop()
            for g in SWAP_GENERATORS:
                nxt = SwapSpec.generator(g).apply_rows(cur)
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        assert len(seen) == 24

    def test_compose(self, worked):
        spec = compose_swaps(["23", "34"])
        assert swap(worked, spec) == swap(swap(worked, "23"), "34")

    def test_rows_round_trip(self, worked):
        assert from_rows(7, to_rows(worked)) == worked


@settings(max_examples=200, deadline=None)
@given(sets_strategy((3, 5, 7)), st.data())
def test_commutation_and_well_definedness(s, data):
    t = s.t
    i = data.draw(st.integers(0, t - 1))
    assert complement(rotate(s, i)) == rotate(complement(s), i)
    g = data.draw(st.sampled_from(SWAP_GENERATORS))
    assert swap(rotate(s, i), g) == rotate(swap(s, g), i)
    assert canonical_key(swap(complement(s), g)) == canonical_key(complement(swap(s, g)))
    ops = operation_family(t)
    op = data.draw(st.sampled_from(ops))
    keys = {canonical_key(op(e)) for e in eight_expressions(s)}
    assert len(keys) == 1


@settings(max_examples=200, deadline=None)
@given(sets_strategy((3, 5, 7, 9)), st.data())
def test_symmetry_preserved(s, data):
    op = data.draw(st.sampled_from(operation_family(s.t)))
    if symmetry_axes(to_diagram(s)):
        assert symmetry_axes(to_diagram(op(s)))


class TestParsing:
    def test_parse(self):
        assert parse_ops("C2,T:3,S:23,V:2") == [
            Operation("C", 2), Operation("T", 3), Operation("S", "23"), Operation("V", 2)
        ]
        assert str(parse_op("S:41")) == "S:41"

    @pytest.mark.parametrize("bad", ["C5", "X:1", "S:12", "T:x", ""])
    def test_bad(self, bad):
        with pytest.raises(ValueError):
            parse_op(bad)

    def test_apply_ops_order(self, worked):
        assert apply_ops(worked, parse_ops("T:2,V:2")) == dilate(rotate(worked, 2), 2)


@pytest.mark.parametrize("t", [3, 5])
def test_preservation_exhaustive(census, t):
    sets = census(t)
    for op in operation_family(t):
        rep = preserves_hadamard_suite(op, sets)
        assert rep.ok and rep.checked == len(sets)


def test_preservation_t7_dilatations():
    for s in representatives(7):
        for r in range(1, 7):
            assert is_hadamard(assemble(dilate(s, r)))
