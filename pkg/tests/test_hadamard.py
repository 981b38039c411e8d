import numpy as np
import pytest
from hypothesis import given, settings

from hadz.cocycle import CoboundarySet, assemble, generalized_coboundary_matrix, r_tile, representative_matrix
from hadz.diagram import symmetry_axes, to_diagram
from hadz.hadamard import tested_rows as rows_under_test
from hadz.hadamard import (
    NotSymmetric,
    cocyclic_row_test,
    fast_symmetric_test,
    is_hadamard,
    is_hadamard_set,
    row_identity_check,
    row_stat,
    row_stats,
    walk_decomposition,
)

from conftest import sets_strategy


class TestIsHadamard:
    def test_examples(self):
        assert is_hadamard(assemble(CoboundarySet.from_indices(3, [5, 7, 8])))
        assert not is_hadamard(representative_matrix(3))
        assert is_hadamard(r_tile())

    def test_input_checks(self):
        with pytest.raises(ValueError):
            is_hadamard(np.ones((2, 3)))
        with pytest.raises(ValueError):
            is_hadamard(np.zeros((2, 2)))

    def test_sylvester(self):
        H = np.array([[1, 1], [1, -1]])
        assert is_hadamard(np.kron(H, np.kron(H, H)))


def test_row_test_examples(worked):
    assert cocyclic_row_test(assemble(worked), 7)
    assert not cocyclic_row_test(representative_matrix(7), 7)
    assert list(rows_under_test(7)) == list(range(5, 17))


def test_t3_exhaustive_agreement():
    hits = 0
    for enum in range(1 << 9):
        s = CoboundarySet(3, enum << 1)
        M = assemble(s)
        full = is_hadamard(M)
        assert cocyclic_row_test(M, 3) == full == is_hadamard_set(s)
        assert row_identity_check(s).ok
        hits += full
    assert hits == 24


@settings(max_examples=300, deadline=None)
@given(sets_strategy((5, 7)))
def test_row_test_agrees_sampled(s):
    M = assemble(s)
    assert cocyclic_row_test(M, s.t) == is_hadamard(M) == is_hadamard_set(s)


class TestRowStats:
    def test_worked(self, worked):
        for st in row_stats(worked):
            if st.n % 4 == 1:
                assert (st.c_n, st.I_n, st.r_n) == (7, 0, 0)
            else:
                assert st.c_n == st.I_n and st.r_n == 14
            assert st.identity_lhs == 14

    def test_empty(self):
        for st in row_stats(CoboundarySet(5, 0)):
            assert st.c_n == 0 and st.I_n == 0
        rep = row_identity_check(CoboundarySet(5, 0))
        # R alone balances every row outside the 1 mod 4 ones
        assert all(zero == ident == (n % 4 != 1) for n, zero, ident in rep.rows)

    @settings(max_examples=300, deadline=None)
    @given(sets_strategy((3, 5, 7)))
    def test_bounds_and_identity(self, s):
        for st in row_stats(s):
            assert 0 <= st.I_n <= st.r_n
            assert st.r_n == (0 if st.n % 4 == 1 else 2 * s.t)
        assert row_identity_check(s).ok


class TestWalks:
    def test_components_partition(self, worked):
        for n in rows_under_test(7):
            wd = walk_decomposition(worked, n)
            used = sorted(d for _, comp in wd.components for d in comp)
            assert used == sorted(worked.indices)
            assert len(wd.paths) == row_stat(worked, n).c_n
            for _, comp in wd.components:
                for a, b in zip(comp, comp[1:]):
                    neg_a = set(np.where(generalized_coboundary_matrix(a, 7)[n - 1] == -1)[0])
                    neg_b = set(np.where(generalized_coboundary_matrix(b, 7)[n - 1] == -1)[0])
                    assert neg_a & neg_b

    def test_row_range(self, worked):
        with pytest.raises(ValueError):
            walk_decomposition(worked, 1)

    def test_cycle_detected(self):
        # the four class members of one Z_2^2 block close a cycle in row 2
        s = CoboundarySet.from_indices(3, [1, 2])
        kinds = [k for k, _ in walk_decomposition(s, 2).components]
        assert kinds == ["CYCLE"]


class TestFastSymmetric:
    def test_worked(self, worked):
        assert fast_symmetric_test(worked) and is_hadamard(assemble(worked))

    def test_empty(self):
        assert not fast_symmetric_test(CoboundarySet(5, 0))

    def test_needs_axis(self):
        s = CoboundarySet.from_indices(5, [2, 3, 8])
        assert not symmetry_axes(to_diagram(s))
        with pytest.raises(NotSymmetric):
            fast_symmetric_test(s)

    def test_t5_exhaustive(self):
        for enum in range(1 << 17):
            s = CoboundarySet(5, enum << 1)
            if not symmetry_axes(to_diagram(s)):
                continue
            if fast_symmetric_test(s):
                assert is_hadamard_set(s)
            elif is_hadamard_set(s):
                pytest.fail(f"symmetric Hadamard set {s!r} fails the fast test")
