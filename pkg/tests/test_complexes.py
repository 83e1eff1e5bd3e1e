import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geoph.complexes import (
    FilteredComplex,
    all_faces_closure,
    close_under_faces,
    euler_characteristic,
    faces,
    order_key,
    simplex,
)

from helpers import random_filtered_entries


class TestSimplex:
    def test_canonical_sorts_vertices(self):
        assert simplex([2, 0, 1]) == (0, 1, 2)
        assert simplex((5,)) == (5,)

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            simplex([])
        with pytest.raises(ValueError):
            simplex([0, 1, 2, 3])
        with pytest.raises(ValueError):
            simplex([1, 1])
        with pytest.raises(ValueError):
            simplex([-1, 0])

    def test_faces(self):
        assert faces((3,)) == []
        assert faces((1, 4)) == [(4,), (1,)]
        assert set(faces((0, 1, 2))) == {(0, 1), (0, 2), (1, 2)}


class TestCloseUnderFaces:
    def test_triangle_alone_pulls_in_all_faces(self):
        fc = close_under_faces([((0, 1, 2), 1.0)])
        assert len(fc) == 7
        assert all(v == 1.0 for _, v in fc)

    def test_missing_vertex_inherits_min_coface_value(self):
        fc = close_under_faces([((0, 1), 2.0), ((1,), 1.0)])
        assert fc.value_of((0,)) == 2.0
        assert fc.value_of((1,)) == 1.0  # smaller own value survives

    def test_face_lowered_to_keep_monotonicity(self):
        fc = close_under_faces([((0,), 5.0), ((0, 1), 2.0)])
        assert fc.value_of((0,)) == 2.0

    def test_duplicates_keep_smallest_value(self):
        fc = close_under_faces([((0,), 3.0), ((0,), 1.0)])
        assert fc.value_of((0,)) == 1.0

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            close_under_faces([((0,), math.inf)])

    @given(st.integers(0, 10_000))
    @settings(max_examples=60, deadline=None)
    def test_idempotent_and_valid_on_random_input(self, seed):
        rng = random.Random(seed)
        entries = random_filtered_entries(rng, max_vertices=7)
        fc = close_under_faces(entries)
        again = close_under_faces(fc.entries)
        assert fc == again
        # Validity is what the strict constructor checks.
        FilteredComplex(fc.entries)


class TestFilteredComplex:
    def test_strict_constructor_rejects_missing_face(self):
        with pytest.raises(ValueError, match="not closed"):
            FilteredComplex([((0, 1), 1.0), ((0,), 0.0)])

    def test_strict_constructor_rejects_non_monotone(self):
        with pytest.raises(ValueError, match="monotone"):
            FilteredComplex([((0,), 2.0), ((1,), 0.0), ((0, 1), 1.0)])

    def test_strict_constructor_rejects_duplicates(self):
        with pytest.raises(ValueError, match="duplicate"):
            FilteredComplex([((0,), 0.0), ((0,), 1.0)])

    def test_order_is_value_then_dim_then_lex(self):
        fc = close_under_faces(
            [((0,), 0.0), ((1,), 0.0), ((2,), 0.0), ((0, 1, 2), 0.0), ((3,), 2.0)]
        )
        keys = [order_key(e) for e in fc.entries]
        assert keys == sorted(keys)
        dims = [len(s) for s, v in fc.entries if v == 0.0]
        assert dims == sorted(dims)  # faces precede cofaces at equal value

    def test_complex_at_is_nested(self):
        rng = random.Random(7)
        fc = close_under_faces(random_filtered_entries(rng))
        values = fc.distinct_values()
        prev: set = set()
        for t in values:
            cur = fc.complex_at(t)
            assert prev <= cur
            prev = cur
        assert prev == set(fc.simplices())
        assert fc.complex_at(values[0] - 1.0) == set()

    def test_counts_and_euler(self):
        fc = close_under_faces([((0, 1, 2), 1.0), ((3,), 0.0)])
        assert fc.counts() == (4, 3, 1)
        assert euler_characteristic(fc.simplices()) == 4 - 3 + 1

    def test_text_round_trip(self):
        fc = close_under_faces(
            [((0, 1), 1.5), ((1, 2), 2.5), ((0,), 0.0), ((2,), 0.25)]
        )
        text = fc.to_text()
        for line in text.strip().splitlines():
            verts, value = line.split("\t")
            assert all(p.isdigit() for p in verts.split(","))
            float(value)
        assert FilteredComplex.from_text(text) == fc

    def test_from_text_rejects_garbage(self):
        with pytest.raises(ValueError, match="line 1"):
            FilteredComplex.from_text("0;1 2.0\n")

    def test_all_faces_closure(self):
        assert all_faces_closure([(0, 1, 2)]) == {
            (0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2),
        }
