import json

import pytest
from hypothesis import given, settings, strategies as st

from hyperanimals import DomainError, PartialLayerError, new_context, pmin
from hyperanimals.spiral import boundary_degree_word, grow_to, new_animal, perimeter_sequence
from hyperanimals.words import substitute_degree_word

from conftest import REPRESENTATIVES, sig_id


def test_single_tiles():
    st4 = new_animal(new_context(4, 5))
    assert st4.perimeter == 4
    assert str(boundary_degree_word(st4)) == "2222"
    assert new_animal(new_context(3, 7)).perimeter == 3
    assert str(boundary_degree_word(new_animal(new_context(3, 7)))) == "222"
    assert new_animal(new_context(7, 3)).perimeter == 7


def test_growth_values():
    assert grow_to(new_animal(new_context(4, 5)), 13).perimeter == 20
    s = grow_to(new_animal(new_context(7, 3)), 8)
    assert s.perimeter == 28
    assert s.interior_edges == 14
    assert grow_to(new_animal(new_context(4, 5)), 14).perimeter == 22


def test_second_layer_words():
    s = grow_to(new_animal(new_context(4, 5)), 13)
    assert boundary_degree_word(s).is_rotation_of(substitute_degree_word(new_context(4, 5), 2))
    s = grow_to(new_animal(new_context(7, 3)), 8)
    w = boundary_degree_word(s)
    assert w.is_rotation_of(substitute_degree_word(new_context(7, 3), 2))
    assert str(w) in ("3222" * 7) * 2


def test_mid_layer_word_raises_with_payload():
    s = grow_to(new_animal(new_context(4, 5)), 14)
    with pytest.raises(PartialLayerError) as info:
        boundary_degree_word(s)
    assert len(info.value.word) == s.perimeter


def test_cannot_shrink():
    s = grow_to(new_animal(new_context(4, 5)), 5)
    with pytest.raises(DomainError):
        grow_to(s, 3)


def test_spherical_rejected():
    with pytest.raises(Exception):
        new_animal(new_context(3, 5))


@pytest.mark.parametrize("pq", REPRESENTATIVES, ids=sig_id)
def test_layers_match_sequences(pq):
    ctx = new_context(*pq)
    s = new_animal(ctx)
    for k in range(1, 5):
        grow_to(s, ctx.n_k(k))
        assert s.layer_complete
        assert s.perimeter == ctx.P_k(k)
        assert boundary_degree_word(s).is_rotation_of(substitute_degree_word(ctx, k))


@pytest.mark.parametrize("pq", REPRESENTATIVES, ids=sig_id)
def test_edge_conservation_and_local_structure(pq):
    ctx = new_context(*pq)
    s = new_animal(ctx)
    for _ in range(min(ctx.n_k(4), 800)):
        s.attach()
        assert ctx.p * s.n == 2 * s.interior_edges + s.perimeter
        assert len(s.boundary_cycle()) == s.perimeter
    assert max(s.count) <= ctx.q
    # interior vertices are saturated
    assert all(c == ctx.q for v, c in enumerate(s.count) if not s.is_boundary(v))
    # every edge used once or twice
    assert {len(t) for t in s.edges.values()} <= {1, 2}


@pytest.mark.parametrize("pq", [(3, 6), (4, 4), (6, 3)])
def test_euclidean_spirals(pq):
    ctx = new_context(*pq)
    seq = perimeter_sequence(ctx, 1000)
    assert seq == [pmin(ctx, n) for n in range(1, 1001)]


def test_determinism():
    a = grow_to(new_animal(new_context(5, 4)), 90).to_json()
    b = grow_to(new_animal(new_context(5, 4)), 90).to_json()
    assert a == b


def test_snapshot_contents():
    s = grow_to(new_animal(new_context(4, 5)), 14)
    snap = json.loads(s.to_json())
    assert snap["n"] == 14 and snap["perimeter"] == 22
    assert snap["layer_complete"] is False
    assert len(snap["tiles"]) == 14
    assert len(snap["boundary"]) == 22
    assert sum(1 for _, _, c in snap["edges"] if c == 1) == 22
    assert len(snap["vertex_tile_counts"]) == 1 + max(max(t) for t in snap["tiles"])


@settings(max_examples=40)
@given(st.sampled_from(REPRESENTATIVES), st.integers(min_value=1, max_value=600))
def test_perimeter_equals_formula(pq, n):
    ctx = new_context(*pq)
    assert grow_to(new_animal(ctx), n).perimeter == pmin(ctx, n)
