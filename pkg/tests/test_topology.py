import random

import pytest
from hypothesis import given, settings, strategies as st

from wicks import errors
from wicks.topology import NEGATIVE, dual, glue, vertex_signs
from wicks.words import validate

from conftest import random_valid_form


def union_find_vertices(f):
    """Count polygon corners up to the side identifications, directly."""
    n = f.length
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    where = {x: i for i, x in enumerate(f.word)}
    for i, x in enumerate(f.word):
        j = where[x.inverse()]
        # side i (P_i -> P_{i+1}) is glued reversed onto side j
        for a, b in ((i, (j + 1) % n), ((i + 1) % n, j)):
            parent[find(a)] = find(b)
    return len({find(i) for i in range(n)})


def test_glue_genus_one(genus1):
    m = glue(genus1)
    assert (m.v, m.e, m.genus) == (2, 3, 1)
    assert sorted(m.degrees()) == [3, 3]


def test_glue_genus_two_maximal(forms2):
    for f in forms2:
        m = glue(f)
        assert (m.v, m.e, m.genus) == (6, 9, 2)


def test_glue_genus_two_minimal():
    m = glue(validate("a1 b1 a1' b1' a2 b2 a2' b2'"))
    assert (m.v, m.e, m.genus) == (1, 4, 2)
    assert m.degrees() == [8]


def test_edge_pairing_is_fixed_point_free_involution(forms2):
    for f in forms2:
        p = glue(f).edge_pairing
        assert all(p[p[i]] == i and p[i] != i for i in range(len(p)))


def test_signs_genus_one(genus1):
    assert vertex_signs(genus1).counts == (0, 2)


def test_signs_prop_2_1(forms2, forms3):
    for g, forms in ((2, forms2), (3, forms3)):
        for f in forms:
            assert vertex_signs(f).counts == (2 * (g - 1), 2 * g)


def test_signs_require_maximal():
    with pytest.raises(errors.NotMaximal):
        vertex_signs(validate("a b a' b'"))


def test_dual_counts(genus1, forms2):
    d = dual(genus1)
    assert (d.vertices, len(d.edges), len(d.triangles)) == (1, 3, 2)
    assert d.euler_characteristic() == 0
    d = dual(forms2[0])
    assert (len(d.edges), len(d.triangles), d.euler_characteristic()) == (9, 6, -2)


def test_dual_adjacency_matches_graph(forms2):
    for f in forms2:
        d = dual(f)
        for base, (t1, t2) in d.edges.items():
            # triangles meeting along an edge both list it as a side
            assert base in d.triangles[t1] and base in d.triangles[t2]
        for tri in d.triangles:
            assert len(tri) == 3


def test_dual_euler_algebra():
    for g in (1, 2, 5, 17):
        assert 1 - (6 * g - 3) + (4 * g - 2) == 2 - 2 * g


def test_dual_requires_maximal():
    with pytest.raises(errors.NotMaximal):
        dual(validate("a b a' b'"))


def test_json_shapes(genus1):
    j = glue(genus1).to_json()
    assert j["vertex_cycles"] == [[0, 4, 2], [1, 5, 3]]
    assert j["edge_pairing"] == [3, 4, 5, 0, 1, 2]


def test_euler_fuzz_1000():
    rng = random.Random(20261019)
    for _ in range(1000):
        f = random_valid_form(rng, rng.randint(2, 10))
        m = glue(f)
        assert m.v == union_find_vertices(f)
        assert m.v - m.e + 1 == 2 - 2 * m.genus
        assert min(m.degrees()) >= 3
        assert 4 * m.genus <= f.length <= 6 * (2 * m.genus - 1)
        assert f.is_maximal == (set(m.degrees()) == {3}) == (f.length == 12 * m.genus - 6)


@settings(max_examples=150, deadline=None)
@given(seed=st.integers(0, 2**32 - 1), k=st.integers(0, 30))
def test_genus_invariant_under_rotation(seed, k):
    f = random_valid_form(random.Random(seed), 7)
    assert validate(f.word.rotate(k)).genus == f.genus
