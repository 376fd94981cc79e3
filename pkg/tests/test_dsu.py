import pytest
from hypothesis import given
from hypothesis import strategies as st

from parbridges.dsu import DisjointSetForest


def test_new_structure_has_singletons():
    assert len(DisjointSetForest(0)) == 0
    assert DisjointSetForest(1).find(0) == 0
    d = DisjointSetForest(3)
    assert len({d.find(0), d.find(1), d.find(2)}) == 3
    assert d.find(2) == 2


def test_union_and_find():
    d = DisjointSetForest(3)
    assert d.union(0, 1) is True
    assert d.find(0) == d.find(1)
    assert d.union(1, 0) is False
    d.union(1, 2)
    assert d.find(2) == d.find(0)


def test_self_union_is_noop():
    d = DisjointSetForest(2)
    assert d.union(0, 0) is False
    assert d.parent == [0, 1] and d.rank == [0, 0]


@pytest.mark.parametrize("op", ["find", "union"])
def test_out_of_range(op):
    d = DisjointSetForest(3)
    with pytest.raises(ValueError):
        d.find(3) if op == "find" else d.union(0, 3)
    with pytest.raises(ValueError):
        d.find(-1) if op == "find" else d.union(-1, 0)


def test_negative_size():
    with pytest.raises(ValueError):
        DisjointSetForest(-1)


def _components(n, edges):
    label = list(range(n))
    changed = True
    while changed:
        changed = False
        for u, v in edges:
            lo = min(label[u], label[v])
            if label[u] != lo or label[v] != lo:
                label[u] = label[v] = lo
                changed = True
    return label


ops = st.integers(1, 12).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=40))
)


@given(ops)
def test_partition_matches_connectivity(case):
    n, edges = case
    d = DisjointSetForest(n)
    roots = n
    for u, v in edges:
        merged = d.union(u, v)
        roots -= merged
        assert d.root_count() == roots
    label = _components(n, edges)
    for a in range(n):
        for b in range(n):
            assert (d.find(a) == d.find(b)) == (label[a] == label[b])
    # no parent cycles except root self-loops
    for v in range(n):
        seen = set()
        while d.parent[v] != v:
            assert v not in seen
            seen.add(v)
            v = d.parent[v]


@given(ops)
def test_union_scan_matches_union(case):
    n, edges = case
    d1, d2 = DisjointSetForest(n), DisjointSetForest(n)
    expected = [i for i, (u, v) in enumerate(edges) if d1.union(u, v)]
    got = d2.union_scan([e[0] for e in edges], [e[1] for e in edges])
    assert got == expected
    skip = [i % 3 == 0 for i in range(len(edges))]
    d3, d4 = DisjointSetForest(n), DisjointSetForest(n)
    expected = [i for i, (u, v) in enumerate(edges) if not skip[i] and d3.union(u, v)]
    assert d4.union_scan([e[0] for e in edges], [e[1] for e in edges], skip) == expected


def test_union_scan_limit():
    d = DisjointSetForest(4)
    assert d.union_scan([0, 1, 2], [1, 2, 3], limit=2) == [0, 1]
    assert d.union_scan([0], [1], limit=0) == []
