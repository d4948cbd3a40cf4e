import pytest

from rainbowtrees import (
    JLbTree,
    class_sizes,
    count_rst_bruteforce,
    count_rst_jl,
    enumerate_jlb_trees,
    jlb_tree_to_coloring,
    max_bip_tree,
    min_bip_coloring,
    min_bip_tree,
    nu_max_formula,
    nu_max_oracle,
    nu_min_formula,
    verify_jl,
)
from rainbowtrees.jl_bipartite import bip_table_csv, jlb_tree_dot

from helpers import class_product, color_partition

# deduped enumeration counts, frozen from the oracle run
GOLDEN_TREE_COUNTS = {
    (1, 1): 1,
    (2, 1): 1,
    (2, 2): 3,
    (3, 2): 5,
    (3, 3): 14,
    (4, 2): 8,
    (4, 3): 31,
    (4, 4): 93,
    (5, 2): 11,
    (5, 3): 59,
    (6, 2): 15,
    (7, 1): 1,
}


def leaf(a, b):
    return JLbTree((a, b))


def product(sizes):
    out = 1
    for s in sizes:
        out *= s
    return out


def test_leaf_labels_enforced():
    with pytest.raises(ValueError):
        JLbTree((2, 0))
    with pytest.raises(ValueError):
        JLbTree((0, 0))
    with pytest.raises(ValueError):
        JLbTree((1, 1))  # (1,1) cannot be a leaf


def test_children_must_sum():
    with pytest.raises(ValueError):
        JLbTree((2, 1), (leaf(1, 0), leaf(0, 1)))


def test_class_sizes_single_edge():
    t = JLbTree((1, 1), (leaf(1, 0), leaf(0, 1)))
    assert class_sizes(t) == [1]


def test_class_sizes_hand_tree_2_2():
    inner11 = JLbTree((1, 1), (leaf(1, 0), leaf(0, 1)))
    mid = JLbTree((1, 2), (leaf(0, 1), inner11))
    t = JLbTree((2, 2), (leaf(1, 0), mid))
    assert class_sizes(t) == [1, 1, 2]


def test_class_sizes_sum_and_count():
    for n, m in [(2, 2), (3, 2), (3, 3), (4, 2)]:
        for t in enumerate_jlb_trees(n, m):
            sizes = class_sizes(t)
            assert sum(sizes) == n * m
            assert len(sizes) == n + m - 1
            assert all(s >= 1 for s in sizes)


def test_nu_max_formula_examples():
    assert nu_max_formula(1, 1) == 1
    assert nu_max_formula(3, 2) == 4
    assert nu_max_formula(2, 2) == 2


def test_nu_max_formula_rejects_unoriented():
    with pytest.raises(ValueError):
        nu_max_formula(2, 3)


def test_nu_min_formula_examples():
    assert nu_min_formula(2, 3) == 3
    assert nu_min_formula(1, 1) == 1
    assert nu_min_formula(2, 2) == 2


def test_nu_max_oracle_examples():
    assert nu_max_oracle(2, 2).nu == 2
    assert nu_max_oracle(1, 1).nu == 1
    record = nu_max_oracle(3, 2)
    assert record.nu == 4
    assert (1, 0) in [child.label for child in record.witness.children]


def test_nu_max_oracle_witness_product():
    for n, m in [(1, 1), (2, 2), (3, 2), (4, 2), (4, 3), (5, 4)]:
        record = nu_max_oracle(n, m)
        assert product(class_sizes(record.witness)) == record.nu


def test_nu_oracle_matches_formula_small():
    for total in range(2, 10):
        for m in range(1, total):
            n = total - m
            if n < m:
                continue
            assert nu_max_oracle(n, m).nu == nu_max_formula(n, m)


def test_min_bip_coloring_examples():
    g = min_bip_coloring(2, 3)
    sizes = sorted(__import__("collections").Counter(c for _, _, c in g.edges).values())
    assert sizes == [1, 1, 1, 3]
    assert class_product(g) == 3
    g11 = min_bip_coloring(1, 1)
    assert g11.edges == ((0, 1, 1),)
    g33 = min_bip_coloring(3, 3)
    sizes33 = sorted(__import__("collections").Counter(c for _, _, c in g33.edges).values())
    assert sizes33 == [1, 1, 1, 1, 5]


def test_min_bip_coloring_verifies_and_attains_bound():
    for n, m in [(1, 1), (2, 2), (2, 3), (3, 3), (4, 2), (3, 4)]:
        g = min_bip_coloring(n, m)
        assert verify_jl(g).ok
        assert count_rst_jl(g) == nu_min_formula(n, m)


def test_min_bip_tree_matches_peeling_rule():
    t = min_bip_tree(2, 3)
    assert [child.label for child in t.children] == [(1, 2), (1, 1)]
    assert color_partition(min_bip_coloring(2, 3)) == color_partition(
        jlb_tree_to_coloring(t)
    )


def test_max_bip_tree_examples():
    assert product(class_sizes(max_bip_tree(3, 2))) == 4
    assert product(class_sizes(max_bip_tree(1, 1))) == 1
    assert class_sizes(max_bip_tree(4, 2)) == [1, 1, 2, 2, 2]
    assert product(class_sizes(max_bip_tree(4, 2))) == 8 == nu_max_formula(4, 2)


def test_max_bip_tree_rejects_unoriented():
    with pytest.raises(ValueError):
        max_bip_tree(2, 3)


def test_max_bip_tree_matches_formula():
    for n, m in [(2, 1), (3, 2), (4, 3), (5, 2), (5, 5), (6, 3)]:
        assert product(class_sizes(max_bip_tree(n, m))) == nu_max_formula(n, m)


def test_jlb_coloring_single_edge():
    t = JLbTree((1, 1), (leaf(1, 0), leaf(0, 1)))
    g = jlb_tree_to_coloring(t)
    assert g.vertex_count == 2 and g.edges == ((0, 1, 1),)


def test_jlb_coloring_covers_every_edge():
    for t in enumerate_jlb_trees(3, 2):
        g = jlb_tree_to_coloring(t)
        assert len(g.edges) == 6
        assert all(u < 3 <= v for u, v, _ in g.edges)


def test_jlb_colorings_verify_and_match_bruteforce():
    for n, m in [(1, 1), (2, 2), (3, 2), (4, 3), (5, 2)]:
        for t in enumerate_jlb_trees(n, m):
            g = jlb_tree_to_coloring(t)
            assert verify_jl(g).ok
            expected = product(class_sizes(t))
            assert count_rst_jl(g) == expected
            assert count_rst_bruteforce(g) == expected


def test_enumeration_counts_golden():
    for (n, m), expected in GOLDEN_TREE_COUNTS.items():
        assert len(list(enumerate_jlb_trees(n, m))) == expected


def test_enumeration_2_2_products():
    products = [product(class_sizes(t)) for t in enumerate_jlb_trees(2, 2)]
    assert min(products) == 2 and max(products) == 2


def test_enumeration_extremes_match_formulas():
    for n, m in [(2, 2), (3, 2), (3, 3), (4, 2), (4, 3), (5, 2)]:
        products = [product(class_sizes(t)) for t in enumerate_jlb_trees(n, m)]
        assert min(products) == nu_min_formula(n, m)
        assert max(products) == nu_max_formula(n, m)


def test_enumeration_deterministic_and_unique():
    first = list(enumerate_jlb_trees(3, 3))
    second = list(enumerate_jlb_trees(3, 3))
    assert first == second
    assert len(set(first)) == len(first)


def test_bip_csv():
    assert bip_table_csv(3, 2) == "n,m,nu_min,nu_max\n3,2,3,4\n"
    # orientation-normalized
    assert bip_table_csv(2, 3) == bip_table_csv(3, 2)


def test_jlb_dot():
    dot = jlb_tree_dot(max_bip_tree(2, 1))
    assert dot.startswith("digraph")
    assert '[label="(2,1)"]' in dot
    assert '[label="(1,0)"]' in dot and '[label="(0,1)"]' in dot
