import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dpcolor.covers import Cover, diagonal_cover, uniform_assignment
from dpcolor.errors import (
    BudgetExceededError,
    EmptyListError,
    NotInListError,
    PartialAssignmentError,
)
from dpcolor.graphs import build_graph
from dpcolor.solver import (
    brute_force_rep_set,
    dp_chromatic,
    find_rep_set,
    impropriety,
    is_dp_colorable,
    list_relaxed_colorable,
    max_impropriety,
)

from oracles import relaxed_list_colorable
from strategies import covers


def k2():
    return build_graph(2, [(0, 1)])


def c4():
    return build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def k4():
    return build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def twisted_c4():
    """Identity matchings on three edges of C4, the swap on the fourth."""
    lists = uniform_assignment(4, 2)
    matchings = []
    for edge in c4().edges:
        if edge == (0, 3):
            matchings.append(((1, 2), (2, 1)))
        else:
            matchings.append(((1, 1), (2, 2)))
    return Cover(graph=c4(), lists=lists, matchings=tuple(matchings))


def test_impropriety_of_proper_choice():
    cover = diagonal_cover(k2(), uniform_assignment(2, 2))
    assert impropriety(cover, (1, 2)) == (0, 0)


def test_impropriety_of_clashing_choice():
    cover = diagonal_cover(k2(), uniform_assignment(2, 2))
    assert impropriety(cover, (1, 1)) == (1, 1)


def test_impropriety_on_k3_single_color():
    k3 = build_graph(3, [(0, 1), (1, 2), (2, 0)])
    cover = diagonal_cover(k3, ((1,), (1,), (1,)))
    assert impropriety(cover, (1, 1, 1)) == (2, 2, 2)


def test_impropriety_rejects_bad_inputs():
    cover = diagonal_cover(k2(), uniform_assignment(2, 2))
    with pytest.raises(NotInListError):
        impropriety(cover, (1, 9))
    with pytest.raises(PartialAssignmentError):
        impropriety(cover, (1,))


def test_k4_two_lists_needs_impropriety_one():
    cover = diagonal_cover(k4(), uniform_assignment(4, 2))
    # brute check over all 16 assignments: d=0 impossible, d=1 possible
    assert brute_force_rep_set(cover, 0) is None
    rep = find_rep_set(cover, 1)
    assert rep is not None and max_impropriety(cover, rep) == 1


def test_twisted_c4_unsolvable_at_d0():
    cover = twisted_c4()
    assert find_rep_set(cover, 0) is None
    assert brute_force_rep_set(cover, 0) is None
    assert find_rep_set(cover, 1) is not None


def test_empty_graph_has_empty_rep_set():
    cover = diagonal_cover(build_graph(0, []), ())
    assert find_rep_set(cover, 0) == ()
    assert brute_force_rep_set(cover, 0) == ()


def test_empty_list_is_its_own_error():
    cover = diagonal_cover(k2(), ((1, 2), ()))
    with pytest.raises(EmptyListError):
        find_rep_set(cover, 0)
    with pytest.raises(EmptyListError):
        brute_force_rep_set(cover, 0)


def test_single_vertex():
    cover = diagonal_cover(build_graph(1, []), ((1, 2, 3),))
    assert find_rep_set(cover, 0) is not None


def test_brute_force_budget():
    cover = diagonal_cover(k4(), uniform_assignment(4, 3))
    with pytest.raises(BudgetExceededError):
        brute_force_rep_set(cover, 0, budget=10)


def test_find_rep_set_budget():
    cover = diagonal_cover(k4(), uniform_assignment(4, 3))
    with pytest.raises(BudgetExceededError):
        find_rep_set(cover, 0, budget=1)


def test_c4_not_dp_2_colorable():
    result = is_dp_colorable(c4(), 2, 0)
    assert not result.colorable
    assert brute_force_rep_set(result.witness, 0) is None


def test_k3_dp_3_colorable_exhaustively():
    result = is_dp_colorable(build_graph(3, [(0, 1), (1, 2), (2, 0)]), 3, 0)
    assert result.colorable and result.covers_checked == 6**3


def test_k1_dp_1_colorable():
    assert is_dp_colorable(build_graph(1, []), 1, 0).colorable


def test_sampled_mode_is_deterministic():
    a = is_dp_colorable(c4(), 2, 0, samples=20, seed=5)
    b = is_dp_colorable(c4(), 2, 0, samples=20, seed=5)
    assert a == b


def test_dp_chromatic_values():
    assert dp_chromatic(build_graph(1, [])) == 1
    assert dp_chromatic(c4()) == 3
    assert dp_chromatic(k4()) == 4


def test_renaming_reduction_agrees_with_full_enumeration():
    cases = [
        (c4(), 2), (c4(), 3),
        (build_graph(3, [(0, 1), (1, 2), (2, 0)]), 2),
        (build_graph(3, [(0, 1), (1, 2)]), 2),
        (k4(), 2),
    ]
    for g, k in cases:
        for d in (0, 1):
            full = is_dp_colorable(g, k, d)
            fast = is_dp_colorable(g, k, d, reduce_by_renaming=True)
            assert full.colorable == fast.colorable, (g.edges, k, d)
            assert fast.covers_checked <= full.covers_checked


def test_list_relaxed_on_even_cycle():
    coloring = list_relaxed_colorable(c4(), uniform_assignment(4, 2), 0)
    assert coloring is not None
    assert coloring[0] != coloring[1] != coloring[2] != coloring[3] != coloring[0]


def test_list_relaxed_on_k4_two_colors():
    assert list_relaxed_colorable(k4(), uniform_assignment(4, 2), 1) is not None
    assert list_relaxed_colorable(k4(), uniform_assignment(4, 2), 0) is None


@settings(max_examples=100, deadline=None)
@given(covers(max_n=6, max_k=3), st.integers(min_value=0, max_value=1))
def test_solver_agrees_with_brute_force(cover, d):
    fast = find_rep_set(cover, d)
    slow = brute_force_rep_set(cover, d)
    assert (fast is None) == (slow is None)
    if fast is not None:
        assert max_impropriety(cover, fast) <= d


@settings(max_examples=60, deadline=None)
@given(covers(max_n=5, max_k=3))
def test_colorable_is_monotone_in_d(cover):
    if find_rep_set(cover, 0) is not None:
        assert find_rep_set(cover, 1) is not None


@settings(max_examples=40, deadline=None)
@given(covers(max_n=5, max_k=3, perfect=True), st.randoms(use_true_random=False))
def test_fiber_renaming_preserves_answers(cover, rng):
    """Permuting colors inside one fiber (rewriting its matchings) changes nothing."""
    g = cover.graph
    v = rng.randrange(g.n)
    colors = list(cover.lists[v])
    shuffled = colors[:]
    rng.shuffle(shuffled)
    mapping = dict(zip(colors, shuffled))
    matchings = []
    for (a, b), matching in zip(g.edges, cover.matchings):
        if a == v:
            matching = tuple(sorted((mapping[p], q) for p, q in matching))
        elif b == v:
            matching = tuple(sorted((p, mapping[q]) for p, q in matching))
        matchings.append(matching)
    renamed = Cover(graph=g, lists=cover.lists, matchings=tuple(matchings))
    for d in (0, 1):
        assert (find_rep_set(cover, d) is None) == (find_rep_set(renamed, d) is None)


def test_dp_chromatic_covers_list_coloring_needs():
    """Wherever dp_chromatic(G) = k, the plain k-list instance is colorable.

    Scoped to graphs on 5 vertices with at most 7 edges: confirming the
    yes-side of dp_chromatic at k needs (k!)^(m-n+1) covers even after the
    renaming reduction, which rules out the densest cases (K5 at k = 5
    would take 120^6 covers).
    """
    from itertools import combinations

    pairs = list(combinations(range(5), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        if len(edges) > 7:
            continue
        key = frozenset(edges)
        from itertools import permutations

        canon = min(
            tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in key))
            for perm in permutations(range(5))
        )
        if canon in seen:
            continue
        seen.add(canon)
        g = build_graph(5, edges)
        k = dp_chromatic(g)
        lists = uniform_assignment(5, k)
        assert find_rep_set(diagonal_cover(g, lists), 0) is not None, edges


def test_diagonal_equivalence_with_direct_list_search():
    # spot-check the diagonal reduction against the independent oracle
    for g in (c4(), k4(), build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])):
        for k in (2, 3):
            for d in (0, 1):
                lists = uniform_assignment(g.n, k)
                ours = list_relaxed_colorable(g, lists, d)
                ref = relaxed_list_colorable(g, lists, d)
                assert (ours is None) == (ref is None)
