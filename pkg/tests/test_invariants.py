"""Unit tests for toughness, connectivity, independence and the degree predicates."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.generators import complete_multipartite
from src.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    count_components,
    cycle_graph,
    disjoint_union,
    is_independent,
    path_graph,
    petersen_graph,
    popcount,
    vset,
)
from src.invariants import (
    INFINITY,
    alpha_at_least,
    as_rational,
    connectivity,
    connectivity_toughness_bound,
    degree_sum_check,
    dirac_type_check,
    exceeds_insertion_threshold,
    independence_number,
    is_proper_cutset,
    is_t_tough,
    require_cutset,
    toughness,
)
from src.utils.errors import PreconditionError, SizeLimitError
from src.utils.helpers import format_rational, parse_rational


def small_graphs(min_n=2, max_n=7):
    """Random simple graphs on a handful of vertices."""

    def build(n):
        vertex = st.integers(0, n - 1)
        pair = st.tuples(vertex, vertex).filter(lambda e: e[0] != e[1])
        return st.lists(pair, max_size=n * (n - 1) // 2).map(lambda es: Graph.from_edges(n, es))

    return st.integers(min_n, max_n).flatmap(build)


def test_toughness_of_complete_bipartite():
    """Test tau(K_{2,4}) = 1/2 with the smaller side as tough set."""
    cert = toughness(complete_bipartite(2, 4))
    assert cert.value == Fraction(1, 2)
    assert cert.tough_set == vset(0, 1)
    assert cert.components == 4
    assert cert.alpha == 4
    assert cert.to_dict()["value"] == "1/2"


def test_toughness_of_octahedron():
    """Test tau(K_{2,2,2}) = 2, matching the multipartite formula."""
    g = complete_multipartite([2, 2, 2]).graph
    cert = toughness(g)
    assert cert.value == 2
    assert cert.tough_set == vset(0, 1, 2, 3)
    assert complete_multipartite([2, 2, 2]).toughness_bound == cert.value


def test_toughness_conventions():
    """Test complete and disconnected graphs."""
    cert = toughness(complete_graph(5))
    assert cert.value == INFINITY
    assert cert.tough_set is None
    assert cert.is_infinite
    split = toughness(disjoint_union([complete_graph(2), complete_graph(2)]))
    assert split.value == 0
    assert split.tough_set == 0
    assert split.components == 2


def test_toughness_of_cycles_and_petersen():
    """Test well-known values."""
    assert toughness(cycle_graph(5)).value == 1
    assert toughness(path_graph(4)).value == Fraction(1, 2)
    assert toughness(petersen_graph()).value == Fraction(4, 3)


def test_toughness_size_limit():
    """Test the exact-search envelope."""
    with pytest.raises(SizeLimitError) as excinfo:
        toughness(cycle_graph(10), limit=8)
    assert excinfo.value.limit == 8


def test_toughness_limit_from_settings(monkeypatch):
    """Test the envelope is read from the environment."""
    monkeypatch.setenv("TOUGHHAM_EXACT_TOUGHNESS_MAX_N", "6")
    with pytest.raises(SizeLimitError):
        toughness(cycle_graph(7))


def test_is_t_tough():
    """Test the decision form returns a violating set."""
    assert is_t_tough(cycle_graph(5), 1) == (True, None)
    assert is_t_tough(complete_bipartite(2, 4), 1) == (False, vset(0, 1))


def test_connectivity():
    """Test kappa and minimum cuts."""
    kappa, cut = connectivity(cycle_graph(6))
    assert kappa == 2
    assert popcount(cut) == 2
    assert connectivity(complete_graph(5)) == (4, None)
    assert connectivity(disjoint_union([complete_graph(2), complete_graph(1)])) == (0, 0)
    assert connectivity(petersen_graph())[0] == 3


def test_independence_number():
    """Test alpha with its witness."""
    alpha, mask = independence_number(petersen_graph())
    assert alpha == 4
    assert popcount(mask) == 4
    assert is_independent(petersen_graph(), mask)
    assert independence_number(cycle_graph(7))[0] == 3
    assert independence_number(complete_graph(6))[0] == 1


def test_alpha_at_least():
    """Test the lexicographically least independent k-set."""
    g = cycle_graph(6)
    assert alpha_at_least(g, g.vertices, 3) == (0, 2, 4)
    assert alpha_at_least(g, g.vertices, 4) is None


def test_dirac_type_check():
    """Test delta > n/(t+1) - 1."""
    assert dirac_type_check(complete_bipartite(3, 3), 1)
    assert not dirac_type_check(cycle_graph(6), 1)
    with pytest.raises(PreconditionError):
        dirac_type_check(cycle_graph(6), 0)


def test_degree_sum_check():
    """Test the degree-sum condition and its failing pair."""
    assert degree_sum_check(cycle_graph(6), 1) == (False, (0, 2))
    assert degree_sum_check(complete_bipartite(3, 3), 1) == (True, None)
    assert degree_sum_check(cycle_graph(6), math.inf) == (True, None)


def test_insertion_threshold_is_exact():
    """Test the threshold at and around equality."""
    assert exceeds_insertion_threshold(2, 7, Fraction(2))
    assert not exceeds_insertion_threshold(2, 9, Fraction(2))
    assert not exceeds_insertion_threshold(1, 7, Fraction(1))
    assert exceeds_insertion_threshold(0, 100, INFINITY)


def test_cutset_predicates():
    """Test cutset requirements and properness."""
    assert is_proper_cutset(path_graph(3), vset(1))
    assert not is_proper_cutset(path_graph(4), vset(1, 2))
    with pytest.raises(PreconditionError) as excinfo:
        require_cutset(complete_graph(4), vset(0), "test")
    assert excinfo.value.condition == "cutset"


def test_connectivity_toughness_bound_examples():
    """Test kappa >= ceil(2 tau) on fixed graphs."""
    assert connectivity_toughness_bound(cycle_graph(5), Fraction(1))
    assert connectivity_toughness_bound(complete_bipartite(2, 4), Fraction(1, 2))
    assert connectivity_toughness_bound(complete_graph(4), INFINITY)


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_connectivity_bounds_toughness(g):
    """Test kappa >= ceil(2 tau) on random small graphs."""
    assert connectivity_toughness_bound(g, toughness(g).value)


@settings(max_examples=40, deadline=None)
@given(small_graphs(min_n=3))
def test_tough_set_attains_the_value(g):
    """Test the certificate's set really realizes the reported ratio."""
    cert = toughness(g)
    if cert.value in (0, INFINITY):
        return
    w = count_components(g, cert.tough_set)
    assert w == cert.components >= 2
    assert Fraction(popcount(cert.tough_set), w) == cert.value


def test_rationals():
    """Test exact rational coercion and formatting."""
    assert as_rational("3/2") == Fraction(3, 2)
    assert as_rational(math.inf) == INFINITY
    assert as_rational("inf") == INFINITY
    with pytest.raises(TypeError):
        as_rational(0.5)
    assert format_rational(Fraction(3, 2)) == "3/2"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(INFINITY) == "inf"
    assert parse_rational("inf") == INFINITY
    assert parse_rational("15") == 15
