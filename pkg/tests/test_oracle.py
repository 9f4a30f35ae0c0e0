import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import load
from strategies import random_dag
from upo import EdgeOrder, build_graph, check_Q, check_U, definitions_agree, enumerate_upos
from upo.errors import TooLarge
from upo.oracle import find_disagreement


def test_vee_admissible(vee):
    g, _ = vee
    for definition in ("u", "q"):
        res = enumerate_upos(g, True, definition)
        assert [o.sequence for o in res.orders] == [("e1", "e2", "e3"), ("e2", "e1", "e3")]
        assert res.exhausted


def test_single_edge():
    g = build_graph("ab", [("e", "a", "b")])
    assert len(enumerate_upos(g)) == 1


def test_nonadmissible_order_excluded():
    g, o = load("nonadmissible.upg")
    assert o in enumerate_upos(g, False, "q")
    assert o not in enumerate_upos(g, True, "q")


def test_admissible_order_included():
    g, o = load("admissible.upg")
    assert o in enumerate_upos(g, True, "q")


def test_limit():
    g = build_graph("abcdef", [("x", "a", "b"), ("y", "c", "d"), ("z", "e", "f")])
    full = enumerate_upos(g)
    assert len(full) == 6 and full.exhausted
    cut = enumerate_upos(g, limit=2)
    assert cut.orders == full.orders[:2] and not cut.exhausted
    assert enumerate_upos(g, limit=6).exhausted


def test_caps():
    vs = [f"v{i}" for i in range(14)]
    chain = build_graph(vs, [(f"e{i:02}", vs[i], vs[i + 1]) for i in range(13)])
    with pytest.raises(TooLarge):
        enumerate_upos(chain)
    assert len(enumerate_upos(chain, force=True)) == 1
    with pytest.raises(TooLarge):
        definitions_agree(chain)


@pytest.mark.parametrize("name", ["vee.upg", "fork.upg", "admissible.upg"])
def test_definitions_agree_fixtures(name):
    assert definitions_agree(load(name)[0])


def test_deterministic(vee):
    g, _ = vee
    assert enumerate_upos(g).orders == enumerate_upos(g).orders


@settings(max_examples=100, deadline=None)
@given(st.randoms(use_true_random=False))
def test_pruning_is_sound(rnd: random.Random):
    g = random_dag(rnd, max_edges=6)
    adm = rnd.random() < 0.5
    definition = rnd.choice("uq")
    fast = enumerate_upos(g, adm, definition)
    slow = enumerate_upos(g, adm, definition, prune=False)
    assert fast.orders == slow.orders


@settings(max_examples=60, deadline=None)
@given(st.randoms(use_true_random=False))
def test_u_and_q_enumerations_coincide(rnd: random.Random):
    g = random_dag(rnd, max_edges=6)
    u = enumerate_upos(g, False, "u").orders
    q = enumerate_upos(g, False, "q").orders
    assert u == q
    for o in u:
        assert check_U(g, o).passed and check_Q(g, o).passed


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_no_disagreement(rnd: random.Random):
    assert find_disagreement(random_dag(rnd, max_edges=5)) is None


def test_empty_graph():
    g = build_graph([], [])
    assert enumerate_upos(g).orders == (EdgeOrder(()),)
