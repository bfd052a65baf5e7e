"""Orderings against independent closed-form characterizations, plus the
law checker's behavior on healthy and broken relations."""

from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from galoischeck import (
    ORDERS,
    Carrier,
    CarrierKind,
    OrderDef,
    Universe,
    UniverseTooLargeError,
    check_order_laws,
    enum_seqs,
    is_prefix,
    is_sublist,
    is_suffix,
    materialize_carrier,
    pair_prefix,
    product_order,
    seq_list_prefix,
    seq_pair_prefix,
)
from galoischeck.orders import PAIR_PREFIX, SEQ_LIST_PREFIX, SEQ_PAIR_PREFIX

short_seq = st.lists(st.integers(0, 3), max_size=6).map(tuple)


def slice_prefix(ys, xs):
    return xs[: len(ys)] == ys


def selection_sublist(ys, xs):
    return any(tuple(xs[i] for i in combo) == ys
               for combo in combinations(range(len(xs)), len(ys)))


def tail_suffix(s, l):
    return any(l[i:] == s for i in range(len(l) + 1))


@given(short_seq, short_seq)
def test_is_prefix_matches_slice_characterization(ys, xs):
    assert is_prefix(ys, xs) == slice_prefix(ys, xs)


@given(short_seq, short_seq)
def test_is_sublist_matches_selection_characterization(ys, xs):
    assert is_sublist(ys, xs) == selection_sublist(ys, xs)


@given(short_seq, short_seq)
def test_is_suffix_matches_tail_characterization(s, l):
    assert is_suffix(s, l) == tail_suffix(s, l)


def test_frozen_relation_examples():
    assert is_prefix((), (5, 1))
    assert is_prefix((2, 4), (2, 4, 5))
    assert not is_prefix((5,), (2, 4, 5))
    assert is_sublist((5,), (2, 4, 5))
    assert is_sublist((), (2, 4, 5))
    assert not is_sublist((4, 2), (2, 4, 5))
    assert is_suffix((4, 5), (2, 4, 5))
    assert is_suffix((2, 4, 5), (2, 4, 5))
    assert not is_suffix((2, 4), (2, 4, 5))
    assert is_suffix((), ())
    assert product_order((0, ()), (3, (1, 2)))
    assert product_order((2, (2, 4)), (2, (2, 4, 5)))
    assert not product_order((3, (2, 4)), (2, (2, 4, 5)))
    assert pair_prefix((), ((1, 0), (2, 1)))
    assert pair_prefix(((1, 0),), ((1, 0), (2, 1)))
    assert not pair_prefix(((2, 1),), ((1, 0), (2, 1)))


def test_prefix_implies_sublist_exhaustively():
    seqs = list(enum_seqs(Universe(2, 4)))
    for ys in seqs:
        for xs in seqs:
            if is_prefix(ys, xs):
                assert is_sublist(ys, xs)


def test_prefix_concatenation_characterization_exhaustively():
    seqs = list(enum_seqs(Universe(2, 3)))
    for ys in seqs:
        for xs in seqs:
            splits = any(ys + zs == xs for zs in seqs)
            assert is_prefix(ys, xs) == splits


@pytest.mark.parametrize("order", [
    ORDERS["prefix"], ORDERS["sublist"], ORDERS["suffix"],
    ORDERS["product"], ORDERS["pair-prefix"], SEQ_PAIR_PREFIX,
    SEQ_LIST_PREFIX,
])
@pytest.mark.parametrize("k,L", [(2, 4), (3, 3)])
def test_below_generators_are_complete_and_sound(order, k, L):
    u = Universe(k, L)
    elems = materialize_carrier(order.carrier, u)
    for y in elems:
        generated = set(order.below(y, u))
        scanned = {x for x in elems if order.leq(x, y)}
        assert generated == scanned


@pytest.mark.parametrize("name,least", [
    ("prefix", ()), ("sublist", ()), ("suffix", ()),
    ("product", (0, ())), ("pair-prefix", ()),
])
def test_order_laws_pass_with_expected_least(name, least):
    report = check_order_laws(ORDERS[name], Universe(2, 4))
    assert report.ok
    assert report.reflexive.ok and report.transitive.ok
    assert report.antisymmetric.ok
    assert report.least_element == least


def test_always_true_relation_fails_antisymmetry_with_first_witness():
    loose = OrderDef("loose", lambda a, b: True, Carrier(CarrierKind.SEQ))
    report = check_order_laws(loose, Universe(1, 1))
    assert report.reflexive.ok and report.transitive.ok
    assert not report.antisymmetric.ok
    assert report.antisymmetric.counterexample == (("x", ()), ("y", (0,)))
    assert report.least_element is None  # two bottoms, no unique least


def test_non_reflexive_relation_reports_first_element():
    strict = OrderDef("strict-len", lambda a, b: len(a) < len(b),
                      Carrier(CarrierKind.SEQ))
    report = check_order_laws(strict, Universe(2, 2))
    assert not report.reflexive.ok
    assert report.reflexive.counterexample == (("x", ()),)


def test_non_transitive_relation_reports_first_chain():
    def step(a, b):
        return is_prefix(a, b) and len(b) - len(a) <= 1

    gap = OrderDef("prefix-step", step, Carrier(CarrierKind.SEQ))
    report = check_order_laws(gap, Universe(1, 2))
    assert report.reflexive.ok and report.antisymmetric.ok
    assert not report.transitive.ok
    assert report.transitive.counterexample == (
        ("x", ()), ("y", (0,)), ("z", (0, 0)))


def test_fallback_scan_budget_is_projected_upfront():
    blind = OrderDef("blind-prefix", is_prefix, Carrier(CarrierKind.SEQ))
    with pytest.raises(UniverseTooLargeError) as exc:
        check_order_laws(blind, Universe(2, 5), budget=1000)
    assert exc.value.projected == 63 + 63**2 + 63**3


def test_generator_scan_budget_is_enforced_live():
    with pytest.raises(UniverseTooLargeError):
        check_order_laws(ORDERS["prefix"], Universe(2, 3), budget=10)


def test_lying_generator_is_rejected():
    lying = OrderDef("lying", is_prefix, Carrier(CarrierKind.SEQ),
                     below=lambda y, u: [(0,)])
    with pytest.raises(ValueError, match="not below"):
        check_order_laws(lying, Universe(2, 2))


def test_out_of_carrier_generator_is_rejected():
    rogue = OrderDef("rogue", lambda a, b: True, Carrier(CarrierKind.SEQ),
                     below=lambda y, u: [(99,)])
    with pytest.raises(ValueError, match="outside the carrier"):
        check_order_laws(rogue, Universe(2, 2))


def test_composite_prefix_orders_delegate_componentwise():
    assert seq_pair_prefix(((0,), ()), ((0, 1), (1,)))
    assert not seq_pair_prefix(((1,), ()), ((0, 1), (1,)))
    assert seq_list_prefix(((0,),), ((0,), (1, 1)))
    assert not seq_list_prefix(((1, 1),), ((0,), (1, 1)))
