"""Tests for the order-preserving process map."""

from __future__ import annotations

from liecomb.parallel import pmap


def test_serial():
    assert pmap(abs, [-1, 2, -3]) == [1, 2, 3]


def test_processes_keep_order():
    items = list(range(-20, 20))
    assert pmap(abs, items, workers=2) == [abs(x) for x in items]


def test_single_item_stays_in_process():
    assert pmap(len, ["abc"], workers=4) == [3]


def test_empty():
    assert pmap(abs, [], workers=2) == []
