import pytest

from padovanheap import Oracle
from padovanheap.errors import EmptyHeapError, KeyIncreaseError, StaleHandleError


def test_basic_order():
    o = Oracle()
    for k in (5, 2, 8):
        o.insert(k)
    assert o.key_of(o.find_min()) == 2
    assert o.delete_min() == 2
    assert o.delete_min() == 5
    assert o.delete_min() == 8
    assert o.is_empty()


def test_duplicates_resolve_by_insertion_order():
    o = Oracle()
    h1 = o.insert(1)
    h2 = o.insert(1)
    o.insert(2)
    assert o.find_min() == h1
    assert o.delete_min() == 1
    assert o.find_min() == h2
    assert o.delete_min() == 1
    assert o.delete_min() == 2


def test_decrease_key():
    o = Oracle()
    h = o.insert(10)
    o.insert(5)
    o.decrease_key(h, 3)
    assert o.key_of(h) == 3
    assert o.find_min() == h
    with pytest.raises(KeyIncreaseError):
        o.decrease_key(h, 4)
    o.decrease_key(h, 3)  # equal allowed


def test_delete_and_stale_handles():
    o = Oracle()
    h = o.insert(7)
    o.insert(9)
    o.delete(h)
    assert o.size == 1
    for fn in (o.delete, lambda x: o.decrease_key(x, 0), o.key_of):
        with pytest.raises(StaleHandleError):
            fn(h)


def test_empty_raises():
    o = Oracle()
    with pytest.raises(EmptyHeapError):
        o.find_min()
    with pytest.raises(EmptyHeapError):
        o.delete_min()


def test_meld():
    o1 = Oracle()
    o2 = Oracle()
    h1 = o1.insert(4)
    h2 = o2.insert(1)
    o1.meld(o2)
    assert o1.size == 2
    assert o1.find_min() == h2
    assert o2.size == 0  # consumed
    o1.decrease_key(h1, 0)
    assert o1.delete_min() == 0
    with pytest.raises(ValueError):
        o1.meld(o1)


def test_handles_globally_unique_across_oracles():
    a, b = Oracle(), Oracle()
    ha = a.insert(1)
    hb = b.insert(1)
    assert ha != hb
    a.meld(b)
    assert a.key_of(ha) == a.key_of(hb) == 1
