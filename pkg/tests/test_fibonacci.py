import math
import random

import pytest

from padovanheap import FibonacciHeap, FibNode, Oracle
from padovanheap.errors import EmptyHeapError, KeyIncreaseError, StaleHandleError

GOLDEN = (1 + 5 ** 0.5) / 2


def test_fibnode_four_links():
    links = [f for f in FibNode.__slots__ if f in ("parent", "child", "left", "right")]
    assert sorted(links) == ["child", "left", "parent", "right"]
    v = FibNode(3)
    with pytest.raises(AttributeError):
        v.extra = 1


def test_empty():
    h = FibonacciHeap()
    assert h.is_empty() and h.size == 0
    with pytest.raises(EmptyHeapError):
        h.find_min()
    with pytest.raises(EmptyHeapError):
        h.delete_min()


def test_sorted_drain():
    h = FibonacciHeap()
    rng = random.Random(3)
    ks = rng.sample(range(-10**4, 10**4), 500)
    for k in ks:
        h.insert(k)
    out = []
    while not h.is_empty():
        out.append(h.delete_min())
        h.validate()
    assert out == sorted(ks)


def test_consolidation_gives_distinct_degrees():
    h = FibonacciHeap()
    for k in range(64):
        h.insert(k)
    h.delete_min()
    degs = [r.degree for r in h.roots()]
    assert len(degs) == len(set(degs))
    assert all(not r.marked for r in h.roots())
    h.validate()


def test_degree_stays_logarithmic():
    h = FibonacciHeap()
    rng = random.Random(9)
    hs = []
    for k in rng.sample(range(10**6), 3000):
        hs.append(h.insert(k))
    for _ in range(1500):
        h.delete_min()
    bound = int(math.log(h.size) / math.log(GOLDEN)) + 2
    assert h.current_max_degree() <= bound
    assert h.max_degree_seen >= h.current_max_degree()


def test_decrease_key_and_cascading_cuts():
    # chain where repeated decreases force cascading cuts up a marked path
    h = FibonacciHeap()
    hs = {k: h.insert(k) for k in range(32)}
    h.delete_min()  # consolidates into binomial-ish trees
    h.validate()
    rng = random.Random(21)
    live = set(hs) - {0}
    for k in rng.sample(sorted(live), 20):
        h.decrease_key(hs[k], k - 10**6)
        h.validate()
    assert h.find_min().key == min(v.key for v in (hs[k] for k in live))
    # no root is ever marked
    assert all(not r.marked for r in h.roots())


def test_decrease_key_checks():
    h = FibonacciHeap()
    v = h.insert(10)
    with pytest.raises(KeyIncreaseError):
        h.decrease_key(v, 11)
    h.decrease_key(v, 10)  # equal is a no-op path, still legal
    h.delete_min()
    with pytest.raises(StaleHandleError):
        h.decrease_key(v, 0)


def test_delete_arbitrary():
    h = FibonacciHeap()
    hs = {k: h.insert(k) for k in range(40)}
    h.delete_min()
    h.delete(hs[25])
    h.delete(hs[7])
    h.validate()
    out = []
    while not h.is_empty():
        out.append(h.delete_min())
    assert out == [k for k in range(1, 40) if k not in (7, 25)]


def test_meld_consumes_other():
    h1 = FibonacciHeap()
    h2 = FibonacciHeap()
    for k in (5, 1):
        h1.insert(k)
    v = h2.insert(0)
    h1.meld(h2)
    assert h1.size == 3 and h1.find_min().key == 0
    with pytest.raises(StaleHandleError):
        h2.insert(4)
    h1.decrease_key(v, -2)  # handle survives the meld
    assert h1.delete_min() == -2
    h1.validate()


def test_counters_move():
    h = FibonacciHeap()
    for k in range(10):
        h.insert(k)
    assert h.counters.link_writes > 0
    c0 = h.counters.comparisons
    h.delete_min()
    assert h.counters.comparisons > c0


def test_differential_vs_oracle():
    rng = random.Random(1234)
    h = FibonacciHeap()
    o = Oracle()
    pairs = []
    used = set()
    for _ in range(2500):
        op = rng.choices("ifdkx", weights=(40, 10, 20, 25, 5))[0]
        if op == "i" or not pairs:
            k = rng.randint(-10**6, 10**6)
            while k in used:
                k = rng.randint(-10**6, 10**6)
            used.add(k)
            pairs.append([h.insert(k), o.insert(k), k])
        elif op == "f":
            assert h.find_min().key == o.key_of(o.find_min())
        elif op == "d":
            assert h.delete_min() == o.delete_min()
            m = min(p[2] for p in pairs)
            pairs = [p for p in pairs if p[2] != m]
        elif op == "k":
            p = rng.choice(pairs)
            nk = rng.randint(p[2] - 10**6, p[2])
            if nk in used and nk != p[2]:
                continue
            used.add(nk)
            h.decrease_key(p[0], nk)
            o.decrease_key(p[1], nk)
            p[2] = nk
        else:
            i = rng.randrange(len(pairs))
            v, ho, _ = pairs.pop(i)
            h.delete(v)
            o.delete(ho)
        assert h.size == o.size
    h.validate()
