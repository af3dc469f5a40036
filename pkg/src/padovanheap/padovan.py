"""Padovan heap: a mergeable min-heap on the three-link node representation.

Ranks are maintained by three local rules instead of Fibonacci mark bits:

  rule 1  gap below the rightmost inner child w0 and w0 noncritical:
          rank = rho(w0), the vertex is "dangerous";
  rule 2  gap and w0 critical: demote w0 to an outer (placed) child and
          recompute;
  rule 3  no gap: rank = rho(w0) + 1, the vertex is "safe";

where rho(v) = rank+1 for a critical vertex, rank otherwise, and absent
children count as noncritical with rho = -1. A "gap" means
rho(w0) > rho(w1) + 1, with a missing/placed left neighbor read as
rho(w1) = -1 and a misplaced left neighbor forcing the gap outright.

A vertex is dangerous when rank > 0 and the rightmost child is inner with
rank <= rho(w0); the test is O(1). Roots are made safe lazily: find_min
sweeps the root list and repairs dangerous roots before joining.

find_min runs in two phases. Phase 1 walks the root list left to right,
makes each root safe, and bucket-inserts it by rank, joining equal-rank
pairs (loser becomes the winner's rightmost noncritical inner child, winner
rank +1) until the bucket is free; surviving roots have pairwise distinct
ranks, and exactly their buckets are cleared afterwards. Phase 2 repeatedly
links the last root with the second last (loser pushed to the front of the
winner's children as an outer placed child, ranks unchanged), continuing
leftward cyclically until one root remains.

decrease_key cuts the vertex and runs a cascading rank recomputation up the
parent chain, stopping at the dummy head, at an unchanged rank, or at a
vertex that is not among the last two children of its list (where the
parent is unreachable in O(1); the deferred rank decrease is budgeted by
the potential analysis, and the status is adjusted in place instead).

The heap keeps O(1)-maintainable potential ingredients up to date (status
tallies over all live vertices, the rank sum, and the dangerous-vertex
count) so potentials() costs one root-list scan. Root statuses carry no
meaning and may legitimately hold stale or scribbled values; the tallies
stay exact because they count raw field values and subtract per-status root
contributions at read time.
"""

import math

from .errors import EmptyHeapError, KeyIncreaseError, StaleHandleError
from .node_store import (
    Arena,
    CRITICAL_INNER,
    LAST,
    NONCRITICAL_INNER,
    NOT_LAST_TWO,
    OUTER_MISPLACED,
    OUTER_PLACED,
)

PLASTIC = 1.324717957244746
_LOG_PLASTIC = math.log(PLASTIC)


def plastic_cap(n):
    """1 + floor(log base-plastic of n): the tree-count cap used by phi2."""
    assert n >= 1
    return 1 + int(math.log(n) / _LOG_PLASTIC)


class RankOutcome:
    """Result of one rank recomputation."""

    __slots__ = ("new_rank", "dangerous", "demotions", "placings")

    def __init__(self, new_rank, dangerous, demotions, placings):
        self.new_rank = new_rank
        self.dangerous = dangerous
        self.demotions = demotions
        self.placings = placings

    def __repr__(self):
        return ("RankOutcome(new_rank=%d, dangerous=%r, demotions=%d, "
                "placings=%d)" % (self.new_rank, self.dangerous,
                                  self.demotions, self.placings))


class PadovanHeap:

    def __init__(self, arena=None):
        self.arena = arena if arena is not None else Arena()
        self._dummy = self.arena.alloc(None)  # self-linked owner of the root list
        self._size = 0
        # live vertices bucketed by raw status field (dummy excluded)
        self._stat_tally = [0, 0, 0, 0]
        self._rank_sum = 0
        self._dangerous = 0
        self.max_rank_seen = 0
        self._buckets = [None] * 64
        # optional callable(u, w) invoked on every vertex-vertex comparison
        self._cmp_hook = None

    # -- bookkeeping helpers -------------------------------------------

    @property
    def size(self):
        return self._size

    def is_empty(self):
        return self._size == 0

    @property
    def dummy(self):
        return self._dummy

    def roots(self):
        """Iterate the root list left to right. No mutation while iterating."""
        d = self._dummy
        v = d.child
        while v is not None and v is not d:
            yield v
            v = v.right

    def key_of(self, v):
        self._check_handle(v)
        return v.key

    def _require_alive(self):
        if self._dummy is None:
            raise StaleHandleError("heap was consumed by meld")

    def _check_handle(self, v):
        if v is self._dummy or not self.arena.is_live(v):
            raise StaleHandleError("dead or foreign handle: %r" % (v,))

    def _less_eq(self, u, w):
        self.arena.counters.comparisons += 1
        if self._cmp_hook is not None:
            self._cmp_hook(u, w)
        return u.key <= w.key

    def _set_status(self, v, st):
        t = self._stat_tally
        t[v.status] -= 1
        t[st] += 1
        v.status = st

    def _set_rank(self, v, r):
        self._rank_sum += r - v.rank
        v.rank = r
        if r > self.max_rank_seen:
            self.max_rank_seen = r

    def _is_dangerous(self, v):
        r = v.rank
        if r == 0:
            return False
        c = v.child
        if c is None:
            return False
        w0 = c.left
        st = w0.status
        if st > CRITICAL_INNER:
            return False
        rho = w0.rank + 1 if st == CRITICAL_INNER else w0.rank
        return r <= rho

    def _demote_rightmost(self, p):
        """Move p's rightmost child to the front as an outer placed child."""
        pre = self._is_dangerous(p)
        w0 = p.child.left
        a = self.arena
        a.detach(w0, p)
        self._set_status(w0, OUTER_PLACED)
        a.push_front(p, w0)
        a.counters.placings += 1
        post = self._is_dangerous(p)
        if post != pre:
            self._dangerous += 1 if post else -1

    # -- rank machinery ------------------------------------------------

    def _recompute_rank(self, p):
        counters = self.arena.counters
        placings0 = counters.placings
        demotions = 0
        while True:
            # seek: sweep misplaced outer children off the right end
            while True:
                c = p.child
                w0 = c.left if c is not None else None
                if w0 is not None and w0.status == OUTER_MISPLACED:
                    self._demote_rightmost(p)
                    continue
                break
            if w0 is None or w0.status == OUTER_PLACED:
                # no inner children: rho(w0) = rho(w1) = -1, rule 3
                counters.rank_steps += 1
                new_rank = 0
                dangerous = False
                break
            st0 = w0.status
            rho0 = w0.rank + 1 if st0 == CRITICAL_INNER else w0.rank
            if w0.left.right is not w0:
                gap = rho0 > 0  # w0 is leftmost: rho(w1) = -1
            else:
                u = w0.left
                stu = u.status
                if stu == OUTER_MISPLACED:
                    gap = True  # forced; no need to locate w1
                elif stu == OUTER_PLACED:
                    gap = rho0 > 0
                else:
                    rho1 = u.rank + 1 if stu == CRITICAL_INNER else u.rank
                    gap = rho0 > rho1 + 1
            if gap and st0 == CRITICAL_INNER:
                counters.rank_steps += 1  # rule 2
                demotions += 1
                self._demote_rightmost(p)
                continue
            counters.rank_steps += 1
            if gap:
                new_rank = rho0  # rule 1
                dangerous = True
            else:
                new_rank = rho0 + 1  # rule 3
                dangerous = False
            break
        pre = self._is_dangerous(p)
        self._set_rank(p, new_rank)
        post = self._is_dangerous(p)
        if post != pre:
            self._dangerous += 1 if post else -1
        return RankOutcome(new_rank, dangerous, demotions,
                           counters.placings - placings0)

    def _make_safe(self, v):
        # only called on roots
        while self._is_dangerous(v):
            self._demote_rightmost(v)
            self._recompute_rank(v)

    def _cut(self, v):
        """Detach v into the root list. Returns the former parent when known."""
        a = self.arena
        d = self._dummy
        code, owner = a.position_probe(v)
        if code == NOT_LAST_TWO:
            # both neighbors are list members; the owner stays unknown and
            # its rank update is deferred (covered by the rank-surplus
            # potential). v cannot be a rightmost child here, so no parent's
            # danger status changes either.
            a.detach(v)
            a.push_back(d, v)
            return None
        if owner.right is owner:
            return None  # v is a root already
        pre = self._is_dangerous(owner)
        a.detach(v, owner)
        post = self._is_dangerous(owner)
        if post != pre:
            self._dangerous += 1 if post else -1
        a.push_back(d, v)
        return owner

    def _cascade(self, p):
        a = self.arena
        d = self._dummy
        dang = self._is_dangerous
        while True:
            if p is d:
                return
            old = p.rank
            code, g = a.position_probe(p)
            # p's rank is about to change; when p is the rightmost child of
            # a real parent, that parent's danger test reads rho(p), so its
            # tally delta is settled after this iteration's mutations.
            watch = code == LAST and g.right is not g
            g_pre = dang(g) if watch else False
            out = self._recompute_rank(p)
            delta = old - out.new_rank
            assert delta >= 0, "rank increased during cascade"
            stop = True
            if delta == 0:
                pass
            elif code == NOT_LAST_TWO:
                # the parent is unreachable in O(1): adjust p's status in
                # place and stop. If p happens to be a root this scribbles a
                # meaningless status byte, which every consumer ignores.
                st = p.status
                if st == NONCRITICAL_INNER:
                    self._set_status(
                        p, CRITICAL_INNER if delta == 1 else OUTER_MISPLACED)
                elif st == CRITICAL_INNER:
                    self._set_status(p, OUTER_MISPLACED)
            elif g.right is g:
                pass  # p is a root: rank updated, status meaningless
            else:
                st = p.status
                if st == NONCRITICAL_INNER and delta == 1:
                    # rho(p) is preserved: stored rank dropped by one and
                    # the critical bit adds it back
                    self._set_status(p, CRITICAL_INNER)
                    stop = False
                elif st == NONCRITICAL_INNER or st == CRITICAL_INNER:
                    # demote and place immediately: the parent is in hand
                    a.detach(p, g)
                    self._set_status(p, OUTER_PLACED)
                    a.push_front(g, p)
                    a.counters.placings += 1
                    stop = False
                else:
                    pass  # outer child: rank updated, cascade stops here
            if watch:
                g_post = dang(g)
                if g_post != g_pre:
                    self._dangerous += 1 if g_post else -1
            if stop:
                return
            p = g

    # -- public operations ----------------------------------------------

    def insert(self, key):
        self._require_alive()
        a = self.arena
        v = a.alloc(key)
        self._stat_tally[NONCRITICAL_INNER] += 1
        a.push_back(self._dummy, v)
        self._size += 1
        return v

    def meld(self, other):
        self._require_alive()
        other._require_alive()
        if other is self:
            raise ValueError("meld of a heap with itself")
        if other.arena is not self.arena:
            raise ValueError("meld across arenas")
        a = self.arena
        a.concat(self._dummy, other._dummy)
        self._size += other._size
        t = self._stat_tally
        ot = other._stat_tally
        for i in range(4):
            t[i] += ot[i]
        self._rank_sum += other._rank_sum
        self._dangerous += other._dangerous
        if other.max_rank_seen > self.max_rank_seen:
            self.max_rank_seen = other.max_rank_seen
        a.free(other._dummy)
        other._dummy = None
        other._size = 0
        return self

    def find_min(self):
        self._require_alive()
        if self._size == 0:
            raise EmptyHeapError("find_min on empty heap")
        a = self.arena
        d = self._dummy
        buckets = self._buckets
        dang = self._is_dangerous

        # phase 1: make roots safe, join equal ranks until ranks are distinct
        v = d.child
        while v is not d:
            nxt = v.right  # saved before any surgery on v
            if dang(v):
                self._make_safe(v)
            w = v
            r = w.rank
            while True:
                if r >= len(buckets):
                    buckets.extend([None] * len(buckets))
                occ = buckets[r]
                if occ is None:
                    buckets[r] = w
                    break
                buckets[r] = None
                if self._less_eq(occ, w):
                    winner, loser = occ, w
                else:
                    winner, loser = w, occ
                pre = dang(winner)
                a.detach(loser, d)
                self._set_status(loser, NONCRITICAL_INNER)
                a.push_back(winner, loser)
                self._set_rank(winner, winner.rank + 1)
                post = dang(winner)
                if post != pre:
                    self._dangerous += 1 if post else -1
                w = winner
                r = winner.rank
            v = nxt
        # cleanup: survivors occupy exactly their own buckets
        v = d.child
        while v is not d:
            buckets[v.rank] = None
            v = v.right

        # phase 2: link last with second last, moving leftward cyclically
        x = d.child.left
        while True:
            y = x.left
            if y is x:
                break
            if self._less_eq(y, x):
                winner, loser = y, x
            else:
                winner, loser = x, y
            pre = dang(winner)
            a.detach(loser, d)
            self._set_status(loser, OUTER_PLACED)
            a.push_front(winner, loser)
            post = dang(winner)
            if post != pre:
                self._dangerous += 1 if post else -1
            x = winner.left
        return x

    def delete_min(self):
        self._require_alive()
        if self._size == 0:
            raise EmptyHeapError("delete_min on empty heap")
        m = self.find_min()
        key = m.key
        self._remove_root(m)
        return key

    def decrease_key(self, v, new_key):
        self._require_alive()
        self._check_handle(v)
        if new_key > v.key:
            raise KeyIncreaseError(
                "decrease_key %r -> %r is an increase" % (v.key, new_key))
        p = self._cut(v)
        if p is not None:
            self._cascade(p)
        v.key = new_key

    def delete(self, v):
        self._require_alive()
        self._check_handle(v)
        p = self._cut(v)
        if p is not None:
            self._cascade(p)
        self._remove_root(v)

    def _remove_root(self, m):
        a = self.arena
        d = self._dummy
        if self._is_dangerous(m):
            self._dangerous -= 1
        a.detach(m, d)
        a.concat(d, m)  # children become roots at the right end, O(1)
        self._stat_tally[m.status] -= 1
        self._rank_sum -= m.rank
        self._size -= 1
        a.free(m)

    # -- potentials -------------------------------------------------------

    def potentials(self):
        """(phi0..phi6) from the maintained tallies plus one root-list scan.

        phi0 trees; phi1 placed outer children; phi2 capped tree count;
        phi3 critical nonroots; phi4 rank surplus sum(r - c - n) over all
        vertices; phi5 misplaced outer children; phi6 dangerous vertices.
        """
        d = self._dummy
        tau = 0
        r_n = r_c = r_p = r_m = 0
        v = d.child
        while v is not None and v is not d:
            tau += 1
            st = v.status
            if st == NONCRITICAL_INNER:
                r_n += 1
            elif st == CRITICAL_INNER:
                r_c += 1
            elif st == OUTER_PLACED:
                r_p += 1
            else:
                r_m += 1
            v = v.right
        t = self._stat_tally
        n = self._size
        phi0 = tau
        phi1 = t[OUTER_PLACED] - r_p
        phi2 = 0 if n == 0 else min(tau, plastic_cap(n))
        phi3 = t[CRITICAL_INNER] - r_c
        inner_nonroots = (t[NONCRITICAL_INNER] - r_n) + (t[CRITICAL_INNER] - r_c)
        phi4 = self._rank_sum - inner_nonroots
        phi5 = t[OUTER_MISPLACED] - r_m
        phi6 = self._dangerous
        return (phi0, phi1, phi2, phi3, phi4, phi5, phi6)
