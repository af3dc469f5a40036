"""Invariant checker and amortized-cost auditor for the Padovan heap.

Everything here recomputes its answers from the raw forest — it never trusts
the heap's own incremental tallies (those are what verify_tallies checks).
Walks are iterative; trees can be deep enough to blow the recursion limit.

The amortized side mechanizes the accounting that makes the heap work:
seven potentials

    phi0  tree count
    phi1  outer placed children
    phi2  tree count capped by the plastic-number logarithm of n
    phi3  critical nonroots
    phi4  deferred rank decreases, sum of r_v minus the inner-child count
    phi5  outer misplaced children
    phi6  dangerous vertices

are combined into W = sum(t_i * phi_i) by a CostModel, and every operation's
counted steps plus the change in W must stay under a constant (insert, meld,
find_min, decrease_key) or a logarithmic (delete_min, delete) budget.

Counted steps are the analysis units: key comparisons, rank-rule
applications, and placing steps.  Raw pointer writes are tracked separately
by the arena (they matter for the O(1)-per-insert claim) but are not what
the potentials were designed to pay for.
"""

import math

from .node_store import (
    NONCRITICAL_INNER,
    CRITICAL_INNER,
    OUTER_PLACED,
    OUTER_MISPLACED,
    STATUS_NAMES,
)
from .padovan import PLASTIC, plastic_cap


class Violation:
    """One broken invariant, rendered as machine-readable key=value text."""

    __slots__ = ("kind", "info")

    def __init__(self, kind, **info):
        self.kind = kind
        self.info = info

    def render(self):
        parts = ["kind=%s" % self.kind]
        for k in sorted(self.info):
            parts.append("%s=%r" % (k, self.info[k]))
        return " ".join(parts)

    __str__ = render

    def __repr__(self):
        return "Violation(%s)" % self.render()


class PotentialVector:

    __slots__ = ("values",)

    def __init__(self, values):
        values = tuple(values)
        assert len(values) == 7
        self.values = values

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        if isinstance(other, PotentialVector):
            return self.values == other.values
        return self.values == tuple(other)

    def __hash__(self):
        return hash(self.values)

    def as_tuple(self):
        return self.values

    def weighted(self, model):
        t = model.t
        return sum(t[i] * self.values[i] for i in range(7))

    def __repr__(self):
        return "PotentialVector%r" % (self.values,)


class CostModel:
    """Weights t0..t6 for the potentials plus the two audit budgets.

    The default weights satisfy the required inequalities
        t0 <= t1 < t2,  t1 < t5 < t6,  t5 + t6 < t3,  t5 + t6 < t4
    and the budgets were calibrated by measuring the worst per-op charge on
    random/ascending/competition traces disjoint from every test trace
    (max const charge seen: 15, from decrease_key cascades; max normalized
    log charge: 1.9), then doubling and freezing.
    """

    __slots__ = ("t", "budget_const", "budget_log", "beta")

    def __init__(self, t=(1, 1, 2, 6, 6, 2, 3),
                 budget_const=30, budget_log=4):
        self.t = tuple(t)
        assert len(self.t) == 7
        self.budget_const = budget_const
        self.budget_log = budget_log
        self.beta = PLASTIC
        self.check_constraints()

    def check_constraints(self):
        t0, t1, t2, t3, t4, t5, t6 = self.t
        assert t0 <= t1 < t2, "need t0 <= t1 < t2"
        assert t1 < t5 < t6, "need t1 < t5 < t6"
        assert t5 + t6 < t3, "need t5 + t6 < t3"
        assert t5 + t6 < t4, "need t5 + t6 < t4"
        return True

    def log_budget(self, n):
        """Budget for delete_min/delete on a heap of size n (pre-op)."""
        n = max(n, 1)
        return self.budget_log * (1.0 + math.log(n) / math.log(self.beta))

    def __repr__(self):
        return "CostModel(t=%r, budget_const=%r, budget_log=%r)" % (
            self.t, self.budget_const, self.budget_log)


def size_bound_table(max_rank):
    """Minimal active-subtree sizes by rank: the Padovan recurrence.

    P(0) = P(1) = P(2) = 1 and P(r) = 1 + P(r-2) + P(r-3) afterward.
    """
    P = [1] * max(3, max_rank + 1)
    for r in range(3, max_rank + 1):
        P[r] = 1 + P[r - 2] + P[r - 3]
    return P


def _rho(v):
    return v.rank + 1 if v.status == CRITICAL_INNER else v.rank


def _is_dangerous(v):
    # independent reimplementation of the O(1) safe test
    if v.rank == 0 or v.child is None:
        return False
    w0 = v.child.left
    if w0.status > CRITICAL_INNER:
        return False
    return v.rank <= _rho(w0)


def _walk_list(owner, cap):
    """Follow right links from owner.child; return (members, violations).

    Stops after cap hops so corrupted links cannot hang the auditor.  The
    members list is best-effort when a violation is reported.
    """
    out = []
    violations = []
    v = owner.child
    if v is None:
        return out, violations
    steps = 0
    while True:
        steps += 1
        if steps > cap:
            violations.append(Violation(
                "broken_owner_link", owner_key=owner.key,
                detail="right walk exceeded %d nodes" % cap))
            return out, violations
        out.append(v)
        nxt = v.right
        if nxt.left is v:
            v = nxt
            continue
        # v says it is the rightmost; its right link must be the owner
        if nxt is not owner:
            violations.append(Violation(
                "broken_owner_link", owner_key=owner.key, child_key=v.key))
        return out, violations


def iter_vertices(heap):
    """Yield every live vertex, parents before children. Trusts links."""
    stack = list(heap.roots())
    stack.reverse()
    while stack:
        v = stack.pop()
        yield v
        c = v.child
        if c is not None:
            kids = []
            w = c
            while True:
                kids.append(w)
                if w.right.left is not w:
                    break
                w = w.right
            stack.extend(reversed(kids))


def compute_potentials(heap):
    """Recompute phi0..phi6 from scratch by walking the forest."""
    n = heap.size
    tau = 0
    placed = critical = misplaced = inner = 0
    rank_sum = 0
    dangerous = 0
    root_ids = set()
    for r in heap.roots():
        tau += 1
        root_ids.add(id(r))
    for v in iter_vertices(heap):
        rank_sum += v.rank
        if _is_dangerous(v):
            dangerous += 1
        if id(v) in root_ids:
            continue
        st = v.status
        if st == OUTER_PLACED:
            placed += 1
        elif st == OUTER_MISPLACED:
            misplaced += 1
        elif st == CRITICAL_INNER:
            critical += 1
            inner += 1
        else:
            inner += 1
    phi2 = 0 if n == 0 else min(tau, plastic_cap(n))
    return PotentialVector(
        (tau, placed, phi2, critical, rank_sum - inner, misplaced, dangerous))


def verify_tallies(heap):
    """Compare the heap's incremental potentials() against a fresh walk."""
    walked = compute_potentials(heap).as_tuple()
    cached = tuple(heap.potentials())
    out = []
    for i in range(7):
        if walked[i] != cached[i]:
            out.append(Violation("tally_mismatch", phi=i,
                                 walked=walked[i], cached=cached[i]))
    return out


def check_structure(heap):
    """Evaluate every structural invariant; violations are data, not errors.

    Pass 1 checks the doubly linked lists themselves (right chains end at
    their owner, left links close the cycle, no vertex is shared, every
    vertex is arena-live, the partition covers exactly heap.size vertices).
    If pass 1 finds anything, those violations are returned alone — content
    checks over broken links would be noise.

    Pass 2 checks content: heap order, the placed-prefix layout, strictly
    increasing inner rho (****), the index bound (***), the rank budget (*),
    rank consistency against the rank rules, the no-steady-dangerous rule
    (**), no misplaced rightmost child at rest, and no root left in the
    rule-2 state (critical rightmost child across a gap).
    """
    a = heap.arena
    d = heap.dummy
    cap = heap.size + 1
    violations = []

    # pass 1: link integrity and the ownership partition
    seen = {}
    lists = []  # (owner, members)
    stack = [d]
    while stack:
        owner = stack.pop()
        members, vs = _walk_list(owner, cap)
        violations.extend(vs)
        if members:
            lists.append((owner, members))
        if vs:
            continue  # do not trust or recurse into a broken list
        # left links: one cycle, leftmost.left == rightmost
        for i, v in enumerate(members):
            want = members[i - 1]  # i==0 wraps to the rightmost
            if v.left is not want:
                violations.append(Violation(
                    "broken_left_cycle", owner_key=owner.key, child_key=v.key))
        for v in members:
            if id(v) in seen:
                violations.append(Violation("shared_vertex", key=v.key))
                continue
            if not a.is_live(v):
                violations.append(Violation("dead_vertex", key=v.key))
            seen[id(v)] = v
            stack.append(v)
    if not violations and len(seen) != heap.size:
        violations.append(Violation(
            "size_mismatch", reachable=len(seen), recorded=heap.size))
    if violations:
        return violations

    root_ids = {id(r) for r in heap.roots()}

    # pass 2: content
    for owner, members in lists:
        if owner is d:
            continue  # root list: statuses and order are meaningless
        seen_nonplaced = False
        inner_idx = 0
        prev_rho = None
        for v in members:
            if not (NONCRITICAL_INNER <= v.status <= OUTER_MISPLACED):
                violations.append(Violation(
                    "bad_status", key=v.key, status=v.status))
                continue
            if v.key < owner.key:
                violations.append(Violation(
                    "heap_order", parent_key=owner.key, child_key=v.key))
            if v.status == OUTER_PLACED:
                if seen_nonplaced:
                    violations.append(Violation(
                        "layout", parent_key=owner.key, child_key=v.key,
                        detail="placed child after the placed prefix"))
            else:
                seen_nonplaced = True
            if v.status <= CRITICAL_INNER:
                rho = _rho(v)
                if rho < inner_idx:
                    violations.append(Violation(
                        "index_bound", parent_key=owner.key, child_key=v.key,
                        inner_index=inner_idx, rho=rho))
                if prev_rho is not None and rho < prev_rho + 1:
                    violations.append(Violation(
                        "inner_order", parent_key=owner.key, child_key=v.key,
                        prev_rho=prev_rho, rho=rho))
                prev_rho = rho
                inner_idx += 1

    for v in iter_vertices(heap):
        if v.rank < 0:
            violations.append(Violation("negative_rank", key=v.key,
                                        rank=v.rank))
            continue
        is_root = id(v) in root_ids
        c = v.child
        kids = []
        if c is not None:
            w = c
            while True:
                kids.append(w)
                if w.right.left is not w:
                    break
                w = w.right
        inner_count = sum(1 for w in kids if w.status <= CRITICAL_INNER)
        if v.rank < inner_count:
            violations.append(Violation(
                "rank_budget", key=v.key, rank=v.rank,
                inner_children=inner_count))
        # rank consistency against the rules, on the resting forest
        w0 = kids[-1] if kids else None
        if w0 is not None and w0.status == OUTER_MISPLACED:
            violations.append(Violation(
                "misplaced_rightmost", key=v.key, child_key=w0.key))
            continue
        if w0 is None or w0.status == OUTER_PLACED:
            if v.rank != 0:
                violations.append(Violation(
                    "rank_mismatch", key=v.key, rank=v.rank, expect=0,
                    detail="no inner children"))
            continue
        rho0 = _rho(w0)
        if len(kids) >= 2:
            u = kids[-2]
            if u.status == OUTER_MISPLACED:
                gap = True
            elif u.status == OUTER_PLACED:
                gap = rho0 > 0
            else:
                gap = rho0 > _rho(u) + 1
        else:
            gap = rho0 > 0
        if gap and w0.status == CRITICAL_INNER:
            # rule 2 is pending; tolerated deep in a tree, never at a root
            if is_root:
                violations.append(Violation(
                    "rule2_pending_root", key=v.key, rank=v.rank, rho0=rho0))
            continue
        expect = rho0 if gap else rho0 + 1
        if v.rank != expect:
            violations.append(Violation(
                "rank_mismatch", key=v.key, rank=v.rank, expect=expect,
                gap=gap, rho0=rho0))
        if (not is_root and v.status == NONCRITICAL_INNER
                and _is_dangerous(v)):
            violations.append(Violation(
                "steady_dangerous", key=v.key, rank=v.rank, rho0=rho0))
    return violations


def check_size_bounds(heap, table=None):
    """Check |active closure|(v) >= P(r_v) for every vertex.

    The active children of v are the rule-designated rightmost inner child
    w0 and, when the no-gap rule applies and the left neighbor is inner,
    that neighbor w1.  Misplaced children that have not been swept yet are
    skipped the same way the seek phase would skip them.
    """
    violations = []
    if table is None:
        table = size_bound_table(heap.max_rank_seen + 1)

    def active_children(v):
        kids = []
        c = v.child
        if c is not None:
            w = c
            while True:
                kids.append(w)
                if w.right.left is not w:
                    break
                w = w.right
        i = len(kids) - 1
        while i >= 0 and kids[i].status == OUTER_MISPLACED:
            i -= 1
        if i < 0 or kids[i].status == OUTER_PLACED:
            return ()
        w0 = kids[i]
        rho0 = _rho(w0)
        if i == 0:
            return (w0,)
        u = kids[i - 1]
        if u.status == OUTER_MISPLACED:
            return (w0,)  # forced gap
        if u.status == OUTER_PLACED:
            return (w0,)  # rho(w1) = -1: gap iff rho0 > 0; either way only w0
        if rho0 > _rho(u) + 1:
            return (w0,)  # gap: rule 1/2, only w0 is active
        return (u, w0)

    sizes = {}
    for v in iter_vertices(heap):
        order = []
        stack = [v]
        while stack:
            x = stack.pop()
            if id(x) in sizes:
                continue
            order.append(x)
            for ch in active_children(x):
                if id(ch) not in sizes:
                    stack.append(ch)
        for x in reversed(order):
            if id(x) in sizes:
                continue
            sizes[id(x)] = 1 + sum(
                sizes[id(ch)] for ch in active_children(x))
        got = sizes[id(v)]
        r = v.rank
        bound = table[r] if r < len(table) else size_bound_table(r)[r]
        if got < bound:
            violations.append(Violation(
                "size_bound", key=v.key, rank=r, size=got, bound=bound))
    return violations


def check_root_safety(heap):
    """No dangerous root may survive find_min/delete_min."""
    return [Violation("unsafe_root", key=r.key, rank=r.rank)
            for r in heap.roots() if _is_dangerous(r)]


def audit_state(heap):
    """One-stop state audit: structure, then size bounds and tallies."""
    violations = check_structure(heap)
    if violations:
        return violations
    violations.extend(check_size_bounds(heap))
    violations.extend(verify_tallies(heap))
    return violations


def is_ancestor(heap, anc, v, _cap=None):
    """True if anc is a proper ancestor of v. O(depth * list length)."""
    d = heap.dummy
    cap = _cap if _cap is not None else heap.size + 2
    x = v
    hops = 0
    while True:
        # climb to the owner of x's list
        while x.right.left is x:
            x = x.right
            hops += 1
            assert hops <= cap * cap, "owner walk did not terminate"
        x = x.right
        if x is d:
            return False
        if x is anc:
            return True
        hops += 1
        assert hops <= cap * cap, "owner walk did not terminate"


_CONST_OPS = ("i", "f", "k", "meld")
_LOG_OPS = ("d", "x")


def audit_amortized(events, model=None, stats_out=None):
    """Replay a trace, asserting the per-operation amortized budgets.

    For each event, with s = counted analysis steps (comparisons +
    rank-rule applications + placings) and dW the change of the weighted
    potential, requires

        s + dW <= budget_const                      for i, f, k (and meld)
        s + dW <= budget_log * (1 + log_beta n)     for d, x   (n pre-op)

    Returns a list of budget Violations (empty when the accounting holds).
    When stats_out is a list, a (op, s, dW, n_before, charge, bound) row is
    appended per event — that is the calibration hook.

    The potential is read from the heap's incremental tallies (O(roots) per
    op); verify_tallies pins those to a full recount during fuzzing, so the
    budget audit can afford to trust them here.
    """
    from .padovan import PadovanHeap  # local import keeps module load light
    from .trace import replay

    if model is None:
        model = CostModel()
    heap = PadovanHeap()
    t = model.t
    violations = []
    state = {}

    def weighted_now():
        p = heap.potentials()
        return (t[0] * p[0] + t[1] * p[1] + t[2] * p[2] + t[3] * p[3]
                + t[4] * p[4] + t[5] * p[5] + t[6] * p[6])

    def before(idx, ev):
        state["W"] = weighted_now()
        state["s"] = heap.arena.counters.analysis_steps
        state["n"] = heap.size

    def after(idx, ev):
        w_after = weighted_now()
        s = heap.arena.counters.analysis_steps - state["s"]
        dw = w_after - state["W"]
        charge = s + dw
        op = ev[0]
        if op in _LOG_OPS:
            bound = model.log_budget(state["n"])
        else:
            bound = model.budget_const
        if stats_out is not None:
            stats_out.append((op, s, dw, state["n"], charge, bound))
        if charge > bound:
            violations.append(Violation(
                "budget", op=op, index=idx, steps=s, dW=dw,
                charge=charge, bound=round(bound, 3)))

    replay(events, heap, before=before, after=after)
    return violations
