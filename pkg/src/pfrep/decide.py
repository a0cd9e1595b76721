"""Deciding representability of small algebras, plus the example gallery.

Two decision paths are offered.  :func:`brute_force_decide` searches for a
representation on every base of at most ``k_max`` points.
:func:`decide_via_construction` reads a realisability profile off the
tables, runs the finite-base construction and checks the result.

The gallery holds the augmented group algebras ``G ∪ {0}`` and the
five-element algebra ``F`` which is representable, but only on an infinite
base.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .build import SCHEIN_SYMBOLS, construct, realisables_algebraic
from .core import (ARITY, FiniteAlgebra, Signature, atoms, is_zero_like, necessary_laws,
                   validate_algebra)
from .errors import (CapacityError, ConstructionError, MalformedInputError,
                     NotRepresentableError)
from .network import from_concrete, is_representation, representation_of
from .pfun import Base, PartialFunction, Representation, eval_dense

DEFAULT_MAX_BASE = 6

REPRESENTABLE = "representable"
NOT_ON_BASE = "notOnBase"
INCONCLUSIVE = "inconclusive"


@dataclass
class Decision:
    """Outcome of a decision run.

    ``k`` is the largest base size that was ruled out for ``notOnBase``
    (``None`` meaning every finite base) and the witness's base size for
    ``representable``.
    """

    outcome: str
    k: int | None = None
    witness: Representation | None = None
    reason: str | None = None
    stats: dict = field(default_factory=dict)

    @property
    def representable(self) -> bool:
        return self.outcome == REPRESENTABLE


# ---------------------------------------------------------------------------
# brute force

def _tuple_eval(n: int):
    memo: dict = {}

    def ev(sym, args):
        key = (sym, args)
        out = memo.get(key)
        if out is None:
            arrs = [np.array(a, dtype=np.int64) for a in args]
            out = tuple(eval_dense(sym, arrs, n).tolist())
            memo[key] = out
        return out

    return ev


def _act(perm, f):
    out = [-1] * len(f)
    for x, y in enumerate(f):
        if y >= 0:
            out[perm[x]] = perm[y]
    return tuple(out)


def _abstract_closure(A, sig, known, union_rule):
    known = set(known)
    unary = [s for s in sig if ARITY[s] == 1]
    binary = [s for s in sig if ARITY[s] == 2]
    changed = True
    while changed:
        changed = False
        cur = list(known)
        for s in unary:
            for a in cur:
                r = A.op(s, a)
                if r not in known:
                    known.add(r)
                    changed = True
        for s in binary:
            tab = A.tables[s]
            for a in cur:
                for b in cur:
                    r = tab[a][b]
                    if r not in known:
                        known.add(r)
                        changed = True
        for a, below in union_rule.items():
            if a not in known and below <= known:
                known.add(a)
                changed = True
    return known


def generator_order(A: FiniteAlgebra, sig: Signature) -> tuple[list[int], list[int], dict]:
    """Constants, search variables in order, and the union rule used by the search.

    Variables are chosen greedily by how much of the algebra they generate.
    With antidomain the atoms come first and every other element is taken
    to be the union of the atoms below it.
    """
    constants = [A.op(s) for s in ("zero", "ident") if s in sig]
    union_rule: dict[int, frozenset] = {}
    pool_first: list[int] = []
    if "antidom" in sig:
        at = atoms(A)
        if not at.no_zero:
            pool_first = list(at.elements)
            for a in A.elements:
                if a not in pool_first:
                    union_rule[a] = frozenset(c for c in pool_first if A.le(c, a))
    known = _abstract_closure(A, sig, constants, union_rule)
    order = []
    while len(known) < A.size:
        pool = [a for a in pool_first if a not in known] or \
               [a for a in A.elements if a not in known]
        best = max(pool, key=lambda a: (len(_abstract_closure(A, sig, known | {a}, union_rule)), -a))
        order.append(best)
        known = _abstract_closure(A, sig, known | {best}, union_rule)
    return constants, order, union_rule


class _Search:
    def __init__(self, A, sig, k, visitor, stats):
        self.A, self.sig, self.k = A, sig, k
        self.ev = _tuple_eval(k)
        self.visitor = visitor
        self.stats = stats
        self.unary = [s for s in sig if ARITY[s] == 1]
        self.binary = [s for s in sig if ARITY[s] == 2]
        self.constants, self.order, self.union_rule = generator_order(A, sig)
        self.all_functions = list(itertools.product(range(-1, k), repeat=k))
        self.perms = list(itertools.permutations(range(k)))

    def propagate(self, theta, rev, fresh):
        """Close ``theta`` under the operation tables; ``None`` on a clash."""
        A, ev = self.A, self.ev
        queue = list(fresh)
        while queue:
            x = queue.pop()
            updates = []
            for s in self.unary:
                updates.append((A.op(s, x), s, (theta[x],)))
            for s in self.binary:
                tab = A.tables[s]
                for y in list(theta):
                    updates.append((tab[x][y], s, (theta[x], theta[y])))
                    if y != x:
                        updates.append((tab[y][x], s, (theta[y], theta[x])))
            for a, below in self.union_rule.items():
                if a not in theta and all(c in theta for c in below):
                    val = [-1] * self.k
                    for c in below:
                        for p, q in enumerate(theta[c]):
                            if q >= 0:
                                if val[p] >= 0 and val[p] != q:
                                    return None
                                val[p] = q
                    updates.append((a, None, tuple(val)))
            for a, s, args in updates:
                val = args[0] if s is None else ev(s, args)
                have = theta.get(a)
                if have is None:
                    other = rev.get(val)
                    if other is not None and other != a:
                        return None
                    theta[a] = val
                    rev[val] = a
                    queue.append(a)
                elif have != val:
                    return None
        return theta

    def initial(self):
        theta, rev = {}, {}
        seeds = [(self.A.op(s), self.ev(s, ())) for s in ("zero", "ident") if s in self.sig]
        empty = tuple([-1] * self.k)
        seeds += [(a, empty) for a, below in self.union_rule.items() if not below]
        for c, val in seeds:
            if rev.get(val, c) != c or theta.get(c, val) != val:
                return theta, False, rev
            theta[c] = val
            rev[val] = c
        # propagate extends theta in place, so a clash still leaves the partial map
        ok = self.propagate(theta, rev, list(theta)) is not None
        return theta, ok, rev

    def run(self) -> dict | None:
        self.stats.setdefault("nodes", 0)
        theta, ok, rev = self.initial()
        if not ok:
            self._visit(theta, "pruned")
            return None
        return self._search(0, theta, rev, self.perms)

    def _visit(self, theta, status):
        self.stats["nodes"] += 1
        if self.visitor is not None:
            self.visitor(self.k, theta, status)

    def _search(self, i, theta, rev, group):
        if len(theta) == self.A.size:
            return self._leaf(theta)
        var = self.order[i] if i < len(self.order) else None
        if var is None:
            return None
        if var in theta:
            return self._search(i + 1, theta, rev, group)
        for f in self.all_functions:
            if f in rev:
                continue
            if any(_act(p, f) < f for p in group):
                continue
            t2, r2 = dict(theta), dict(rev)
            t2[var] = f
            r2[f] = var
            if self.propagate(t2, r2, [var]) is None:
                self._visit(t2, "pruned")
                continue
            self._visit(t2, "open")
            sub = [p for p in group if _act(p, f) == f]
            found = self._search(i + 1, t2, r2, sub)
            if found is not None:
                return found
        return None

    def _leaf(self, theta):
        covered = set()
        for f in theta.values():
            for x, y in enumerate(f):
                if y >= 0:
                    covered.add(x)
                    covered.add(y)
        if len(covered) != self.k:
            self._visit(theta, "rejected")
            return None
        self._visit(theta, "leaf")
        return theta


def brute_force_decide(A: FiniteAlgebra, sig: Signature | None = None, k_max: int = 4,
                       visitor: Callable | None = None,
                       max_base: int = DEFAULT_MAX_BASE) -> Decision:
    """Search bases of ``0..k_max`` points for a representation.

    Variables are searched in :func:`generator_order`; every other element
    is forced by the tables.  For each variable only functions that are
    least in their orbit under the permutations fixing the earlier
    variables are tried, which removes relabelings of the base.  ``visitor``
    is called as ``visitor(k, theta, status)`` on every search node.
    """
    sig = sig or A.signature
    if k_max < 0:
        raise MalformedInputError("k_max must be non-negative")
    if k_max > max_base:
        raise CapacityError(f"base size {k_max} exceeds the search cap of {max_base}", k_max)
    report = validate_algebra(A)
    if not report.passed:
        raise MalformedInputError(f"not a valid algebra: {report.failures()[0].name}")
    stats = {"nodes": 0, "perBase": {}}
    t0 = time.perf_counter()
    for k in range(k_max + 1):
        before = stats["nodes"]
        found = _Search(A, sig, k, visitor, stats).run()
        stats["perBase"][k] = stats["nodes"] - before
        if found is not None:
            witness = Representation(Base.of_size(k),
                                     [PartialFunction.from_dense(found[a]) for a in A.elements])
            verdict = is_representation(from_concrete(A, witness), A, sig)
            if not verdict.passed:
                raise AssertionError(f"search produced a non-representation: {verdict.failures[0]}")
            stats["elapsed"] = time.perf_counter() - t0
            return Decision(REPRESENTABLE, k, witness, None, stats)
    stats["elapsed"] = time.perf_counter() - t0
    return Decision(NOT_ON_BASE, k_max, None,
                    f"no representation on any base of at most {k_max} points", stats)


# ---------------------------------------------------------------------------
# construction path

def characterisation_is_exact(sig: Signature) -> bool:
    return "antidom" in sig or set(sig) <= SCHEIN_SYMBOLS


def decide_via_construction(A: FiniteAlgebra, sig: Signature | None = None) -> Decision:
    """Construct a representation from the algebraic profile and check it."""
    sig = sig or A.signature
    t0 = time.perf_counter()
    report = validate_algebra(A)
    if not report.passed:
        raise MalformedInputError(f"not a valid algebra: {report.failures()[0].name}")
    laws = necessary_laws(A, sig)
    if not laws.passed:
        bad = laws.failures()[0]
        return Decision(NOT_ON_BASE, None, None, f"necessary law {bad.name} fails: {bad.detail}",
                        {"elapsed": time.perf_counter() - t0, "stage": "laws"})
    attempts = [True]
    if "zero" not in sig and any(is_zero_like(A, z) for z in A.elements):
        attempts.append(False)
    last = "construction failed"
    for drop in attempts:
        try:
            profile = realisables_algebraic(A, sig, drop_zero_like=drop)
            trace = construct(A, profile, sig=sig)
        except (ConstructionError, NotRepresentableError) as exc:
            last = str(exc)
            continue
        verdict = is_representation(trace.network, A, sig)
        stats = {"elapsed": time.perf_counter() - t0, "vertices": len(trace.network),
                 "stages": len(trace.stages), "maxDepth": profile.max_depth}
        if verdict.passed:
            witness = representation_of(trace.network, A)
            return Decision(REPRESENTABLE, len(trace.network), witness, None, stats)
        f = verdict.failures[0]
        last = f"constructed network fails {f.condition}" + (f" for {f.symbol}" if f.symbol else "")
    stats = {"elapsed": time.perf_counter() - t0}
    if characterisation_is_exact(sig):
        return Decision(NOT_ON_BASE, None, None, last, stats)
    return Decision(INCONCLUSIVE, None, None, last, stats)


# ---------------------------------------------------------------------------
# groups

def check_group(table: Sequence[Sequence[int]]) -> int:
    """Return the identity index of a group multiplication table."""
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise MalformedInputError("group table must be square and non-empty")
    for i, row in enumerate(table):
        for j, v in enumerate(row):
            if not (isinstance(v, int) and 0 <= v < n):
                raise MalformedInputError(f"entry {v!r} is out of range", f"table[{i}][{j}]")
    ids = [e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))]
    if not ids:
        raise MalformedInputError("group table has no identity")
    e = ids[0]
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise MalformedInputError(f"not associative at ({a}, {b}, {c})")
    for a in range(n):
        if e not in table[a]:
            raise MalformedInputError(f"element {a} has no inverse")
    return e


def group_algebra(table: Sequence[Sequence[int]], names: Sequence[str] | None = None
                  ) -> tuple[FiniteAlgebra, Representation]:
    """``G ∪ {0}`` over composition, meet, antidomain and range, with its Cayley representation.

    The zero is carrier element 0 and group element ``i`` is carrier
    element ``i + 1``.  In the representation ``g`` maps each ``h`` to
    ``hg`` and 0 is the empty function.
    """
    e = check_group(table)
    n = len(table)
    names = list(names) if names is not None else [f"g{i}" for i in range(n)]
    if len(names) != n:
        raise MalformedInputError("one name per group element is required")
    carrier = ["0"] + names
    size = n + 1
    comp = [[0] * size for _ in range(size)]
    for a in range(n):
        for b in range(n):
            comp[a + 1][b + 1] = table[a][b] + 1
    meet = [[a if a == b else 0 for b in range(size)] for a in range(size)]
    antidom = [e + 1] + [0] * n
    ran = [0] + [e + 1] * n
    A = FiniteAlgebra(carrier, Signature(["compose", "meet", "antidom", "ran"]),
                      {"compose": comp, "meet": meet, "antidom": antidom, "ran": ran})
    theta = [PartialFunction()] + [PartialFunction((h, table[h][g]) for h in range(n))
                                   for g in range(n)]
    return A, Representation(Base(names), theta)


def cyclic_group(n: int) -> tuple[list[list[int]], list[str]]:
    names = ["e"] + (["a"] if n > 1 else []) + [f"a{i}" for i in range(2, n)]
    return [[(i + j) % n for j in range(n)] for i in range(n)], names


def symmetric_group_3() -> tuple[list[list[int]], list[str]]:
    perms = [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1)]
    names = ["e", "s01", "s12", "s02", "c012", "c021"]
    idx = {p: i for i, p in enumerate(perms)}
    # product "first p then q" matches composition of partial functions
    table = [[idx[tuple(q[p[x]] for x in range(3))] for q in perms] for p in perms]
    return table, names


GROUPS = {
    "Z2": lambda: cyclic_group(2),
    "Z3": lambda: cyclic_group(3),
    "S3": symmetric_group_3,
}


# ---------------------------------------------------------------------------
# the five-element algebra F

# Carrier 0, d, r, f, g.  The entries are those of the model in which f is a
# bijection from one copy of ω onto another and g is defined on the first
# copy and sends exactly two points onto each point of the second.  Every
# composition of two non-diagonal elements runs from the second copy into
# the first and so is empty; distinct elements meet in 0 because f and g
# never agree.  prefix_model_F re-derives the table on finite prefixes.
F_CARRIER = ("0", "d", "r", "f", "g")
F_TABLES = {
    "compose": (
        (0, 0, 0, 0, 0),
        (0, 1, 0, 3, 4),
        (0, 0, 2, 0, 0),
        (0, 0, 3, 0, 0),
        (0, 0, 4, 0, 0),
    ),
    "meet": tuple(tuple(a if a == b else 0 for b in range(5)) for a in range(5)),
    "dom": (0, 1, 2, 1, 1),
    "ran": (0, 1, 2, 2, 2),
    "unipoint": (0, 1, 2, 2, 0),
}
F_SIGNATURE = Signature(["compose", "meet", "dom", "ran", "unipoint"], enable_unipoint=True)


@dataclass(frozen=True)
class Inequality:
    name: str
    statement: str
    premises: tuple[str, ...]
    holds_in_table: bool


@dataclass(frozen=True)
class CardinalityArgument:
    """The counting argument showing that ``F`` has no finite representation.

    Write ``|d|`` and ``|r|`` for the number of points fixed by ``d`` and
    ``r``.  Every representation satisfies all three inequalities, which is
    impossible when ``|r|`` is finite.
    """

    inequalities: tuple[Inequality, ...]

    @property
    def certified(self) -> bool:
        return all(i.holds_in_table for i in self.inequalities)

    def check_candidate(self, theta: dict[int, tuple]) -> dict:
        """Machine-check the argument on one candidate assignment.

        Returns the inequality the candidate violates and, for each
        inequality whose premises are fully determined by the candidate,
        whether premises hold and whether the inequality then holds.
        ``implication_broken`` must always be false.
        """
        d, r, f, g = 1, 2, 3, 4
        out = {"violates": None, "premises": {}, "implication_broken": False}
        # D(f) = D(g) = d and R(f) = R(g) = r in the table, so a branch cut
        # before d or r were propagated still determines them.
        source = next((h for h in (f, g) if h in theta), None)
        if d in theta:
            dpts = {x for x, y in enumerate(theta[d]) if y == x}
        elif source is not None:
            dpts = {x for x, y in enumerate(theta[source]) if y >= 0}
        else:
            return out
        if r in theta:
            rpts = {x for x, y in enumerate(theta[r]) if y == x}
        elif source is not None:
            rpts = {y for y in theta[source] if y >= 0}
        else:
            return out
        nd, nr = len(dpts), len(rpts)
        values = {"eq": nd == nr, "ge": nd >= 2 * nr, "pos": nr >= 1}
        out["counts"] = (nd, nr)
        out["violates"] = next(k for k in ("pos", "eq", "ge") if not values[k])
        if f in theta:
            ff = theta[f]
            dom_f = {x for x, y in enumerate(ff) if y >= 0}
            img = [y for y in ff if y >= 0]
            bij = dom_f == dpts and set(img) == rpts and len(set(img)) == len(img)
            out["premises"]["eq"] = bij
            if bij and not values["eq"]:
                out["implication_broken"] = True
        if g in theta:
            gg = theta[g]
            dom_g = {x for x, y in enumerate(gg) if y >= 0}
            counts = {y: 0 for y in rpts}
            for y in gg:
                if y >= 0:
                    counts[y] = counts.get(y, 0) + 1
            two = dom_g <= dpts and set(counts) == rpts and all(c >= 2 for c in counts.values())
            out["premises"]["ge"] = two
            if two and not values["ge"]:
                out["implication_broken"] = True
        if 0 in theta and r in theta:
            faithful = tuple(theta[r]) != tuple(theta[0])
            out["premises"]["pos"] = faithful
            if faithful and not values["pos"]:
                out["implication_broken"] = True
        return out

    def report(self) -> dict:
        return {"certified": self.certified,
                "inequalities": [{"name": i.name, "statement": i.statement,
                                  "premises": list(i.premises), "holdsInTable": i.holds_in_table}
                                 for i in self.inequalities],
                "contradiction": "|r| >= 1, |d| = |r| and |d| >= 2|r| give |r| >= 2|r| > |r|"}


def _cardinality_argument(A: FiniteAlgebra) -> CardinalityArgument:
    z, d, r, f, g = (A.index(x) for x in F_CARRIER)
    U = A.tables["unipoint"]
    eq = A.dom(f) == d and A.ran(f) == r and U[f] == A.ran(f)
    ge = A.dom(g) == d and A.ran(g) == r and U[g] == z and r != z
    pos = r != z and A.le(z, r)
    return CardinalityArgument((
        Inequality("eq", "|d| = |r|",
                   ("D(f) = d", "R(f) = r", "U(f) = R(f): f is injective, so a bijection d → r"),
                   eq),
        Inequality("ge", "|d| >= 2|r|",
                   ("D(g) = d", "R(g) = r", "U(g) = 0: every r-point has two or more g-preimages"),
                   ge),
        Inequality("pos", "|r| >= 1", ("r ≠ 0, so r holds on some pair",), pos),
    ))


def counterexample_F() -> tuple[FiniteAlgebra, CardinalityArgument]:
    A = FiniteAlgebra(F_CARRIER, F_SIGNATURE, F_TABLES)
    return A, _cardinality_argument(A)


@dataclass(frozen=True)
class EntryCheck:
    symbol: str
    args: tuple[str, ...]
    expected: str
    status: str        # "exact", "confirmed" or "mismatch"


@dataclass(frozen=True)
class PrefixModel:
    k: int
    base: Base
    f: PartialFunction
    g: PartialFunction
    frontier: frozenset[int]
    entries: tuple[EntryCheck, ...]

    @property
    def consistent(self) -> bool:
        return all(e.status != "mismatch" for e in self.entries)

    def status(self, symbol: str, *args: str) -> str:
        for e in self.entries:
            if e.symbol == symbol and e.args == args:
                return e.status
        raise KeyError((symbol, args))

    def g_preimages(self, n: int) -> list[int]:
        """Prefix indices ``m`` with ``g(m, 0) = (n, 1)``."""
        target = 2 * n + 1
        return sorted(x // 2 for x, y in self.g.pairs if y == target)

    def report(self) -> dict:
        counts: dict[str, int] = {}
        for e in self.entries:
            counts[e.status] = counts.get(e.status, 0) + 1
        return {"k": self.k, "frontier": [self.base.points[x] for x in sorted(self.frontier)],
                "counts": counts, "consistent": self.consistent,
                "entries": [{"op": e.symbol, "args": list(e.args), "value": e.expected,
                             "status": e.status} for e in self.entries]}


def g_rule(limit: int) -> dict[int, tuple[int, int]]:
    """Preimage pairs ``n ↦ (m1, m2)`` for ``n < limit``.

    Each ``(n, 1)`` in turn receives the two least side-0 indices that are
    still unused and differ from ``n``.
    """
    used: set[int] = set()
    rule = {}
    for n in range(limit):
        picked = []
        m = 0
        while len(picked) < 2:
            if m != n and m not in used:
                picked.append(m)
            m += 1
        used.update(picked)
        rule[n] = (picked[0], picked[1])
    return rule


def prefix_model_F(k: int) -> PrefixModel:
    """Restrict the infinite model of ``F`` to ``{0..k-1} × {0, 1}`` and cross-check the table.

    Point ``(n, s)`` has index ``2n + s``.  An entry is ``exact`` when both
    sides agree on the prefix, ``confirmed`` when they agree once pairs
    touching frontier points are ignored, and ``mismatch`` otherwise.
    Frontier points are those with a g-edge that leaves the prefix.
    """
    if k < 2:
        raise MalformedInputError("prefix length must be at least 2")
    base = Base(f"({n},{s})" for n in range(k) for s in (0, 1))
    rule = g_rule(k + 1)
    inv = {m: n for n, pair in rule.items() for m in pair}
    # every m < k is assigned by step k at the latest
    f_pairs = [(2 * n, 2 * n + 1) for n in range(k)]
    g_pairs = [(2 * m, 2 * n + 1) for m, n in inv.items() if m < k and n < k]
    frontier = set()
    for n, pair in rule.items():
        if n < k:
            for m in pair:
                if m >= k:
                    frontier.add(2 * n + 1)
    for m in range(k):
        if inv[m] >= k:
            frontier.add(2 * m)
    f, g = PartialFunction(f_pairs), PartialFunction(g_pairs)
    A, _ = counterexample_F()
    size = 2 * k
    theta = {
        0: np.full(size, -1, dtype=np.int64),
        1: np.array([x if x % 2 == 0 else -1 for x in range(size)], dtype=np.int64),
        2: np.array([x if x % 2 == 1 else -1 for x in range(size)], dtype=np.int64),
        3: f.dense(size),
        4: g.dense(size),
    }
    keep = np.array([x not in frontier for x in range(size)])
    entries = []

    def compare(sym, args, expected):
        got = eval_dense(sym, [theta[a] for a in args], size)
        want = theta[expected]
        if np.array_equal(got, want):
            status = "exact"
        else:
            def settled(v):
                ok = keep.copy()
                dest = v >= 0
                ok[dest] &= keep[v[dest]]
                return np.where(ok, v, -1)
            status = "confirmed" if np.array_equal(settled(got), settled(want)) else "mismatch"
        entries.append(EntryCheck(sym, tuple(A.name(a) for a in args), A.name(expected), status))

    for sym in ("compose", "meet"):
        for a in A.elements:
            for b in A.elements:
                compare(sym, (a, b), A.tables[sym][a][b])
    for sym in ("dom", "ran", "unipoint"):
        for a in A.elements:
            compare(sym, (a,), A.tables[sym][a])
    return PrefixModel(k, base, f, g, frozenset(frontier), tuple(entries))


__all__ = [
    "Decision", "REPRESENTABLE", "NOT_ON_BASE", "INCONCLUSIVE", "DEFAULT_MAX_BASE",
    "brute_force_decide", "generator_order", "decide_via_construction",
    "characterisation_is_exact", "check_group", "group_algebra", "cyclic_group",
    "symmetric_group_3", "GROUPS", "F_CARRIER", "F_TABLES", "F_SIGNATURE", "Inequality",
    "CardinalityArgument", "counterexample_F", "EntryCheck", "PrefixModel", "g_rule",
    "prefix_model_F",
]
