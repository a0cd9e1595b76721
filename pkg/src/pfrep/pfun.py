"""Concrete partial functions on a finite base.

A partial function on a base of ``n`` points is stored canonically as a
sorted tuple of ``(x, y)`` index pairs.  All operations are evaluated on
a dense form: an integer array of length ``n`` holding ``f(x)`` or ``-1``
where ``f`` is undefined.  Binary operations broadcast over a leading
axis of their second argument so a whole column of an operation table can
be computed in one call.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .core import ARITY, FiniteAlgebra, Signature, canonical_symbol
from .errors import CapacityError, ClosureError, MalformedInputError

UNDEF = -1
DEFAULT_MAX_CLOSURE = 10000


def max_closure_from_env() -> int:
    raw = os.environ.get("PFREP_MAX_CLOSURE")
    if not raw:
        return DEFAULT_MAX_CLOSURE
    try:
        return int(raw)
    except ValueError:
        raise MalformedInputError(f"PFREP_MAX_CLOSURE must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class Base:
    points: tuple[str, ...]

    def __init__(self, points: Iterable):
        pts = tuple(str(p) for p in points)
        if len(set(pts)) != len(pts):
            raise MalformedInputError("base point names must be distinct", "base")
        object.__setattr__(self, "points", pts)

    @classmethod
    def of_size(cls, n: int) -> "Base":
        return cls(str(i) for i in range(n))

    @property
    def size(self) -> int:
        return len(self.points)

    def __len__(self):
        return len(self.points)

    def index(self, name: str) -> int:
        try:
            return self.points.index(name)
        except ValueError:
            raise MalformedInputError(f"point {name!r} is not in the base") from None


def _size(base) -> int:
    return base if isinstance(base, int) else len(base)


@dataclass(frozen=True, order=True)
class PartialFunction:
    """A finite functional set of pairs of point indices."""

    pairs: tuple[tuple[int, int], ...]

    def __init__(self, pairs: Iterable[Sequence[int]] = ()):
        ps = sorted({(int(x), int(y)) for x, y in pairs})
        for (x0, y0), (x1, y1) in zip(ps, ps[1:]):
            if x0 == x1:
                raise MalformedInputError(f"not functional: {x0} ↦ {y0} and {x1} ↦ {y1}")
        object.__setattr__(self, "pairs", tuple(ps))

    @classmethod
    def from_dense(cls, images) -> "PartialFunction":
        pf = object.__new__(cls)
        object.__setattr__(pf, "pairs", tuple((x, int(y)) for x, y in enumerate(images) if y >= 0))
        return pf

    @classmethod
    def identity(cls, n: int) -> "PartialFunction":
        return cls((x, x) for x in range(n))

    def dense(self, n: int) -> np.ndarray:
        arr = np.full(n, UNDEF, dtype=np.int64)
        for x, y in self.pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise MalformedInputError(f"pair ({x}, {y}) lies outside a base of {n} points")
            arr[x] = y
        return arr

    def key(self, n: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self.dense(n))

    def domain(self) -> frozenset[int]:
        return frozenset(x for x, _ in self.pairs)

    def range(self) -> frozenset[int]:
        return frozenset(y for _, y in self.pairs)

    def support(self) -> frozenset[int]:
        return self.domain() | self.range()

    def __call__(self, x: int) -> int | None:
        for p, q in self.pairs:
            if p == x:
                return q
        return None

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __contains__(self, pair) -> bool:
        return tuple(pair) in set(self.pairs)

    def __repr__(self):
        return "{" + ", ".join(f"{x}↦{y}" for x, y in self.pairs) + "}"


EMPTY = PartialFunction()


def _take(g, f):
    """``g[..., f]`` with undefined entries of ``f`` mapped to UNDEF."""
    if f.size == 0:
        return np.broadcast_to(f, g.shape).copy() if g.ndim > 1 else f.copy()
    safe = np.where(f >= 0, f, 0)
    return np.where(f >= 0, g[..., safe], UNDEF)


def _preimage_counts(f, n):
    defined = f[f >= 0]
    return np.bincount(defined, minlength=n) if defined.size else np.zeros(n, dtype=np.int64)


def eval_dense(sym: str, args: Sequence[np.ndarray], n: int) -> np.ndarray:
    """Evaluate one operation on dense partial functions over ``n`` points."""
    ident = np.arange(n, dtype=np.int64)
    if sym == "zero":
        return np.full(n, UNDEF, dtype=np.int64)
    if sym == "ident":
        return ident
    f = args[0]
    if sym == "compose":
        return _take(args[1], f)
    if sym == "meet":
        g = args[1]
        return np.where(f == g, f, UNDEF)
    if sym == "prefunion":
        return np.where(f >= 0, f, args[1])
    if sym == "dom":
        return np.where(f >= 0, ident, UNDEF)
    if sym == "antidom":
        return np.where(f < 0, ident, UNDEF)
    if sym == "fixset":
        return np.where(f == ident, ident, UNDEF)
    if sym == "ran":
        out = np.full(n, UNDEF, dtype=np.int64)
        hit = f[f >= 0]
        out[hit] = hit
        return out
    if sym == "unipoint":
        return np.where(_preimage_counts(f, n) == 1, ident, UNDEF)
    if sym == "opposite":
        out = np.full(n, UNDEF, dtype=np.int64)
        counts = _preimage_counts(f, n)
        xs = np.nonzero(f >= 0)[0]
        ys = f[xs]
        unique = counts[ys] == 1
        out[ys[unique]] = xs[unique]
        return out
    if sym == "maxiter":
        # Follow f for n steps, stopping where f is undefined; points that are
        # still inside dom(f) afterwards lie on or lead into a cycle.
        cur = ident.copy()
        for _ in range(n):
            step = _take(f, cur)
            cur = np.where(step >= 0, step, cur)
        return np.where(_take(f, cur) < 0, cur, UNDEF) if n else cur
    raise MalformedInputError(f"unknown operation symbol {sym!r}")


def eval_op(sym: str, args: Sequence[PartialFunction], base) -> PartialFunction:
    """Apply an operation to partial functions living on ``base``.

    ``base`` is a :class:`Base` or a point count.
    """
    sym = canonical_symbol(sym)
    if len(args) != ARITY[sym]:
        raise MalformedInputError(f"{sym} takes {ARITY[sym]} arguments, got {len(args)}")
    n = _size(base)
    dense = [a.dense(n) for a in args]
    return PartialFunction.from_dense(eval_dense(sym, dense, n))


@dataclass(frozen=True)
class Representation:
    """An assignment of a partial function to every element of an algebra."""

    base: Base
    theta: tuple[PartialFunction, ...]

    def __init__(self, base, theta: Sequence[PartialFunction]):
        object.__setattr__(self, "base", base if isinstance(base, Base) else Base.of_size(base))
        object.__setattr__(self, "theta", tuple(theta))
        n = len(self.base)
        for f in self.theta:
            f.dense(n)

    def __getitem__(self, a: int) -> PartialFunction:
        return self.theta[a]

    def __len__(self):
        return len(self.theta)


class ConcreteAlgebra:
    """A finite set of distinct partial functions on a base.

    By default the base must be exactly the union of all domains and
    ranges.  ``allow_isolated`` lifts that requirement.
    """

    def __init__(self, base, functions: Sequence[PartialFunction], signature: Signature,
                 names: Sequence[str] | None = None, allow_isolated: bool = False):
        self.base = base if isinstance(base, Base) else Base.of_size(base)
        self.functions = tuple(functions)
        self.signature = signature
        self.allow_isolated = allow_isolated
        if not self.functions:
            raise MalformedInputError("an algebra needs at least one element")
        if len(set(self.functions)) != len(self.functions):
            raise MalformedInputError("functions must be distinct")
        n = len(self.base)
        for f in self.functions:
            f.dense(n)
        if names is None:
            names = [f"e{i}" for i in range(len(self.functions))]
        self.names = tuple(str(s) for s in names)
        if len(self.names) != len(self.functions) or len(set(self.names)) != len(self.names):
            raise MalformedInputError("element names must be distinct, one per function")
        if not allow_isolated:
            covered = set().union(*(f.support() for f in self.functions))
            if covered != set(range(n)):
                missing = sorted(set(range(n)) - covered)
                raise MalformedInputError(
                    f"base points {[self.base.points[i] for i in missing]} occur in no function")

    def __len__(self):
        return len(self.functions)

    def index(self, f: PartialFunction) -> int:
        return self.functions.index(f)

    def representation(self) -> Representation:
        return Representation(self.base, self.functions)


def _canonical_order(keys):
    return sorted(keys, key=lambda k: PartialFunction.from_dense(k).pairs)


def close_under(sig: Signature, generators: Iterable[PartialFunction], base,
                cap: int | None = None, allow_isolated: bool = False) -> ConcreteAlgebra:
    """The least set containing ``generators`` closed under every operation of ``sig``.

    Elements are listed in breadth-first rounds; each round is sorted
    canonically.  Raises :class:`CapacityError` once more than ``cap``
    functions have been produced.
    """
    cap = max_closure_from_env() if cap is None else cap
    base = base if isinstance(base, Base) else Base.of_size(base)
    n = len(base)
    order: list[tuple] = []
    dense: dict[tuple, np.ndarray] = {}

    def add_round(keys):
        fresh = [k for k in _canonical_order(set(keys)) if k not in dense]
        for k in fresh:
            dense[k] = np.array(k, dtype=np.int64)
            order.append(k)
            if len(order) > cap:
                raise CapacityError(f"closure exceeds cap of {cap} functions", len(order))
        return fresh

    seed = [tuple(eval_dense(s, [], n).tolist()) for s in sig if ARITY[s] == 0]
    seed += [g.key(n) for g in generators]
    frontier = add_round(seed)
    while frontier:
        produced = []
        new_set = set(frontier)
        everything = np.stack([dense[k] for k in order])
        fresh = np.stack([dense[k] for k in frontier])
        for sym in sig:
            arity = ARITY[sym]
            if arity == 1:
                for k in frontier:
                    produced.append(tuple(eval_dense(sym, [dense[k]], n).tolist()))
            elif arity == 2:
                for a in order:
                    others = everything if a in new_set else fresh
                    produced.extend(map(tuple, eval_dense(sym, [dense[a], others], n).tolist()))
        frontier = add_round(produced)
    functions = [PartialFunction.from_dense(k) for k in order]
    return ConcreteAlgebra(base, functions, sig, allow_isolated=allow_isolated)


def check_closed(C: ConcreteAlgebra):
    """Return ``None`` if ``C`` is closed, else ``(symbol, arg_indices, result)``."""
    n = len(C.base)
    index = {f: i for i, f in enumerate(C.functions)}
    dense = [f.dense(n) for f in C.functions]
    for sym in C.signature:
        arity = ARITY[sym]
        if arity == 0:
            r = PartialFunction.from_dense(eval_dense(sym, [], n))
            if r not in index:
                return sym, (), r
        elif arity == 1:
            for i, d in enumerate(dense):
                r = PartialFunction.from_dense(eval_dense(sym, [d], n))
                if r not in index:
                    return sym, (i,), r
        else:
            stack = np.stack(dense)
            for i, d in enumerate(dense):
                col = eval_dense(sym, [d, stack], n)
                for j, row in enumerate(col):
                    r = PartialFunction.from_dense(row)
                    if r not in index:
                        return sym, (i, j), r
    return None


def abstract(C: ConcreteAlgebra) -> tuple[FiniteAlgebra, Representation]:
    """Operation tables of a concrete algebra together with its representation."""
    n = len(C.base)
    index = {f.key(n): i for i, f in enumerate(C.functions)}
    dense = [f.dense(n) for f in C.functions]
    m = len(dense)

    def lookup(sym, args, arr):
        k = tuple(int(v) for v in arr)
        if k not in index:
            raise ClosureError(sym, [C.names[a] for a in args], PartialFunction.from_dense(arr))
        return index[k]

    tables = {}
    for sym in C.signature:
        arity = ARITY[sym]
        if arity == 0:
            tables[sym] = lookup(sym, (), eval_dense(sym, [], n))
        elif arity == 1:
            tables[sym] = [lookup(sym, (i,), eval_dense(sym, [d], n)) for i, d in enumerate(dense)]
        else:
            stack = np.stack(dense) if m else np.zeros((0, n), dtype=np.int64)
            rows = []
            for i, d in enumerate(dense):
                col = eval_dense(sym, [d, stack], n)
                rows.append([lookup(sym, (i, j), col[j]) for j in range(m)])
            tables[sym] = rows
    A = FiniteAlgebra(C.names, C.signature, tables)
    return A, C.representation()


def concrete_from_representation(rep: Representation, sig: Signature,
                                 names: Sequence[str] | None = None,
                                 allow_isolated: bool = False) -> ConcreteAlgebra:
    return ConcreteAlgebra(rep.base, rep.theta, sig, names=names, allow_isolated=allow_isolated)
