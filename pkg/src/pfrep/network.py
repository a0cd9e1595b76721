"""Edge-labelled directed graphs over a finite algebra.

A network has a reflexive edge on every vertex and at most one labelled
edge per ordered pair of vertices.  Vertices are referenced by index; the
``vertices`` tuple holds their display ids.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from .core import ARITY, FiniteAlgebra, Signature
from .errors import MalformedInputError, NotARepresentationError
from .pfun import UNDEF, Base, PartialFunction, Representation, eval_dense


class Network:
    def __init__(self, vertices: Sequence, edges: Mapping[tuple[int, int], int],
                 root: int | None = None):
        self.vertices = tuple(str(v) for v in vertices)
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise MalformedInputError("vertex ids must be distinct", "vertices")
        self.edges: dict[tuple[int, int], int] = {}
        for (x, y), lab in edges.items():
            if not (0 <= x < n and 0 <= y < n):
                raise MalformedInputError(f"edge ({x}, {y}) refers to a missing vertex", "edges")
            self.edges[(int(x), int(y))] = int(lab)
        for x in range(n):
            if (x, x) not in self.edges:
                raise MalformedInputError(f"vertex {self.vertices[x]!r} has no reflexive edge",
                                          "edges")
        if root is not None and not 0 <= root < n:
            raise MalformedInputError("root is not a vertex")
        self.root = root
        self._out = None
        self._in = None

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return f"Network({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def __eq__(self, other):
        if not isinstance(other, Network):
            return NotImplemented
        return (self.vertices, self.edges, self.root) == (other.vertices, other.edges, other.root)

    @property
    def out(self) -> list[dict[int, int]]:
        """Per vertex, a map from successor to edge label."""
        if self._out is None:
            out = [dict() for _ in self.vertices]
            for (x, y), lab in self.edges.items():
                out[x][y] = lab
            self._out = out
        return self._out

    @property
    def into(self) -> list[dict[int, int]]:
        if self._in is None:
            into = [dict() for _ in self.vertices]
            for (x, y), lab in self.edges.items():
                into[y][x] = lab
            self._in = into
        return self._in

    def label(self, x: int, y: int) -> int | None:
        return self.edges.get((x, y))

    def reflexive_label(self, x: int) -> int:
        return self.edges[(x, x)]

    def reflexive_labels(self) -> list[int]:
        return [self.edges[(x, x)] for x in range(len(self.vertices))]

    def index(self, vertex_id: str) -> int:
        return self.vertices.index(vertex_id)

    def induced(self, keep: Iterable[int], root: int | None = None) -> "Network":
        keep = sorted(set(keep))
        pos = {v: i for i, v in enumerate(keep)}
        edges = {(pos[x], pos[y]): lab for (x, y), lab in self.edges.items()
                 if x in pos and y in pos}
        r = pos[root] if root is not None else None
        return Network([self.vertices[v] for v in keep], edges, root=r)

    def relabel(self, x: int, y: int, label: int) -> "Network":
        edges = dict(self.edges)
        edges[(x, y)] = label
        return Network(self.vertices, edges, root=self.root)


def holds(N: Network, A: FiniteAlgebra, a: int) -> frozenset[tuple[int, int]]:
    """Edges whose label lies below ``a``."""
    leq = A.leq
    return frozenset(e for e, lab in N.edges.items() if leq[lab][a])


def successors(N: Network, W: Iterable[int]) -> set[int]:
    reached = set()
    for x in W:
        reached.update(N.out[x])
    return reached


def reachable(N: Network, W: Iterable[int]) -> set[int]:
    seen = set(W)
    queue = deque(seen)
    while queue:
        x = queue.popleft()
        for y in N.out[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def future(N: Network, W: Iterable[int]) -> Network:
    """The subnetwork induced by the vertices one edge away from ``W``."""
    W = list(W)
    root = W[0] if len(W) == 1 else None
    return N.induced(successors(N, W), root=root)


def future_closure(N: Network, W: Iterable[int]) -> Network:
    W = list(W)
    root = W[0] if len(W) == 1 else None
    return N.induced(reachable(N, W), root=root)


def present(N: Network, x: int) -> frozenset[int]:
    """Vertices ``y`` with ``y`` reachable from ``x`` and ``x`` reachable from ``y``."""
    ahead = reachable(N, [x])
    return frozenset(y for y in ahead if x in reachable(N, [y]))


@dataclass(frozen=True, order=True)
class Failure:
    condition: str
    symbol: str
    witness: tuple = ()


@dataclass(frozen=True)
class Verdict:
    passed: bool
    failures: tuple[Failure, ...] = field(default_factory=tuple)

    def __bool__(self):
        return self.passed

    def conditions(self) -> set[str]:
        return {f.condition for f in self.failures}

    def to_dict(self, A: FiniteAlgebra | None = None) -> dict:
        return {"pass": self.passed,
                "failures": [{"condition": f.condition, "symbol": f.symbol,
                              "witness": list(f.witness)} for f in self.failures]}


def _edge_arrays(N: Network):
    if not N.edges:
        z = np.zeros(0, dtype=np.int64)
        return z, z, z
    items = sorted(N.edges.items())
    src = np.fromiter((e[0][0] for e in items), dtype=np.int64, count=len(items))
    dst = np.fromiter((e[0][1] for e in items), dtype=np.int64, count=len(items))
    lab = np.fromiter((e[1] for e in items), dtype=np.int64, count=len(items))
    return src, dst, lab


def holding_matrix(N: Network, A: FiniteAlgebra) -> tuple[np.ndarray, tuple]:
    """Boolean matrix ``H[a, e]``: element ``a`` holds on edge ``e``."""
    src, dst, lab = _edge_arrays(N)
    leq = np.array(A.leq, dtype=bool)
    return leq[lab].T.copy() if lab.size else np.zeros((A.size, 0), dtype=bool), (src, dst, lab)


def theta_arrays(N: Network, A: FiniteAlgebra):
    """Dense images of ``holds(N, a)`` for every element.

    Returns ``(Theta, functional, H, edges, clash)`` where ``functional[a]``
    is false when some vertex has two edges on which ``a`` holds; the row of
    ``Theta`` is then meaningless and ``clash[a]`` is ``(vertex, y1, y2)``.
    """
    n = len(N)
    H, (src, dst, lab) = holding_matrix(N, A)
    Theta = np.full((A.size, n), UNDEF, dtype=np.int64)
    functional = np.ones(A.size, dtype=bool)
    clash = {}
    for a in A.elements:
        mask = H[a]
        s = src[mask]
        if s.size:
            counts = np.bincount(s, minlength=n)
            if counts.max() > 1:
                functional[a] = False
                x = int(np.argmax(counts > 1))
                targets = sorted(int(t) for t in dst[mask][s == x])
                clash[a] = (x, targets[0], targets[1])
                continue
        Theta[a, s] = dst[mask]
    return Theta, functional, H, (src, dst, lab), clash


def is_representation(N: Network, A: FiniteAlgebra, sig: Signature | None = None) -> Verdict:
    """Decide whether ``N`` is a representation of ``A`` over its vertex set.

    Checks, in order, that every element holds on a functional set of edges,
    that every operation of ``sig`` acts on these edge sets as the
    corresponding operation on partial functions, and that ``a ≰ b`` is
    always witnessed by an edge on which ``a`` holds and ``b`` does not.
    Operation tuples that involve a non-functional element are skipped;
    they already fail the first condition.
    """
    sig = sig or A.signature
    for lab in N.edges.values():
        if not 0 <= lab < A.size:
            raise MalformedInputError(f"label {lab} is not an element of the algebra")
    n = len(N)
    Theta, functional, H, _, clash = theta_arrays(N, A)
    failures = []
    for a, (x, y1, y2) in sorted(clash.items()):
        failures.append(Failure("functional", "", (a, x, y1, y2)))
    ok = functional
    E = list(A.elements)
    for sym in sig:
        arity = ARITY[sym]
        if arity == 0:
            c = A.op(sym)
            if ok[c] and not np.array_equal(Theta[c], eval_dense(sym, [], n)):
                failures.append(Failure("op-correct", sym, (c,)))
        elif arity == 1:
            for a in E:
                r = A.op(sym, a)
                if ok[a] and ok[r]:
                    got = eval_dense(sym, [Theta[a]], n)
                    if not np.array_equal(got, Theta[r]):
                        failures.append(Failure("op-correct", sym, (a, r)))
        else:
            table = np.array(A.tables[sym], dtype=np.int64)
            for a in E:
                if not ok[a]:
                    continue
                got = eval_dense(sym, [Theta[a], Theta], n)
                want = Theta[table[a]]
                bad = ~np.all(got == want, axis=1) & ok & ok[table[a]]
                for b in np.nonzero(bad)[0]:
                    failures.append(Failure("op-correct", sym, (a, int(b), int(table[a][b]))))
    leq = A.leq
    for a in E:
        if not H.shape[1]:
            witnessed = np.zeros(A.size, dtype=bool)
        else:
            witnessed = np.any(H[a][None, :] & ~H, axis=1)
        for b in E:
            if not leq[a][b] and not witnessed[b]:
                failures.append(Failure("faithful", "", (a, b)))
    failures.sort()
    return Verdict(not failures, tuple(failures))


def representation_of(N: Network, A: FiniteAlgebra) -> Representation:
    """The map ``a ↦ holds(N, a)`` as partial functions on the vertex set."""
    Theta, functional, *_ = theta_arrays(N, A)
    if not functional.all():
        raise NotARepresentationError("some element holds on a non-functional edge set")
    return Representation(Base(N.vertices), [PartialFunction.from_dense(row) for row in Theta])


def from_concrete(A: FiniteAlgebra, theta: Sequence[PartialFunction] | Representation,
                  base=None) -> Network:
    """Label each pair by the meet of the elements holding on it."""
    if isinstance(theta, Representation):
        base = theta.base if base is None else base
        theta = theta.theta
    base = base if isinstance(base, Base) else Base.of_size(base)
    if len(theta) != A.size:
        raise MalformedInputError("one partial function per element is required")
    holding: dict[tuple[int, int], list[int]] = {}
    for a, f in enumerate(theta):
        for pair in f.pairs:
            holding.setdefault(pair, []).append(a)
    edges = {}
    for pair, elems in sorted(holding.items()):
        lab = A.meet_all(elems)
        if lab not in elems:
            raise NotARepresentationError(
                f"meet {A.name(lab)} of the elements holding on {pair} does not hold there",
                pair)
        edges[pair] = lab
    for x in range(len(base)):
        if (x, x) not in edges:
            raise NotARepresentationError(
                f"point {base.points[x]!r} carries no reflexive edge", (x, x))
    return Network(base.points, edges)


def canonical_map(N1: Network, x1: int, N2: Network, x2: int) -> dict[int, int] | None:
    """The anchored map ``y ↦ y'`` iff ``N1(x1, y) = N2(x2, y')``, if it is an isomorphism
    of one-step futures."""
    out1, out2 = N1.out[x1], N2.out[x2]
    if len(out1) != len(out2):
        return None
    by_label = {}
    for y, lab in out2.items():
        if lab in by_label:
            return None
        by_label[lab] = y
    mapping = {}
    for y, lab in out1.items():
        if lab not in by_label:
            return None
        mapping[y] = by_label[lab]
    if len(set(mapping.values())) != len(mapping):
        return None
    for y, yy in mapping.items():
        for z, zz in mapping.items():
            if N1.edges.get((y, z)) != N2.edges.get((yy, zz)):
                return None
    return mapping


def _signature(N: Network, v: int, keep: set[int]):
    out = sorted(lab for y, lab in N.out[v].items() if y in keep and y != v)
    inn = sorted(lab for y, lab in N.into[v].items() if y in keep and y != v)
    return N.edges[(v, v)], tuple(out), tuple(inn)


def isomorphism(N1: Network, keep1: Iterable[int], N2: Network, keep2: Iterable[int],
                fixed: Mapping[int, int] | None = None) -> dict[int, int] | None:
    """Backtracking search for a label-preserving bijection between induced subgraphs.

    Candidates are grouped by (reflexive label, out-labels, in-labels).
    """
    keep1, keep2 = set(keep1), set(keep2)
    if len(keep1) != len(keep2):
        return None
    sig1 = {v: _signature(N1, v, keep1) for v in keep1}
    sig2 = {v: _signature(N2, v, keep2) for v in keep2}
    if Counter(sig1.values()) != Counter(sig2.values()):
        return None
    pool: dict = {}
    for v in sorted(keep2):
        pool.setdefault(sig2[v], []).append(v)
    order = sorted(keep1, key=lambda v: (len(pool[sig1[v]]), sig1[v], v))
    mapping: dict[int, int] = dict(fixed or {})
    used = set(mapping.values())
    for v, w in mapping.items():
        if v not in keep1 or w not in keep2 or sig1[v] != sig2[w]:
            return None
    order = [v for v in order if v not in mapping]

    def consistent(v, w):
        for u, uu in mapping.items():
            if N1.edges.get((v, u)) != N2.edges.get((w, uu)):
                return False
            if N1.edges.get((u, v)) != N2.edges.get((uu, w)):
                return False
        return True

    def extend(i):
        if i == len(order):
            return True
        v = order[i]
        for w in pool[sig1[v]]:
            if w in used or not consistent(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return dict(mapping) if extend(0) else None


def find_isomorphism(N1: Network, x1: int, N2: Network, x2: int) -> dict[int, int] | None:
    """Isomorphism between the futures of ``x1`` in ``N1`` and ``x2`` in ``N2``.

    The canonical anchored map is tried first; otherwise a general
    labelled-digraph isomorphism of the two futures is searched for (which
    need not send ``x1`` to ``x2``).  Keys and values are vertex indices
    of ``N1`` and ``N2``.
    """
    m = canonical_map(N1, x1, N2, x2)
    if m is not None:
        return m
    return isomorphism(N1, successors(N1, [x1]), N2, successors(N2, [x2]))


def reflexive_label_classes(N: Network) -> dict[int, list[int]]:
    groups: dict[int, list[int]] = {}
    for x in range(len(N)):
        groups.setdefault(N.edges[(x, x)], []).append(x)
    return groups


def edge_labels(N: Network) -> set[int]:
    return set(N.edges.values())


def empty_network() -> Network:
    return Network([], {})


def disjoint_union(nets: Sequence[Network]) -> Network:
    vertices, edges, offset = [], {}, 0
    for k, N in enumerate(nets):
        vertices.extend(f"{k}:{v}" for v in N.vertices)
        for (x, y), lab in N.edges.items():
            edges[(x + offset, y + offset)] = lab
        offset += len(N)
    return Network(vertices, edges)

