"""Finite-base construction of representations from operation tables.

The construction only ever inspects the algebra.  Which domain elements
label reflexive edges (the realisable ones) is supplied by a
:class:`RealisabilityProfile`, obtained either from a known representation
or from an algebraic characterisation.  Stage ``n`` adds, for every
class of depth ``n`` and every allowable way of attaching a fresh copy of
its canonical present to the network built so far, ``m`` copies of that
present.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import (FiniteAlgebra, Signature, atoms, domain_elements, is_zero_like)
from .errors import (ConstructionError, InconsistencyError, MalformedInputError,
                     NotRepresentableError, UnsupportedSignatureError)
from .network import Network, present

SCHEIN_SYMBOLS = frozenset({"compose", "meet", "dom", "ran", "zero", "ident", "fixset"})


@dataclass(frozen=True)
class RealisabilityProfile:
    """Realisable domain elements grouped into ``≲``-classes with depths.

    ``classes`` is sorted by depth and then by smallest member; ``depth[i]``
    is the depth of ``classes[i]``.
    """

    realisables: tuple[int, ...]
    lesssim: frozenset[tuple[int, int]]
    classes: tuple[tuple[int, ...], ...]
    depth: tuple[int, ...]

    def class_of(self, alpha: int) -> int:
        for i, cls in enumerate(self.classes):
            if alpha in cls:
                return i
        raise KeyError(alpha)

    def depth_of(self, alpha: int) -> int:
        return self.depth[self.class_of(alpha)]

    @property
    def max_depth(self) -> int:
        return max(self.depth, default=-1)

    def equivalent(self, alpha: int, beta: int) -> bool:
        return (alpha, beta) in self.lesssim and (beta, alpha) in self.lesssim

    def classes_at(self, depth: int) -> list[int]:
        return [i for i, d in enumerate(self.depth) if d == depth]


def make_profile(A: FiniteAlgebra, realisables: Iterable[int]) -> RealisabilityProfile:
    real = tuple(sorted(set(realisables)))
    for alpha in real:
        if A.dom(alpha) != alpha:
            raise NotRepresentableError(
                f"realisable element {A.name(alpha)} is not a domain element", (alpha,))
    inside = set(real)
    rel = {(a, a) for a in real}
    for a in A.elements:
        d, r = A.dom(a), A.ran(a)
        if d in inside and r in inside:
            rel.add((d, r))
    # The relation is transitive on the realisable elements of a representable
    # algebra; the closure keeps the profile a preorder regardless.
    for k in real:
        for i in real:
            if (i, k) in rel:
                for j in real:
                    if (k, j) in rel:
                        rel.add((i, j))
    groups: dict[frozenset, list[int]] = {}
    for a in real:
        key = frozenset(b for b in real if (a, b) in rel and (b, a) in rel)
        groups.setdefault(key, []).append(a)
    raw_classes = [tuple(v) for v in groups.values()]
    above = {c: [d for d in raw_classes if d != c and (c[0], d[0]) in rel] for c in raw_classes}
    memo: dict[tuple, int] = {}

    def depth_of(c):
        if c not in memo:
            memo[c] = max((depth_of(d) + 1 for d in above[c]), default=0)
        return memo[c]

    ordered = sorted(raw_classes, key=lambda c: (depth_of(c), c[0]))
    return RealisabilityProfile(real, frozenset(rel), tuple(ordered),
                                tuple(depth_of(c) for c in ordered))


def realisables_from_representation(N: Network, A: FiniteAlgebra) -> RealisabilityProfile:
    """Profile whose realisable elements are the reflexive labels of ``N``."""
    return make_profile(A, N.reflexive_labels())


def realisables_algebraic(A: FiniteAlgebra, sig: Signature | None = None,
                          drop_zero_like: bool = True) -> RealisabilityProfile:
    """Realisable domain elements read off the tables alone.

    With antidomain these are the domain elements that are atoms.  For
    expansions of ``{compose, meet, dom, ran}`` by zero, ident and fixset
    they are the ranges ``R(a)``, without the zero constant.  When zero is
    not in the signature a least element that behaves like an empty
    function is dropped as well unless ``drop_zero_like`` is false.
    """
    sig = sig or A.signature
    if "antidom" in sig:
        at = set(atoms(A).elements)
        real = [d for d in domain_elements(A, check=False) if d in at]
    elif set(sig) <= SCHEIN_SYMBOLS:
        real = sorted({A.ran(a) for a in A.elements})
        if "zero" in sig:
            real = [a for a in real if a != A.zero]
        elif drop_zero_like and A.size > 1:
            real = [a for a in real if not is_zero_like(A, a)]
    else:
        extra = sorted(set(sig) - SCHEIN_SYMBOLS)
        raise UnsupportedSignatureError(
            f"no algebraic characterisation of realisable elements for {sig}: "
            f"{extra} present without antidom")
    return make_profile(A, real)


def _successor_lists(A: FiniteAlgebra):
    """``succ[a][b]`` = the elements ``c`` with ``a∘c = b``."""
    comp = A.tables["compose"]
    succ = [dict() for _ in A.elements]
    for a in A.elements:
        row = comp[a]
        for c in A.elements:
            succ[a].setdefault(row[c], []).append(c)
    return succ


def canonical_future(A: FiniteAlgebra, alpha: int) -> Network:
    """The future of an ``alpha``-vertex, computed from the tables.

    Vertices correspond to the elements ``a`` with ``D(a) = alpha`` and are
    named after them; the root is the ``alpha`` vertex.  The edge from
    ``a`` to ``b`` carries the least ``c`` with ``a∘c = b``.
    """
    if A.dom(alpha) != alpha:
        raise MalformedInputError(f"{A.name(alpha)} is not a domain element")
    elems = [a for a in A.elements if A.dom(a) == alpha]
    succ = _successor_lists(A)
    edges = {}
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            S = succ[a].get(b)
            if not S:
                continue
            lab = A.meet_all(S)
            if A.compose(a, lab) != b:
                raise InconsistencyError(
                    f"at {A.name(alpha)}: the meet {A.name(lab)} of {{c : {A.name(a)}∘c = "
                    f"{A.name(b)}}} does not satisfy the equation", (alpha, a, b))
            edges[(i, j)] = lab
    root = elems.index(alpha)
    for j, b in enumerate(elems):
        if (j, j) not in edges:
            raise InconsistencyError(f"at {A.name(alpha)}: no c with {A.name(b)}∘c = {A.name(b)}",
                                     (alpha, b))
        if (root, j) not in edges:
            raise InconsistencyError(f"at {A.name(alpha)}: {A.name(alpha)}∘{A.name(b)} "
                                     f"≠ {A.name(b)}", (alpha, b))
    return Network([A.name(a) for a in elems], edges, root=root)


def future_elements(A: FiniteAlgebra, alpha: int) -> list[int]:
    """Element for each vertex of :func:`canonical_future`, in vertex order."""
    return [a for a in A.elements if A.dom(a) == alpha]


def canonical_present(A: FiniteAlgebra, alpha: int) -> Network:
    F = canonical_future(A, alpha)
    return F.induced(present(F, F.root), root=F.root)


@dataclass(frozen=True)
class AllowableChoice:
    """Where the lower vertices of a canonical future go in the network built so far.

    ``attach`` pairs each lower vertex of the class's canonical future with
    a vertex of the previous stage.
    """

    class_id: int
    attach: tuple[tuple[int, int], ...]

    def as_dict(self) -> dict[int, int]:
        return dict(self.attach)


class _Template:
    """A class's canonical future split into present part and lower part."""

    def __init__(self, A: FiniteAlgebra, profile: RealisabilityProfile, class_id: int):
        cls = profile.classes[class_id]
        self.class_id = class_id
        self.alpha = cls[0]
        self.future = canonical_future(A, self.alpha)
        pres = present(self.future, self.future.root)
        self.present = sorted(pres)
        self.lower = [v for v in range(len(self.future)) if v not in pres]
        depth = profile.depth[class_id]
        real = set(profile.realisables)
        for v in range(len(self.future)):
            lab = self.future.reflexive_label(v)
            if lab not in real:
                raise ConstructionError(
                    f"canonical future of {A.name(self.alpha)} has a vertex labelled "
                    f"{A.name(lab)}, which is not in the profile", class_id)
            in_class = lab in cls
            if in_class != (v in pres):
                raise ConstructionError(
                    f"canonical future of {A.name(self.alpha)}: vertex {self.future.vertices[v]} "
                    "is misplaced relative to the present", class_id)
            if not in_class and profile.depth_of(lab) >= depth:
                raise ConstructionError(
                    f"canonical future of {A.name(self.alpha)} reaches {A.name(lab)} "
                    "of no smaller depth", class_id)


def enumerate_allowable(A: FiniteAlgebra, profile: RealisabilityProfile, class_id: int,
                        N_prev: Network, template: _Template | None = None
                        ) -> list[AllowableChoice]:
    """All injective attachments of the lower part of a class's canonical future.

    A map is allowable when the future of a fresh copy of the present,
    joined to ``N_prev`` along the map, is isomorphic to the canonical
    future via the root-anchored map.  Pairs of lower vertices are checked
    as they are assigned, so the search prunes on partial maps; results are
    sorted by their images in lower-vertex order.
    """
    t = template or _Template(A, profile, class_id)
    L = t.lower
    if not L:
        return [AllowableChoice(class_id, ())]
    F = t.future
    by_label: dict[int, list[int]] = {}
    for v in range(len(N_prev)):
        by_label.setdefault(N_prev.reflexive_label(v), []).append(v)
    out_by_label = [dict() for _ in range(len(N_prev))]
    for (x, y), lab in N_prev.edges.items():
        out_by_label[x].setdefault(lab, []).append(y)
    into = N_prev.into
    edges = N_prev.edges
    assign: dict[int, int] = {}
    used: set[int] = set()
    results = []

    def candidates(l):
        best = None
        for l1, v1 in assign.items():
            c = F.edges.get((l1, l))
            if c is not None:
                cand = out_by_label[v1].get(c, [])
                if best is None or len(cand) < len(best):
                    best = cand
            c = F.edges.get((l, l1))
            if c is not None:
                cand = [u for u, lab in into[v1].items() if lab == c]
                if best is None or len(cand) < len(best):
                    best = cand
        if best is None:
            best = by_label.get(F.reflexive_label(l), [])
        return best

    def fits(l, v):
        if v in used or edges[(v, v)] != F.edges[(l, l)]:
            return False
        for l1, v1 in assign.items():
            if F.edges.get((l1, l)) != edges.get((v1, v)):
                return False
            if F.edges.get((l, l1)) != edges.get((v, v1)):
                return False
        return True

    def search():
        if len(assign) == len(L):
            results.append(tuple((l, assign[l]) for l in L))
            return
        best_l, best_c = None, None
        for l in L:
            if l in assign:
                continue
            c = candidates(l)
            if best_c is None or len(c) < len(best_c):
                best_l, best_c = l, c
                if not c:
                    return
        for v in sorted(best_c):
            if fits(best_l, v):
                assign[best_l] = v
                used.add(v)
                search()
                del assign[best_l]
                used.discard(v)

    search()
    results.sort(key=lambda att: [v for _, v in att])
    return [AllowableChoice(class_id, att) for att in results]


def extend_with_choice(N_prev: Network, template: _Template, choice: AllowableChoice,
                       prefix: str = "new") -> tuple[Network, int]:
    """``N_prev`` plus one fresh copy of the present joined along ``choice``.

    Returns the extended network and the index of the copy's root.
    """
    F = template.future
    vertices = list(N_prev.vertices)
    edges = dict(N_prev.edges)
    idx = {}
    for p in template.present:
        idx[p] = len(vertices)
        vertices.append(f"{prefix}.{F.vertices[p]}")
    _add_copy_edges(F, template.present, idx, choice.attach, edges)
    return Network(vertices, edges), idx[F.root]


def _add_copy_edges(F, present_vertices, idx, attach, edges):
    for p in present_vertices:
        for q in present_vertices:
            lab = F.edges.get((p, q))
            if lab is not None:
                edges[(idx[p], idx[q])] = lab
        for l, v in attach:
            lab = F.edges.get((p, l))
            if lab is not None:
                edges[(idx[p], v)] = lab


@dataclass(frozen=True)
class Stage:
    depth: int
    class_id: int
    choices: int
    vertices_added: int


@dataclass(frozen=True)
class ConstructionTrace:
    stages: tuple[Stage, ...]
    network: Network
    multiplicity: int

    def to_dict(self) -> dict:
        return {"multiplicity": self.multiplicity,
                "stages": [{"depth": s.depth, "class": s.class_id, "choices": s.choices,
                            "verticesAdded": s.vertices_added} for s in self.stages]}


def construct(A: FiniteAlgebra, profile: RealisabilityProfile, m: int | None = None,
              sig: Signature | None = None) -> ConstructionTrace:
    """Build a finite network depth by depth, ``m`` copies per allowable choice.

    ``m`` defaults to the size of the algebra and may not be smaller when
    opposite is in the signature.  The one-element algebra gets the empty
    network.
    """
    sig = sig or A.signature
    if m is None:
        m = A.size
    if m < 1:
        raise ValueError("multiplicity must be positive")
    if "opposite" in sig and m < A.size:
        raise ValueError(f"multiplicity {m} is below |A| = {A.size}, required with opposite")
    if A.size == 1:
        return ConstructionTrace((), Network([], {}), m)
    vertices: list[str] = []
    edges: dict[tuple[int, int], int] = {}
    stages = []
    for depth in range(profile.max_depth + 1):
        frozen = Network(vertices, edges)
        for class_id in profile.classes_at(depth):
            t = _Template(A, profile, class_id)
            choices = enumerate_allowable(A, profile, class_id, frozen, t)
            if not choices:
                raise ConstructionError(
                    f"no allowable choice for the class of {A.name(t.alpha)} at depth {depth}",
                    class_id)
            F = t.future
            for k, choice in enumerate(choices):
                for c in range(m):
                    idx = {}
                    for p in t.present:
                        idx[p] = len(vertices)
                        vertices.append(f"d{depth}.E{class_id}.k{k}.c{c}.{F.vertices[p]}")
                    _add_copy_edges(F, t.present, idx, choice.attach, edges)
            stages.append(Stage(depth, class_id, len(choices), len(choices) * m * len(t.present)))
    return ConstructionTrace(tuple(stages), Network(vertices, edges), m)


def size_bound(n_elems: int, max_depth: int) -> int:
    """``|A|^(2(d+1)|A|^d)``, exactly; 0 for the one-element algebra."""
    if n_elems < 1 or max_depth < 0:
        raise ValueError("need n_elems >= 1 and max_depth >= 0")
    if n_elems == 1:
        return 0
    return n_elems ** (2 * (max_depth + 1) * n_elems ** max_depth)


def bound_recurrence(n_elems: int, max_depth: int) -> list[int]:
    """Stage bounds ``N_0 = |A|²`` and ``N_k = N_{k-1} + |A|² N_{k-1}^|A|``."""
    if n_elems < 2:
        raise ValueError("the recurrence assumes at least two elements")
    values = [n_elems ** 2]
    for _ in range(max_depth):
        prev = values[-1]
        values.append(prev + n_elems ** 2 * prev ** n_elems)
    return values


def depth_limit(n_elems: int) -> int:
    """Largest ``d`` with ``d(d+1)/2 <= n_elems``."""
    d = 0
    while (d + 1) * (d + 2) // 2 <= n_elems:
        d += 1
    return d


def profile_report(A: FiniteAlgebra, profile: RealisabilityProfile) -> dict:
    name = A.name
    return {
        "realisables": [name(a) for a in profile.realisables],
        "lesssim": sorted([name(a), name(b)] for a, b in profile.lesssim),
        "classes": [{"members": [name(a) for a in cls], "depth": d}
                    for cls, d in zip(profile.classes, profile.depth)],
        "maxDepth": profile.max_depth,
    }


__all__ = [
    "RealisabilityProfile", "AllowableChoice", "ConstructionTrace", "Stage",
    "make_profile", "realisables_from_representation", "realisables_algebraic",
    "canonical_future", "canonical_present", "future_elements", "enumerate_allowable",
    "extend_with_choice", "construct", "size_bound", "bound_recurrence", "depth_limit",
    "profile_report",
]
