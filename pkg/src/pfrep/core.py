"""Signatures, finite algebras given by operation tables, and law screening.

Elements of a :class:`FiniteAlgebra` are referenced by their index in the
carrier.  Tables are stored as nested tuples so that the exhaustive loops
used throughout the package stay cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import MalformedInputError, NotRepresentableError

SYMBOLS = (
    "compose", "meet", "dom", "ran", "zero", "ident",
    "antidom", "fixset", "prefunion", "maxiter", "opposite", "unipoint",
)
ARITY = {
    "compose": 2, "meet": 2, "prefunion": 2,
    "zero": 0, "ident": 0,
    "dom": 1, "ran": 1, "antidom": 1, "fixset": 1,
    "maxiter": 1, "opposite": 1, "unipoint": 1,
}
ALIASES = {
    "comp": "compose", ";": "compose", "∘": "compose",
    "^": "meet", "∧": "meet", "and": "meet",
    "D": "dom", "R": "ran", "A": "antidom", "F": "fixset", "U": "unipoint",
    "0": "zero", "id": "ident",
    "pref": "prefunion", "⊔": "prefunion",
    "maxit": "maxiter", "↑": "maxiter",
    "inv": "opposite", "-1": "opposite",
}
# Symbols for which the finite-base construction is known to work.
CONSTRUCTION_SYMBOLS = frozenset(SYMBOLS) - {"unipoint"}


def canonical_symbol(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in ARITY:
        raise MalformedInputError(f"unknown operation symbol {name!r}")
    return name


@dataclass(frozen=True)
class Signature:
    """A set of operation symbols.

    Every signature must contain composition, meet and range, and must
    provide domain either directly or through antidomain (domain is then
    the double antidomain).  The ``unipoint`` symbol is rejected unless
    ``enable_unipoint`` is set.
    """

    symbols: tuple[str, ...]
    enable_unipoint: bool = False

    def __init__(self, symbols: Iterable[str], enable_unipoint: bool = False):
        syms = {canonical_symbol(s) for s in symbols}
        if "unipoint" in syms and not enable_unipoint:
            raise MalformedInputError("unipoint must be explicitly enabled")
        missing = {"compose", "meet", "ran"} - syms
        if missing:
            raise MalformedInputError(f"signature is missing {sorted(missing)}")
        if "dom" not in syms and "antidom" not in syms:
            raise MalformedInputError("signature needs dom or antidom")
        object.__setattr__(self, "symbols", tuple(s for s in SYMBOLS if s in syms))
        object.__setattr__(self, "enable_unipoint", enable_unipoint)

    def __contains__(self, sym: str) -> bool:
        return sym in self.symbols

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def arity(self, sym: str) -> int:
        return ARITY[sym]

    @property
    def is_construction_signature(self) -> bool:
        return set(self.symbols) <= CONSTRUCTION_SYMBOLS

    def with_symbols(self, *extra: str) -> "Signature":
        extra_syms = {canonical_symbol(e) for e in extra}
        return Signature(set(self.symbols) | extra_syms,
                         self.enable_unipoint or "unipoint" in extra_syms)

    def without(self, *syms: str) -> "Signature":
        return Signature(set(self.symbols) - set(syms), self.enable_unipoint)

    def __str__(self):
        return "{" + ",".join(self.symbols) + "}"


SIG_DR = Signature(["compose", "meet", "dom", "ran"])
SIG_DR_ZIF = Signature(["compose", "meet", "dom", "ran", "zero", "ident", "fixset"])
SIG_AR = Signature(["compose", "meet", "antidom", "ran"])
SIG_DRU = Signature(["compose", "meet", "dom", "ran", "unipoint"], enable_unipoint=True)


def _freeze_table(sym, raw, n):
    arity = ARITY[sym]
    where = f"tables.{sym}"

    def entry(value, pos):
        if isinstance(value, bool) or not isinstance(value, int):
            raise MalformedInputError(f"entry {value!r} is not an element index", pos)
        if not 0 <= value < n:
            raise MalformedInputError(f"index {value} out of range 0..{n - 1}", pos)
        return value

    if arity == 0:
        return entry(raw, where)
    if arity == 1:
        if not isinstance(raw, Sequence) or len(raw) != n:
            raise MalformedInputError(f"expected a list of {n} entries", where)
        return tuple(entry(v, f"{where}[{i}]") for i, v in enumerate(raw))
    if not isinstance(raw, Sequence) or len(raw) != n:
        raise MalformedInputError(f"expected {n} rows", where)
    rows = []
    for i, row in enumerate(raw):
        if not isinstance(row, Sequence) or len(row) != n:
            raise MalformedInputError(f"expected {n} entries", f"{where}[{i}]")
        rows.append(tuple(entry(v, f"{where}[{i}][{j}]") for j, v in enumerate(row)))
    return tuple(rows)


class FiniteAlgebra:
    """An abstract algebra on a finite carrier given by total operation tables.

    ``tables`` maps each symbol of ``signature`` to its table: an element
    index for constants, a list of indices for unary symbols and a square
    list of lists for binary ones (row = first argument).
    """

    def __init__(self, carrier: Sequence[str], signature: Signature,
                 tables: Mapping[str, object]):
        carrier = tuple(str(c) for c in carrier)
        if not carrier:
            raise MalformedInputError("carrier must be nonempty", "carrier")
        if len(set(carrier)) != len(carrier):
            raise MalformedInputError("carrier names must be distinct", "carrier")
        n = len(carrier)
        frozen = {}
        for sym in tables:
            if canonical_symbol(sym) not in signature:
                raise MalformedInputError(f"table for {sym!r} which is not in the signature",
                                          f"tables.{sym}")
        for sym in signature:
            if sym not in tables:
                raise MalformedInputError(f"missing table for {sym!r}", "tables")
            frozen[sym] = _freeze_table(sym, tables[sym], n)
        self.carrier = carrier
        self.signature = signature
        self.tables = frozen
        self._index = {name: i for i, name in enumerate(carrier)}

    @property
    def size(self) -> int:
        return len(self.carrier)

    def __len__(self):
        return len(self.carrier)

    def __repr__(self):
        return f"FiniteAlgebra({len(self.carrier)} elements, {self.signature})"

    def __eq__(self, other):
        if not isinstance(other, FiniteAlgebra):
            return NotImplemented
        return (self.carrier, self.signature, self.tables) == \
            (other.carrier, other.signature, other.tables)

    def __hash__(self):
        return hash((self.carrier, self.signature.symbols))

    @property
    def elements(self) -> range:
        return range(len(self.carrier))

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise MalformedInputError(f"unknown element {name!r}") from None

    def name(self, a: int) -> str:
        return self.carrier[a]

    def op(self, sym: str, *args: int) -> int:
        if sym == "dom":
            return self.dom(*args)
        table = self.tables[sym]
        if not args:
            return table
        if len(args) == 1:
            return table[args[0]]
        return table[args[0]][args[1]]

    def compose(self, a: int, b: int) -> int:
        return self.tables["compose"][a][b]

    def meet(self, a: int, b: int) -> int:
        return self.tables["meet"][a][b]

    def ran(self, a: int) -> int:
        return self.tables["ran"][a]

    def dom(self, a: int) -> int:
        return self.dom_table[a]

    @cached_property
    def dom_table(self) -> tuple[int, ...]:
        """The domain map, read directly or derived as ``antidom∘antidom``."""
        if "dom" in self.tables:
            return self.tables["dom"]
        anti = self.tables["antidom"]
        return tuple(anti[anti[a]] for a in self.elements)

    @cached_property
    def leq(self) -> tuple[tuple[bool, ...], ...]:
        m = self.tables["meet"]
        return tuple(tuple(m[a][b] == a for b in self.elements) for a in self.elements)

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]

    def meet_all(self, elems: Iterable[int]) -> int | None:
        result = None
        for e in elems:
            result = e if result is None else self.tables["meet"][result][e]
        return result

    @cached_property
    def zero(self) -> int | None:
        """The zero constant if it is in the signature, else ``None``."""
        return self.tables.get("zero")

    def restrict(self, signature: Signature) -> "FiniteAlgebra":
        """The reduct of this algebra to a smaller signature."""
        tables = {}
        for sym in signature:
            if sym == "dom" and "dom" not in self.tables:
                tables["dom"] = list(self.dom_table)
            elif sym not in self.tables:
                raise MalformedInputError(f"algebra has no table for {sym!r}")
            else:
                tables[sym] = self.tables[sym]
        return FiniteAlgebra(self.carrier, signature, tables)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: tuple[int, ...] | None = None
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[Check, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.passed

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def to_dict(self, algebra: FiniteAlgebra | None = None) -> dict:
        def show(w):
            if w is None:
                return None
            return [algebra.name(i) for i in w] if algebra is not None else list(w)

        return {
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "witness": show(c.witness),
                        "detail": c.detail} for c in self.checks],
        }


def _first(tuples, predicate):
    for t in tuples:
        if not predicate(*t):
            return t
    return None


def _check(name, tuples, predicate, detail=""):
    witness = _first(tuples, predicate)
    return Check(name, witness is None, witness, detail if witness is not None else "")


def validate_algebra(A: FiniteAlgebra) -> ValidationReport:
    """Check that meet is a semilattice operation and its order is sane.

    Table totality and index ranges are enforced when the algebra is built.
    """
    m = A.tables["meet"]
    E = A.elements
    checks = [
        _check("meet-idempotent", ((a,) for a in E), lambda a: m[a][a] == a, "a∧a ≠ a"),
        _check("meet-commutative", product(E, E), lambda a, b: m[a][b] == m[b][a],
               "a∧b ≠ b∧a"),
        _check("meet-associative", product(E, E, E),
               lambda a, b, c: m[m[a][b]][c] == m[a][m[b][c]], "(a∧b)∧c ≠ a∧(b∧c)"),
    ]
    leq = A.leq
    checks.append(_check("order-reflexive", ((a,) for a in E), lambda a: leq[a][a]))
    checks.append(_check("order-antisymmetric", product(E, E),
                         lambda a, b: not (leq[a][b] and leq[b][a]) or a == b))
    checks.append(_check("order-transitive", product(E, E, E),
                         lambda a, b, c: not (leq[a][b] and leq[b][c]) or leq[a][c]))
    if "zero" in A.signature:
        z = A.tables["zero"]
        checks.append(_check("zero-least", ((z, a) for a in E), lambda z_, a: leq[z_][a],
                             "zero is not below every element"))
    return ValidationReport(tuple(checks))


class PartialOrder:
    """The order ``a ≤ b`` iff ``a∧b = a`` on a finite carrier."""

    def __init__(self, leq: Sequence[Sequence[bool]]):
        self.leq = tuple(tuple(bool(x) for x in row) for row in leq)

    def __len__(self):
        return len(self.leq)

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq[a][b]

    def is_partial_order(self) -> bool:
        n = len(self.leq)
        L = self.leq
        return (all(L[a][a] for a in range(n))
                and all(a == b or not (L[a][b] and L[b][a]) for a in range(n) for b in range(n))
                and all(not (L[a][b] and L[b][c]) or L[a][c]
                        for a in range(n) for b in range(n) for c in range(n)))

    def least(self) -> int | None:
        for a in range(len(self.leq)):
            if all(self.leq[a]):
                return a
        return None

    def minimal(self, subset: Iterable[int] | None = None) -> tuple[int, ...]:
        pool = list(range(len(self.leq))) if subset is None else sorted(set(subset))
        return tuple(a for a in pool if not any(self.lt(b, a) for b in pool))


def induced_order(A: FiniteAlgebra) -> PartialOrder:
    return PartialOrder(A.leq)


def domain_elements(A: FiniteAlgebra, check: bool = True) -> tuple[int, ...]:
    """The elements of the form D(a), in carrier order.

    With ``check`` set, raises :class:`NotRepresentableError` when they fail
    to form a subsemilattice.
    """
    D = A.dom_table
    elems = tuple(sorted(set(D)))
    if check:
        s = set(elems)
        for a, b in product(elems, elems):
            if A.meet(a, b) not in s:
                raise NotRepresentableError("domain elements not closed under meet", (a, b))
    return elems


class AtomSet(NamedTuple):
    elements: tuple[int, ...]
    least: int | None
    no_zero: bool


def atoms(A: FiniteAlgebra) -> AtomSet:
    """Minimal elements strictly above the least element.

    If the order has no least element the minimal elements are returned and
    ``no_zero`` is set.
    """
    order = induced_order(A)
    least = A.zero if A.zero is not None and all(order.leq[A.zero]) else order.least()
    if least is None:
        return AtomSet(order.minimal(), None, True)
    nonzero = [a for a in A.elements if a != least]
    return AtomSet(order.minimal(nonzero), least, False)


def is_zero_like(A: FiniteAlgebra, z: int) -> bool:
    """Whether ``z`` is least, absorbing for composition and fixed by D and R."""
    if not all(A.leq[z]):
        return False
    return (A.dom(z) == z and A.ran(z) == z
            and all(A.compose(z, a) == z and A.compose(a, z) == z for a in A.elements))


def necessary_laws(A: FiniteAlgebra, sig: Signature | None = None) -> ValidationReport:
    """Screen quasi-laws that hold in every algebra of partial functions.

    A failure certifies that ``A`` is not representable; passing proves
    nothing.  L4 and L5 are only screened when antidomain is in ``sig``.
    """
    sig = sig or A.signature
    E = A.elements
    leq = A.leq
    D = A.dom_table
    comp = A.tables["compose"]
    checks = [
        _check("L1", product(E, E),
               lambda a, b: not (leq[b][a] and leq[D[a]][D[b]]) or a == b,
               "b ≤ a and D(a) ≤ D(b) but a ≠ b"),
        _check("L2", product(E, E), lambda a, c: leq[D[comp[a][c]]][D[a]],
               "D(a∘c) ≰ D(a)"),
        _check("L3", ((a,) for a in E), lambda a: not leq[a][D[a]] or a == D[a],
               "a ≤ D(a) but a ≠ D(a)"),
    ]
    if "antidom" in sig:
        anti = A.tables["antidom"]
        zeros = {comp[anti[a]][a] for a in E}
        z = next(iter(zeros))
        if len(zeros) != 1:
            vals = sorted(zeros)
            wit = [next(a for a in E if comp[anti[a]][a] == v) for v in vals[:2]]
            checks.append(Check("L4", False, tuple(wit), "A(a)∘a is not constant"))
        elif not all(leq[z]):
            checks.append(Check("L4", False, (z,), "A(a)∘a is not the least element"))
        elif "dom" in A.tables:
            checks.append(_check("L4", ((a,) for a in E), lambda a: D[a] == anti[anti[a]],
                                 "D(a) ≠ A(A(a))"))
        else:
            checks.append(Check("L4", True))

        def split(a, b):
            if not leq[b][a]:
                return True
            c = comp[anti[b]][a]
            if A.meet(b, c) != z or not leq[c][a]:
                return False
            # a must be the least upper bound of b and A(b)∘a
            return all(leq[a][u] for u in E if leq[b][u] and leq[c][u])

        if len(zeros) == 1:
            checks.append(_check("L5", product(E, E), split,
                                 "b ≤ a but a is not the join of b and A(b)∘a"))
        else:
            checks.append(Check("L5", False, None, "no constant least element"))
    return ValidationReport(tuple(checks))
