"""Small algebras of partial functions generated by a single function.

Each entry closes one partial function on a base of at most three points
under a signature and keeps the result when its functions cover the whole
base.  Entries carry the abstract algebra and the network of the concrete
representation so tests can compare both sides.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .core import SIG_AR, SIG_DR, SIG_DR_ZIF, FiniteAlgebra, Signature
from .errors import CapacityError, MalformedInputError
from .network import Network, from_concrete
from .pfun import ConcreteAlgebra, PartialFunction, Representation, abstract, close_under

CORPUS_SIGNATURES = {"DR": SIG_DR, "DR_ZIF": SIG_DR_ZIF, "AR": SIG_AR}
CORPUS_CAP = 200


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    signature: Signature
    base_size: int
    generator: PartialFunction
    concrete: ConcreteAlgebra

    @cached_property
    def _abstracted(self) -> tuple[FiniteAlgebra, Representation]:
        return abstract(self.concrete)

    @property
    def algebra(self) -> FiniteAlgebra:
        return self._abstracted[0]

    @property
    def representation(self) -> Representation:
        return self._abstracted[1]

    @cached_property
    def network(self) -> Network:
        return from_concrete(self.algebra, self.representation)


def all_partial_functions(k: int):
    for images in itertools.product(range(-1, k), repeat=k):
        yield PartialFunction.from_dense(images)


def generate(max_base: int = 3, signatures: dict[str, Signature] | None = None,
             cap: int = CORPUS_CAP) -> list[CorpusEntry]:
    """Corpus entries in a fixed order: signature, base size, generator."""
    signatures = CORPUS_SIGNATURES if signatures is None else signatures
    entries = []
    for label, sig in signatures.items():
        for k in range(max_base + 1):
            for f in all_partial_functions(k):
                try:
                    C = close_under(sig, [f], k, cap=cap)
                except MalformedInputError:
                    continue        # some base point is untouched by the closure
                except CapacityError:
                    continue
                pairs = ",".join(f"{x}{y}" for x, y in f.pairs)
                entries.append(CorpusEntry(f"{label}/k{k}/[{pairs}]", sig, k, f, C))
    return entries


def distinct_algebras(entries: list[CorpusEntry]) -> list[CorpusEntry]:
    """First entry for each distinct (signature, tables) pair."""
    seen = set()
    out = []
    for e in entries:
        key = (e.signature.symbols,
               tuple(sorted((s, str(t)) for s, t in e.algebra.tables.items())))
        if key not in seen:
            seen.add(key)
            out.append(e)
    return out
