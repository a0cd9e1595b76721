"""Finite algebras of partial functions, networks and finite-base representations."""

from .build import (ConstructionTrace, RealisabilityProfile, canonical_future, canonical_present,
                    construct, enumerate_allowable, make_profile, realisables_algebraic,
                    realisables_from_representation, size_bound)
from .core import (SIG_AR, SIG_DR, SIG_DR_ZIF, SIG_DRU, FiniteAlgebra, Signature, atoms,
                   domain_elements, necessary_laws, validate_algebra)
from .decide import (GROUPS, Decision, brute_force_decide, counterexample_F, decide_via_construction,
                     group_algebra, prefix_model_F)
from .errors import (CapacityError, ClosureError, ConstructionError, InconsistencyError,
                     MalformedInputError, NotARepresentationError, NotRepresentableError,
                     PfrepError, UnsupportedSignatureError)
from .network import (Network, find_isomorphism, from_concrete, future, future_closure, holds,
                      is_representation, present)
from .pfun import (Base, ConcreteAlgebra, PartialFunction, Representation, abstract, close_under,
                   eval_op)

__version__ = "0.1.0"
