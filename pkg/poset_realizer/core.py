"""
On the core level the exception hierarchy of poset-realizer and the interface of the poset builders are defined. By
using these interfaces further constructions can be implemented and registered for the command line.

The package consists of the following modules:

* groups
    - Finite groups as validated Cayley tables, named group families and irredundant generating sequences.
* posets
    - Finite posets stored as strict-order bit matrices together with their Hasse diagrams, graphs and face posets.
* automorphisms
    - Partition refinement, automorphism groups as permutation groups and realization certificates.
* constructions
    - Explicit builders that return a poset together with the canonical group action on it.
* beta_search
    - Exhaustive enumeration of small posets to determine minimum realizer sizes.

"""


class PosetRealizerError(Exception):
    """Base class of all errors raised on purpose by poset-realizer."""

    def to_dict(self):
        """Machine readable representation that is written by the command line interface."""
        return dict(error=type(self).__name__, message=str(self))


class GroupSpecError(PosetRealizerError):
    """A group descriptor or Cayley table file could not be parsed."""


class CayleyTableError(PosetRealizerError):
    """A multiplication table violates a group axiom."""

    def __init__(self, message, triple=None):
        super().__init__(message)
        self.triple = triple

    def to_dict(self):
        return dict(super().to_dict(), triple=None if self.triple is None else [int(t) for t in self.triple])


class GeneratingSequenceError(PosetRealizerError):
    """A sequence does not generate the group or is not irredundant."""


class CycleError(PosetRealizerError):
    """A declared order relation contains a cycle."""

    def __init__(self, message, cycle=()):
        super().__init__(message)
        self.cycle = list(cycle)

    def to_dict(self):
        return dict(super().to_dict(), cycle=[str(c) for c in self.cycle])


class UnknownPointError(PosetRealizerError, KeyError):
    """A point label is not part of the poset."""

    def __str__(self):
        return Exception.__str__(self)


class CapExceededError(PosetRealizerError):
    """An input exceeds one of the configured size caps."""


class SearchTimeout(PosetRealizerError):
    """A search did not finish within the configured time. No partial result is returned."""


class ConstructionError(PosetRealizerError):
    """The parameters of a construction are invalid or an internal construction check failed."""


class VerificationError(PosetRealizerError):
    """A certificate or group action is malformed."""


class ConfigurationError(PosetRealizerError):
    """Command line flags are missing, invalid or conflicting."""


class Construction:
    """
    Base class for all poset builders.

    A construction is configured in its constructor and returns a ConstructedRealization on ``build()``. Concrete
    constructions are registered with a method tag, so that they can be instantiated from the command line with
    ``make_module(Construction, tag, **params)``.
    """

    #: str: Method tag of the construction. Set by the subclasses.
    method = None

    def build(self):
        """
        Construction of the poset and the canonical group action.

        Returns:
            ConstructedRealization: Poset, group, action and the parameters of the construction.
        """
        raise NotImplementedError

    def params(self):
        """
        Returns:
            dict: JSON serializable parameters of this construction.
        """
        return {}
