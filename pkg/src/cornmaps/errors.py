"""Exception types shared across the package."""


class CornMapsError(Exception):
    """Base class for all library-specific errors."""


class InvalidMapError(CornMapsError):
    """A flag system violates one of the map axioms.

    Carries the full validation report in ``report`` when available.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class DegenerateParameters(CornMapsError):
    """Builder parameters would produce a degenerate map (loops etc.)."""


class InconsistentRotation(CornMapsError):
    """A rotation system is not a well-formed dart assignment."""


class MapFormatError(CornMapsError):
    """A map or corneration file is syntactically malformed."""


class CornerationMismatch(CornMapsError):
    """A corneration file does not fit the map it is read against."""


class DegenerateResult(CornMapsError):
    """A map operator produced a flag system violating the axioms."""


class NonUniformValence(CornMapsError):
    """An operation requiring uniform valence met a mixed-valence map."""


class WidthOutOfRange(CornMapsError):
    """A corner width lies outside the admissible range for the map."""


class StraightCornerHasNoSide(CornMapsError):
    """A side-dependent query was made on a straight corner."""


class StraightHasNoComplement(CornMapsError):
    """The width complement is undefined for straight cornerations."""


class NotWedgeCorneration(CornMapsError):
    """An operation restricted to width-1 cornerations got a wider one."""


class CircuitTooShort(CornMapsError):
    """A closed walk of length < 2 cannot be a circuit in a loopless graph."""


class GroupTooLarge(CornMapsError):
    """A group exceeds the configured bound for exhaustive search.

    Supply a smaller group or explicit generators to proceed.
    """


class GroupNotSubgroup(CornMapsError):
    """The supplied permutations are not map symmetries."""


class GroupDoesNotPreserveCorneration(CornMapsError):
    """A quotient was requested for a group that moves the corneration."""


class NotTransitive(CornMapsError):
    """Classification requires a group acting transitively on the corners."""


class KIntersectsL(CornMapsError):
    """The new-corner set of a split graph must be disjoint from L."""


class KNotInvariant(CornMapsError):
    """The new-corner set is not invariant under the supplied group."""


class WidthMismatch(CornMapsError):
    """Corneration width does not match the operator it is moved along."""


class NoHalfReflexiveGroup(CornMapsError):
    """Neither the map nor its Petrie dual admits a half-reflexible group."""
