"""Exception hierarchy for the knot-diagram toolkit."""


class KnotError(Exception):
    """Base class for every error raised by this package."""


class PDSyntaxError(KnotError):
    """Text does not match the ``PD[X(a,b,c,d),...]`` grammar."""


class StructureError(KnotError):
    """A code parses but does not describe a valid one-knot diagram."""


class PairingError(StructureError):
    """Some arc label does not appear exactly twice."""


class MultiComponentError(StructureError):
    """Traversal of the code does not close a single loop."""


class NonPlanarError(StructureError):
    """The rotation system does not embed in the sphere (face count != n+2)."""


class ArcError(KnotError):
    """Arc label out of range for a splice operation."""


class ParityError(KnotError):
    """Torus-knot generator requires an odd, positive crossing number."""


class SizeError(KnotError):
    """Diagram exceeds the cost guard of the brute-force state sum."""


class LimitError(KnotError):
    """Resource cap exceeded in the fast bracket evaluator."""


class NonKnotExponentError(KnotError):
    """Jones substitution produced an exponent not divisible by 4."""


class ZeroScaleError(KnotError):
    """scale_exponents called with k = 0."""


class DegenerateError(KnotError):
    """Goeritz data requested for the 0-crossing diagram."""


class StaleMoveError(KnotError):
    """Move does not match the diagram it is being applied to."""


class DuplicateError(KnotError):
    """Crossing index repeated in a change set."""
