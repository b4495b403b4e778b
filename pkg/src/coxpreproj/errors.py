"""Exception hierarchy.

Every error raised by the library derives from :class:`CoxeterError`.  The
three families below map to distinct CLI exit codes: domain errors (bad input
or a violated precondition), numerical ambiguity (a sign test that could not
be resolved at the working tolerance) and exceeded search bounds.
"""


class CoxeterError(Exception):
    """Base class; a domain error unless a subclass says otherwise."""


class MatrixError(CoxeterError):
    pass


class AsymmetricMatrix(MatrixError):
    pass


class BadDiagonal(MatrixError):
    pass


class OffDiagonalBelow2(MatrixError):
    pass


class Disconnected(MatrixError):
    """The Coxeter graph is disconnected, i.e. the system is reducible."""


class TooManyGenerators(MatrixError):
    pass


class UnknownPreset(CoxeterError):
    pass


class BadParams(CoxeterError):
    pass


class CyclicOrientation(CoxeterError):
    pass


class NotADivisor(CoxeterError):
    pass


class NotAFilter(CoxeterError):
    pass


class NotAdmissible(CoxeterError):
    pass


class DifferentBase(CoxeterError):
    pass


class InvalidPath(CoxeterError):
    pass


class InternalInconsistency(CoxeterError):
    """A construction guaranteed to exist did not; indicates a bug."""


class ConstructionFailed(InternalInconsistency):
    pass


class RealizationFailed(InternalInconsistency):
    pass


class DecompositionFailed(InternalInconsistency):
    pass


class FormulaMismatch(InternalInconsistency):
    pass


class NoProjectiveMatch(InternalInconsistency):
    pass


class NumericalAmbiguity(CoxeterError):
    """A vector expected to be a root has coordinates of both signs (or is zero)."""


class NoDescent(NumericalAmbiguity):
    pass


class BoundExceeded(CoxeterError):
    pass


class NotPreprojectiveWithinBound(BoundExceeded):
    pass


class SearchBoundExceeded(BoundExceeded):
    pass
