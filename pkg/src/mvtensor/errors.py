"""Exception types shared across the package."""


class MvtError(Exception):
    """Base class for every error raised by this package."""


class BudgetExceeded(MvtError):
    """A search or closure did not finish within its element/time budget."""

    def __init__(self, budget, message=None):
        self.budget = budget
        super().__init__(message or f"budget of {budget} exceeded")


class UndefinedPartialSum(MvtError):
    """x + y requested although x > 1 - y."""


class ElementNotInAlgebra(MvtError):
    """An operand does not belong to the algebra it was used with."""


class InvalidIdeal(MvtError):
    """The given member set is not an ideal of its parent algebra."""


class NotSemisimple(MvtError):
    """A function representation was requested for an algebra with a nontrivial radical."""


class MixedAlgebras(MvtError):
    """Operands come from different parent algebras."""


class DegenerateAlgebra(MvtError):
    """One-element algebras are valid outputs but rejected as inputs here."""


class IntensionalNotSupported(MvtError):
    """A materializing operation received an intensionally given algebra."""


class NotABimorphism(MvtError):
    def __init__(self, certificate=None, message=None):
        self.certificate = certificate
        super().__init__(message or f"map is not a bimorphism: {certificate}")


class NotProductClosed(MvtError):
    def __init__(self, witness=None, message=None):
        self.witness = witness
        super().__init__(message or f"not closed under products, witness {witness}")


class TheoremViolation(MvtError):
    """A verified identity failed; this indicates a bug, never a recoverable state."""


class FactorizationInconsistent(TheoremViolation):
    """The factoring homomorphism was not well defined or not unique."""


class IsoNotFound(TheoremViolation):
    """Two sides that must be isomorphic could not be matched."""


class SepClosureFailed(TheoremViolation):
    """A scalar action left the algebra it must preserve."""


class LiftInconsistent(TheoremViolation):
    """A lifted homomorphism disagreed with itself along two derivations."""


class DecompositionNotFound(MvtError):
    """No generator-form decomposition was found within the budget."""


class UnsupportedConnective(MvtError):
    """A term uses a connective the evaluation context does not provide."""


class UnboundVariable(MvtError):
    """A term variable is missing from the evaluation environment."""


class TermSyntaxError(MvtError):
    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (at position {position})")
