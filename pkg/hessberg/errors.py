"""Exception hierarchy shared by every hessberg module."""


class HessbergError(Exception):
    """Base class for all library errors."""


class UnsupportedTypeError(HessbergError, ValueError):
    """Lie type or rank outside the supported families."""


class RootConsistencyError(HessbergError, RuntimeError):
    """A root table entry is not a nonnegative integer combination of simple roots."""


class ArityError(HessbergError, ValueError):
    """Hessenberg function has the wrong number of values for its type."""


class InvalidHessenbergFunctionError(HessbergError, ValueError):
    def __init__(self, label: str, violations):
        self.violations = list(violations)
        super().__init__(f"{label} is not a Hessenberg function: violates {', '.join(self.violations)}")


class NotLowerIdealError(HessbergError, ValueError):
    """Set of roots is not downward closed or not a prefix in some chain."""


class InclusionError(HessbergError, ValueError):
    """Sub-Hessenberg function is not contained in the ambient one."""


class RingMismatchError(HessbergError, TypeError):
    """Operands live in polynomial rings with different variable counts."""


class UndefinedDegreeError(HessbergError, ValueError):
    """Degree of the zero polynomial."""


class NotArtinianError(HessbergError, ValueError):
    def __init__(self, detail: str = ""):
        msg = "not Artinian: generators are not a regular sequence"
        super().__init__(f"{msg} ({detail})" if detail else msg)


class GenericVariantError(HessbergError, ValueError):
    """Generic-coefficient generators requested outside the flag case."""


class InvalidPermutationError(HessbergError, ValueError):
    """Permutation does not biject the window {i+1, ..., h(i)}."""


class ProcedureRangeError(HessbergError, IndexError):
    """Type D procedure input or chain index out of range."""


class PresentationInconsistencyError(HessbergError, RuntimeError):
    """Multiplication map between quotients is not well defined."""


class CeilingExceededError(HessbergError, ValueError):
    def __init__(self, label: str, ceiling: int):
        super().__init__(f"{label}: rank exceeds desk-scale ceiling ({ceiling}); use --ceiling-override")
