"""Exception hierarchy.

Every error carries a stable ``code`` string so that scripts driving the
command line can match failures without parsing prose.
"""


class FqError(Exception):
    code = "E_FQ"


class NotPrime(FqError, ValueError):
    code = "E_NOT_PRIME"


class DegreeUnsupported(FqError, ValueError):
    code = "E_DEGREE"


class InvalidModulus(FqError, ValueError):
    code = "E_MODULUS"


class FieldMismatch(FqError, ValueError):
    code = "E_FIELD_MISMATCH"


class DivisionByZero(FqError, ZeroDivisionError):
    code = "E_DIV_ZERO"


class NonDefiniteField(FqError):
    code = "E_NONDEFINITE"


class DefiniteField(FqError):
    code = "E_DEFINITE"


class NotASquare(FqError, ValueError):
    code = "E_NOT_SQUARE"


class NonSquare(FqError, ValueError):
    """Matrix is not square."""

    code = "E_NONSQUARE"


class NotSymmetric(FqError, ValueError):
    code = "E_NOT_SYMMETRIC"


class Singular(FqError):
    code = "E_SINGULAR"


class SingularL(Singular):
    code = "E_SINGULAR_L"


class NotLowerPosTri(FqError, ValueError):
    code = "E_NOT_LOWER_POS"


class IndexOutOfRange(FqError, IndexError):
    code = "E_INDEX"


class SizeMismatch(FqError, ValueError):
    code = "E_SIZE"


class ZeroMinor(FqError):
    """The k-th leading (or trailing) principal minor vanishes."""

    code = "E_ZERO_MINOR"

    def __init__(self, k, kind="leading"):
        self.k = k
        self.kind = kind
        super().__init__(f"{kind} principal minor of size {k} is zero")


class PatternMismatch(FqError):
    code = "E_PATTERN"

    def __init__(self, k, got=None, expected=None):
        self.k = k
        self.got = got
        self.expected = expected
        super().__init__(
            f"sign patterns differ at position {k}: {got} vs {expected}"
        )


class InvalidPattern(FqError, ValueError):
    code = "E_BAD_PATTERN"


class BudgetExceeded(FqError):
    code = "E_BUDGET"

    def __init__(self, needed, budget):
        self.needed = needed
        self.budget = budget
        super().__init__(f"enumeration needs {needed} steps, budget is {budget}")


class CensusMismatch(FqError, AssertionError):
    code = "E_CENSUS"


class ParseError(FqError, ValueError):
    code = "E_PARSE"
