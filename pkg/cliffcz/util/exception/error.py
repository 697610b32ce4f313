"""
    Errors raised by cliffcz. User facing errors derive from ValueError.
"""


class CliffordError(ValueError):
    pass


class DimensionError(CliffordError):
    pass


class MatrixFormatError(CliffordError):
    pass


class NotUnitaryError(CliffordError):
    pass


class NotCliffordError(CliffordError):
    pass


class CorruptTableError(CliffordError):
    def __init__(self, path, cause, line_no=None):
        self.path = path
        self.cause = cause
        self.line_no = line_no
        location = path if line_no is None else '{}:{}'.format(path, line_no)
        super(CorruptTableError, self).__init__('{}: {}'.format(location, cause))


class WordError(CliffordError):
    pass


class VerificationError(CliffordError):
    pass


class ClosureOverflowError(CliffordError):
    pass


class RingOverflowError(ArithmeticError):
    pass
