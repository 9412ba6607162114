class FsLabError(ValueError):
    """Base class for every input/consistency error raised by fs_lab."""


class ZeroConstantTerm(FsLabError):
    pass


class ConstantTermNotOne(FsLabError):
    pass


class SeriesOrderError(FsLabError):
    pass


class InvalidModulus(FsLabError):
    pass


class InvalidSchurPoint(FsLabError):
    pass


class InvalidAlpha(FsLabError):
    pass


class OutOfRegime(FsLabError):
    pass


class CosineOutOfRange(FsLabError):
    """cos(theta0) left [-1, 1]: the quadruple and the regime disagree."""


class DomainError(FsLabError):
    pass


class InvalidGrid(FsLabError):
    pass


class CoefficientParseError(FsLabError):
    def __init__(self, line_no: int, line: str):
        super().__init__(f"line {line_no}: expected 're,im', got {line!r}")
        self.line_no = line_no
        self.line = line
