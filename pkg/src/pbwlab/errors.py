"""Exception hierarchy shared by all pbwlab modules."""


class PBWLabError(ValueError):
    """Base class for every error raised by pbwlab."""


class InvalidRankError(PBWLabError):
    pass


class IncompatibleRankError(PBWLabError):
    pass


class InvalidEntryError(PBWLabError):
    pass


class InvalidDimensionError(PBWLabError):
    pass


class NotRealizableError(PBWLabError):
    pass


class ResourceLimitError(PBWLabError):
    pass


class InvalidFieldError(PBWLabError):
    pass
