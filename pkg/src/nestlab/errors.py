"""Exception types shared by every nestlab module."""


class NestlabError(Exception):
    """Base class for all nestlab errors."""


class InputError(NestlabError, ValueError):
    """An argument violates an operation's precondition."""


class CapacityError(NestlabError):
    """A size bound configured for exhaustive search was exceeded."""

    def __init__(self, what, size, bound):
        super().__init__(f"{what}: size {size} exceeds bound {bound}")
        self.what = what
        self.size = size
        self.bound = bound
