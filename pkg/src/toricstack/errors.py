"""Exception hierarchy.  Every semantic failure is a ``ToricStackError``."""


class ToricStackError(ValueError):
    pass


class KernelNotFree(ToricStackError):
    pass


class NotDMTorus(ToricStackError):
    pass


class FanError(ToricStackError):
    pass


class NotSimplicial(FanError):
    pass


class NotAFan(FanError):
    def __init__(self, message, cones=None):
        super().__init__(message)
        self.cones = cones


class DuplicateRay(FanError):
    pass


class RaysDoNotSpan(ToricStackError):
    pass


class StackyFanError(ToricStackError):
    pass


class ZeroFreePart(StackyFanError):
    pass


class HasGerbe(ToricStackError):
    pass


class NotALine(ToricStackError):
    pass


class IncomparableFans(ToricStackError):
    pass
