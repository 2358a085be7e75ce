"""Exception hierarchy shared by every framekit module."""


class FramekitError(ValueError):
    """Base class for all framekit errors."""


class UnknownLabel(FramekitError):
    def __init__(self, label):
        super().__init__(f"unknown label: {label!r}")
        self.label = label


class CycleError(FramekitError):
    def __init__(self, a, b):
        super().__init__(f"relation forces {a!r} <= {b!r} and {b!r} <= {a!r}")
        self.witness = (a, b)


class NotALattice(FramekitError):
    def __init__(self, witness, reason="pair lacks a lub or glb"):
        super().__init__(f"not a lattice: {reason} {witness!r}")
        self.witness = witness


class NotDistributive(FramekitError):
    def __init__(self, witness):
        super().__init__(f"not distributive, violating triple {witness!r}")
        self.witness = witness


class NotAFrame(FramekitError):
    def __init__(self, witness):
        super().__init__(f"frame law fails at {witness!r}")
        self.witness = witness


class NotAFrameMorphism(FramekitError):
    pass


class NotPrime(FramekitError):
    pass


class NotContinuous(FramekitError):
    pass


class NotT0(FramekitError):
    def __init__(self, witness):
        super().__init__(f"points {witness!r} have identical neighbourhoods")
        self.witness = witness


class NotSpectral(FramekitError):
    pass


class InvalidSpace(FramekitError):
    pass


class InvalidObject(FramekitError):
    pass


class MissingCosupport(FramekitError):
    def __init__(self, name):
        super().__init__(f"object {name!r} has no declared cosupport")
        self.name = name


class NotMaximal(FramekitError):
    pass


class NoTopElement(FramekitError):
    pass


class NotCompact(FramekitError):
    pass


class NoMaximalKoszul(FramekitError):
    pass


class AxiomViolated(FramekitError):
    def __init__(self, which, detail=""):
        super().__init__(f"support axiom ({which}) violated {detail}".rstrip())
        self.which = which
        self.detail = detail


class TooLarge(FramekitError):
    pass


class ParseError(FramekitError):
    pass
