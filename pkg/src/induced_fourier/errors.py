"""Exception and warning types raised by the library."""


class GroupLawError(ValueError):
    """A multiplication table fails one of the group axioms."""


class NotLatinSquare(GroupLawError):
    def __init__(self, kind, index, detail=""):
        self.kind = kind
        self.index = index
        super().__init__(f"{kind} {index} is not a permutation of 0..n-1{detail}")


class NoIdentity(GroupLawError):
    pass


class NotAssociative(GroupLawError):
    def __init__(self, a, b, c):
        self.triple = (a, b, c)
        super().__init__(f"(a*b)*c != a*(b*c) for a={a}, b={b}, c={c}")


class NotSubgroup(ValueError):
    pass


class RepresentationError(ValueError):
    """Matrices supplied for a representation violate a representation axiom."""


class NotHomomorphism(RepresentationError):
    def __init__(self, k1, k2, residual):
        self.pair = (k1, k2)
        self.residual = residual
        super().__init__(f"L(k1*k2) != L(k1) L(k2) for k1={k1}, k2={k2} (residual {residual:.3g})")


class NotUnitary(RepresentationError):
    def __init__(self, k, residual):
        self.element = k
        self.residual = residual
        super().__init__(f"matrix of element {k} is not unitary (residual {residual:.3g})")


class BadIdentity(RepresentationError):
    pass


class PreconditionNotIrreducible(RepresentationError):
    pass


class InvalidP(ValueError):
    pass


class ShapeMismatch(ValueError):
    pass


class NotIrreducibleWarning(UserWarning):
    """An operation whose exactness needs irreducibility was given a reducible representation."""
