"""Exception hierarchy shared by every module."""


class RingError(Exception):
    """Base class for errors raised by prodspec."""


class RingAxiomError(RingError):
    """A table ring violates a ring axiom.

    ``axiom`` names the law, ``witness`` is the tuple of element indices
    exhibiting the failure.
    """

    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(f"ring axiom '{axiom}' fails at elements {self.witness}")


class ZeroRingFactorError(RingError):
    """The zero ring was supplied as a direct product factor."""


class ResourceLimitError(RingError):
    """A computation would exceed a configured size guard."""


class HomomorphismError(RingError):
    """A mapping between rings does not preserve the ring structure."""


class NotPrimeError(RingError):
    """An ideal required to be prime is not.

    ``witness`` is a pair ``(a, b)`` with ``ab`` in the ideal and neither
    factor in it, or ``None`` when the ideal is the whole ring.
    """

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NotMaxRegularError(RingError):
    """An ideal required to be max-regular is not."""


class NotLocalError(RingError):
    """A product factor required to be local is not."""

    def __init__(self, message, factor=None):
        self.factor = factor
        super().__init__(message)


class NotDomainError(RingError):
    """A product factor required to be an integral domain is not."""


class ImproperFilterError(RingError):
    """A filter containing the empty set was supplied where a proper one is needed."""


class ConsistencyError(RingError):
    """A computed object contradicts an identity that must hold for it.

    Raised instead of returning a wrong answer; reaching it indicates a bug.
    """
