"""Exception hierarchy shared by every subsystem.

All failures of mathematical preconditions raise subclasses of WittkitError,
so callers (in particular the suite runner) can distinguish "checked and
false" verdicts from "the question was ill-posed".
"""


class WittkitError(Exception):
    pass


class RingMismatch(WittkitError):
    """Operands belong to different rings."""


class LengthMismatch(WittkitError):
    """Witt vectors of incompatible lengths."""


class NotDivisible(WittkitError):
    """Exact division has no solution."""


class NonUniqueQuotient(WittkitError):
    """Division has several solutions and no canonical choice is defined."""


class ZeroDivisor(WittkitError):
    """A non-zero-divisor was required."""


class DepthExhausted(WittkitError):
    """A fractional exponent would need a denominator beyond the depth budget."""


class PrecisionExhausted(WittkitError):
    """A p-adic precision ledger ran out of reserve."""


class UnsupportedBase(WittkitError):
    """No normal-form backend for this coefficient ring."""


class UnsupportedElement(WittkitError):
    """Element lies outside the domain of a partially defined map."""


class LevelTooLow(WittkitError):
    """The cyclotomic target does not contain deep enough roots of unity."""


class HypothesisViolated(WittkitError):
    """A stated precondition of a lemma-level check fails on the input."""


class GoodnessFailed(WittkitError):
    """An almost-zero element was found where none is allowed."""

    def __init__(self, degree, witness=None):
        super().__init__(f"goodness fails in degree {degree}")
        self.degree = degree
        self.witness = witness


class ConeNotAlmostZero(WittkitError):
    """The cone of a morphism is not killed by the almost ideal."""


class ClosureFailed(WittkitError):
    """A submodule is not closed under a structure map."""

    def __init__(self, map_name, witness=None):
        super().__init__(f"not closed under {map_name}")
        self.map_name = map_name
        self.witness = witness


class AxiomFailed(WittkitError):
    """A Witt-complex axiom fails on a sampled generator."""

    def __init__(self, axiom, witness=None):
        super().__init__(f"axiom {axiom} fails")
        self.axiom = axiom
        self.witness = witness


class UnknownSuite(WittkitError):
    pass


class InvalidParams(WittkitError):
    pass
