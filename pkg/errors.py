"""Exception hierarchy. Each error knows the exit code the CLI reports for it."""

from config import EXIT_BAD_INPUT, EXIT_INTERNAL


class IHXError(Exception):
    """Base class for every error raised by the engine"""
    exit_code = EXIT_INTERNAL


class ComplexError(IHXError):
    exit_code = EXIT_BAD_INPUT


class MalformedSimplexError(ComplexError):
    pass


class EmptyComplexError(ComplexError):
    pass


class QuotientNotSimplicialError(ComplexError):
    pass


class StratificationError(IHXError):
    exit_code = EXIT_BAD_INPUT


class FrontierError(StratificationError):
    def __init__(self, stratum, other, message=None):
        self.stratum = stratum
        self.other = other
        super().__init__(message or f"frontier condition fails between strata {stratum} and {other}")


class StratumDimensionError(StratificationError):
    pass


class UnlabeledSimplexError(StratificationError):
    pass


class UnknownStratumError(StratificationError):
    pass


class MalformedStratumError(StratificationError):
    pass


class PerversityError(IHXError):
    exit_code = EXIT_BAD_INPUT


class GrowthConditionError(PerversityError):
    def __init__(self, index, message):
        self.index = index
        super().__init__(message)


class UnknownPerversityError(PerversityError):
    pass


class PerversityDimensionError(PerversityError):
    pass


class InconsistentDimensionsError(IHXError):
    exit_code = EXIT_BAD_INPUT


class InapplicableError(IHXError):
    exit_code = EXIT_BAD_INPUT


class ZeroDataError(IHXError):
    exit_code = EXIT_BAD_INPUT


class UnknownGalleryError(IHXError):
    exit_code = EXIT_BAD_INPUT


class SpaceFileError(IHXError):
    exit_code = EXIT_BAD_INPUT


class ChainSizeError(IHXError):
    exit_code = EXIT_BAD_INPUT
