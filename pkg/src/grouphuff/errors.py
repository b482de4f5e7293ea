"""Exception hierarchy shared by every module in the package."""


class HuffmanError(Exception):
    """Base class for all errors raised by grouphuff."""


class EmptyInput(HuffmanError):
    pass


class NoLeaves(HuffmanError):
    pass


class KraftViolation(HuffmanError):
    pass


class MissingSymbol(HuffmanError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class BadGroupSize(HuffmanError, ValueError):
    pass


class UnsupportedLiteralK(HuffmanError, ValueError):
    pass


class AmbiguousCodebook(HuffmanError):
    """The code book is not uniquely decodable and cannot drive a decoder."""


class ContainerError(HuffmanError):
    """Base class for malformed or corrupt container data."""


class BadMagic(ContainerError):
    pass


class BadVersion(ContainerError):
    pass


class MalformedHeader(ContainerError):
    pass


class TruncatedPayload(ContainerError):
    pass


class TrailingGarbage(ContainerError):
    pass


class InvalidCodeword(ContainerError):
    """A bit path in the payload leads outside the decoding tree."""
