"""Exception types raised across the package.

Every operational failure maps to one of these so callers (and the CLI
exit-code logic) can tell input errors, data corruption, and genuine
verification failures apart.
"""


class PassportSealError(Exception):
    """Base class for all package errors."""


# --- imaging ---------------------------------------------------------------

class ImageTooSmall(PassportSealError):
    pass


class ThresholdOrder(PassportSealError):
    pass


# --- geometry --------------------------------------------------------------

class SchemaMismatch(PassportSealError):
    pass


class EmptyInput(PassportSealError):
    pass


class DegenerateTriangle(PassportSealError):
    pass


class DimensionMismatch(PassportSealError):
    pass


# --- marks / matching ------------------------------------------------------

class EmptyPatch(PassportSealError):
    pass


class EmptySet(PassportSealError):
    pass


class EmptyGallery(PassportSealError):
    pass


class InsufficientMarks(PassportSealError):
    pass


class BinMismatch(PassportSealError):
    pass


class NotNormalized(PassportSealError):
    pass


class WeightSum(PassportSealError):
    pass


# --- crypto ----------------------------------------------------------------

class BadPadding(PassportSealError):
    pass


class KeyTooLong(PassportSealError):
    pass


class IntegrityFailure(PassportSealError):
    pass


class ShapeMismatch(PassportSealError):
    pass


class InvalidKeyImage(PassportSealError):
    pass


# --- codec -----------------------------------------------------------------

class Uncorrectable(PassportSealError):
    """Reed-Solomon decoding failed; carries an error-count estimate."""

    def __init__(self, message, error_estimate=None):
        super().__init__(message)
        self.error_estimate = error_estimate


class PayloadTooLarge(PassportSealError):
    def __init__(self, message, suggested_color_bits=None):
        super().__init__(message)
        self.suggested_color_bits = suggested_color_bits


class FormatInfoCorrupt(PassportSealError):
    pass


class PaletteAmbiguous(PassportSealError):
    pass


# --- payload ---------------------------------------------------------------

class BadMagic(PassportSealError):
    pass


class ChecksumMismatch(PassportSealError):
    pass


class TruncatedInput(PassportSealError):
    pass


class InvalidMrzCharacter(PassportSealError):
    pass


# --- evaluation ------------------------------------------------------------

class ZeroAreaBox(PassportSealError):
    pass


class EmptyScores(PassportSealError):
    pass


class DuplicateCandidate(PassportSealError):
    pass


class InsufficientData(PassportSealError):
    pass


# --- pipeline --------------------------------------------------------------

class VerificationUnavailable(PassportSealError):
    """Crypto or codec failure: the comparison could not be run at all.

    Distinct from a reject decision; the CLI maps this to exit code 3.
    """
