"""Exception types and shared guard configuration."""

# Upper bound on search/enumeration sizes before an operation bails out.
# Overridable per call and through the CLI's --explosion-cap flag.
DEFAULT_EXPLOSION_CAP = 10**8


class ConelabError(Exception):
    """Base class for all library-specific errors."""


class ParseError(ConelabError):
    """A document could not be decoded into a valid instance."""


class BoxUnderivable(ConelabError):
    """Interval propagation left some coordinate without a finite bound."""


class ExplosionGuard(ConelabError):
    """A search or enumeration exceeded the configured size cap."""


class NegativeInput(ConelabError):
    """Cone operations only support nonnegative points."""


class SupportSearchTooLarge(ConelabError):
    """Too many generators for exhaustive support-minimisation."""


class CertificateError(ConelabError):
    """A witness failed the exact linear identity it claims to satisfy."""


class PairSumViolation(ConelabError):
    """A multiplicity witness breaks the forced pairing of item and filler."""


class NegativeSlack(ConelabError):
    """Witness lifting derived a negative padding coefficient."""
