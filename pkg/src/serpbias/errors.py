"""Exception hierarchy shared across the package.

Exit-code contract for the CLI: configuration and input-validation
problems map to exit code 1, runtime failures to exit code 2.
"""


class SerpBiasError(Exception):
    """Base class for all package errors."""


class ConfigError(SerpBiasError):
    """Bad configuration file, option value, or option combination."""


class CorpusFormatError(SerpBiasError):
    """Malformed corpus / topic-config / lexicon record."""

    def __init__(self, message, path=None, line=None):
        loc = ""
        if path is not None:
            loc = f"{path}:" if line is None else f"{path}:{line}:"
        super().__init__(f"{loc} {message}".strip())
        self.path = path
        self.line = line


class ValidationError(SerpBiasError):
    """Well-formed input that violates an invariant (rank gaps, empty body, ...)."""


class DegenerateSampleError(SerpBiasError, ValueError):
    """Sample too small or without variance for a t-test."""


class UnscorableDocumentError(SerpBiasError):
    """Document yields no scorable text at the requested analysis level."""


class ProviderError(SerpBiasError):
    """Sentiment provider misbehaved (bad value, dead process, ...)."""


class AuditError(SerpBiasError):
    """Pipeline-level failure; partial reports are never emitted."""


class CrawlError(SerpBiasError):
    """Base class for search-API snapshot failures."""


class AuthError(CrawlError):
    """Rejected credentials."""


class QuotaError(CrawlError):
    """Request quota exhausted (persisted after bounded retries)."""


class FetchError(CrawlError):
    """Fetch failed; ``transient`` marks retry-worthy failures."""

    def __init__(self, message, transient=False):
        super().__init__(message)
        self.transient = transient


class SnapshotError(CrawlError):
    """Too many per-query failures for the snapshot to be usable."""


#: Errors that indicate bad input/config rather than a runtime fault.
CONFIG_ERRORS = (ConfigError, CorpusFormatError, ValidationError)
