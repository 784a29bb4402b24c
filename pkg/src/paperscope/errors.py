"""Exception hierarchy shared by the engine and the HTTP layer.

Every error carries a stable machine-readable ``error_code`` and the HTTP
status it maps to when raised inside a request handler.
"""


class PaperscopeError(Exception):
    error_code = "internal_error"
    http_status = 500


class InvalidRequest(PaperscopeError):
    error_code = "invalid_request"
    http_status = 400


class MalformedId(InvalidRequest):
    error_code = "malformed_id"


class EmptyName(InvalidRequest):
    error_code = "empty_name"


class MissingMetadata(PaperscopeError):
    error_code = "missing_metadata"
    http_status = 500


class DuplicateId(PaperscopeError):
    error_code = "duplicate_id"
    http_status = 500


class MalformedRecord(PaperscopeError):
    error_code = "malformed_record"
    http_status = 500

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class EmptyQuery(InvalidRequest):
    error_code = "empty_query"


class BadPage(InvalidRequest):
    error_code = "bad_page"


class PhraseTooLong(InvalidRequest):
    error_code = "phrase_too_long"


class BadYearRange(InvalidRequest):
    error_code = "bad_year_range"


class MalformedTaxonomy(PaperscopeError):
    error_code = "malformed_taxonomy"
    http_status = 500


class UnknownSubtopic(PaperscopeError):
    error_code = "unknown_subtopic"
    http_status = 404


class UnknownPaper(PaperscopeError):
    error_code = "unknown_paper"
    http_status = 404


class UnknownAuthor(PaperscopeError):
    error_code = "unknown_author"
    http_status = 404


class UnknownVenue(PaperscopeError):
    error_code = "unknown_venue"
    http_status = 404


class UnparsableUrl(InvalidRequest):
    error_code = "unparsable_url"


class ChecksumMismatch(PaperscopeError):
    error_code = "checksum_mismatch"
    http_status = 500


class VersionMismatch(PaperscopeError):
    error_code = "version_mismatch"
    http_status = 500


class IngestFailed(PaperscopeError):
    error_code = "ingest_failed"
    http_status = 500
