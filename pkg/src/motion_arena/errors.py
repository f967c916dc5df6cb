"""Exception types shared across the package."""


class ArenaError(Exception):
    """Base class for all package errors."""


class UnsupportedLayout(ArenaError):
    """Requested marker count has no canonical layout."""


class ParamMismatch(ArenaError):
    """Gait parameters do not match the marker layout."""


class SpecError(ArenaError):
    """Motion spec is invalid or incomplete for the requested operation."""


class ModalityError(ArenaError):
    """Prompt modality is not supported by the target model config."""


class CredentialError(ArenaError):
    """Model credentials are missing or rejected."""


class TransportError(ArenaError):
    """Model endpoint kept failing after the retry budget was spent."""


class InsufficientPool(ArenaError):
    """Artifact pool cannot produce a battle (needs two models on one spec)."""


class DuplicateVote(ArenaError):
    """A vote for this battle id was already ingested."""


class ValidationError(ArenaError):
    """A record failed validation (e.g. Likert score out of range)."""


class ReplayError(ArenaError):
    """Vote log replay hit a malformed record.

    ``record_index`` and ``battle_id`` (when recoverable) identify the
    offending line.
    """

    def __init__(self, message: str, record_index: int, battle_id: str | None = None):
        super().__init__(message)
        self.record_index = record_index
        self.battle_id = battle_id


class NoOverlap(ArenaError):
    """Two vote logs share no battle ids."""


class DegenerateInput(ArenaError):
    """Statistic undefined for this input (e.g. zero variance)."""
