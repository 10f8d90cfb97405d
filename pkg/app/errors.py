class LabError(Exception):
    """Base error for everything the checker refuses to evaluate."""


class MalformedInputError(LabError):
    """Tables that are not index-complete: dangling ids, missing entries, wrong types."""

    def __init__(self, message: str, where: tuple | None = None):
        super().__init__(message)
        self.where = where


class CapacityExceededError(LabError):
    """A construction or search would exceed a configured cap."""

    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what}: {size} exceeds cap {limit}")
        self.what = what
        self.size = size
        self.limit = limit


class LawViolationError(LabError):
    """Raised when an operation is handed data that breaks a law it depends on."""

    def __init__(self, law: str, witness: tuple):
        super().__init__(f"law '{law}' violated at {witness!r}")
        self.law = law
        self.witness = witness


class CorpusExhaustedError(CapacityExceededError):
    """The generator ran out of attempts before producing the requested instances."""

    def __init__(self, produced: int, requested: int, attempts: int):
        LabError.__init__(self, f"produced {produced} of {requested} instances in {attempts} attempts")
        self.what = "corpus attempts"
        self.size = attempts
        self.limit = attempts
        self.produced = produced
        self.requested = requested
