"""Generator failures."""


class GeneratorError(Exception):
    """Raised when a generated matrix fails its own post-condition."""

    pass
