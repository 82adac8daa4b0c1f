"""Exception types shared across the package."""


class SidonError(Exception):
    """Base class for package errors."""


class ParameterError(SidonError, ValueError):
    """Rejected (q, k, ...) domain parameters or malformed inputs."""


class CapacityError(SidonError):
    """An exhaustive procedure was asked to run beyond its feasibility bound."""


class FactorizationError(SidonError):
    """A field element could not be factored as a product of two space elements."""


class DecryptionError(SidonError):
    """Ciphertext does not decrypt under the given private key."""


class InternalError(SidonError):
    """A randomized search exceeded its retry cap; indicates a bug or bad field."""
