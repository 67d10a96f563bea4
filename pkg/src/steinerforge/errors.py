"""Exception types shared across the package."""


class InfeasibleError(Exception):
    """A computation exceeds a documented size cap (dimension, subset count, ...)."""


class ConsistencyError(Exception):
    """An internal cross-check failed (two routes to the same value disagree)."""


class CertificationError(Exception):
    """A requested certification (design regularity, invariance, ...) did not hold."""
