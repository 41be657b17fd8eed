"""Shared exception types."""


class CapExceeded(Exception):
    """An enumeration or memory cap was exceeded; raise rather than run hot."""


class CheckpointError(Exception):
    """Checkpoint file is corrupt or belongs to a different sweep config."""


class CounterexampleError(Exception):
    """A decomposition that should exist could not be constructed.

    Carries the input and the exhausted search trace so the failure can be
    reported instead of silently swallowed.
    """

    def __init__(self, n, detail):
        self.n = n
        self.detail = detail
        super().__init__(f"no decomposition found for n={n}: {detail}")
