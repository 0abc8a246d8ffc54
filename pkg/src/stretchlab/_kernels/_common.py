"""Shared pieces for the kernel backends."""


class CapExceeded(RuntimeError):
    """An enumeration guard (cycle cap or clique guard) was hit."""
