"""Root of the domain exception hierarchy."""


class CredibleNetworksError(Exception):
    """Base exception for every error raised by this package."""

    pass
