from helpers.exceptions.base import ApplicationException


class UnknownChannelException(ApplicationException):
    """Channel is not a two-level resonance of the ground state."""
