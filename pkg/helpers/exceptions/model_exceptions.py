from helpers.exceptions.base import ApplicationException


class ZeroBiasException(ApplicationException):
    """Energy bias must be nonzero for the perturbative eigensystem."""


class InvalidParametersException(ApplicationException):
    """System or drive parameters violate their invariants."""
