from cmatrix.exceptions import SgwsError


class ConcurrenceDomainError(SgwsError):
    """An input lies outside the domain of a concurrence formula"""
