from cmatrix.exceptions import SgwsError


class TermCapError(SgwsError):
    def __init__(self, terms, cap):
        self.terms = terms
        self.cap = cap
        super().__init__(f"decomposition would need {terms} terms, above the cap of {cap}")


class AboveThresholdError(SgwsError):
    """No separable decomposition exists above the critical value"""

    def __init__(self, v, critical_v):
        self.v = v
        self.critical_v = critical_v
        super().__init__(
            f"v = {v!r} exceeds the critical value {critical_v!r}; "
            "the state is entangled (run certify for a witness)"
        )


class PhaseDimensionError(SgwsError):
    pass


class DecompositionFormatError(SgwsError):
    """A serialized decomposition does not match the document schema"""
