from cmatrix.exceptions import SgwsError


class CoefficientValidationError(SgwsError):
    """Coefficients are malformed or violate the normalization restriction"""


class NotEntangledError(SgwsError):
    """Fewer than two nonzero coefficients: the pure state is a product state"""


class Restriction2Error(SgwsError):
    def __init__(self, min_eigenvalue):
        self.min_eigenvalue = min_eigenvalue
        super().__init__(
            "restriction (ii) fails: the single-qudit matrix has eigenvalue "
            f"{min_eigenvalue!r}; pass an explicit override to proceed"
        )
