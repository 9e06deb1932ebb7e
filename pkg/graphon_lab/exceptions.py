"""Custom Exceptions for graphon_lab."""


class GraphonLabException(Exception):
    """Super basic."""


class GraphonManifestException(GraphonLabException):
    """For manifests and plans that can not be loaded."""


class GraphonValidationException(GraphonLabException):
    """For graphons that fail the strict checks."""


class NumericalContractException(GraphonLabException):
    """For inputs that break a numerical precondition."""


class BoundDomainException(NumericalContractException):
    """For bound parameters outside the domain of a formula."""


class DisconnectedGraphException(NumericalContractException):
    """Exception to raise when a resistance is requested on a disconnected graph."""

    def __init__(self, lambda_2: float, n: int) -> None:
        self.lambda_2 = lambda_2
        self.n = n
        super().__init__(
            f"Graph with {n} nodes is disconnected (lambda_2={lambda_2:.3e}), "
            "the average effective resistance is infinite."
        )


class InsufficientDataException(GraphonLabException):
    """Exception to raise when a slope fit has too few points."""


class GraphonExecutionStillInProgress(GraphonLabException):
    """Exception to raise if execution is still in progress."""
