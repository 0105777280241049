class Geo5Error(Exception):
    """
    Base class for domain errors.

    `exit_code` is what the CLI exits with, `status_code` what the HTTP
    routers answer with.
    """
    exit_code = 1
    status_code = 422


class DegenerateInput(Geo5Error):
    pass


class DegreeTooLarge(Geo5Error):
    pass


class EndpointRoot(Geo5Error):
    pass


class ShapeMismatch(Geo5Error):
    pass


class SingularMatrix(Geo5Error):
    pass


class InvalidAlgebra(Geo5Error):
    pass


class NotSolvable(Geo5Error):
    pass


class WrongDimension(Geo5Error):
    pass


class WrongBranch(Geo5Error):
    pass


class UnknownLabel(Geo5Error):
    status_code = 404


class UnknownStabilizer(Geo5Error):
    status_code = 404


class NotAGroup(Geo5Error):
    pass


class ModelMismatch(Geo5Error):
    pass


class InvalidParameter(Geo5Error):
    pass


class PolynomialRejected(Geo5Error):
    """
    Raised when a polynomial fails the unit-cubic gate; carries every failed check.
    """

    def __init__(self, reasons: list[str]):
        super().__init__("; ".join(reasons))
        self.reasons = reasons


class IllConditioned(Geo5Error):
    pass


class MalformedTarget(Geo5Error):
    pass


class InputFormatError(Geo5Error):
    exit_code = 2
    status_code = 400
