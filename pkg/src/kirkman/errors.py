"""Exception types shared across the package."""


class KirkmanError(Exception):
    """Base class for all errors raised by this package."""


class DuplicateElement(KirkmanError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"duplicate element {element} in block")


class EmptyDesign(KirkmanError):
    pass


class NonIntegralBound(KirkmanError):
    pass


class InvalidOrder(KirkmanError):
    pass


class InvalidParameter(KirkmanError):
    pass


class PreconditionFailed(KirkmanError):
    """An input failed verification; carries the verifier report."""

    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)


class UnsupportedOrder(KirkmanError):
    pass


class CatalogError(KirkmanError):
    pass


class FormatError(KirkmanError):
    pass
