"""Exception hierarchy shared by the package."""


class ReconError(Exception):
    """Base class for all errors raised by fsmrecon."""


class ModelError(ReconError):
    """A system model failed validation."""

    def __init__(self, defects):
        self.defects = tuple(defects)
        super().__init__("invalid model: " + "; ".join(self.defects))


class UnknownSymbolError(ReconError, LookupError):
    """A state or event name is not declared by the model."""

    def __init__(self, message, symbol=None):
        super().__init__(message)
        self.symbol = symbol


class SourceError(ReconError):
    """Syntax error in a model, evidence or statement text."""

    def __init__(self, message, line=None, column=None, expected=()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        where = f"{line}:{column}: " if line is not None else ""
        extra = ""
        if self.expected:
            extra = " (expected " + ", ".join(self.expected) + ")"
        super().__init__(f"{where}{message}{extra}")


class StatementSyntaxError(SourceError):
    pass


class ModelSyntaxError(SourceError):
    pass


class AnalysisError(ReconError):
    """An analysis pipeline stage failed; ``stage`` names it."""

    def __init__(self, stage, message):
        self.stage = stage
        super().__init__(f"{stage}: {message}")


class StateBudgetExceeded(AnalysisError):
    def __init__(self, budget):
        self.budget = budget
        super().__init__(
            "intersect", f"product exceeded the state budget of {budget} states"
        )
