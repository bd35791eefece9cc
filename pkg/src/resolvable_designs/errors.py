"""Exception types shared across the package."""


class DesignError(Exception):
    """Base class for all errors raised by this package."""


class MalformedBlock(DesignError):
    pass


class ParseError(DesignError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class TooSmall(DesignError):
    pass


class InternalInconsistency(DesignError):
    pass


class NotAClass(DesignError):
    def __init__(self, shift: int, detail: str = ""):
        msg = f"developed class at shift {shift} is not a parallel class"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.shift = shift


class FillMismatch(DesignError):
    pass


class IndexMismatch(DesignError):
    pass


class ReplaceMismatch(DesignError):
    pass


class CombineMismatch(DesignError):
    pass


class MissingIngredient(DesignError):
    """An ingredient is not buildable here and no file for it was supplied."""

    def __init__(self, keys_and_files):
        # keys_and_files: list of (IngredientKey, expected file name)
        self.missing = list(keys_and_files)
        lines = ", ".join(f"{k} (expected file {f})" for k, f in self.missing)
        super().__init__(f"missing ingredient(s): {lines}")


class SearchBudgetExceeded(DesignError):
    def __init__(self, key, nodes: int):
        super().__init__(f"search for {key} exhausted its budget after {nodes} nodes")
        self.key = key
        self.nodes = nodes


class RejectedIngredient(DesignError):
    def __init__(self, report):
        super().__init__(f"ingredient failed verification: {report.summary()}")
        self.report = report


class VersionConflict(DesignError):
    pass


class NotAdmissible(DesignError):
    def __init__(self, verdict):
        super().__init__(f"parameters are not admissible: {verdict.status}")
        self.verdict = verdict


class InternalError(DesignError):
    pass
