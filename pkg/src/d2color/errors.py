"""Exception hierarchy.

Every error a caller can act on derives from :class:`D2ColorError`; the CLI
maps these to exit code 1 with a JSON diagnostic.
"""


class D2ColorError(Exception):
    """Base class for domain errors."""

    code = "error"

    def to_json(self):
        return {"error": self.code, "message": str(self)}


class ParameterError(D2ColorError, ValueError):
    code = "parameter_out_of_range"


class EmptyGraphError(D2ColorError, ValueError):
    code = "empty_graph"


class UnknownVertexError(D2ColorError, KeyError):
    code = "unknown_vertex"

    def __str__(self):
        return Exception.__str__(self)


class TooLargeError(D2ColorError, ValueError):
    """An exact solver or oracle was asked to exceed its size guard."""

    code = "too_large"


class StaleConfigError(D2ColorError, ValueError):
    code = "stale_config"


class ListTooSmall(D2ColorError):
    code = "list_too_small"


class PreconditionViolated(D2ColorError):
    code = "precondition_violated"


class IrreducibleGraph(D2ColorError):
    """Reduction stalled on a nonempty graph; ``report`` holds the residual and its audit."""

    code = "irreducible"

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report

    def to_json(self):
        out = super().to_json()
        if self.report is not None:
            out["report"] = self.report.to_json()
        return out


class SafetyBoundViolated(D2ColorError, RuntimeError):
    """A greedy step saw more forbidden colors than its bound allows."""

    code = "safety_bound_violated"


class ParseError(D2ColorError, ValueError):
    """Malformed graph, list or coloring input; the CLI exits with code 2."""

    code = "parse_error"
