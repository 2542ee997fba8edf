from typing import Any, Dict, Optional


class RandicError(Exception):
    """Base error. `code` is stable and machine readable, `message` is for humans."""

    code = "randic_error"

    def __init__(self, message: str, code: Optional[str] = None, **detail: Any):
        super().__init__(message)
        self.message = message
        if code is not None:
            self.code = code
        self.detail: Dict[str, Any] = detail

    def as_dict(self) -> Dict[str, Any]:
        return {
            "success": False,
            "code": self.code,
            "message": self.message,
            **self.detail,
        }

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


# =========================================================
# ARGUMENT ERRORS
# =========================================================
class GraphError(RandicError, ValueError):
    code = "graph_error"


class Graph6Error(RandicError, ValueError):
    code = "graph6_error"


class ParameterError(RandicError, ValueError):
    code = "parameter_error"


class SurgeryError(RandicError, ValueError):
    code = "surgery_error"


# =========================================================
# CORPUS ERRORS
# =========================================================
class CorpusError(RandicError):
    code = "corpus_error"
