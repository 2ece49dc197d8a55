"""Exception types shared across the package."""

from __future__ import annotations


class LexidimError(ValueError):
    """Base class for every input-level error raised by lexidim."""

    kind = "input_error"

    def to_json(self) -> dict:
        return {"type": self.kind, "message": str(self)}


class GraphSpecError(LexidimError):
    kind = "graph_spec"


class KRangeError(LexidimError):
    """k lies outside the range for which the dimension is defined."""

    kind = "k_out_of_range"

    def __init__(self, k: int, high: int, what: str):
        self.k = k
        self.valid_range = (1, high)
        self.what = what
        super().__init__(f"k={k} is outside the valid range [1, {high}] ({what})")

    def to_json(self) -> dict:
        out = super().to_json()
        out["valid_range"] = list(self.valid_range)
        out["k"] = self.k
        return out


class HypothesisError(LexidimError):
    """A closed formula or lemma was asked for outside its hypotheses."""

    kind = "hypothesis_violation"


class CapExceeded(LexidimError):
    """An enumeration hit its cap; the answer is inconclusive, not negative."""

    kind = "cap_exceeded"
