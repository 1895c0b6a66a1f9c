"""Exception classes shared across the package.

The CLI maps these onto exit codes: validation failures exit 1, hypothesis
refusals exit 2, internal invariant failures exit 3.
"""


class SSMassError(Exception):
    pass


class ValidationError(SSMassError):
    """Input data violates a type invariant (bad deck, bad parameters)."""

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class DeckError(ValidationError):
    """A JSON input deck could not be parsed."""

    def __init__(self, path, expected):
        self.path = path
        self.expected = expected
        super().__init__(f"{path}: expected {expected}")


class HypothesisError(SSMassError):
    """A formula was asked for outside the hypotheses it is valid under."""


class CapExceededError(HypothesisError):
    """A brute-force enumeration would exceed its desk-scale cap."""


class InvariantError(SSMassError):
    """An internal consistency check failed (e.g. a non-integral count)."""
