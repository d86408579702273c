"""Exception taxonomy for the engine.

Every failure mode that callers are expected to catch gets its own class so the
batch runner can collect them per file without string matching.
"""


class EngineError(Exception):
    """Base class for all engine errors."""


class MalformedPermutation(EngineError):
    pass


class CycleOutOfRange(EngineError):
    pass


class GroupTooLarge(EngineError):
    pass


class NotASubgroup(EngineError):
    pass


class NotNormal(EngineError):
    pass


class NotPSolvable(EngineError):
    pass


class ConductorOverflow(EngineError):
    pass


class GroupMismatch(EngineError):
    pass


class KernelViolation(EngineError):
    pass


class FactorizationViolation(EngineError):
    pass


class NotOverTheta(EngineError):
    pass


class NotAnExtension(EngineError):
    pass


class NotLinear(EngineError):
    pass


class NoExtension(EngineError):
    pass


class NotALift(EngineError):
    pass


class BadFormat(EngineError):
    pass


class ShapeMismatch(EngineError):
    pass


class BadRecord(EngineError):
    pass


class InconsistentDegrees(EngineError):
    pass


class AssertionFailure(EngineError):
    """A fact the underlying theory guarantees failed to hold at runtime.

    Raised only for engine bugs or misread math, never for bad user input.
    The anchor names the violated step so a failure pinpoints itself.
    """

    def __init__(self, anchor, message):
        self.anchor = anchor
        super().__init__(f"[{anchor}] {message}")


def ensure(condition, anchor, message):
    # assert-with-a-name; used for every proof-mandated runtime fact
    if not condition:
        raise AssertionFailure(anchor, message)
