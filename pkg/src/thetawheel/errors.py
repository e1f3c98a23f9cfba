"""Error taxonomy.

Three failure surfaces, kept apart so callers (and the CLI exit codes) can
tell them apart:

* InputError: the caller violated a documented precondition (bad file, bad
  hypothesis, graph outside the size guard).  CLI exit code 2.
* ClassViolationError: the input is structurally outside the graph class a
  solver needs (e.g. no bisimplicial vertex exists although the residual
  graph is nonempty).  The offending structure is attached when known.
  CLI exit code 1.
* InternalError: a step that the theory guarantees to succeed did not.
  Never caught internally; surfacing one means a bug here or an input that
  silently violated a class assumption.  CLI exit code 1.

GenerationError is raised by random generators when a bounded retry budget
is exhausted; it always reports the seed.
"""


class ThetaWheelError(Exception):
    """Base class for all package errors."""


class InputError(ThetaWheelError):
    """A documented precondition on the input was violated."""


class ClassViolationError(ThetaWheelError):
    """The input graph is outside the class required by the algorithm.

    `witness` optionally carries the forbidden structure that proves it.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class GenerationError(ThetaWheelError):
    """A randomized generator exhausted its retry budget.

    `seed` is always set so the failure can be reproduced.
    """

    def __init__(self, message, seed=None):
        super().__init__(message)
        self.seed = seed


class InternalError(ThetaWheelError):
    """A theory-guaranteed step failed.  Always a bug or a bad class claim."""
