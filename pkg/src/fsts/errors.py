"""Exception hierarchy shared across the package.

Two broad categories matter for callers (and for CLI exit codes):

* ``InputError`` - malformed data or arguments (bad file, bad edge list,
  out-of-domain parameter).
* ``PreconditionError`` - structurally valid input on which an operation's
  mathematical precondition fails (e.g. the codegree of the hypergraph is
  too low for the pair-exact weighting to exist).
"""


class FstsError(Exception):
    """Base class for all package errors."""


class InputError(FstsError, ValueError):
    """Malformed input data or arguments."""


class HgParseError(InputError):
    """Error while parsing the ``.hg`` text format; carries a line number."""

    def __init__(self, line_no, message):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class PreconditionError(FstsError, ValueError):
    """An operation's mathematical precondition does not hold."""


class CodegreeConditionError(PreconditionError):
    """The hypergraph is not dense enough for the requested weighting.

    ``failing`` names the pair or clique that witnesses the failure.
    """

    def __init__(self, message, failing=None):
        self.failing = failing
        super().__init__(message)


class CliqueExtensionError(PreconditionError):
    """A clique prefix has no extension, so a clique weight is undefined."""


class InfeasiblePointError(PreconditionError):
    """A program point violates the feasible region; lists the violations."""

    def __init__(self, violations):
        self.violations = tuple(violations)
        super().__init__("infeasible point: " + "; ".join(self.violations))


class BoundInapplicableError(PreconditionError):
    """The capacity-counting bound does not apply to the given partition."""
