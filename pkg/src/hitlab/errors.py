"""Exception hierarchy shared by all hitlab modules.

Each class maps to one CLI exit code / machine-readable error kind, so
library callers and the command line report failures identically.
"""


class HitlabError(Exception):
    """Base class; `kind` is the machine-parsable error tag."""

    kind = "error"
    exit_code = 1


class GraphFormatError(HitlabError):
    """Malformed graph file (bad header, bad edge line, self-loop)."""

    kind = "parse"
    exit_code = 1

    def __init__(self, message, path=None, line=None):
        loc = ""
        if path is not None:
            loc += f"{path}"
        if line is not None:
            loc += f":{line}"
        super().__init__(f"{loc}: {message}" if loc else message)
        self.path = path
        self.line = line


class VertexRangeError(GraphFormatError):
    """Vertex id outside 0..n-1 for the declared vertex count."""

    kind = "range"


class ConfigError(HitlabError):
    """Malformed or inconsistent experiment configuration."""

    kind = "config"
    exit_code = 1


class PreconditionError(HitlabError):
    """An operation's stated precondition does not hold for the inputs."""

    kind = "precondition"
    exit_code = 2


class EnumerationCapError(PreconditionError):
    """Graph exceeds the configured cap for exhaustive enumeration."""

    kind = "cap"


class FreenessViolationError(PreconditionError):
    """Input graph contains the forbidden induced K_{s,t}.

    Carries the witness embedding so callers can print or inspect it.
    """

    kind = "freeness"

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


class InfeasibleParamsError(HitlabError):
    """Parameter point cannot produce the requested construction."""

    kind = "infeasible"
    exit_code = 3


class VerificationFailure(HitlabError):
    """A certificate or candidate hitting set failed verification."""

    kind = "verification"
    exit_code = 4
