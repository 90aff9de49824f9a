"""Python bindings for the affine_fock library."""

import json

from ._affine_fock import (
    ConstraintError,
    ParseError,
    WindowOverflow,
    core_quotient,
    cq_inverse,
    run,
)

__all__ = [
    "ConstraintError",
    "ParseError",
    "WindowOverflow",
    "CommandError",
    "act",
    "core_quotient",
    "cq_inverse",
    "run",
    "verify",
]


class CommandError(RuntimeError):
    """A command exited with a code other than 0 or 1."""

    def __init__(self, code, message):
        super().__init__(f"exit {code}: {message.strip()}")
        self.code = code


def _json_command(args, allow_mismatch=False):
    code, out, err = run([str(a) for a in args])
    if code == 0 or (code == 1 and allow_mismatch):
        return json.loads(out)
    raise CommandError(code, err)


def act(generator, lambda_, l, side="explicit", window=None):
    """Applies a generator to b_lambda; returns [{"label": ..., "coeff": "p/q"}]."""
    args = ["act", "--g", generator, "--lambda", json.dumps(list(lambda_)), "--l", l, "--side", side]
    if window is not None:
        args += ["--window", window]
    return _json_command(args)


def verify(suite="all", l=3, degree=6, charge_bound=2):
    """Runs verification suites; returns the report with "status" "ok" or "mismatch"."""
    args = ["verify", "--suite", suite, "--l", l, "--degree", degree, "--charge-bound", charge_bound]
    return _json_command(args, allow_mismatch=True)
