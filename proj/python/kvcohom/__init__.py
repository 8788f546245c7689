"""Exact cohomology of Koszul-Vinberg algebras.

Thin wrapper over the C++ core; every verb of the ``kvcohom`` command line
tool is available through :func:`run`.
"""

import json

from ._core import BudgetError, Error, InputError, Rejected, cohomology_dims, fixture, fixtures, is_kv, verbs
from ._core import run as _run

__all__ = [
    "BudgetError",
    "Error",
    "InputError",
    "Rejected",
    "Result",
    "cohomology_dims",
    "fixture",
    "fixtures",
    "is_kv",
    "run",
    "verbs",
]


class Result:
    """Report of one verb: ``doc`` is the parsed JSON, ``text`` the exact bytes."""

    def __init__(self, text, exit_code, csv):
        self.text = text
        self.exit_code = exit_code
        self.csv = csv
        self.doc = json.loads(text)

    @property
    def ok(self):
        return self.exit_code == 0

    def __repr__(self):
        return f"Result(verb={self.doc.get('verb')!r}, exit_code={self.exit_code})"


def run(verb, *inputs, seed=0, budget=None, mutant=False, **params):
    """Run a verb on file paths or ``fixture:NAME`` inputs.

    Keyword parameters map to the long command line flags, with underscores
    for dashes (``q_max=2`` is ``--q-max 2``).
    """
    flags = {k.replace("_", "-"): str(v) for k, v in params.items()}
    return Result(*_run(verb, list(inputs), flags, seed, budget, mutant))
