"""Python bindings for the zeta moment identity verifier."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import __version__, _run_all, _run_check


def run_check(check_id, **overrides):
    """Evaluate one registered identity; returns a list of result dicts."""
    return _json.loads(_run_check(check_id, _json.dumps(overrides)))


def run_all(ids=(), tags=(), workers=1):
    return _json.loads(_run_all(list(ids), list(tags), workers))
