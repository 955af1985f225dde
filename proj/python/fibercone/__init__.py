"""Exact fiber-cone computations for m-primary ideals.

Thin Python wrapper over the C++ core.  The heavy lifting (power ladders,
presentation building, Groebner bases, verification) happens in the compiled
extension; this package adds JSON decoding and a convenience API.
"""

from __future__ import annotations

import json
from typing import Any

try:
    from ._fibercone import InputError, ResourceError, ConsistencyError
    from ._fibercone import run as _run_raw
    from ._fibercone import render_text
except ImportError:  # running against an in-tree build without an installed wheel
    from _fibercone import InputError, ResourceError, ConsistencyError  # type: ignore
    from _fibercone import run as _run_raw  # type: ignore
    from _fibercone import render_text  # type: ignore

__all__ = [
    "run",
    "run_file",
    "render_text",
    "InputError",
    "ResourceError",
    "ConsistencyError",
]


def run(subcommand: str, job_text: str, **options: Any) -> dict:
    """Run one subcommand against a job description given as text.

    Supported subcommands: analyze, defining-ideal, oracle, verify, hilbert,
    find-reduction, membership-gap.  Keyword options mirror the CLI flags:
    field, power_cap, socle_cap, seed, attempts, degree_bound, power.
    Returns the machine report as a dict.
    """
    return json.loads(_run_raw(subcommand, job_text, **options))


def run_file(subcommand: str, path: str, **options: Any) -> dict:
    """Like :func:`run`, but reads the job description from a file."""
    with open(path, "r", encoding="utf-8") as handle:
        return run(subcommand, handle.read(), **options)
