"""Packaged graph files for demos, tests and the command line.

``fixture_path`` resolves a name like ``demo.g`` to a real filesystem
path inside the installed package, so the CLI and tests can read the
shipped graphs without knowing where the package landed.
"""

from __future__ import annotations

from importlib import resources

FIXTURE_NAMES = ("fig1.g", "fig4.g", "fig6.g", "demo.g")


def fixture_path(name: str) -> str:
    """Absolute path of a packaged graph file."""
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}; have {FIXTURE_NAMES}")
    return str(resources.files(__package__).joinpath(name))


def fixture_text(name: str) -> str:
    """Contents of a packaged graph file."""
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}; have {FIXTURE_NAMES}")
    return resources.files(__package__).joinpath(name).read_text(encoding="utf-8")
