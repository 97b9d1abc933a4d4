"""Bundled fixtures: the 7-element algebra files and the proof scripts."""

from __future__ import annotations

from importlib import resources


def fixture_path(*parts: str):
    """Filesystem path of a bundled fixture (usable while the package is
    installed from a checkout or a wheel)."""
    node = resources.files(__package__)
    for part in parts:
        node = node / part
    return node


def read_fixture(*parts: str) -> str:
    return fixture_path(*parts).read_text(encoding="utf-8")


def proof_names() -> list[str]:
    """Names of all bundled proof scripts, sorted."""
    root = fixture_path("proofs")
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".prf"))
