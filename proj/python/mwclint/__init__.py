# SPDX-License-Identifier: Apache-2.0
"""Python interface to the mwc-lint static analyzer.

The compiled extension returns JSON strings; this package parses them into
plain dictionaries and lists. Report-producing calls return a dict for the
``json`` format and the rendered text for ``sarif``/``md``.
"""

from __future__ import annotations

import json
from typing import Any, Optional, Sequence, Union

from . import _core

__all__ = [
    "__version__",
    "check_source",
    "crosswalk",
    "default_config",
    "evaluate_fixtures",
    "explain",
    "format_source",
    "frames",
    "rules",
    "scan_paths",
    "scan_text",
]

__version__ = _core.version()

ConfigLike = Union[None, str, dict]


def _config_json(config: ConfigLike) -> str:
    """Accepts a config dict, a JSON string, or None (built-in defaults)."""
    if config is None:
        return ""
    if isinstance(config, dict):
        return json.dumps(config)
    return config


def _maybe_parse(report: str, format: str) -> Any:
    return json.loads(report) if format == "json" else report


def rules() -> list:
    """All catalog records (id, frame, strategy, severity, titles)."""
    return json.loads(_core.rules())


def frames() -> list:
    """All frames with their member rule ids."""
    return json.loads(_core.frames())


def explain(rule_id: str) -> dict:
    """One catalog record; bare numbers such as ``MWC-120`` resolve with a note.

    Raises ``KeyError`` for unknown ids.
    """
    return json.loads(_core.explain(rule_id))


def crosswalk(rule_id: Optional[str] = None) -> list:
    """SWC comparison rows, optionally filtered to rows naming ``rule_id``."""
    return json.loads(_core.crosswalk(rule_id or ""))


def scan_text(
    text: str,
    name: str = "buffer.move",
    config: ConfigLike = None,
    format: str = "json",
) -> Any:
    """Scans one in-memory buffer and returns the report."""
    return _maybe_parse(
        _core.scan_text(text, name, _config_json(config), format), format
    )


def scan_paths(
    paths: Union[str, Sequence[str]],
    config: ConfigLike = None,
    format: str = "json",
    jobs: int = 1,
) -> Any:
    """Scans files or directories (recursing into ``.move`` files)."""
    if isinstance(paths, str):
        paths = [paths]
    return _maybe_parse(
        _core.scan_paths(list(paths), _config_json(config), format, jobs), format
    )


def check_source(text: str, name: str = "buffer.move") -> dict:
    """Parses a buffer; returns ``{"ok": bool, "diagnostics": [...]}``."""
    return json.loads(_core.check_source(text, name))


def format_source(text: str, name: str = "buffer.move") -> str:
    """Canonical pretty-printing; raises ``ValueError`` on parse errors."""
    return _core.format_source(text, name)


def evaluate_fixtures(corpus_dir: str, config: ConfigLike = None) -> dict:
    """Runs the detector gate over a vuln/fixed fixture corpus."""
    return json.loads(_core.evaluate_fixtures(corpus_dir, _config_json(config)))


def default_config() -> dict:
    """The built-in configuration (what ``mwc init-config`` prints)."""
    return json.loads(_core.default_config())
