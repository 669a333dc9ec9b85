"""Slice-based error analysis for binary text classifiers.

Thin wrapper around the compiled extension module. When installed as a
wheel the extension lives inside this package; in a development build it
sits on PYTHONPATH next to the build tree.
"""

try:
    from slicecheck._slicecheck import *  # noqa: F401,F403
except ImportError:  # pragma: no cover - development layout
    from _slicecheck import *  # noqa: F401,F403
