"""Devanagari letter segmentation, frequency statistics and k-gram entropy."""

try:
    from ._akshara import *  # noqa: F401,F403
    from ._akshara import __doc__  # noqa: F401
except ImportError:  # development layout: extension on PYTHONPATH
    from _akshara import *  # noqa: F401,F403
