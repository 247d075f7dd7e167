"""Exact computations with semi-Hopf and Hopf categories.

Thin wrapper over the compiled extension; every function takes and returns
JSON document strings in the format described in docs/format.md.
"""

try:
    from ._hopfcat import *  # noqa: F401,F403
    from ._hopfcat import BadInput  # noqa: F401
except ImportError:  # extension on PYTHONPATH instead of inside the package
    from _hopfcat import *  # noqa: F401,F403
    from _hopfcat import BadInput  # noqa: F401
