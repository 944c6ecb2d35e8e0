"""Historical temporal k-core component search."""

try:
    from ._tccs import *  # noqa: F401,F403  (installed layout)
except ImportError:  # in-tree build: _tccs.so sits on PYTHONPATH
    from _tccs import *  # noqa: F401,F403
