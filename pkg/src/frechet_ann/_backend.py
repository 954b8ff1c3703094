"""Select the compiled kernels when available, else the Python reference.

Set ``FRECHET_ANN_PURE=1`` to force the Python implementation.
"""

import os

from . import _pykernels as python

compiled = None
if os.environ.get("FRECHET_ANN_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as compiled
    except ImportError:  # extension not built
        compiled = None

kernels = compiled if compiled is not None else python
NAME = kernels.NAME
