"""
egkit: Edelman-Greene insertion, sorting networks and the tableau
combinatorics around them.

>>> from egkit import eg_map, eg_inverse
>>> P, Q = eg_map((3, 2, 1, 2, 3, 2))
>>> str(P), str(Q)
('1,2,3/2,3/3', '1,4,5/2,6/3')
>>> eg_inverse(Q)
(3, 2, 1, 2, 3, 2)
"""

__version__ = "0.1.0"

from .permutations import *  # noqa: F401,F403
from .tableaux import *  # noqa: F401,F403
from .insertion import *  # noqa: F401,F403
from .promotion import *  # noqa: F401,F403
from .vexillary import *  # noqa: F401,F403
from .networks import *  # noqa: F401,F403
from .posets import *  # noqa: F401,F403
