"""Chain invariants and embeddability decisions for surface mapping class groups."""

from ._raagmcg import *  # noqa: F401,F403
from ._raagmcg import __doc__, __version__  # noqa: F401
