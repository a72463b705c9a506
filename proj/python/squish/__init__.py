from ._sq import *  # noqa: F401,F403
from ._sq import SqError  # noqa: F401

__version__ = "0.1.0"
