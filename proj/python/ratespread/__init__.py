"""Treasury curve shift/twist factors, weighted rates-spreads correlation
estimation, and effective-duration analytics for credit portfolios."""

from ratespread._core import *  # noqa: F401,F403
from ratespread._core import __version__  # noqa: F401
