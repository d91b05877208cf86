"""Self-intersection numbers of Hirzebruch-Zagier curves on Hilbert modular
surfaces, exact class-number machinery, and the analytic negativity bounds.

All exact values come back as fractions.Fraction; bound evaluations are
floats.
"""

from hzbound._core import *  # noqa: F401,F403
from hzbound._core import __version__  # noqa: F401
