"""Positive permutation braids: Garside normal forms, conjugacy decision,
Burau-based invariants, and census/classification pipelines."""

from ._braidtk import *  # noqa: F401,F403
from ._braidtk import __doc__  # noqa: F401
