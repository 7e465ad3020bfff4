"""Graphon signal processing: graph/graphon Fourier transforms, W-random
sampling, homomorphism densities, cut norms and convergence experiments."""

from ._gspx import *  # noqa: F401,F403
from ._gspx import __doc__  # noqa: F401
