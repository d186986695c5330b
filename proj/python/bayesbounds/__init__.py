"""Bayes error and its exact bounds for finite classification models."""

from ._core import *  # noqa: F401,F403
from ._core import BayesBoundsError, JointModel  # noqa: F401

__version__ = "0.1.0"
