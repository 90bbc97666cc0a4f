"""Python bindings for the lkq defeasible erotetic sequent calculus."""

from ._lkq import *  # noqa: F401,F403
from ._lkq import ParaproofInput, InvalidDerivation, PmceViolation  # noqa: F401
