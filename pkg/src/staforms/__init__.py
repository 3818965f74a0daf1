"""staforms: spacetime-algebra exterior calculus for tetrad field theory.

Evaluates energy-momentum 1-forms, field-equation residuals and conservation
identities for a tetrad of gravitational potentials with optional Maxwell and
Dirac matter, and integrates field energy over spatial regions.
"""

from .algebra import Multivector
from .errors import StaformsError

__version__ = "0.1.0"

__all__ = ["Multivector", "StaformsError", "__version__"]
