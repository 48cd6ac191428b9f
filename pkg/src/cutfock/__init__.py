"""Free particle in a cut Fock basis: spectra, state counting and the Bessel limit."""

__version__ = "0.1.0"

from .fockbasis import Sector, SectorSpec, VectorCutoff, hamiltonian_matrix  # noqa: E402
from .eigensolve import eigenvalues_analytic, eigenvalues_sturm, eigenvector_coeffs  # noqa: E402
