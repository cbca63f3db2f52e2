"""Finite-truncation toolkit for the Jordan-Schwinger map D(A) = sum A_mn s_m s_n*.

D(A) is built two ways: symbolically in the Cuntz algebras O_inf and
O_2 (:mod:`jsmap.cuntz`), and as an integral operator on the Hardy
space of the circle (:mod:`jsmap.kernel`). The remaining modules cover
weighted Hilbert-Schmidt norms, spectra, closed-form kernels and group
embeddings.
"""

from . import catalog, cuntz, groups, hardy, kernel, operators, spectra, whs
from .hardy import HardyElement, TruncationConfig
from .kernel import KernelSeries, SymbolF, apply_kernel, kernel_from_matrix, kernels_equivalent, symbol_F_from_matrix
from .operators import OperatorMatrix

__version__ = "0.1.0"

__all__ = [
    "catalog",
    "cuntz",
    "groups",
    "hardy",
    "kernel",
    "operators",
    "spectra",
    "whs",
    "HardyElement",
    "TruncationConfig",
    "KernelSeries",
    "SymbolF",
    "OperatorMatrix",
    "apply_kernel",
    "kernel_from_matrix",
    "kernels_equivalent",
    "symbol_F_from_matrix",
]
