"""Kernel backend selection: compiled extension with pure-Python fallback.

The compiled kernels are preferred whenever the extension imported
successfully; set ``ANUMBER_BACKEND=python`` to force the pure-Python
kernels, or ``ANUMBER_BACKEND=cython`` to require the compiled ones
(ImportError if they are missing).  Both backends are exact and produce
identical results; the compiled one only accepts moduli below 2**31, so
dispatch silently routes larger moduli to the pure implementation.
"""

import os

from . import _pykernels

# int64 arithmetic in the extension caps the modulus.
MAX_COMPILED_MODULUS = 2**31

_env = os.environ.get("ANUMBER_BACKEND", "auto").strip().lower()
if _env in ("", "auto"):
    try:
        from . import _cykernels as _impl
    except ImportError:
        _impl = _pykernels
elif _env == "python":
    _impl = _pykernels
elif _env in ("cython", "compiled"):
    from . import _cykernels as _impl
else:
    raise RuntimeError(
        f"ANUMBER_BACKEND={_env!r} not understood: use 'auto', 'python' or 'cython'"
    )

BACKEND = _impl.BACKEND


def convolve_mod(a, b, p):
    """Dense coefficient convolution mod p (lists of residues in [0, p))."""
    if _impl is _pykernels or p >= MAX_COMPILED_MODULUS:
        return _pykernels.convolve_mod(a, b, p)
    return _impl.convolve_mod(a, b, p)


def row_reduce_mod(rows, p):
    """Gauss-Jordan over F_p; returns (rref rows, pivot column indices)."""
    if _impl is _pykernels or p >= MAX_COMPILED_MODULUS:
        return _pykernels.row_reduce_mod(rows, p)
    return _impl.row_reduce_mod(rows, p)
