"""Backend selection: compiled Cython kernels when built, pure Python otherwise.

Both backends produce bit-identical results (same RNG stream consumption,
same algorithms); the compiled one is one to two orders of magnitude faster
on the Monte-Carlo and enumeration loops. Set KOUTGRAPH_PURE=1 to force the
pure backend, e.g. to run the backend-equivalence benchmark.
"""

from __future__ import annotations

import os

from . import _purekernel

try:
    from . import _kernel  # type: ignore[attr-defined]

    HAVE_COMPILED = True
except ImportError:
    _kernel = None  # type: ignore[assignment]
    HAVE_COMPILED = False

_force_pure = os.environ.get("KOUTGRAPH_PURE", "") not in ("", "0")

if HAVE_COMPILED and not _force_pure:
    kernel = _kernel
else:
    kernel = _purekernel


def backend_name() -> str:
    return kernel.name


def compiled_kernel():
    """The compiled module if importable, else None (for benchmarks/tests)."""
    return _kernel


def pure_kernel():
    return _purekernel
