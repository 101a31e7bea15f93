"""Backend selection for the table-scan kernels.

The compiled ``_ckernels`` extension is used when it has been built;
otherwise the numpy implementation in ``_pykernels`` is used. Setting
``PRODSPEC_PURE_PYTHON=1`` forces the fallback.
"""
import os

from . import _pykernels

if os.environ.get("PRODSPEC_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:  # extension not built
        _impl = _pykernels

BACKEND = _impl.BACKEND

sum_masks = _impl.sum_masks
prime_witness = _impl.prime_witness
nilpotency_index = _impl.nilpotency_index
radical_mask = _impl.radical_mask
vn_regular_witness = _impl.vn_regular_witness
coset_reps = _impl.coset_reps
hom_witness = _impl.hom_witness
associativity_witness = _impl.associativity_witness
distributivity_witness = _impl.distributivity_witness
annihilated_mask = _impl.annihilated_mask
unit_mask = _impl.unit_mask


def available_backends():
    """Map backend name to module for every backend importable here."""
    backends = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        backends["cython"] = _ckernels
    return backends
