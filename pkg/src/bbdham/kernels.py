"""Kernel backend selection.

The compiled extension ``_ckernels`` is used when it imports and the
environment variable ``BBDHAM_PURE_PYTHON`` is unset; otherwise the
pure-Python twins in ``_pykernels`` are used.  The compiled kernels handle
digraphs on at most 64 vertices, larger inputs always take the Python path.
"""

from __future__ import annotations

import os

from . import _pykernels

python = _pykernels

try:
    if os.environ.get("BBDHAM_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _ckernels as compiled
except ImportError:
    compiled = None

BACKEND = "python" if compiled is None else "cython"
MAX_COMPILED_ORDER = 64

_impl = compiled if compiled is not None else _pykernels


def _pick(n: int):
    return _impl if n <= MAX_COMPILED_ORDER else _pykernels


def decode_rows(a: int, index: int) -> list[int]:
    if 2 * a * a > 64:
        return python.decode_rows(a, index)
    return _pick(2 * a).decode_rows(a, index)


def transpose(rows: list[int]) -> list[int]:
    return _pick(len(rows)).transpose(rows)


def strongly_connected(out_rows: list[int], in_rows: list[int]) -> bool:
    return _pick(len(out_rows)).strongly_connected(out_rows, in_rows)


def condition_a(a: int, out_rows: list[int], in_rows: list[int]) -> bool:
    return _pick(2 * a).condition_a(a, out_rows, in_rows)


def hypotheses_scan(a: int, lo: int, hi: int) -> list[int]:
    impl = _impl if 2 * a * a <= 63 else _pykernels
    return impl.hypotheses_scan(a, lo, hi)


def hamiltonian_cycle(out_rows: list[int], in_rows: list[int]) -> list[int] | None:
    return _pick(len(out_rows)).hamiltonian_cycle(out_rows, in_rows)
