"""Floating-point kernels: exact phase reduction, compensated sums, bisection."""

from __future__ import annotations

from typing import Callable

import numpy as np

# 2*pi split into 27 + 27 + 53 bits, so that q * TWO_PI_HI and q * TWO_PI_MID
# are exact for |q| < 2**26.
# Largest |x| whose quotient by 2*pi keeps that property.
MAX_ABS_X = 2.0**26 * 3.0
TWO_PI_HI = float.fromhex("0x1.921fb54000000p+2")
TWO_PI_MID = float.fromhex("0x1.10b4610000000p-28")
TWO_PI_LO = float.fromhex("0x1.a62633145c06ep-56")
_INV_TWO_PI = 1.0 / (TWO_PI_HI + TWO_PI_MID)

_VELTKAMP = 134217729.0  # 2**27 + 1

# Elements per temporary block when evaluating term matrices.
BLOCK = 1 << 20


def reduce_phase(k: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Return ``k*x mod 2*pi`` in roughly ``[-pi, pi]`` without the rounding of ``k*x``.

    ``k`` holds integers below ``2**26`` (as floats); ``x`` broadcasts against
    it and must satisfy ``|x| < 2**26 * pi``. First ``x`` itself is reduced to
    a double-double residue ``r`` in ``[-pi, pi]``; then ``k*r`` is formed
    exactly from a Veltkamp split of ``r`` and reduced with a three-part
    representation of ``2*pi``. The absolute error of the result is a few ulp
    of ``pi`` regardless of ``k``.
    """
    j = np.rint(x * _INV_TWO_PI)
    d = x - j * TWO_PI_HI  # exact: j * TWO_PI_HI fits in 53 bits and d is small
    t = -j * TWO_PI_MID
    r = d + t
    w = r - d
    r_lo = ((d - (r - w)) + (t - w)) - j * TWO_PI_LO

    c = _VELTKAMP * r
    r_hi = c - (c - r)
    r_mid = r - r_hi
    p_hi = k * r_hi
    p_lo = k * r_mid + k * r_lo
    q = np.rint(p_hi * _INV_TWO_PI)
    return (((p_hi - q * TWO_PI_HI) - q * TWO_PI_MID) + p_lo) - q * TWO_PI_LO


def compensated_sum(a: np.ndarray, axis: int = -1) -> np.ndarray | float:
    """Sum along ``axis`` with error-free transformations at every pairwise level.

    Each pairwise addition is split by TwoSum into its rounded value and exact
    error; the errors are accumulated separately and folded back at the end.
    The result is as accurate as if computed in twice the working precision
    and then rounded (up to a ``log2(len)`` factor on the second-order term).
    """
    a = np.moveaxis(np.asarray(a, dtype=float), axis, -1)
    if a.shape[-1] == 0:
        out = np.zeros(a.shape[:-1])
        return float(out) if out.ndim == 0 else out
    corrections = np.zeros(a.shape[:-1])
    while a.shape[-1] > 1:
        if a.shape[-1] % 2:
            a = np.concatenate([a, np.zeros(a.shape[:-1] + (1,))], axis=-1)
        u = a[..., 0::2]
        v = a[..., 1::2]
        s = u + v
        w = s - u
        err = (u - (s - w)) + (v - w)
        corrections = corrections + err.sum(axis=-1)
        a = s
    out = a[..., 0] + corrections
    return float(out) if np.ndim(out) == 0 else out


def cumulative_compensated(terms: np.ndarray) -> np.ndarray:
    """Running sums along the last axis using Neumaier's forward compensation."""
    terms = np.asarray(terms, dtype=float)
    out = np.empty_like(terms)
    s = np.zeros(terms.shape[:-1])
    c = np.zeros(terms.shape[:-1])
    for j in range(terms.shape[-1]):
        t = terms[..., j]
        total = s + t
        big = np.abs(s) >= np.abs(t)
        c = c + np.where(big, (s - total) + t, (t - total) + s)
        s = total
        out[..., j] = s + c
    return out


def bisect_bracket(
    func: Callable[[float], float], lo: float, hi: float, *, max_iter: int = 2200
) -> tuple[float, float]:
    """Shrink ``[lo, hi]`` around a sign change of ``func`` until no float lies inside.

    Returns the final bracket ``(lo, hi)``; ``func(lo)`` and ``func(hi)`` have
    opposite signs (or one is exactly zero, in which case both ends equal it).
    Midpoints are taken geometrically while the bracket spans more than a
    factor of two on the positive axis, so tiny roots converge in relative
    precision rather than by repeated halving of an absolute width.
    """
    from ._validation import BracketError

    f_lo = func(lo)
    f_hi = func(hi)
    if f_lo == 0.0:
        return lo, lo
    if f_hi == 0.0:
        return hi, hi
    if np.sign(f_lo) == np.sign(f_hi):
        raise BracketError(
            f"no sign change on [{lo!r}, {hi!r}]: f(lo)={f_lo!r}, f(hi)={f_hi!r}"
        )
    for _ in range(max_iter):
        if lo > 0.0 and hi > 2.0 * lo:
            mid = float(np.sqrt(lo) * np.sqrt(hi))
        else:
            mid = lo + 0.5 * (hi - lo)
        if not lo < mid < hi:
            break
        f_mid = func(mid)
        if f_mid == 0.0:
            return mid, mid
        if np.sign(f_mid) == np.sign(f_lo):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    return lo, hi
