# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled evaluation kernels for the change-indicator families.

Hot loops of the sampling-based axiom checkers spend nearly all their time
in f/F evaluations, so these are kept as tight C loops.  The pure-Python
module ``_kernels_py`` implements the identical contract and is selected at
import time when this extension is unavailable.

Endpoint behaviour is part of the contract: lam == 0 and lam == 1 are
special-cased so the results are bitwise equal to absolute change,
relative change and the log-ratio respectively.
"""

from libc.math cimport pow, log, expm1


cdef inline double _f(double lam, double x, double y) nogil:
    if lam == 0.0:
        return y - x
    if lam == 1.0:
        return (y - x) / x
    return (y - x) / pow(x, lam)


cdef inline double _F(double lam, double x, double y) nogil:
    cdef double u
    if lam == 0.0:
        return y - x
    if lam == 1.0:
        return log(y) - log(x)
    # expm1 cancels the O(1) constant terms analytically, so the two-branch
    # formula stays accurate through lam -> 1 without a switching threshold.
    u = 1.0 - lam
    return (expm1(u * log(y)) - expm1(u * log(x))) / u


def f_scalar(double lam, double x, double y):
    """(y - x) / x**lam with exact endpoints at lam in {0, 1}."""
    return _f(lam, x, y)


def F_scalar(double lam, double x, double y):
    """(y**(1-lam) - x**(1-lam)) / (1-lam), log-ratio at lam == 1."""
    return _F(lam, x, y)


def f_many(double lam, double[::1] xs, double[::1] ys, double[::1] out):
    cdef Py_ssize_t i, n = xs.shape[0]
    with nogil:
        for i in range(n):
            out[i] = _f(lam, xs[i], ys[i])


def F_many(double lam, double[::1] xs, double[::1] ys, double[::1] out):
    cdef Py_ssize_t i, n = xs.shape[0]
    with nogil:
        for i in range(n):
            out[i] = _F(lam, xs[i], ys[i])
