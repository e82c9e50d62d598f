# Compiled versions of the ratio kernels in _pykernels.py.
# convolve stays on numpy, whose vectorized loop is faster.

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef void _terms(const double complex[::1] c, long n_min,
                 double* b, double* cc, double complex* p) noexcept nogil:
    cdef Py_ssize_t k, size = c.shape[0]
    cdef double n, pw
    cdef double complex acc = 0
    b[0] = 0.0
    cc[0] = 0.0
    for k in range(size):
        n = <double>(n_min + k)
        pw = c[k].real * c[k].real + c[k].imag * c[k].imag
        b[0] += pw
        cc[0] += n * n * pw
    for k in range(size - 1):
        # c_k * conj(c_{k+1})
        acc = acc + (c[k].real * c[k + 1].real + c[k].imag * c[k + 1].imag) \
            + 1j * (c[k].imag * c[k + 1].real - c[k].real * c[k + 1].imag)
    p[0] = acc


def ratio_terms(c, long n_min):
    cdef const double complex[::1] v = np.ascontiguousarray(c, dtype=np.complex128)
    cdef double b, cc
    cdef double complex p
    _terms(v, n_min, &b, &cc, &p)
    return b, cc, complex(p)


def ratio_and_gradient(c, long n_min):
    cdef const double complex[::1] v = np.ascontiguousarray(c, dtype=np.complex128)
    cdef Py_ssize_t k, size = v.shape[0]
    cdef double b, cc, denom, rho, n
    cdef double complex p, pc, lower, upper, ga
    _terms(v, n_min, &b, &cc, &p)
    denom = 4.0 * b * cc
    rho = (p.real * p.real + p.imag * p.imag) / denom
    pc = p.real - 1j * p.imag
    grad = np.empty(size, dtype=np.complex128)
    cdef double complex[::1] g = grad
    for k in range(size):
        n = <double>(n_min + k)
        lower = v[k - 1] if k > 0 else 0
        upper = v[k + 1] if k + 1 < size else 0
        ga = 2.0 * (pc * lower + p * upper)
        g[k] = ga / denom - rho * (2.0 * v[k] / b + 2.0 * n * n * v[k] / cc)
    return rho, grad
