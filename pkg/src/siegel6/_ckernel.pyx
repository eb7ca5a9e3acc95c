# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Grouped partition convolution modulo a word-sized prime."""

import numpy as np

from libc.stdint cimport int32_t, int64_t, uint64_t


def conv_mod(
    int64_t[:, ::1] lidx,
    uint64_t[:, ::1] lval,
    int32_t[:, :, ::1] rmap,
    int64_t roff,
    uint64_t[:, ::1] rval,
    int64_t[::1] ga,
    int64_t[::1] gb,
    int64_t[::1] gstart,
    int64_t[::1] wo,
    uint64_t[::1] ww,
    int64_t[:, ::1] targets,
    int64_t nout,
    uint64_t p,
):
    """Residues mod ``p`` (below 2**31) of the grouped convolution.

    ``lidx`` is sorted by its first column.  ``rmap[x, y, z + roff]`` holds the
    row of ``rval`` for the index ``(x, y, z)`` or -1.  Group ``g`` multiplies
    left channel ``ga[g]`` by right channel ``gb[g]`` and scatters the product
    to outputs ``wo[gstart[g]:gstart[g+1]]`` with weights ``ww``.
    """
    cdef Py_ssize_t T = targets.shape[0]
    cdef Py_ssize_t nL = lidx.shape[0]
    cdef Py_ssize_t G = ga.shape[0]
    cdef Py_ssize_t X = rmap.shape[0], Y = rmap.shape[1], Z = rmap.shape[2]
    out = np.zeros((T, nout), dtype=np.uint64)
    cdef uint64_t[:, ::1] o = out
    cdef Py_ssize_t t, i, g, e
    cdef int64_t a, b, c, dx, dy, dz
    cdef int32_t row
    cdef uint64_t prod, acc, lim = (<uint64_t>1) << 63
    with nogil:
        for t in range(T):
            a = targets[t, 0]
            b = targets[t, 1]
            c = targets[t, 2]
            for i in range(nL):
                if lidx[i, 0] > a:
                    break
                dx = a - lidx[i, 0]
                dy = b - lidx[i, 1]
                dz = c - lidx[i, 2] + roff
                if dx >= X or dy < 0 or dy >= Y or dz < 0 or dz >= Z:
                    continue
                row = rmap[dx, dy, dz]
                if row < 0:
                    continue
                for g in range(G):
                    prod = lval[i, ga[g]] * rval[row, gb[g]]
                    if prod == 0:
                        continue
                    prod = prod % p
                    for e in range(gstart[g], gstart[g + 1]):
                        acc = o[t, wo[e]] + prod * ww[e]
                        if acc >= lim:
                            acc = acc % p
                        o[t, wo[e]] = acc
            for e in range(nout):
                o[t, e] = o[t, e] % p
    return out
