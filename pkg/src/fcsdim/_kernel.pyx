# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled subset search for resolving sets.

``table`` has one row per coded object (vertex or edge) and one column per
candidate landmark; entries are hop distances (>= 0).  A landmark subset
resolves the objects when the rows restricted to its columns are pairwise
distinct.  Distinctness is tracked by partition refinement: each prefix of
the current combination keeps a class id per object, and adding a column
relabels (class, value) pairs densely through a stamped lookup table.
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef int _refine(const int[:, ::1] table, int col, const int* prev, int* out,
                 long long* stamp, int* owner, int* rep, long long epoch,
                 int nobj, int base, int* px, int* py) noexcept nogil:
    """Split the classes in ``prev`` by column ``col``; return the class count.

    The first colliding pair met is written to ``px``/``py`` (-1 if none).
    """
    cdef int o, cls = 0
    cdef long long key
    px[0] = -1
    py[0] = -1
    for o in range(nobj):
        key = <long long>prev[o] * base + table[o, col]
        if stamp[key] == epoch:
            out[o] = owner[key]
            if px[0] < 0:
                px[0] = rep[owner[key]]
                py[0] = o
        else:
            stamp[key] = epoch
            owner[key] = cls
            rep[cls] = o
            out[o] = cls
            cls += 1
    return cls


cdef int _separates(const int[:, ::1] table, int col, int x, int y) noexcept nogil:
    return x < 0 or table[x, col] != table[y, col]


def search_first(const int[:, ::1] table, int size, int first, bint prune=False):
    """Lexicographically smallest resolving ``size``-subset starting at ``first``.

    Returns ``(combo or None, checked, pruned)`` where ``checked`` counts the
    full candidates whose codes were compared and ``pruned`` those skipped
    because the last landmark failed to separate the prefix's unresolved pair.
    """
    cdef int nobj = table.shape[0]
    cdef int ncand = table.shape[1]
    if size < 1 or first < 0 or first + size > ncand:
        return None, 0, 0
    cdef int base = int(np.asarray(table).max()) + 1 if nobj and ncand else 1

    cdef cnp.ndarray[cnp.int32_t, ndim=2] levels = np.zeros((size + 1, max(nobj, 1)), dtype=np.int32)
    cdef cnp.ndarray[cnp.int64_t, ndim=1] stamp = np.zeros(max(nobj, 1) * base, dtype=np.int64)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] owner = np.zeros(max(nobj, 1) * base, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] rep = np.zeros(max(nobj, 1), dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] combo = np.zeros(size, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] pairs = np.full(2 * (size + 1), -1, dtype=np.int32)

    cdef int* lv = <int*>levels.data
    cdef long long* st = <long long*>stamp.data
    cdef int* ow = <int*>owner.data
    cdef int* rp = <int*>rep.data
    cdef int* cb = <int*>combo.data
    cdef int* pr = <int*>pairs.data
    cdef int stride = max(nobj, 1)
    cdef long long epoch = 0, checked = 0, pruned = 0
    cdef int t, c, classes, found = 0, dummy_x, dummy_y

    with nogil:
        # level 0 is the trivial partition (all zeros); level t+1 refines by combo[t]
        epoch += 1
        cb[0] = first
        classes = _refine(table, first, lv, lv + stride, st, ow, rp, epoch, nobj, base,
                          pr + 2, pr + 3)
        if size == 1:
            checked = 1
            found = classes == nobj
        else:
            t = 1
            cb[1] = first
            while True:
                cb[t] += 1
                if cb[t] > ncand - (size - t):
                    t -= 1
                    if t == 0:
                        break
                    continue
                c = cb[t]
                if t == size - 1:
                    if prune and not _separates(table, c, pr[2 * t], pr[2 * t + 1]):
                        pruned += 1
                        continue
                    checked += 1
                    epoch += 1
                    classes = _refine(table, c, lv + t * stride, lv + (t + 1) * stride,
                                      st, ow, rp, epoch, nobj, base, &dummy_x, &dummy_y)
                    if classes == nobj:
                        found = 1
                        break
                else:
                    epoch += 1
                    _refine(table, c, lv + t * stride, lv + (t + 1) * stride,
                            st, ow, rp, epoch, nobj, base, pr + 2 * (t + 1), pr + 2 * (t + 1) + 1)
                    t += 1
                    cb[t] = cb[t - 1]

    if found:
        return tuple(combo.tolist()), checked, pruned
    return None, checked, pruned
