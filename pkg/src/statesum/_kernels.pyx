# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled labeling kernel; same contract as ``_kernels_py.enumerate_histogram``."""

from libc.stdlib cimport malloc, free


def enumerate_histogram(domains, factors, checks, wvecs, ngens, first_values=None):
    cdef int n = len(domains)
    cdef int nf = len(factors)
    cdef int W = len(wvecs)
    cdef int G = ngens
    cdef int i, j, f, k, idx, w, v, total_scope, total_table, total_checks, total_vec
    hist = {}

    total_scope = 0
    total_table = 0
    for scope, strides, table in factors:
        total_scope += len(scope)
        total_table += len(table)
    total_checks = 0
    for c in checks:
        total_checks += len(c)
    total_vec = 0
    for vec in wvecs:
        total_vec += len(vec)

    cdef int *dom = <int *> malloc(max(n, 1) * sizeof(int))
    cdef int *assign = <int *> malloc(max(n, 1) * sizeof(int))
    cdef long *counts = <long *> malloc(max(G, 1) * sizeof(long))
    cdef int *sc_start = <int *> malloc((nf + 1) * sizeof(int))
    cdef int *sc_var = <int *> malloc(max(total_scope, 1) * sizeof(int))
    cdef long *sc_stride = <long *> malloc(max(total_scope, 1) * sizeof(long))
    cdef long *tb_start = <long *> malloc((nf + 1) * sizeof(long))
    cdef int *tb = <int *> malloc(max(total_table, 1) * sizeof(int))
    cdef int *ck_start = <int *> malloc((n + 1) * sizeof(int))
    cdef int *ck = <int *> malloc(max(total_checks, 1) * sizeof(int))
    cdef int *wv_start = <int *> malloc((W + 1) * sizeof(int))
    cdef int *wv_gen = <int *> malloc(max(total_vec, 1) * sizeof(int))
    cdef long *wv_exp = <long *> malloc(max(total_vec, 1) * sizeof(long))
    # per-level record of applied weights, for undo
    cdef int *applied = <int *> malloc(max(total_checks, 1) * sizeof(int))
    cdef int *napplied = <int *> malloc(max(n, 1) * sizeof(int))
    cdef int *vpos = <int *> malloc(max(n, 1) * sizeof(int))
    cdef int *fv = NULL
    cdef int nfv = 0
    cdef long p
    cdef int ok, level

    try:
        for i in range(n):
            dom[i] = domains[i]
        for i in range(G):
            counts[i] = 0
        k = 0
        p = 0
        for f in range(nf):
            scope, strides, table = factors[f]
            sc_start[f] = k
            for j in range(len(scope)):
                sc_var[k] = scope[j]
                sc_stride[k] = strides[j]
                k += 1
            tb_start[f] = p
            for j in range(len(table)):
                tb[p] = table[j]
                p += 1
        sc_start[nf] = k
        tb_start[nf] = p
        k = 0
        for i in range(n):
            ck_start[i] = k
            for f in checks[i]:
                ck[k] = f
                k += 1
        ck_start[n] = k
        k = 0
        for w in range(W):
            wv_start[w] = k
            for g, e in wvecs[w]:
                wv_gen[k] = g
                wv_exp[k] = e
                k += 1
        wv_start[W] = k

        # constant factors
        for f in range(nf):
            if sc_start[f] == sc_start[f + 1]:
                w = tb[tb_start[f]]
                if w < 0:
                    return hist
                for j in range(wv_start[w], wv_start[w + 1]):
                    counts[wv_gen[j]] += wv_exp[j]
        if n == 0:
            hist[tuple([counts[j] for j in range(G)])] = 1
            return hist

        if first_values is not None:
            nfv = len(first_values)
            fv = <int *> malloc(max(nfv, 1) * sizeof(int))
            for j in range(nfv):
                fv[j] = first_values[j]

        # iterative depth-first search; vpos[level] is the next position to try
        level = 0
        vpos[0] = 0
        napplied[0] = 0
        while level >= 0:
            # undo the previous value at this level
            for k in range(napplied[level]):
                w = applied[ck_start[level] + k]
                for j in range(wv_start[w], wv_start[w + 1]):
                    counts[wv_gen[j]] -= wv_exp[j]
            napplied[level] = 0
            if level == 0 and fv != NULL:
                if vpos[0] >= nfv:
                    level -= 1
                    continue
                v = fv[vpos[0]]
            else:
                if vpos[level] >= dom[level]:
                    level -= 1
                    continue
                v = vpos[level]
            vpos[level] += 1
            assign[level] = v
            ok = 1
            for k in range(ck_start[level], ck_start[level + 1]):
                f = ck[k]
                idx = 0
                for j in range(sc_start[f], sc_start[f + 1]):
                    idx += assign[sc_var[j]] * sc_stride[j]
                w = tb[tb_start[f] + idx]
                if w < 0:
                    ok = 0
                    break
                if w:
                    for j in range(wv_start[w], wv_start[w + 1]):
                        counts[wv_gen[j]] += wv_exp[j]
                    applied[ck_start[level] + napplied[level]] = w
                    napplied[level] += 1
            if not ok:
                continue
            if level + 1 == n:
                key = tuple([counts[j] for j in range(G)])
                hist[key] = hist.get(key, 0) + 1
            else:
                level += 1
                vpos[level] = 0
                napplied[level] = 0
        return hist
    finally:
        free(dom); free(assign); free(counts); free(sc_start); free(sc_var); free(sc_stride)
        free(tb_start); free(tb); free(ck_start); free(ck); free(wv_start); free(wv_gen); free(wv_exp)
        free(applied); free(napplied); free(vpos)
        if fv != NULL:
            free(fv)
