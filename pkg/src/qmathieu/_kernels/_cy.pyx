# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled rewriting kernels; same contract as the pure-Python module."""


def poly_mul(a, b):
    cdef Py_ssize_t la = len(a), lb = len(b), i, j
    out = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(lb):
            out[i + j] += ai * b[j]
    return out


cpdef tuple append_letter(tuple word, int x, tuple A):
    cdef Py_ssize_t pos = len(word)
    cdef tuple row = A[x]
    cdef int y
    while pos > 0:
        y = word[pos - 1]
        if y > x and <int>row[y] == 0:
            pos -= 1
        else:
            break
    return word[:pos] + (x,) + word[pos:]


def canonical_word(word, tuple A):
    cdef tuple out = ()
    for x in word:
        out = append_letter(out, x, A)
    return out


cdef tuple _drop(tuple word, Py_ssize_t p, tuple A):
    cdef tuple out = word[:p]
    cdef Py_ssize_t i
    for i in range(p + 1, len(word)):
        out = append_letter(out, word[i], A)
    return out


cdef void _add(dict acc, tuple mono, dict coef, int dd, int da, int sign):
    cdef dict tgt = acc.get(mono)
    if tgt is None:
        tgt = {}
        acc[mono] = tgt
    cdef tuple key
    for key0, c in coef.items():
        key = (<int>key0[0] + dd, <int>key0[1] + da)
        v = tgt.get(key, 0) + sign * c
        if v:
            tgt[key] = v
        else:
            del tgt[key]
    if not tgt:
        del acc[mono]


cdef dict _rmul_E(dict state, int x, tuple A):
    cdef dict out = {}
    cdef Py_ssize_t n = len(A), i, p, nf
    cdef list col = [A[i][x] for i in range(n)]
    cdef tuple row = A[x]
    cdef tuple e, k, f, fr
    cdef list kl
    cdef int s, c, ki, fp
    for mono, coef in state.items():
        e = mono[0]
        k = mono[1]
        f = mono[2]
        s = 0
        for i in range(n):
            ki = k[i]
            if ki:
                s += ki * <int>col[i]
        _add(out, (append_letter(e, x, A), k, f), coef, 0, s, 1)
        c = 0
        nf = len(f)
        for p in range(nf):
            fp = f[p]
            if fp == x:
                fr = _drop(f, p, A)
                kl = list(k)
                kl[x] = <int>kl[x] + 1
                _add(out, (e, tuple(kl), fr), coef, 1, c, -1)
                kl[x] = <int>kl[x] - 2
                _add(out, (e, tuple(kl), fr), coef, 1, -c, 1)
            c += <int>row[fp]
    return out


cdef dict _rmul_K(dict state, int x, int s, tuple A):
    cdef dict out = {}
    cdef tuple row = A[x]
    cdef tuple e, k, f
    cdef list kl
    cdef int t
    for mono, coef in state.items():
        e = mono[0]
        k = mono[1]
        f = mono[2]
        t = 0
        for j in f:
            t += <int>row[j]
        kl = list(k)
        kl[x] = <int>kl[x] + s
        _add(out, (e, tuple(kl), f), coef, 0, s * t, 1)
    return out


cdef dict _rmul_F(dict state, int x, tuple A):
    cdef dict out = {}
    for mono, coef in state.items():
        _add(out, (mono[0], mono[1], append_letter(mono[2], x, A)), coef, 0, 0, 1)
    return out


def mono_mul(tuple m1, tuple m2, tuple A):
    cdef tuple e2 = m2[0], k2 = m2[1], f2 = m2[2]
    cdef dict state = {m1: {(0, 0): 1}}
    cdef Py_ssize_t i
    for x in e2:
        state = _rmul_E(state, x, A)
    for i in range(len(k2)):
        if k2[i]:
            state = _rmul_K(state, i, k2[i], A)
    for x in f2:
        state = _rmul_F(state, x, A)
    return state


def normalize_letters(letters, int n, tuple A):
    cdef dict state = {((), (0,) * n, ()): {(0, 0): 1}}
    cdef int kind, x, p, r
    for kind, x, p in letters:
        if kind == 1:
            if p:
                state = _rmul_K(state, x, p, A)
        elif kind == 0:
            for r in range(p):
                state = _rmul_E(state, x, A)
        else:
            for r in range(p):
                state = _rmul_F(state, x, A)
    return state
