"""Pure-Python rewriting kernels.

A monomial is a tuple ``(eword, kexp, fword)`` of tuples of 0-based ints.
Coefficients produced here are sparse maps ``{(d, a): c}`` with integer
``c`` standing for ``c * q**a / (q - q**-1)**d``; the caller converts them to
field elements. ``A`` is the Cartan matrix as a tuple of tuples.
"""


def poly_mul(a, b):
    """Convolution of two dense coefficient sequences."""
    la, lb = len(a), len(b)
    out = [0] * (la + lb - 1)
    for i in range(la):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(lb):
            out[i + j] += ai * b[j]
    return out


def append_letter(word, x, A):
    """Canonical form of ``word + (x,)`` when ``word`` is canonical.

    Commuting letters (Cartan entry 0) are kept in increasing order, so the
    new letter bubbles left past larger letters it commutes with.
    """
    pos = len(word)
    row = A[x]
    while pos > 0:
        y = word[pos - 1]
        if y > x and row[y] == 0:
            pos -= 1
        else:
            break
    return word[:pos] + (x,) + word[pos:]


def canonical_word(word, A):
    out = ()
    for x in word:
        out = append_letter(out, x, A)
    return out


def _drop(word, p, A):
    out = word[:p]
    for x in word[p + 1:]:
        out = append_letter(out, x, A)
    return out


def _add(acc, mono, coef, dd, da, sign):
    tgt = acc.get(mono)
    if tgt is None:
        tgt = acc[mono] = {}
    for (d, a), c in coef.items():
        key = (d + dd, a + da)
        v = tgt.get(key, 0) + sign * c
        if v:
            tgt[key] = v
        else:
            del tgt[key]
    if not tgt:
        del acc[mono]


def _rmul_E(state, x, A):
    out = {}
    col = [A[i][x] for i in range(len(A))]
    row = A[x]
    for (e, k, f), coef in state.items():
        s = 0
        for i, ki in enumerate(k):
            if ki:
                s += ki * col[i]
        _add(out, (append_letter(e, x, A), k, f), coef, 0, s, 1)
        c = 0
        for p, fp in enumerate(f):
            if fp == x:
                fr = _drop(f, p, A)
                kl = list(k)
                kl[x] += 1
                _add(out, (e, tuple(kl), fr), coef, 1, c, -1)
                kl[x] -= 2
                _add(out, (e, tuple(kl), fr), coef, 1, -c, 1)
            c += row[fp]
    return out


def _rmul_K(state, x, s, A):
    out = {}
    row = A[x]
    for (e, k, f), coef in state.items():
        t = 0
        for j in f:
            t += row[j]
        kl = list(k)
        kl[x] += s
        _add(out, (e, tuple(kl), f), coef, 0, s * t, 1)
    return out


def _rmul_F(state, x, A):
    out = {}
    for (e, k, f), coef in state.items():
        _add(out, (e, k, append_letter(f, x, A)), coef, 0, 0, 1)
    return out


def mono_mul(m1, m2, A):
    """Normal form of the product of two normal monomials."""
    e2, k2, f2 = m2
    state = {m1: {(0, 0): 1}}
    for x in e2:
        state = _rmul_E(state, x, A)
    for i, s in enumerate(k2):
        if s:
            state = _rmul_K(state, i, s, A)
    for x in f2:
        state = _rmul_F(state, x, A)
    return state


def normalize_letters(letters, n, A):
    """Normal form of a word given as ``(kind, index, power)`` triples.

    ``kind`` is 0 for E, 1 for K and 2 for F; ``power`` is the repeat count
    (for K it may be negative).
    """
    zero = (0,) * n
    state = {((), zero, ()): {(0, 0): 1}}
    for kind, x, p in letters:
        if kind == 1:
            if p:
                state = _rmul_K(state, x, p, A)
        elif kind == 0:
            for _ in range(p):
                state = _rmul_E(state, x, A)
        else:
            for _ in range(p):
                state = _rmul_F(state, x, A)
    return state
