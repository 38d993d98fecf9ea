# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled canonicalization kernels (twin of ``_kernels_py``).

Same contracts, same outputs; only the inner loops are typed.  Inputs are
small (desk-scale p, q), so fixed C scratch arrays are enough.
"""

IMPLEMENTATION = "c"

DEF MAXSLOTS = 64


def perm_parity(perm):
    cdef int n = len(perm)
    cdef int seen[MAXSLOTS]
    cdef int i, j, length, sign = 1
    if n > MAXSLOTS:
        raise ValueError("permutation too long for compiled kernel")
    for i in range(n):
        seen[i] = 0
    for i in range(n):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = 1
            j = perm[j]
            length += 1
        if not length & 1:
            sign = -sign
    return sign


def canon_decorated(word1, word2, blocks, labels):
    cdef int p = len(word1)
    cdef int q = len(word2)
    cdef int nb = len(blocks)
    cdef int sigma[MAXSLOTS]
    cdef int tau[MAXSLOTS]
    cdef int bi, i, nxt, nxt_label, lab, size, sign
    if p > MAXSLOTS or q > MAXSLOTS:
        raise ValueError("object too large for compiled kernel")

    records = []
    for bi in range(nb):
        block = blocks[bi]
        letters = sorted([word1[pos - 1] for pos in block])
        size = len(letters)
        for i in range(size - 1):
            if letters[i] == letters[i + 1]:
                return None, 0
        lab = labels[bi]
        if lab:
            rec = (size, 1, tuple(letters), word2[lab - 1])
        else:
            rec = (size, 0, tuple(letters), 0)
        records.append((rec, block, lab))

    records.sort(key=_rec_key)
    for i in range(len(records) - 1):
        ra = records[i][0]
        rb = records[i + 1][0]
        if ra == rb:
            size = ra[0]
            if ra[1] and size % 2 == 0:
                return None, 0
            if not ra[1] and size % 2 == 1:
                return None, 0

    nxt = 0
    nxt_label = 0
    key = []
    for rec, block, lab in records:
        key.append(rec)
        for _, pos in sorted([(word1[pos - 1], pos) for pos in block]):
            sigma[pos - 1] = nxt
            nxt += 1
        if lab:
            tau[lab - 1] = nxt_label
            nxt_label += 1

    sign = _parity_c(sigma, p)
    if q:
        sign *= _parity_c(tau, q)
    return tuple(key), sign


cdef int _parity_c(int* perm, int n):
    cdef int seen[MAXSLOTS]
    cdef int i, j, length, sign = 1
    for i in range(n):
        seen[i] = 0
    for i in range(n):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = 1
            j = perm[j]
            length += 1
        if not length & 1:
            sign = -sign
    return sign


def _rec_key(t):
    return (t[0], min(t[1]))


def word_weight(word1, word2, n):
    cdef int i
    w = [0] * n
    for i in range(len(word1)):
        w[word1[i] - 1] -= 1
    for i in range(len(word2)):
        w[word2[i] - 1] += 1
    return tuple(w)
