"""Pure-Python canonicalization kernels.

These functions sit in the innermost loops of the coend and coinvariant
computations; a compiled twin lives in ``_kernels_c.pyx``.  Both must
produce bit-identical results; ``walledbrauer.kernels`` picks one at
import time.

A "decorated pair" is a basis element of K^vee(p,q) (x) P'(p,q) (x) det:
letters word1[0..p-1] on the element slots, letters word2[0..q-1] on the
label slots, and a strict labeled partition of the slots given as blocks
of 1-based positions with labels[i] in {0 (unlabeled), 1..q}.  Its orbit
under Sigma_p x Sigma_q (acting with the det sign) either dies (a
stabilizer element acts by -1) or has a canonical representative; we
return (key, sign) with sign 0 marking a dead orbit.
"""

IMPLEMENTATION = "python"


def perm_parity(perm):
    """Parity (+1/-1) of a permutation given as a list of images of 0..k-1."""
    n = len(perm)
    seen = [False] * n
    sign = 1
    for i in range(n):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if not length & 1:
            sign = -sign
    return sign


def canon_decorated(word1, word2, blocks, labels):
    """Canonical form of a decorated pair under the signed product action.

    Returns ``(key, sign)`` where ``key`` is a sorted tuple of decorated
    parts ``(size, labeled, letters, label_letter)`` and ``sign`` is the
    sign of the group element carrying the input to the canonical form,
    or ``(None, 0)`` when the orbit is killed by the det sign.
    """
    p = len(word1)
    q = len(word2)
    records = []
    for bi, block in enumerate(blocks):
        letters = sorted(word1[pos - 1] for pos in block)
        for a, b in zip(letters, letters[1:]):
            if a == b:
                return None, 0  # repeated letter in a block: transposition kills
        lab = labels[bi]
        if lab:
            rec = (len(block), 1, tuple(letters), word2[lab - 1])
        else:
            rec = (len(block), 0, tuple(letters), 0)
        records.append((rec, block, lab))

    records.sort(key=lambda t: (t[0], min(t[1])))
    for (ra, ba, _), (rb, bb, _) in zip(records, records[1:]):
        if ra == rb:
            size, labeled = ra[0], ra[1]
            if labeled and size % 2 == 0:
                return None, 0  # swapping equal labeled parts of even size kills
            if not labeled and size % 2 == 1:
                return None, 0  # swapping equal unlabeled parts of odd size kills

    sigma = [0] * p
    nxt = 0
    tau = [0] * q
    nxt_label = 0
    key = []
    for rec, block, lab in records:
        key.append(rec)
        for _, pos in sorted((word1[pos - 1], pos) for pos in block):
            sigma[pos - 1] = nxt
            nxt += 1
        if lab:
            tau[lab - 1] = nxt_label
            nxt_label += 1
    sign = perm_parity(sigma) * (perm_parity(tau) if q else 1)
    return tuple(key), sign


def word_weight(word1, word2, n):
    """GL torus weight of a K^vee basis word: +e_b per label slot, -e_a per element slot."""
    w = [0] * n
    for a in word1:
        w[a - 1] -= 1
    for b in word2:
        w[b - 1] += 1
    return tuple(w)
