"""Pure-Python kernels; used when the compiled extension is unavailable."""


def count_colorings(n, pos_nbrs, neg_nbrs, loops, k):
    """Count maps V -> {-k..k} avoiding the signed-edge and loop constraints.

    Vertices are ``0..n-1``; ``pos_nbrs[i]`` and ``neg_nbrs[i]`` list the
    neighbours ``j < i``.  The last vertex is counted, not enumerated.
    """
    if n == 0:
        return 1
    size = 2 * k + 1
    colors = [0] * n
    last = n - 1

    def forbidden(i):
        bad = {colors[j] for j in pos_nbrs[i]}
        bad.update(-colors[j] for j in neg_nbrs[i])
        if loops[i]:
            bad.add(0)
        return bad

    def rec(i):
        if i == last:
            return size - len(forbidden(i))
        bad = forbidden(i)
        total = 0
        for c in range(-k, k + 1):
            if c not in bad:
                colors[i] = c
                total += rec(i + 1)
        return total

    return rec(0)


def mobius(masks, ranks):
    """Moebius values of a geometric lattice given as closed hyperplane sets.

    ``masks`` must be sorted by rank; element 0 is the bottom (empty set).
    """
    mu = [0] * len(masks)
    if not masks:
        return mu
    mu[0] = 1
    for x in range(1, len(masks)):
        mx, rx = masks[x], ranks[x]
        s = 0
        for y in range(x):
            if ranks[y] < rx and masks[y] & mx == masks[y]:
                s += mu[y]
        mu[x] = -s
    return mu
