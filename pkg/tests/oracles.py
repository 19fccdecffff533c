"""Slow, obviously-correct reference implementations used by the tests."""

from fractions import Fraction
from itertools import permutations, product

from vkt.polyring import LaurentPoly


def brute_hom_count(gens, relators, n):
    """Count tuples of permutations satisfying every relator, by exhaustion."""
    perms = list(permutations(range(n)))
    inv = {p: tuple(sorted(range(n), key=lambda i: p[i])) for p in perms}

    def evaluate(word, images):
        cur = tuple(range(n))
        for x in word:
            g = images[abs(x) - 1]
            g = g if x > 0 else inv[g]
            cur = tuple(g[cur[i]] for i in range(n))
        return cur

    ident = tuple(range(n))
    return sum(
        all(evaluate(r, imgs) == ident for r in relators) for imgs in product(perms, repeat=len(gens))
    )


def brute_index(d, cid):
    """Index by walking the circle twice and reading arrow directions."""
    seq = d.circles[0]
    n = len(seq)
    pos = {tok: i for i, tok in enumerate(seq)}
    i, j = pos[("O", cid)], pos[("U", cid)]
    between = lambda k: 0 < (k - i) % n < (j - i) % n  # noqa: E731
    total = 0
    for other, e in d.signs.items():
        if other == cid:
            continue
        h, t = between(pos[("U", other)]), between(pos[("O", other)])
        if h and not t:
            total += e
        elif t and not h:
            total -= e
    return d.signs[cid] * total


def numberable_by_search(d, p):
    """Label arcs by breadth-first propagation of the crossing relations."""
    seq = d.circles[0]
    n = len(seq)
    if n == 0:
        return True
    pos = {tok: i for i, tok in enumerate(seq)}
    edges = {k: [] for k in range(n)}
    for cid, e in d.signs.items():
        i, j = pos[("O", cid)], pos[("U", cid)]
        for a, b, w in ((i, i - 1, -e), (j - 1, i, 0), (j, i - 1, 0)):
            a, b = a % n, b % n
            edges[a].append((b, -w))  # lam[b] = lam[a] - w
            edges[b].append((a, w))
    lab = {0: 0}
    todo = [0]
    red = (lambda x: x % p) if p else (lambda x: x)
    while todo:
        a = todo.pop()
        for b, w in edges[a]:
            val = red(lab[a] + w)
            if b in lab:
                if red(lab[b] - val):
                    return False
            else:
                lab[b] = val
                todo.append(b)
    return True


def det_fraction(rows):
    """Determinant of a rational matrix by Gaussian elimination."""
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    sign = 1
    out = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        out *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for k in range(c, n):
                m[r][k] -= f * m[c][k]
    return out * sign


def all_polys(max_deg, bound, var="t"):
    """Every nonzero polynomial of degree <= max_deg with coefficients in [-bound, bound]."""
    for coeffs in product(range(-bound, bound + 1), repeat=max_deg + 1):
        if any(coeffs):
            yield LaurentPoly({(k,): c for k, c in enumerate(coeffs) if c}, (var,))


def gcd_by_enumeration(f, g, max_deg, bound):
    """Largest common divisor among small candidates, unit normalized."""
    best = LaurentPoly.one(("t",))
    for c in all_polys(max_deg, bound):
        if c.divides(f) and c.divides(g):
            if (c.width("t"), abs(c.content())) > (best.width("t"), abs(best.content())):
                best = c
    return best.unit_normal()
