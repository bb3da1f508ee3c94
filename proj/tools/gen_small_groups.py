#!/usr/bin/env python3
"""Regenerate data/small_groups.txt, the generator table behind the corpus.

Groups of order at most 120 are produced from explicit families (cyclic,
dihedral, generalized dihedral, dicyclic, metacyclic, direct products, a
few named groups) and from sweeps over subgroups generated by an involution and one further element in
some small ambient groups. Isomorphic duplicates are removed with an
invariant built from element orders, class sizes and derived series lengths;
the table is therefore a large sample, not a census.

Output format, one block per group:

    group <name> <order>
    degree <n>
    [image list]        (one generator per line)
    end
"""

import argparse
import itertools
import math
from collections import Counter

MAX_ORDER = 120


def compose(a, b):
    """a then b (right action)."""
    return tuple(b[x] for x in a)


def identity(n):
    return tuple(range(n))


def closure(gens, limit=MAX_ORDER):
    if not gens:
        return None
    n = len(gens[0])
    e = identity(n)
    seen = {e}
    queue = [e]
    for g in queue:
        for s in gens:
            h = compose(g, s)
            if h not in seen:
                seen.add(h)
                if len(seen) > limit:
                    return None
                queue.append(h)
    return seen


def order_of(g):
    e = identity(len(g))
    k, h = 1, g
    while h != e:
        h = compose(h, g)
        k += 1
    return k


def inverse(g):
    out = [0] * len(g)
    for i, x in enumerate(g):
        out[x] = i
    return tuple(out)


def derived(elements):
    comms = set()
    el = list(elements)
    for a in el:
        ia = inverse(a)
        for b in el:
            comms.add(compose(compose(ia, inverse(b)), compose(a, b)))
    return closure(list(comms), limit=len(elements)) or {identity(len(el[0]))}


def invariant(elements):
    el = list(elements)
    orders = Counter(order_of(g) for g in el)
    # conjugacy class sizes
    remaining = set(el)
    classes = []
    while remaining:
        x = next(iter(remaining))
        cls = {compose(compose(inverse(g), x), g) for g in el}
        remaining -= cls
        classes.append((len(cls), order_of(x)))
    series = []
    cur = set(el)
    for _ in range(4):
        d = derived(cur)
        series.append(len(d))
        if len(d) == len(cur):
            break
        cur = d
    squares = Counter(order_of(compose(g, g)) for g in el)
    return (len(el), tuple(sorted(orders.items())), tuple(sorted(classes)), tuple(series),
            tuple(sorted(squares.items())))


def regular(elements, mult):
    """Right regular representation from a multiplication function."""
    index = {x: i for i, x in enumerate(elements)}
    return lambda g: tuple(index[mult(x, g)] for x in elements)


def cyclic(n):
    return [tuple((i + 1) % n for i in range(n))] if n > 1 else [identity(1)]


def dihedral(n):
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return [rot, ref]


def metacyclic(m, n, k):
    elements = [(i, j) for j in range(n) for i in range(m)]
    mult = lambda a, b: ((a[0] + pow(k, a[1], m) * b[0]) % m, (a[1] + b[1]) % n)
    rep = regular(elements, mult)
    return [rep((1 % m, 0)), rep((0, 1 % n))]


def dicyclic(n):
    # <a, x | a^(2n) = 1, x^2 = a^n, x^-1 a x = a^-1>; elements a^i x^j.
    elements = [(i, j) for j in range(2) for i in range(2 * n)]

    def mult(p, q):
        i1, j1 = p
        i2, j2 = q
        if j1 == 0:
            return ((i1 + i2) % (2 * n), j2)
        # x a^i2 = a^-i2 x
        i = (i1 - i2) % (2 * n)
        if j2 == 0:
            return (i, 1)
        return ((i + n) % (2 * n), 0)

    rep = regular(elements, mult)
    return [rep((1, 0)), rep((0, 1))]


def generalized_dihedral(moduli):
    # A : Z2 with the involution inverting the abelian group A.
    cells = list(itertools.product(*[range(m) for m in moduli]))
    elements = [(a, e) for e in range(2) for a in cells]

    def mult(p, q):
        sign = -1 if p[1] else 1
        a = tuple((x + sign * y) % m for x, y, m in zip(p[0], q[0], moduli))
        return (a, (p[1] + q[1]) % 2)

    rep = regular(elements, mult)
    zero = tuple(0 for _ in moduli)
    gens = [rep((tuple(1 if j == i else 0 for j in range(len(moduli))), 0)) for i in range(len(moduli))]
    return gens + [rep((zero, 1))]


def abelian_invariants(limit):
    # Moduli n1 | n2 | ... with at least two factors and product <= limit.
    out = []

    def rec(prefix, prod):
        if len(prefix) >= 2:
            out.append(list(prefix))
        last = prefix[-1] if prefix else 2
        for m in range(last, limit // prod + 1):
            if prefix and m % prefix[-1]:
                continue
            rec(prefix + [m], prod * m)

    for first in range(2, limit + 1):
        rec([first], first)
    return out


def direct_product(g1, g2):
    n1, n2 = len(g1[0]), len(g2[0])
    gens = [tuple(list(a) + [n1 + x for x in identity(n2)]) for a in g1]
    gens += [tuple(list(identity(n1)) + [n1 + x for x in b]) for b in g2]
    return gens


def symmetric(n):
    if n == 1:
        return [identity(1)]
    cyc = tuple((i + 1) % n for i in range(n))
    tr = tuple([1, 0] + list(range(2, n)))
    return [cyc, tr]


def alternating(n):
    gens = []
    for i in range(2, n):
        g = list(range(n))
        g[0], g[1], g[i] = 1, i, 0
        gens.append(tuple(g))
    return gens


def signed_permutations(n):
    """Hyperoctahedral group on 2n points (i and i + n are a pair)."""
    gens = []
    for g in symmetric(n):
        gens.append(tuple(list(g) + [x + n for x in g]))
    flip = list(range(2 * n))
    flip[0], flip[n] = n, 0
    gens.append(tuple(flip))
    return gens


def gl23():
    vecs = [(a, b) for a in range(3) for b in range(3) if (a, b) != (0, 0)]
    index = {v: i for i, v in enumerate(vecs)}

    def mat(m):
        return tuple(index[((m[0] * v[0] + m[1] * v[1]) % 3, (m[2] * v[0] + m[3] * v[1]) % 3)]
                     for v in vecs)

    return [mat((1, 1, 0, 1)), mat((0, 1, 2, 0)), mat((2, 0, 0, 1))]


def sl23():
    g = gl23()
    return [g[0], g[1]]


def affine_line(p):
    """AGL(1, p) on p points."""
    w = next(a for a in range(2, p) if all(pow(a, (p - 1) // q, p) != 1
                                           for q in range(2, p) if (p - 1) % q == 0 and all(q % d for d in range(2, q))))
    return [tuple((x + 1) % p for x in range(p)), tuple((w * x) % p for x in range(p))]


def f8_frobenius():
    # Z2^3 : Z7 via multiplication in GF(8) = GF(2)[t]/(t^3 + t + 1).
    def mul(a, b):
        r = 0
        for i in range(3):
            if b >> i & 1:
                r ^= a << i
        for i in (4, 3):
            if r >> i & 1:
                r ^= 0b1011 << (i - 3)
        return r
    return [tuple(x ^ 1 for x in range(8)), tuple(mul(x, 2) for x in range(8))]


def wreath_z2_cyclic(r, reflect):
    """Z2 wr Z_r (or wr D_r) acting on Z2 x Z_r, point (b, p) = 2p + b."""
    n = 2 * r
    gens = [tuple(x ^ 1 if x // 2 == 0 else x for x in range(n))]
    gens.append(tuple((2 * ((x // 2 + 1) % r)) + (x & 1) for x in range(n)))
    if reflect:
        gens.append(tuple((2 * ((-(x // 2)) % r)) + (x & 1) for x in range(n)))
    return gens


def families():
    out = []
    for n in range(1, MAX_ORDER + 1):
        out.append((f"Z{n}", cyclic(n)))
    for n in range(3, MAX_ORDER // 2 + 1):
        out.append((f"D{n}", dihedral(n)))
    for n in range(2, MAX_ORDER // 4 + 1):
        out.append((f"Dic{n}", dicyclic(n)))
    for m in range(3, MAX_ORDER + 1):
        for n in range(2, MAX_ORDER // m + 1):
            for k in range(2, m):
                if math.gcd(k, m) == 1 and pow(k, n, m) == 1:
                    out.append((f"Z{m}:{n}_{k}", metacyclic(m, n, k)))
    named = [
        ("A4", alternating(4)), ("S4", symmetric(4)), ("A5", alternating(5)), ("S5", symmetric(5)),
        ("SL(2,3)", sl23()), ("GL(2,3)", gl23()), ("B3", signed_permutations(3)),
        ("AGL(1,5)", affine_line(5)), ("AGL(1,7)", affine_line(7)), ("AGL(1,11)", affine_line(11)),
        ("Z2^3:Z7", f8_frobenius()),
        ("Z2wrZ3", wreath_z2_cyclic(3, False)), ("Z2wrZ4", wreath_z2_cyclic(4, False)),
        ("Z2wrZ5", wreath_z2_cyclic(5, False)), ("Z2wrD3", wreath_z2_cyclic(3, True)),
    ]
    out += named
    for moduli in abelian_invariants(MAX_ORDER // 2):
        out.append(("Dih(" + "x".join(f"Z{m}" for m in moduli) + ")", generalized_dihedral(moduli)))
    small = [(name, gens) for name, gens in out if 2 <= len(closure(gens) or []) <= 24]
    for (n1, g1), (n2, g2) in itertools.combinations_with_replacement(small, 2):
        o1, o2 = len(closure(g1)), len(closure(g2))
        if o1 * o2 <= MAX_ORDER:
            out.append((f"{n1}x{n2}", direct_product(g1, g2)))
    # One more cyclic factor of order 2 or 3 on everything built so far.
    extra = []
    for name, gens in out:
        o = len(closure(gens) or [])
        for c in (2, 3):
            if 2 <= o and o * c <= MAX_ORDER:
                extra.append((f"Z{c}x{name}", direct_product(cyclic(c), gens)))
    return out + extra


def ambient_sweeps():
    out = []
    for name, gens in [("S5", symmetric(5)), ("B4", signed_permutations(4)),
                       ("S4xS3", direct_product(symmetric(4), symmetric(3))), ("GL(2,3)", gl23())]:
        elements = sorted(closure(gens, limit=10**6))
        invols = [g for g in elements if order_of(g) == 2]
        for a in invols:
            for b in elements:
                sub = closure([a, b])
                if sub is not None:
                    out.append((f"<{name}:{elements.index(a)},{elements.index(b)}>", [a, b]))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="data/small_groups.txt")
    args = ap.parse_args()

    table = {}
    seen_sets = set()
    for name, gens in families() + ambient_sweeps():
        elements = closure(gens)
        if elements is None:
            continue
        key = frozenset(elements)
        if key in seen_sets:
            continue
        seen_sets.add(key)
        inv = invariant(elements)
        if inv in table:
            continue
        gens = [g for g in gens if g != identity(len(g))] or [gens[0]]
        table[inv] = (name, len(elements), gens)

    groups = sorted(table.values(), key=lambda t: (t[1], len(t[2][0]), t[0]))
    with open(args.out, "w") as f:
        f.write("# Generated by tools/gen_small_groups.py; do not edit.\n")
        for name, order, gens in groups:
            f.write(f"group {name} {order}\ndegree {len(gens[0])}\n")
            for g in gens:
                f.write("[" + " ".join(map(str, g)) + "]\n")
            f.write("end\n")
    print(f"{len(groups)} groups written to {args.out}")


if __name__ == "__main__":
    main()
