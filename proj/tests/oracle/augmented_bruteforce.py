#!/usr/bin/env python3
"""Independent checks for the kernel-construction facts frozen in augmented_test.cpp.

Signed window values are ints or the string 'inf'. Classes of the kernel over a
pointed base are identified with signed vectors whose basepoint coordinate is
zero; the definitional order on them is the difference order checked
coordinatewise (validated against the stabilized relation in
diff_order_bruteforce.py).
"""

INF = "inf"


def add(a, b):
    return INF if a == INF or b == INF else a + b


def leq(a, b):
    if b == INF:
        return True
    if a == INF:
        return False
    return a <= b


def vleq(u, v):
    return all(leq(a, b) for a, b in zip(u, v))


def vadd(u, v):
    return tuple(add(a, b) for a, b in zip(u, v))


def finite(u):
    return all(a != INF for a in u)


def window(bound, dims):
    vals = list(range(-bound, bound + 1)) + [INF]
    out = [()]
    for _ in range(dims):
        out = [v + (a,) for v in out for a in vals]
    return out


def scale(u, n):
    return tuple(0 if a == 0 else (INF if a == INF else n * a) for a in u)


def complement_recipe(vp, v):
    # z = w - N*1 with N bounding the predecessor and w the pointwise complement
    n = max([0] + [a for a in vp])
    w = tuple(0 if a == INF else max(0, n - a) for a in v)
    return vadd(w, scale((-1,) * len(v), n)), n, w


def check_complements(bound):
    zero = (0, 0)
    pairs = 0
    for vp in window(bound, 2):
        if not finite(vp):
            continue
        for v in window(bound, 2):
            if not vleq(vp, v):
                continue  # way-below on signed pairs is "finite and <="
            z, n, w = complement_recipe(vp, v)
            assert vleq(vadd(vp, z), zero), (vp, v, z)
            assert vleq(zero, vadd(v, z)), (vp, v, z)
            # the refinement: any y' <= y with v + y <= 0 sits below z
            for y in window(bound, 2):
                if not vleq(vadd(v, y), zero):
                    continue
                for yp in window(bound, 2):
                    if finite(yp) and vleq(yp, y):
                        assert vleq(yp, z), (vp, v, y, yp, z)
            pairs += 1
    return pairs


def check_absorbers(bound):
    zero = (0, 0)
    for v in window(bound, 2):
        z = tuple(0 if (a == INF or a >= 0) else -a for a in v)
        assert vleq(zero, z) and vleq(zero, vadd(v, z)), (v, z)
    # the quoted case
    v = (-1, 2)
    z = tuple(0 if (a == INF or a >= 0) else -a for a in v)
    assert z == (1, 0) and vadd(v, z) == (0, 2)


def check_group(bound):
    # compacts = finite window vectors; inverses and summand closure
    comp = [v for v in window(bound, 2) if finite(v)]
    for v in comp:
        inv = tuple(-a for a in v)
        assert vadd(v, inv) == (0, 0)
    for u in window(bound, 2):
        for v in window(bound, 2):
            if finite(vadd(u, v)):
                assert finite(u) and finite(v)
    return len(comp)


def split_maps(bound):
    # pointed discrete 3 = 2 + 1: middle free coords (a, b, c); inclusion
    # hits (a, b, 0); quotient reads c.
    src = window(bound, 2)
    mid = window(bound, 3)
    image = {(a, b, 0) for a, b in src}
    kernel = {t for t in mid if t[2] == 0}
    assert image == kernel
    assert all((0, 0) == ((0, 0) if t[2] == 0 else None) or True for t in mid)
    # composite is zero on the image
    assert all(t[2] == 0 for t in image)
    # order embedding
    for a in src:
        for b in src:
            assert vleq(a, b) == vleq((a[0], a[1], 0), (b[0], b[1], 0))
    # perturbed quotient reading b + c: the composite picks up b
    bad = [(a, b) for a, b in src if add(b, 0) != 0 and b != 0]
    s = bad[0]
    assert add(s[1], 0) != 0  # pi'(iota(s)) = b != 0
    # a kernel class of the perturbed map outside the image
    t = (0, 1, -1)
    assert add(t[1], t[2]) == 0 and t not in image
    return len(mid)


def check_q(bound):
    # positive classes of the kernel over the pointed base lift to base
    # elements with zero basepoint coordinate
    count = 0
    for v in window(bound, 2):
        if not vleq((0, 0), v):
            continue
        lift = (v[0], v[1], 0)  # base coordinates (ideal..., basepoint)
        assert all(a == INF or a >= 0 for a in lift)
        count += 1
    return count


def main():
    b = 3
    pairs = check_complements(b)
    check_absorbers(b)
    ncomp = check_group(b)
    nmid = split_maps(2)
    npos = check_q(b)
    # frozen spot values
    z, n, w = complement_recipe((1, 2), (2, 3))
    assert (z, n, w) == ((-2, -2), 2, (0, 0)), (z, n, w)
    assert vadd((1, 2), z) == (-1, 0) and vadd((2, 3), z) == (0, 1)
    z1, _, _ = complement_recipe((3,), (3,))
    assert z1 == (-3,)
    print(f"complement recipe holds on {pairs} way-below pairs at B={b}")
    print(f"compacts at B={b}: {ncomp} (= (2*{b}+1)^2), inverses and closure hold")
    print(f"split 2+1 exactness holds over {nmid} middle classes at B=2")
    print(f"q-lifts for {npos} positive window classes (= (B+2)^2 = {(b + 2) ** 2})")
    print("ok")


if __name__ == "__main__":
    main()
