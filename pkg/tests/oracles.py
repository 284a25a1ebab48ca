"""Independent reference computations for the test suite.

Everything here is written against sympy primitives and raw brute force,
never against the package under test, so the two sides of an assertion
always come from unrelated code paths.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import isqrt, sqrt

from sympy import factorint, jacobi_symbol


def kronecker_ref(a: int, n: int) -> int:
    """Kronecker symbol (a/n) built from sympy's Jacobi symbol."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    if n % 2 == 0:
        if a % 2 == 0:
            return 0
        while n % 2 == 0:
            n //= 2
            if a % 8 in (3, 5):
                result = -result
    if n == 1:
        return result
    return result * int(jacobi_symbol(a, n))


def squarefree_ref(n: int) -> bool:
    return n != 0 and all(e == 1 for p, e in factorint(n).items() if p > 0)


def fundamental_ref(d: int) -> bool:
    """Whether d is the discriminant of a quadratic field."""
    if d in (0, 1):
        return False
    if d % 4 == 1:
        return squarefree_ref(d)
    if d % 4 == 0:
        m = d // 4
        return m % 4 in (2, 3) and squarefree_ref(m)
    return False


def prime_disc_ref(p: int) -> int:
    """The prime discriminant attached to an odd prime."""
    return p if p % 4 == 1 else -p


def disc_parts_ref(d: int) -> list[int]:
    """Prime-discriminant factors of a fundamental discriminant d."""
    assert fundamental_ref(d)
    parts = [prime_disc_ref(p) for p in factorint(abs(d)) if p > 2]
    prod = 1
    for q in parts:
        prod *= q
    rest, check = divmod(d, prod)
    assert check == 0
    if rest != 1:
        assert rest in (-4, 8, -8)
        parts.append(rest)
    return sorted(parts, key=lambda v: (v > 0, abs(v)))


def _canonical_triple(groups: list[int]) -> tuple[int, int, int]:
    a, b, c = sorted(groups, key=lambda v: (v > 0, abs(v)))
    return (a, b, c)


def h8_splits_ref(d: int) -> list[tuple[int, int, int]]:
    """Brute-force three-colourings of the prime discriminants of d that
    satisfy the product-symbol conditions, at most one group negative."""
    parts = disc_parts_ref(d)
    found: set[tuple[int, int, int]] = set()
    for labels in product(range(3), repeat=len(parts)):
        groups = [1, 1, 1]
        for lab, q in zip(labels, parts):
            groups[lab] *= q
        if 1 in groups:
            continue
        if sum(1 for g in groups if g < 0) > 1:
            continue
        ok = True
        for i in range(3):
            others = groups[(i + 1) % 3] * groups[(i + 2) % 3]
            for p in factorint(abs(groups[i])):
                if kronecker_ref(others, p) != 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.add(_canonical_triple(groups))
    return sorted(found, key=lambda t: [(v > 0, abs(v)) for v in t])


def d4_pairs_ref(d: int) -> list[tuple[int, int, int]]:
    """Brute-force dihedral-admissible pairs (d1, d2) with complement d3."""
    parts = disc_parts_ref(d)
    found: set[tuple[int, int, int]] = set()
    for labels in product(range(3), repeat=len(parts)):
        groups = [1, 1, 1]
        for lab, q in zip(labels, parts):
            groups[lab] *= q
        a, b, d3 = groups
        if a == 1 or b == 1:
            continue
        if a < 0 and b < 0:
            continue
        ok = all(kronecker_ref(b, p) == 1 for p in factorint(abs(a)))
        ok = ok and all(kronecker_ref(a, p) == 1 for p in factorint(abs(b)))
        if ok:
            lo, hi = sorted((a, b), key=lambda v: (v > 0, abs(v)))
            found.add((lo, hi, d3))
    return sorted(found, key=lambda t: [(v > 0, abs(v)) for v in t])


def box_search(c1: int, c2: int, c3: int, box: int) -> tuple[int, int, int] | None:
    """Smallest-x nontrivial solution of c1*x^2 + c2*y^2 + c3*z^2 = 0 with
    0 <= x, y <= box, scanning exhaustively."""
    for x in range(box + 1):
        cx = c1 * x * x
        for y in range(box + 1):
            rem = cx + c2 * y * y
            if rem % c3 != 0:
                continue
            zsq = -rem // c3
            if zsq < 0:
                continue
            z = isqrt(zsq)
            if z * z == zsq and (x, y, z) != (0, 0, 0):
                return (x, y, z)
    return None


def embedding_sign_float(m: int, n: int, coords, sm: int, sn: int) -> int:
    """Float sign of c0 + c1*sm*sqrt(m) + c2*sn*sqrt(n) + c3*sm*sn*sqrt(mn)."""
    c0, c1, c2, c3 = (float(Fraction(c)) for c in coords)
    v = c0 + c1 * sm * sqrt(m) + c2 * sn * sqrt(n) + c3 * sm * sn * sqrt(m * n)
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def fourth_powers_ref(p: int) -> set[int]:
    """Nonzero fourth powers modulo the prime p."""
    return {pow(x, 4, p) for x in range(1, p)}
