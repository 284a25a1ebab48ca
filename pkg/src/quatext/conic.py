"""Exact rational points on diagonal conics c1*x^2 + c2*y^2 + c3*z^2 = 0.

Strategy: a tiny shell search on the original equation first (it finds the
small solutions a human would), then classical reduction: normalize the
coefficients to a squarefree, pairwise coprime, content-one triple while
tracking the coordinate transform, test local solvability, and run a
Lagrange-style descent with a complete bounded search as a safety net.
All arithmetic is exact; every returned point is verified against the
equation and reduced to a primitive nonnegative triple.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Iterator

from ._intmath import sqrt_modulo, square_part
from .errors import InternalInvariant, LocalObstruction, SearchExhausted
from .symbols import kronecker

__all__ = [
    "ConicEquation",
    "ConicSolution",
    "solve_conic",
    "solve_system",
    "find_parameter_a",
    "parameter_conditions",
    "parameter_candidates",
]

_PRESEARCH_SHELLS = 16
_DESCENT_DEPTH_LIMIT = 200


@dataclass(frozen=True)
class ConicEquation:
    c1: int
    c2: int
    c3: int

    def coefficients(self) -> tuple[int, int, int]:
        return (self.c1, self.c2, self.c3)

    def evaluate(self, x: int, y: int, z: int) -> int:
        return self.c1 * x * x + self.c2 * y * y + self.c3 * z * z


@dataclass(frozen=True)
class ConicSolution:
    x: int
    y: int
    z: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


def _primitive_nonneg(x: int, y: int, z: int) -> tuple[int, int, int]:
    g = gcd(gcd(x, y), z)
    if g == 0:
        raise InternalInvariant("trivial conic point")
    return (abs(x) // g, abs(y) // g, abs(z) // g)


def _shell_scan(c1: int, c2: int, c3: int, shells: int,
                skip_zero_last: bool) -> tuple[int, int, int] | None:
    for s in range(1, shells + 1):
        for u in range(s + 1):
            for v in range(s + 1):
                for w in range(s + 1):
                    if max(u, v, w) != s:
                        continue
                    if skip_zero_last and w == 0:
                        continue
                    if gcd(gcd(u, v), w) != 1:
                        continue
                    if c1 * u * u + c2 * v * v + c3 * w * w == 0:
                        return (u, v, w)
    return None


def _normalize(c: list[int]) -> tuple[list[int], list[int]]:
    """Reduce to squarefree, pairwise coprime, content-one coefficients.

    Returns (coeffs, mult) where a solution s of the reduced equation maps
    to (mult[0]*s[0], mult[1]*s[1], mult[2]*s[2]) on the input equation.
    """
    c = list(c)
    mult = [1, 1, 1]
    changed = True
    while changed:
        changed = False
        g = gcd(gcd(c[0], c[1]), c[2])
        if g > 1:
            c = [v // g for v in c]
            changed = True
        for i in range(3):
            s, m = square_part(c[i])
            if s > 1:
                # c_i * x_i^2 = m * (s x_i)^2: scale the other two coords
                c[i] = m
                for j in range(3):
                    if j != i:
                        mult[j] *= s
                changed = True
        for i in range(3):
            for j in range(i + 1, 3):
                g = gcd(c[i], c[j])
                if g > 1:
                    p = _smallest_prime_factor(g)
                    k = 3 - i - j
                    c[i] //= p
                    c[j] //= p
                    c[k] *= p
                    mult[k] *= p
                    changed = True
    return c, mult


def _smallest_prime_factor(n: int) -> int:
    n = abs(n)
    if n % 2 == 0:
        return 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return f
        f += 2
    return n


def _check_local(c: list[int]) -> None:
    """Legendre's criterion for a normalized coefficient triple."""
    if c[0] > 0 and c[1] > 0 and c[2] > 0 or c[0] < 0 and c[1] < 0 and c[2] < 0:
        raise LocalObstruction("no real point: all coefficients share a sign",
                               place="infinity")
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        target = -c[j] * c[k]
        # odd primes of c_i only; the place 2 follows by the product formula
        for q in _odd_prime_divisors(c[i]):
            if kronecker(target, q) != 1:
                raise LocalObstruction(
                    f"-({c[j]})*({c[k]}) is not a square mod {q}", place=q)


def _odd_prime_divisors(n: int) -> Iterator[int]:
    n = abs(n)
    while n % 2 == 0:
        n //= 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            yield f
            while n % f == 0:
                n //= f
        f += 2
    if n > 1:
        yield n


def _holzer_search(a: int, b: int, c: int) -> tuple[int, int, int]:
    """Complete bounded search: a solvable normalized equation has a point
    with |x| <= sqrt|bc|, |y| <= sqrt|ac|, |z| <= sqrt|ab|."""
    coeffs = (a, b, c)
    solve_for = min(range(3), key=lambda n: abs(coeffs[n]))
    i, j = (n for n in range(3) if n != solve_for)
    bound_i = isqrt(abs(coeffs[j] * coeffs[solve_for]))
    bound_j = isqrt(abs(coeffs[i] * coeffs[solve_for]))
    cs = coeffs[solve_for]
    for u in range(bound_i + 1):
        for v in range(bound_j + 1):
            if u == 0 and v == 0:
                continue
            val = -(coeffs[i] * u * u + coeffs[j] * v * v)
            if val % cs != 0:
                continue
            q = val // cs
            if q < 0:
                continue
            r = isqrt(q)
            if r * r == q:
                point = [0, 0, 0]
                point[i], point[j], point[solve_for] = u, v, r
                return (point[0], point[1], point[2])
    raise SearchExhausted(f"no point within Holzer bounds for ({a}, {b}, {c})")


def _zero_pair_point(c: list[int]) -> tuple[int, int, int] | None:
    for i in range(3):
        for j in range(i + 1, 3):
            if c[i] + c[j] == 0:
                point = [0, 0, 0]
                point[i] = point[j] = 1
                return tuple(point)  # type: ignore[return-value]
    return None


def _descend(c: list[int], visited: set[tuple[int, int, int]], depth: int) -> tuple[int, int, int]:
    """Point on a normalized (squarefree, pairwise coprime, content 1),
    locally solvable equation c[0]x^2 + c[1]y^2 + c[2]z^2 = 0."""
    base = _zero_pair_point(c)
    if base is not None:
        return base
    key = tuple(sorted(c))
    if depth > _DESCENT_DEPTH_LIMIT or key in visited:
        return _holzer_search(c[0], c[1], c[2])
    visited.add(key)  # type: ignore[arg-type]

    # move the largest coefficient to front as the descent modulus
    k = max(range(3), key=lambda i: abs(c[i]))
    perm = [k] + [i for i in range(3) if i != k]
    a, b, cc = c[perm[0]], c[perm[1]], c[perm[2]]
    A = abs(a)
    t = sqrt_modulo((-b * cc) % A, A) if A > 1 else 0
    if t is None:
        sol_abc = _holzer_search(a, b, cc)
    else:
        if t > A // 2:
            t -= A
        if (t * t + b * cc) % a != 0:
            raise InternalInvariant("descent residue does not divide")
        m = (t * t + b * cc) // a
        if m == 0:
            # t^2 = -b*c: the point (0, t, b) is on the equation
            sol_abc = (0, t, b)
        else:
            sub, mult = _normalize([m, b, cc])
            inner = _descend(sub, visited, depth + 1)
            x0, y0, z0 = (mult[0] * inner[0], mult[1] * inner[1], mult[2] * inner[2])
            # (a,b,c)-point from an (m,b,c)-point via t^2 + b*c = a*m
            sol_abc = (m * x0, cc * z0 + t * y0, t * z0 - b * y0)
    out = [0, 0, 0]
    for pos, idx in enumerate(perm):
        out[idx] = sol_abc[pos]
    if c[0] * out[0] ** 2 + c[1] * out[1] ** 2 + c[2] * out[2] ** 2 != 0:
        raise InternalInvariant(f"descent produced a non-point for {c}")
    return _primitive_nonneg(*out)


def _force_nonzero_last(c1: int, c2: int, c3: int,
                        point: tuple[int, int, int]) -> tuple[int, int, int]:
    """Slide along the conic through `point` to make the last coordinate
    nonzero.  Lines through a rational point sweep out all other points."""
    x0, y0, z0 = point
    if z0 != 0:
        return point
    for u, v, w in ((1, 0, 1), (0, 1, 1), (1, 1, 1), (1, 0, 2), (0, 1, 2), (2, 1, 1)):
        lin = c1 * u * x0 + c2 * v * y0 + c3 * w * z0
        quad = c1 * u * u + c2 * v * v + c3 * w * w
        if lin == 0 or quad == 0:
            continue
        nx = quad * x0 - 2 * u * lin
        ny = quad * y0 - 2 * v * lin
        nz = -2 * w * lin
        if nz != 0:
            if c1 * nx * nx + c2 * ny * ny + c3 * nz * nz != 0:
                raise InternalInvariant("line trick left the conic")
            return _primitive_nonneg(nx, ny, nz)
    raise InternalInvariant(f"could not move off z = 0 on ({c1}, {c2}, {c3})")


def solve_conic(c1: int, c2: int, c3: int, *, shells: int = _PRESEARCH_SHELLS,
                nonzero_last: bool = False) -> ConicSolution:
    """A primitive nonnegative integer point on c1*x^2 + c2*y^2 + c3*z^2 = 0.

    Deterministic: the small shell search fixes which of the infinitely
    many points comes back.  Raises LocalObstruction when no rational
    point exists, naming a failing place.
    """
    if c1 == 0 or c2 == 0 or c3 == 0:
        raise ValueError("conic coefficients must be nonzero")
    hit = _shell_scan(c1, c2, c3, shells, nonzero_last)
    if hit is None:
        norm, mult = _normalize([c1, c2, c3])
        _check_local(norm)
        inner = _descend(norm, set(), 0)
        hit = _primitive_nonneg(mult[0] * inner[0], mult[1] * inner[1], mult[2] * inner[2])
        if nonzero_last:
            hit = _force_nonzero_last(c1, c2, c3, hit)
    if c1 * hit[0] ** 2 + c2 * hit[1] ** 2 + c3 * hit[2] ** 2 != 0:
        raise InternalInvariant("conic point failed final verification")
    return ConicSolution(*hit)


def solve_system(d1: int, d2: int, d3: int, a: int, *,
                 shells: int = _PRESEARCH_SHELLS) -> tuple[ConicSolution, ConicSolution, ConicSolution]:
    """Points on the three coupled conics of the quaternion construction:

        d1*x1^2 - d2*x2^2 = -a*d3*x3^2
        y1^2   - d1*y2^2  =  a*y3^2
        z1^2   - d2*z2^2  = -a*z3^2

    The last coordinate of each point is automatically nonzero because the
    parts are distinct nontrivial fundamental discriminants.
    """
    sol1 = solve_conic(d1, -d2, a * d3, shells=shells)
    sol2 = solve_conic(1, -d1, -a, shells=shells)
    sol3 = solve_conic(1, -d2, a, shells=shells)
    for sol, label in ((sol1, "first"), (sol2, "second"), (sol3, "third")):
        if sol.z == 0:
            raise InternalInvariant(f"{label} system point has zero last coordinate")
    return sol1, sol2, sol3


def parameter_candidates() -> Iterator[int]:
    """1, then the odd primes in ascending order."""
    yield 1
    n = 3
    while True:
        for f in range(3, isqrt(n) + 1, 2):
            if n % f == 0:
                break
        else:
            yield n
        n += 2


def parameter_conditions(a: int, d1: int, d2: int) -> bool:
    """Whether the odd positive parameter a fits the pair (d1, d2):
    both parts are squares at a, every prime discriminant of d1 is a
    square at a, and each prime discriminant q of d2 lands on sign(q)."""
    from .symbols import factor_discriminant

    if a <= 0 or a % 2 == 0:
        return False
    if kronecker(d1, a) != 1 or kronecker(d2, a) != 1:
        return False
    for q in factor_discriminant(d1).parts:
        if kronecker(q, a) != 1:
            return False
    for q in factor_discriminant(d2).parts:
        if kronecker(q, a) != (1 if q > 0 else -1):
            return False
    return True


def find_parameter_a(d1: int, d2: int, *, max_a: int = 100000,
                     exclude: frozenset[int] | set[int] = frozenset()) -> int:
    for a in parameter_candidates():
        if a > max_a:
            break
        if a in exclude:
            continue
        if parameter_conditions(a, d1, d2):
            return a
    raise SearchExhausted(f"no parameter up to {max_a} fits ({d1}, {d2})")
