"""Dihedral quartic generators from a two-part splitting.

For an admissible pair (d1, d2) the conic x^2 - d1*y^2 = d2*z^2 has a
point, and alpha = x + y*sqrt(d1), scaled primitive and twisted until
congruent to a square mod 4 in the biquadratic order, generates the
quadratic step whose closure over Q is dihedral of order eight.  The
lift-sign machinery is shared with the quaternion branch; here the
double flip must be the unique order-four coset.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .conic import ConicSolution, solve_conic
from .construct import GaloisClass, classify, compute_alpha, two_primary_oracle
from .errors import FactorizationRejected, InternalInvariant, NonIntegral
from .factorizations import check_d4_split, enumerate_d4
from .field import GaloisAction, element

__all__ = [
    "D4Certificate",
    "quad_integral_coords",
    "quad_two_primary_oracle",
    "d4_construct",
    "d4_verify",
]


@dataclass(frozen=True)
class D4Certificate:
    d: int
    d1: int
    d2: int
    d3: int
    solution: ConicSolution
    alpha_raw: tuple[int, int]
    scaling: int
    twist: str
    alpha: tuple[Fraction, Fraction]
    norm_root: Fraction
    two_primary: bool
    svector: tuple[int, int, int]
    cyclic_sign: int
    galois_class: GaloisClass
    degenerate: bool


def quad_integral_coords(c0: Fraction, c1: Fraction, d: int) -> tuple[Fraction, Fraction]:
    """Coordinates of c0 + c1*sqrt(d) over 1, (d + sqrt(d))/2."""
    v1 = 2 * c1
    v0 = c0 - d * c1
    return (v0, v1)


def quad_two_primary_oracle(c0: Fraction, c1: Fraction, d: int) -> bool:
    """Whether c0 + c1*sqrt(d) is a square mod 4 in the quadratic order."""
    v = quad_integral_coords(c0, c1, d)
    if any(x.denominator != 1 for x in v):
        raise NonIntegral(f"{c0} + {c1}*sqrt({d}) is not integral")
    w_sq = (Fraction(d * d + d, 4), Fraction(d, 2))          # ((d+sqrt d)/2)^2
    candidates = (
        (Fraction(0), Fraction(0)),
        (Fraction(1), Fraction(0)),
        w_sq,
        (1 + w_sq[0] + d, w_sq[1] + 1),                       # (1 + w)^2
    )
    for s0, s1 in candidates:
        u = quad_integral_coords(c0 - s0, c1 - s1, d)
        if all(x.denominator == 1 and int(x) % 4 == 0 for x in u):
            return True
    return False


def d4_construct(d: int, *, forced_pair: tuple[int, int] | None = None,
                 shells: int = 16) -> D4Certificate:
    """Construct and certify a dihedral generator for the discriminant d."""
    if forced_pair is not None:
        d1, d2 = forced_pair
        check_d4_split(d, d1, d2)
    else:
        pairs = enumerate_d4(d)
        if not pairs:
            raise FactorizationRejected(f"{d} admits no dihedral-type splitting")
        d1, d2 = pairs[0].d1, pairs[0].d2
    d3 = d // (d1 * d2)

    sol = solve_conic(1, -d1, -d2, shells=shells)
    if sol.y == 0 or sol.z == 0:
        raise InternalInvariant("degenerate conic point for a nonsquare part")
    if sol.x * sol.x - d1 * sol.y * sol.y != d2 * sol.z * sol.z:
        raise InternalInvariant("conic point fails the defining equation")

    c0, c1 = Fraction(sol.x), Fraction(sol.y)
    v = quad_integral_coords(c0, c1, d1)
    scaling = gcd(int(v[0]), int(v[1]))
    c0, c1 = c0 / scaling, c1 / scaling

    # The square-mod-4 test runs in the compositum's maximal order, where the
    # certified quadratic extension actually lives.  For even d2 the generator
    # has odd valuations above 2 in Q(sqrt(d1)) (its norm is d2*Z^2), so no
    # twist could pass there, but 2 ramifies further up and the valuations
    # double.
    final: tuple[Fraction, Fraction] | None = None
    twist = ""
    for label, f0, f1 in (("none", c0, c1), ("negate", -c0, -c1),
                          ("double", 2 * c0, 2 * c1), ("negate-double", -2 * c0, -2 * c1)):
        if two_primary_oracle(element(d1, d2, f0, f1, 0, 0)):
            final, twist = (f0, f1), label
            break
    if final is None:
        raise InternalInvariant("no twist of the dihedral generator is a square mod 4")

    norm = final[0] * final[0] - d1 * final[1] * final[1]
    ratio = norm / d2
    root = _frac_sqrt(ratio)
    if root is None:
        raise InternalInvariant("generator norm is not d2 times a rational square")

    alpha_emb = element(d1, d2, final[0], final[1], 0, 0)
    signs = tuple(
        compute_alpha(alpha_emb, label, action, 1, None).sign
        for label, action in (("sigma", GaloisAction.SIGMA),
                              ("tau", GaloisAction.TAU),
                              ("sigma_tau", GaloisAction.SIGMA_TAU))
    )
    galois_class = classify(signs)  # type: ignore[arg-type]
    if galois_class is not GaloisClass.DIHEDRAL or signs[2] != -1:
        raise InternalInvariant(f"dihedral certification failed: signs {signs}")

    return D4Certificate(
        d=d, d1=d1, d2=d2, d3=d3, solution=sol,
        alpha_raw=(sol.x, sol.y), scaling=scaling, twist=twist,
        alpha=final, norm_root=root, two_primary=True,
        svector=signs,  # type: ignore[arg-type]
        cyclic_sign=signs[2], galois_class=galois_class,
        degenerate=(d3 == 1),
    )


_TWIST_FACTORS = {"none": 1, "negate": -1, "double": 2, "negate-double": -2}


def d4_verify(cert: D4Certificate) -> bool:
    """Recheck every claim in a dihedral certificate from scratch."""
    try:
        check_d4_split(cert.d, cert.d1, cert.d2)
    except FactorizationRejected:
        return False
    if cert.d1 * cert.d2 * cert.d3 != cert.d or cert.degenerate != (cert.d3 == 1):
        return False

    sol = cert.solution
    if sol.y == 0 or sol.z == 0:
        return False
    if sol.x * sol.x - cert.d1 * sol.y * sol.y != cert.d2 * sol.z * sol.z:
        return False
    if cert.alpha_raw != (sol.x, sol.y):
        return False

    a0, a1 = cert.alpha
    norm = a0 * a0 - cert.d1 * a1 * a1
    if norm != cert.d2 * cert.norm_root * cert.norm_root:
        return False
    if not cert.two_primary:
        return False
    if not two_primary_oracle(element(cert.d1, cert.d2, a0, a1, 0, 0)):
        return False

    factor = _TWIST_FACTORS.get(cert.twist)
    if factor is None or cert.scaling <= 0:
        return False
    expected = (Fraction(factor * sol.x, cert.scaling),
                Fraction(factor * sol.y, cert.scaling))
    if cert.alpha != expected:
        return False

    alpha_emb = element(cert.d1, cert.d2, a0, a1, 0, 0)
    signs = tuple(
        compute_alpha(alpha_emb, label, action, 1, None).sign
        for label, action in (("sigma", GaloisAction.SIGMA),
                              ("tau", GaloisAction.TAU),
                              ("sigma_tau", GaloisAction.SIGMA_TAU))
    )
    if signs != cert.svector or cert.cyclic_sign != signs[2] or signs[2] != -1:
        return False
    return classify(signs) is GaloisClass.DIHEDRAL and cert.galois_class is GaloisClass.DIHEDRAL


def _frac_sqrt(f: Fraction) -> Fraction | None:
    from math import isqrt

    if f < 0:
        return None
    rn, rd = isqrt(f.numerator), isqrt(f.denominator)
    if rn * rn == f.numerator and rd * rd == f.denominator:
        return Fraction(rn, rd)
    return None
