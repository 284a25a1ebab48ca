"""Build and certify the quaternion-type generator for a split discriminant.

Pipeline: assign the two construction roles among the three parts, find
the auxiliary odd parameter, solve the three coupled conics, multiply the
three partial generators, scale to a primitive algebraic integer, twist
until congruent to a square mod 4, fix signs at infinity when possible,
and finally certify the Galois structure by exact square-root extractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .conic import (ConicSolution, find_parameter_a, parameter_conditions,
                    solve_system)
from .errors import (FactorizationRejected, InternalInvariant,
                     InvalidParameter, NonIntegral, NonNormal)
from .factorizations import check_h8_split, enumerate_h8
from .field import (BiquadElement, GaloisAction, element, embedding_signs,
                    from_integral_coords, is_square, is_totally_positive,
                    rational_element)
from .infinity import InfinityVerdict, infinity_verdict
from .symbols import disc_sort_key, factor_discriminant

__all__ = [
    "GaloisClass",
    "MuGenerator",
    "AlphaRoot",
    "SVector",
    "ExtensionCertificate",
    "assign_roles",
    "normalize_roles",
    "build_mu",
    "two_primary_oracle",
    "two_primary_normalize",
    "compute_alpha",
    "certify_generator",
    "classify",
    "check_norm_relations",
    "resolve_infinity",
    "divisor_twists",
    "k_square_class_equal",
    "same_extension",
    "construct_h8",
]


class GaloisClass(Enum):
    QUATERNION = "H8"
    DIHEDRAL = "D4"
    MIXED = "(2,4)"
    ELEMENTARY = "(2,2,2)"


@dataclass(frozen=True)
class MuGenerator:
    """The raw product generator and its primitive integral scaling."""

    d1: int
    d2: int
    d3: int
    a: int
    sol1: ConicSolution
    sol2: ConicSolution
    sol3: ConicSolution
    beta: BiquadElement
    gamma: BiquadElement
    delta: BiquadElement
    mu_raw: BiquadElement
    scaling: int
    mu: BiquadElement


@dataclass(frozen=True)
class AlphaRoot:
    """Certificate datum for one lift of a base automorphism."""

    label: str
    action: GaloisAction      # restriction to the biquadratic field
    epsilon: int              # sign on the third square root
    exponent: int             # 0: mu^(1-g) is a square; 1: d3 times a square
    h: BiquadElement          # the extracted square root
    sign: int                 # +1: the lift squares to 1; -1: order four


@dataclass(frozen=True)
class SVector:
    psi1: int
    psi2: int
    psi3: int
    rho: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.psi1, self.psi2, self.psi3)


@dataclass(frozen=True)
class ExtensionCertificate:
    d: int
    parts: tuple[int, int, int]
    generator: MuGenerator
    twist: str
    mu_normalized: BiquadElement
    infinity_twist: int | None
    mu: BiquadElement
    two_primary: bool
    svector: SVector
    galois_class: GaloisClass
    alphas: tuple[AlphaRoot, ...]
    norm_relations: tuple[tuple[str, str], ...]
    infinity: InfinityVerdict
    totally_positive: bool | None

    @property
    def roles(self) -> tuple[int, int, int]:
        g = self.generator
        return (g.d1, g.d2, g.d3)


def assign_roles(parts: tuple[int, int, int]) -> tuple[int, int, int]:
    """Order the three parts as (d1, d2, d3) for the construction.

    d2 must be positive and d1*d2 must avoid 5 (mod 8), or no twist of the
    product generator is congruent to a square mod 4.  An even part pairs
    with the smallest positive odd part; otherwise the first pair in
    canonical order with product = 1 (mod 8) works, and such a pair always
    exists because an even number of the three pairwise products are
    = 5 (mod 8).
    """
    ordered = sorted(parts, key=disc_sort_key)
    even = [p for p in ordered if p % 2 == 0]
    pair: tuple[int, int] | None = None
    if even:
        partner = min(p for p in ordered if p % 2 != 0 and p > 0)
        pair = (even[0], partner)
    else:
        for i in range(3):
            for j in range(i + 1, 3):
                if (ordered[i] * ordered[j]) % 8 == 1:
                    pair = (ordered[i], ordered[j])
                    break
            if pair:
                break
        if pair is None:
            raise InternalInvariant(f"no admissible role pair among {parts}")
    d1, d2 = sorted(pair, key=disc_sort_key)
    (d3,) = (p for p in ordered if p != d1 and p != d2)
    if d2 < 0:
        raise InternalInvariant(f"role d2 = {d2} came out negative")
    return (d1, d2, d3)


def normalize_roles(d: int, d1: int, d2: int, d3: int) -> tuple[int, int, int]:
    """Validate and canonicalize a caller-forced role assignment."""
    check_h8_split(d, (d1, d2, d3))
    if d2 < 0:
        d1, d2 = d2, d1
    if (d1 * d2) % 8 == 5:
        raise InvalidParameter(
            f"pair ({d1}, {d2}) has product = 5 (mod 8); no twist of the "
            "generator is congruent to a square mod 4 for this role choice")
    return (d1, d2, d3)


def build_mu(d1: int, d2: int, d3: int, a: int, *, shells: int = 16) -> MuGenerator:
    sol1, sol2, sol3 = solve_system(d1, d2, d3, a, shells=shells)
    beta = element(d1, d2, 0, sol1.x, sol1.y, 0)
    gamma = element(d1, d2, sol2.x, sol2.y, 0, 0)
    delta = element(d1, d2, sol3.x, 0, sol3.y, 0)
    mu_raw = beta * gamma * delta
    v = mu_raw.integral_coordinates()
    if any(c.denominator != 1 for c in v):
        raise InternalInvariant("raw generator is not an algebraic integer")
    scaling = gcd(gcd(int(v[0]), int(v[1])), gcd(int(v[2]), int(v[3])))
    if scaling == 0:
        raise InternalInvariant("raw generator vanished")
    mu = mu_raw / scaling
    if not mu.is_integral():
        raise InternalInvariant("scaled generator left the maximal order")
    return MuGenerator(d1=d1, d2=d2, d3=d3, a=a, sol1=sol1, sol2=sol2,
                       sol3=sol3, beta=beta, gamma=gamma, delta=delta,
                       mu_raw=mu_raw, scaling=scaling, mu=mu)


def two_primary_oracle(x: BiquadElement) -> bool:
    """Whether x is congruent to a square modulo 4 in the maximal order."""
    if not x.is_integral():
        raise NonIntegral(f"{x} is not integral")
    m, n = x.m, x.n
    for mask in range(16):
        xi = from_integral_coords(m, n, ((mask >> 0) & 1, (mask >> 1) & 1,
                                         (mask >> 2) & 1, (mask >> 3) & 1))
        v = (x - xi * xi).integral_coordinates()
        if all(c.denominator == 1 and int(c) % 4 == 0 for c in v):
            return True
    return False


def two_primary_normalize(mu: BiquadElement, d1: int, d2: int) -> tuple[BiquadElement, str]:
    """Pick the twist of mu that is congruent to a square mod 4.

    The candidate set depends on d1*d2 mod 8; among passing candidates a
    totally positive one is preferred when the field is real.
    """
    pcon = (d1 * d2) % 8
    if pcon in (0, 1):
        primary = [("none", mu), ("negate", -mu)]
        fallback = [("double", 2 * mu), ("negate-double", -2 * mu)]
    elif pcon == 4:
        primary = [("none", mu), ("double", 2 * mu)]
        fallback = [("negate", -mu), ("negate-double", -2 * mu)]
    else:
        raise InternalInvariant(f"role pair product {d1 * d2} = 5 (mod 8) slipped through")
    # the fallback doublings only matter for role assignments that park the
    # even part in d3, where multiplying by 2 flips valuation parity above 2
    for candidates in (primary, fallback):
        passing = [(label, c) for label, c in candidates if two_primary_oracle(c)]
        if not passing:
            continue
        if d1 > 0 and d2 > 0:
            positive = [(label, c) for label, c in passing if is_totally_positive(c)]
            if positive:
                label, c = positive[0]
                return (c, label)
        label, c = passing[0]
        return (c, label)
    raise InternalInvariant("no candidate twist is congruent to a square mod 4")


_LIFTS = (
    ("psi1", GaloisAction.SIGMA, -1),
    ("psi2", GaloisAction.TAU, -1),
    ("psi3", GaloisAction.SIGMA_TAU, 1),
    ("rho", GaloisAction.SIGMA_TAU, -1),
)


def compute_alpha(mu: BiquadElement, label: str, action: GaloisAction,
                  epsilon: int, d3: int | None) -> AlphaRoot:
    """Extract the square root certifying that `action` lifts, plus the
    +-1 telling whether the lift has order four."""
    w = mu * mu.apply(action).inv()
    h = is_square(w)
    exponent = 0
    if h is None and d3 is not None:
        h = is_square(w / d3)
        exponent = 1
    if h is None:
        raise NonNormal(f"{label}: conjugate generator is in a different square class",
                        action=label)
    hh = (h * h.apply(action)).rational_value()
    sign = hh if exponent == 0 else epsilon * d3 * hh
    if sign not in (1, -1):
        raise InternalInvariant(f"lift sign {sign} is not a unit")
    return AlphaRoot(label=label, action=action, epsilon=epsilon,
                     exponent=exponent, h=h, sign=int(sign))


def certify_generator(mu: BiquadElement, d3: int | None) -> tuple[SVector, tuple[AlphaRoot, ...]]:
    alphas = tuple(compute_alpha(mu, label, action, eps, d3)
                   for label, action, eps in _LIFTS)
    svector = SVector(psi1=alphas[0].sign, psi2=alphas[1].sign,
                      psi3=alphas[2].sign, rho=alphas[3].sign)
    return svector, alphas


def classify(signs: tuple[int, int, int]) -> GaloisClass:
    """Galois type of the certified octic field from the three lift signs."""
    key = tuple(sorted(signs))
    table = {
        (-1, -1, -1): GaloisClass.QUATERNION,
        (-1, -1, 1): GaloisClass.MIXED,
        (-1, 1, 1): GaloisClass.DIHEDRAL,
        (1, 1, 1): GaloisClass.ELEMENTARY,
    }
    try:
        return table[key]
    except KeyError:
        raise InternalInvariant(f"impossible sign vector {signs}") from None


def check_norm_relations(mu: BiquadElement, d3: int) -> tuple[tuple[str, str], ...]:
    """Verify the square classes of mu times each conjugate.

    For the pipeline's generator: the two lifts that flip exactly one of
    the base square roots land on d3 times a square, and the double flip
    (hence also its second lift) lands on a square.
    """
    d3_elem = rational_element(mu.m, mu.n, d3)
    expected = (
        ("psi1", GaloisAction.SIGMA, d3_elem, str(d3)),
        ("psi2", GaloisAction.TAU, d3_elem, str(d3)),
        ("psi3", GaloisAction.SIGMA_TAU, None, "1"),
        ("rho", GaloisAction.SIGMA_TAU, None, "1"),
    )
    out = []
    for label, action, target, shown in expected:
        w = mu * mu.apply(action)
        if target is not None:
            w = w * target
        if is_square(w) is None:
            raise InternalInvariant(f"norm relation {label} violated")
        out.append((label, shown))
    return tuple(out)


def resolve_infinity(mu: BiquadElement, d1: int, d2: int,
                     d3: int) -> tuple[BiquadElement, int | None, bool | None]:
    """Fix the signs at the real places when the discriminant is positive.

    A totally negative generator flips to totally positive by scaling
    with -q for the smallest prime q = 3 (mod 4) dividing d; that scalar
    is 1 mod 4, so congruence to a square mod 4 survives.
    """
    d = d1 * d2 * d3
    if d < 0:
        return (mu, None, None)
    signs = embedding_signs(mu)
    if all(s < 0 for s in signs):
        from ._intmath import prime_factors

        for q in prime_factors(d):
            if q % 4 == 3:
                twisted = mu * (-q)
                if not is_totally_positive(twisted):
                    raise InternalInvariant("rational twist failed to flip all signs")
                return (twisted, -q, True)
        return (mu, None, False)
    return (mu, None, all(s > 0 for s in signs))


def divisor_twists(d: int) -> list[int]:
    """All products of subsets of the prime discriminants of d."""
    parts = factor_discriminant(d).parts
    out = [1]
    for p in parts:
        out += [v * p for v in out]
    return out


def k_square_class_equal(w: BiquadElement, d3: int) -> bool:
    """Whether w (nonzero, in the biquadratic field) becomes a square after
    adjoining the square root of d3."""
    if w.is_zero():
        raise ValueError("square classes are defined for nonzero elements")
    if is_square(w) is not None:
        return True
    return is_square(w * d3) is not None


def same_extension(mu1: BiquadElement, mu2: BiquadElement, d3: int,
                   twists: list[int]) -> int | None:
    """The twist identifying the two generators' octic fields, or None.

    mu2 generates the same extension as delta*mu1 exactly when
    mu1*mu2*delta is a square after adjoining sqrt(d3)."""
    for delta in twists:
        if k_square_class_equal(mu1 * mu2 * delta, d3):
            return delta
    return None


def construct_h8(d: int, *, forced_roles: tuple[int, int, int] | None = None,
                 forced_a: int | None = None, max_a: int = 100000,
                 shells: int = 16) -> ExtensionCertificate:
    """End-to-end construction and certification for the discriminant d."""
    if forced_roles is not None:
        d1, d2, d3 = normalize_roles(d, *forced_roles)
    else:
        splits = enumerate_h8(d)
        if not splits:
            raise FactorizationRejected(f"{d} admits no quaternion-type splitting")
        d1, d2, d3 = assign_roles(splits[0].parts)
    parts = tuple(sorted((d1, d2, d3), key=disc_sort_key))

    if forced_a is not None:
        if not parameter_conditions(forced_a, d1, d2):
            raise InvalidParameter(f"parameter {forced_a} fails the symbol conditions "
                                   f"for roles ({d1}, {d2})")
        a = forced_a
    else:
        a = find_parameter_a(d1, d2, max_a=max_a)

    gen = build_mu(d1, d2, d3, a, shells=shells)
    try:
        mu_norm, twist = two_primary_normalize(gen.mu, d1, d2)
    except InternalInvariant:
        if forced_roles is None:
            raise
        # a caller-forced assignment can park the even part in d3 where no
        # rational twist repairs the valuations above 2; that is bad input
        raise InvalidParameter(
            f"role assignment ({d1}, {d2}, {d3}) admits no generator congruent "
            "to a square mod 4; let the builder assign roles instead") from None
    mu_final, inf_twist, totally_positive = resolve_infinity(mu_norm, d1, d2, d3)
    if not two_primary_oracle(mu_final):
        raise InternalInvariant("final generator lost congruence to a square mod 4")

    svector, alphas = certify_generator(mu_final, d3)
    galois_class = classify(svector.as_tuple())
    if galois_class is not GaloisClass.QUATERNION:
        raise InternalInvariant(f"constructed class {galois_class.value}, not the quaternion one")
    if svector.rho != -1:
        raise InternalInvariant("second lift of the double flip is not of order four")
    relations = check_norm_relations(mu_final, d3)
    verdict = infinity_verdict(d1, d2, d3)

    return ExtensionCertificate(
        d=d, parts=parts, generator=gen, twist=twist, mu_normalized=mu_norm,
        infinity_twist=inf_twist, mu=mu_final, two_primary=True,
        svector=svector, galois_class=galois_class, alphas=alphas,
        norm_relations=relations, infinity=verdict,
        totally_positive=totally_positive,
    )
