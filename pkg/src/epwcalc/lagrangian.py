"""Lagrangian-submanifold calculus on a polarized K3^[3]-type sixfold:
projection of the class of a Lagrangian threefold to the span of h^3 and
h*c2, its self-intersection, the choice between the two involution actions
through Euler characteristics, and the Chern / Riemann-Roch invariants of
the fixed locus of the EPW-cube involution.

A Lagrangian class pairs to zero against h*sigma*sigbar (sigma the
symplectic form), which together with the normalization h^3 . [W] = degree
pins its projection to  a*h^3 + b*h*c2  with b = -degree/(72 q^2) and
a = -12 b / q.  Whatever eta component c the full class carries enters
only through eta^2 = 4, so [W]^2 = (a h^3 + b h c2)^2 + 4 c^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .hodge_ring import basis_class, eta_class, h_power, integrate, multiply
from .llv import CASES, euler_of_fixed_locus
from .qfield import Rational, rational_sqrt

#: h^3-degree of the fixed locus inside an EPW cube, and the BBF square of h
EPW_DEGREE = Fraction(720)
EPW_Q = Fraction(4)


def project_lagrangian_class(degree: Rational, q: Rational) -> tuple[Fraction, Fraction]:
    """Coefficients (a, b) of the projection a*h^3 + b*h*c2 of a Lagrangian
    class with h^3 . [W] = degree, at BBF square q(h) = q > 0."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("the BBF square of a polarization must be positive")
    b = -Fraction(degree) / (72 * q ** 2)
    a = -12 * b / q
    return a, b


def _degree6_class(a: Rational, b: Rational, c: Rational):
    cls = Fraction(a) * h_power(3) + Fraction(b) * basis_class(6, "h*c2")
    if c:
        cls = cls + Fraction(c) * eta_class()
    return cls


def self_intersection(a: Rational, b: Rational, c: Rational, q: Rational) -> Fraction:
    """(a*h^3 + b*h*c2 + c*eta)^2 integrated over the sixfold at q."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("the BBF square of a polarization must be positive")
    cls = _degree6_class(a, b, c)
    return integrate(multiply(cls, cls)).evaluate(q)


def eta_coefficient(base_square: Rational, chi_top: Rational) -> Fraction | None:
    """The nonnegative rational c with base_square + 4c^2 = -chi_top, or
    None when no rational c exists.

    The square of the fixed locus' class equals minus its topological Euler
    characteristic, which forces 4c^2 = -chi_top - base_square to be the
    square of a rational (times 4)."""
    c_sq = (-Fraction(chi_top) - Fraction(base_square)) / 4
    if c_sq < 0:
        return None
    return rational_sqrt(c_sq)


def disambiguate_involution_case(degree: Rational = EPW_DEGREE,
                                 q: Rational = EPW_Q) -> tuple[str, Fraction, int]:
    """Pick the involution action whose fixed-locus Euler characteristic is
    compatible with a rational eta coefficient.

    Returns (case, eta coefficient, chi_top).  Raises when neither or both
    cases are admissible."""
    a, b = project_lagrangian_class(degree, q)
    base = self_intersection(a, b, 0, q)
    admissible = []
    for case in CASES:
        chi = euler_of_fixed_locus(case)
        c = eta_coefficient(base, chi)
        if c is not None:
            admissible.append((case, c, chi))
    if not admissible:
        raise ValueError("no involution case admits a rational eta coefficient")
    if len(admissible) > 1:
        raise ValueError("ambiguous: both involution cases admit a rational eta coefficient")
    return admissible[0]


@dataclass(frozen=True)
class FixedLocusInvariants:
    """Chern and Riemann-Roch numbers of the fixed threefold."""

    c1c2: Fraction
    chi_structure: Fraction      # chi(O)
    chi_one_forms: Fraction      # chi(Omega^1)
    c3: Fraction                 # = topological Euler characteristic
    canonical_cube: Fraction     # K^3

    def as_tuple(self):
        return (self.c1c2, self.chi_structure, self.chi_one_forms, self.c3,
                self.canonical_cube)


def fixed_locus_invariants(degree: Rational = EPW_DEGREE, q: Rational = EPW_Q,
                           chi_top: Rational | None = None) -> FixedLocusInvariants:
    """Invariants of the fixed locus from its class a*h^3 + b*h*c2.

    The restricted tangent Chern classes are c1 = -2h|, c2 = c2|/2 + 2h^2|,
    c3 = chi_top, which turns every invariant into a pairing against the
    class itself: c1*c2 is -(4*h^3 + h*c2) . [W], chi(O) = c1*c2/24,
    chi(Omega^1) = chi(O) - chi_top/2, and K^3 = -(-2h)^3 . [W] = 8*degree.
    """
    if chi_top is None:
        _, _, chi_top = disambiguate_involution_case(degree, q)
    q = Fraction(q)
    a, b = project_lagrangian_class(degree, q)
    w = _degree6_class(a, b, 0)
    pair_with = 4 * h_power(3) + basis_class(6, "h*c2")
    c1c2 = -integrate(multiply(pair_with, w)).evaluate(q)
    chi_structure = c1c2 / 24
    chi_one_forms = chi_structure - Fraction(chi_top) / 2
    k_cubed = 8 * integrate(multiply(h_power(3), w)).evaluate(q)
    return FixedLocusInvariants(c1c2, chi_structure, chi_one_forms,
                                Fraction(chi_top), k_cubed)


def hodge_symmetry_relation(chi_structure: Rational, chi_one_forms: Rational,
                            chi_top: Rational) -> bool:
    """Check chi_top/2 = chi(O) - chi(Omega^1), the Euler-characteristic
    shadow of Hodge symmetry on a threefold."""
    return Fraction(chi_top) / 2 == Fraction(chi_structure) - Fraction(chi_one_forms)
