#pragma once

/**
 * @file surface.hpp
 * @brief Surface invariant arithmetic: Noether, Riemann-Roch, adjunction,
 *        restriction degrees and torsion bookkeeping.
 *
 * Nothing here proves a vanishing theorem. Section counts are obtained from
 * Euler characteristics only through h0_assuming_vanishing(), which takes the
 * assumed axiom explicitly so that it shows up in reports.
 */

#include "ballq/lattice.hpp"

#include <optional>
#include <string>

namespace ballq {

struct SurfaceInvariants {
    Rational c1_sq;
    Rational c2;
    Rational chi_O;
    long q = 0;
    long p_g = 0;

    /// Smooth surface: enforces 12*chi = c1^2 + c2 and chi = 1 - q + p_g.
    static SurfaceInvariants smooth(Rational c1_sq, Rational c2, long q, long p_g);
};

/// Invariants of a smooth compact ball quotient with Euler number c2.
/// c1^2 = 3 c2 and chi = (c1^2 + c2)/12; throws std::domain_error unless
/// c2 is a positive multiple of 3. Irregularity and geometric genus are
/// not determined by c2 alone; q is taken as given and p_g = chi - 1 + q.
SurfaceInvariants ball_quotient_invariants(long c2, long q = 0);

/// chi(D) = chi(O) + D.(D - K)/2.
Rational riemann_roch_chi(const SurfaceInvariants& surf, const DivisorClass& d, const DivisorClass& k);

/// p_a(D) = 1 + D.(K + D)/2. Non-integral output certifies that D is not
/// the class of a curve.
Rational arithmetic_genus(const DivisorClass& d, const DivisorClass& k);

/// Number of degree-`power` monomials in `h0` independent sections; each has a
/// distinct vanishing order along the first section's divisor, hence a lower
/// bound for h0 of the power.
Integer monomial_section_bound(long h0, long power);

/// deg(D|_B) = D.B plus the degree of formal point classes on B.
Rational restriction_degree(const DivisorClass& d, const DivisorClass& b, long point_degree = 0);

/// A cited theorem that the library assumes rather than proves.
struct Axiom {
    std::string key;
    std::string citation;
};

/// Numerically trivial line bundle tau^multiple, tau of the given order.
struct TorsionClass {
    std::string label;
    std::optional<long> order;  // nullopt: order unknown
    long multiple = 1;

    /// multiple reduced modulo the order when known.
    long reduced_multiple() const;
    bool is_trivial() const { return reduced_multiple() == 0; }

    friend bool operator==(const TorsionClass& a, const TorsionClass& b);
};

/// Numerical class plus an optional torsion twist. All numeric operations
/// see only the numerical part.
struct PolarizedDivisor {
    DivisorClass numerical;
    std::optional<TorsionClass> torsion;

    explicit PolarizedDivisor(DivisorClass d, std::optional<TorsionClass> t = std::nullopt);

    /// Sum of line bundles. Torsion twists with different labels are not
    /// combined (throws std::invalid_argument).
    friend PolarizedDivisor operator+(const PolarizedDivisor& a, const PolarizedDivisor& b);

    /// Same numerical class and same torsion element.
    bool same_line_bundle(const PolarizedDivisor& o) const;
};

Rational pair(const PolarizedDivisor& u, const PolarizedDivisor& v);
Rational riemann_roch_chi(const SurfaceInvariants& surf, const PolarizedDivisor& d, const DivisorClass& k);

struct SectionCount {
    Rational h0;
    Rational chi;
    Axiom assumed;
};

/// h0(D) = chi(D), valid when h1 = h2 = 0 by the supplied vanishing axiom.
SectionCount h0_assuming_vanishing(const SurfaceInvariants& surf, const DivisorClass& d,
                                   const DivisorClass& k, Axiom vanishing);

}  // namespace ballq
