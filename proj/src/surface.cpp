#include "ballq/surface.hpp"

#include <stdexcept>

namespace ballq {

SurfaceInvariants SurfaceInvariants::smooth(Rational c1_sq, Rational c2, long q, long p_g) {
    const Rational chi = Rational(1 - q + p_g);
    if (Rational(12) * chi != c1_sq + c2) {
        throw std::domain_error("Noether identity fails: 12*" + chi.str() + " != " + c1_sq.str() +
                                " + " + c2.str());
    }
    return SurfaceInvariants{std::move(c1_sq), std::move(c2), chi, q, p_g};
}

SurfaceInvariants ball_quotient_invariants(long c2, long q) {
    if (c2 <= 0) throw std::domain_error("c2 must be positive");
    if (c2 % 3 != 0) {
        throw std::domain_error("c2 = " + std::to_string(c2) +
                                " is not a multiple of 3, impossible for a ball quotient");
    }
    const Rational c1_sq = Rational(3 * c2);
    const Rational chi = (c1_sq + Rational(c2)) / Rational(12);
    if (!chi.is_integer()) throw std::domain_error("non-integral chi(O) = " + chi.str());
    const long p_g = chi.to_long() - 1 + q;
    if (p_g < 0) throw std::domain_error("irregularity too large for chi(O) = " + chi.str());
    return SurfaceInvariants::smooth(c1_sq, Rational(c2), q, p_g);
}

Rational riemann_roch_chi(const SurfaceInvariants& surf, const DivisorClass& d, const DivisorClass& k) {
    return surf.chi_O + pair(d, d - k) / Rational(2);
}

Rational arithmetic_genus(const DivisorClass& d, const DivisorClass& k) {
    return Rational(1) + pair(d, k + d) / Rational(2);
}

Integer monomial_section_bound(long h0, long power) {
    if (h0 < 1 || power < 1) throw std::invalid_argument("monomial_section_bound: arguments must be positive");
    return binomial(static_cast<unsigned long>(h0 + power - 1), static_cast<unsigned long>(power));
}

Rational restriction_degree(const DivisorClass& d, const DivisorClass& b, long point_degree) {
    return pair(d, b) + Rational(point_degree);
}

long TorsionClass::reduced_multiple() const {
    if (!order) return multiple;
    const long r = multiple % *order;
    return r < 0 ? r + *order : r;
}

bool operator==(const TorsionClass& a, const TorsionClass& b) {
    return a.label == b.label && a.order == b.order && a.reduced_multiple() == b.reduced_multiple();
}

PolarizedDivisor::PolarizedDivisor(DivisorClass d, std::optional<TorsionClass> t)
    : numerical(std::move(d)), torsion(std::move(t)) {
    if (torsion && torsion->order && *torsion->order <= 0) {
        throw std::invalid_argument("torsion order must be positive");
    }
}

PolarizedDivisor operator+(const PolarizedDivisor& a, const PolarizedDivisor& b) {
    std::optional<TorsionClass> t;
    if (a.torsion && b.torsion) {
        if (a.torsion->label != b.torsion->label || a.torsion->order != b.torsion->order) {
            throw std::invalid_argument("cannot add torsion classes '" + a.torsion->label + "' and '" +
                                        b.torsion->label + "'");
        }
        t = TorsionClass{a.torsion->label, a.torsion->order, a.torsion->multiple + b.torsion->multiple};
        t->multiple = t->reduced_multiple();
    } else {
        t = a.torsion ? a.torsion : b.torsion;
    }
    return PolarizedDivisor(a.numerical + b.numerical, std::move(t));
}

bool PolarizedDivisor::same_line_bundle(const PolarizedDivisor& o) const {
    if (!(numerical == o.numerical)) return false;
    const bool trivial_a = !torsion || torsion->is_trivial();
    const bool trivial_b = !o.torsion || o.torsion->is_trivial();
    if (trivial_a || trivial_b) return trivial_a && trivial_b;
    return *torsion == *o.torsion;
}

Rational pair(const PolarizedDivisor& u, const PolarizedDivisor& v) {
    return pair(u.numerical, v.numerical);
}

Rational riemann_roch_chi(const SurfaceInvariants& surf, const PolarizedDivisor& d, const DivisorClass& k) {
    return riemann_roch_chi(surf, d.numerical, k);
}

SectionCount h0_assuming_vanishing(const SurfaceInvariants& surf, const DivisorClass& d,
                                   const DivisorClass& k, Axiom vanishing) {
    Rational chi = riemann_roch_chi(surf, d, k);
    return SectionCount{chi, chi, std::move(vanishing)};
}

}  // namespace ballq
