#pragma once

/**
 * @file hj.hpp
 * @brief Hirzebruch-Jung resolution arithmetic for cyclic quotient
 *        singularities 1/n(1,q).
 *
 * Conventions:
 *  - n/q = b1 - 1/(b2 - 1/(... - 1/br)), every bi >= 2, and the i-th
 *    exceptional curve has self-intersection -bi.
 *  - Discrepancy coefficients a_i are defined by  pi^*K_X = K_Xhat + sum a_i S_i,
 *    so they lie in [0, 1) and vanish exactly for du Val chains.
 *  - Proper transforms are written  pi^*C = Chat + sum a_i S_i.
 */

#include "ballq/lattice.hpp"

#include <span>
#include <string>
#include <vector>

namespace ballq {

struct CyclicSingularity {
    long n = 0;
    long q = 0;

    /// Throws std::invalid_argument unless n >= 2, 1 <= q < n, gcd(n, q) = 1.
    CyclicSingularity(long n, long q);

    std::string str() const;
};

/// Continued-fraction entries [b1, ..., br] of n/q.
std::vector<long> hj_expand(const CyclicSingularity& sing);

/// b1 - 1/(b2 - 1/(...)); inverse of hj_expand.
Rational hj_fraction(std::span<const long> entries);

enum class ChainOrientation { HjOrder, Reversed };

class ExceptionalChain {
public:
    /// Chain of rational curves with the given self-intersections (each <= -2).
    explicit ExceptionalChain(std::vector<long> self_intersections);

    static ExceptionalChain resolve(const CyclicSingularity& sing,
                                    ChainOrientation orientation = ChainOrientation::HjOrder);

    const std::vector<long>& self_intersections() const { return self_intersections_; }
    std::size_t length() const { return self_intersections_.size(); }

    /// Tridiagonal intersection matrix: diagonal = self-intersections, neighbours meet once.
    RationalMatrix gram() const;

    ExceptionalChain reversed() const;

    /// K_Xhat . S_j = -2 - S_j^2 for smooth rational curves.
    std::vector<Rational> canonical_degrees() const;

private:
    std::vector<long> self_intersections_;
};

/// Solves sum_i a_i S_i.S_j = -K.S_j for all j.
std::vector<Rational> discrepancies(const ExceptionalChain& chain);

/// a^T G a for the chain's discrepancy vector; the change in K^2 under
/// resolution. Always <= 0.
Rational canonical_correction(const ExceptionalChain& chain);

struct ResolutionInvariants {
    Rational K_hat_sq;
    Rational c2_hat;
};

/// K_hat^2 = K_X^2 + sum a^T G a, c2_hat = e(X) + sum chain lengths.
ResolutionInvariants resolution_invariants(const Rational& k_x_sq, const Rational& e_x,
                                           std::span<const CyclicSingularity> sings);

enum class TransformMode {
    Standard,     // total transform orthogonal to the chain: G a = -meets
    PerCurve,  // per-curve a_i = -(Chat.S_i)/(S_i.S_i) = meets_i / b_i
};

std::string to_string(TransformMode mode);

/// Coefficients a_i with pi^*C = Chat + sum a_i S_i, given the local
/// intersection multiplicities Chat.S_i.
std::vector<Rational> proper_transform_coeffs(const ExceptionalChain& chain, std::span<const Rational> meets,
                                              TransformMode mode = TransformMode::Standard);

/// Adjunction replay for an elliptic curve C = B/Z3 on the quotient of a
/// fake projective plane by an order-3 automorphism. B has B^2 = 1 and
/// K.B = 3; X = M/Z3 carries three 1/3(1,2) points and C passes through two
/// of them, meeting one end curve of each A2 chain transversally.
struct EllipticReplay {
    TransformMode mode = TransformMode::Standard;
    bool through_singular_points = true;

    Rational genus_B;         // from adjunction on M
    long genus_C = 0;         // from Riemann-Hurwitz
    long ramification_points = 0;
    Rational k_dot_c;         // K_X.C = K_M.B / 3
    Rational pullback_c_sq;   // pi^*C . pi^*C
    std::vector<std::vector<Rational>> coeffs;  // one vector per chain met
    Rational correction;      // (sum a_i E_i)^2
    Rational c_hat_sq;
    Rational two_g_minus_2;   // Chat.(K_Xhat + Chat)

    /// The adjunction value disagrees with 2(g(C) - 1).
    bool contradicts_genus() const { return two_g_minus_2 != Rational(2 * (genus_C - 1)); }

    std::vector<std::string> trace;
};

EllipticReplay replay_elliptic_adjunction(TransformMode mode, bool through_singular_points = true);

}  // namespace ballq
