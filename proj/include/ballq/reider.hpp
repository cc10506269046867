#pragma once

/**
 * @file reider.hpp
 * @brief Numerical case analysis for a Bogomolov-unstable rank-2 extension
 *        0 -> O -> E -> I_Z (x) K -> 0.
 *
 * With c1(E) = K and c2(E) = deg Z, instability yields L + B = K together
 * with integers d1 = K.L, d2 = K.B, delta = L.B and deg W. The enumeration
 * here walks every integer tuple allowed by the resulting constraints and
 * classifies what survives.
 */

#include "ballq/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ballq {

struct ExtensionData {
    Rational c1_sq;  // K^2
    long c2 = 0;     // deg Z
};

/// c1^2 - 4 c2 >= 1.
bool bogomolov_unstable(const ExtensionData& ext);

/// d1*d2 - delta*(d1 + d2); the Hodge index theorem forces this <= 0.
Rational hodge_delta(long d1, long d2, long delta);

enum class ReiderCase { CaseI, CaseII, Rejected };

struct ReiderCandidate {
    long d1 = 0;
    long d2 = 0;
    long delta = 0;
    long deg_W = 0;
    Rational B_sq;  // d2 - delta
    Rational p_a;   // 1 + (K.B + B.B)/2
    ReiderCase tag = ReiderCase::Rejected;
    std::string reason;  // rejection reason; empty for survivors

    friend bool operator==(const ReiderCandidate&, const ReiderCandidate&) = default;
};

/// Predicate deciding whether a curve of the given arithmetic genus can
/// exist. The default for ball quotients rejects p_a <= 1.
using CurveGenusFilter = std::function<bool(const Rational& p_a)>;

CurveGenusFilter hyperbolic_filter();
CurveGenusFilter no_genus_filter();

/// Every tuple with d1 + d2 = K^2, d1 > d2 > 0, delta > 0, deg W >= 0,
/// delta + deg W = deg Z and (L - B)^2 > 4 deg W, including rejected ones,
/// ordered by d2 then delta.
std::vector<ReiderCandidate> enumerate_candidates(long k_sq, long deg_z,
                                                  const CurveGenusFilter& genus_ok = hyperbolic_filter());

/// Survivors only (tags CaseI / CaseII). Empty output means the numerical
/// analysis leaves no destabilizing curve, i.e. 2K separates Z.
std::vector<ReiderCandidate> enumerate_destabilizations(long k_sq, long deg_z,
                                                        const CurveGenusFilter& genus_ok = hyperbolic_filter());

std::string to_string(ReiderCase c);
std::string to_string(const ReiderCandidate& c);

}  // namespace ballq
