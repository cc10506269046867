#pragma once

/**
 * @file cs_albanese.hpp
 * @brief Intersection lattice of the Cartwright-Steger surface and the
 *        elimination of a genus-2 curve B with B.B = 0, K.B = 2.
 *
 * The 5x5 intersection matrix of (E1, E2, E3, C1, C2) is measured input and
 * is embedded verbatim. E3 is numerically K and E1 + E2 is numerically 2K.
 * B is written B = aK + b(E1 - E2) + cD in the orthogonal basis
 * {K, E1 - E2, D = C1 - K + (E1 - E2)/4}, and n = F.B where F is the
 * Albanese fibre class.
 */

#include "ballq/lattice.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ballq::cs {

/// FNV-1a over the canonical text of the embedded Gram matrix.
std::uint64_t gram_checksum(const RationalMatrix& gram);

/// Checksum of the embedded matrix, fixed at data entry.
inline constexpr std::uint64_t kGramChecksum = 0xefffec208fd87ddfULL;

struct CsLattice {
    IntersectionLattice lattice;
    DivisorClass K;
    DivisorClass E1_minus_E2;
    DivisorClass D;
    DivisorClass F;                 // -E1 + 5 E2
    DivisorClass F_from_basis;      // 4K - 3(E1 - E2)
    std::array<Rational, 3> norms;  // K.K, (E1-E2)^2, D.D
};

/// Builds and validates the lattice; throws std::logic_error when an
/// embedded-data invariant fails.
CsLattice build_cs_lattice();

/// Rewrites v using E1 = 2E3 - E2 (the numerical relation E1 + E2 == 2K).
DivisorClass eliminate_e1(const DivisorClass& v);

enum class BVerdict { IntegralityFail, Survives };

struct BCandidate {
    long n = 0;
    Rational a, b, c;
    Rational b_dot_c1;
    Rational b_dot_c2;
    BVerdict verdict = BVerdict::IntegralityFail;
    std::string surviving_curve;  // "C1" or "C2" when B.C = 0

    DivisorClass divisor(const CsLattice& cs) const;
};

/// Candidates with rational c: n in 0..16 with (16 - n) n a perfect square,
/// both signs of c when c != 0. Verdicts are filled in.
std::vector<BCandidate> solve_b_constraints(const CsLattice& cs);

/// Computes B.C1, B.C2 and sets the verdict.
BVerdict integrality_eliminate(const CsLattice& cs, BCandidate& cand);

/// Local branch counts of E1, E2, E3 at the Z3-fixed points O1, O2, O3.
struct BranchTable {
    std::array<std::array<long, 3>, 3> branches;  // [curve][point]
};

BranchTable cky_branch_table();

enum class OrbitConvention {
    FixedPointsOnly,  // every intersection point of B with an invariant curve is Z3-fixed
    FreeOrbits,       // free orbits of size 3 may contribute to B.(E1+E2)
};

std::string to_string(OrbitConvention c);

struct FixedPointConfiguration {
    std::vector<int> points;  // indices 0..2 of O1..O3 lying on B
    OrbitConvention convention = OrbitConvention::FixedPointsOnly;
    long e3_lower_bound = 0;
    long e12_lower_bound = 0;
    bool feasible = false;
    std::string reason;
};

struct CaseAReport {
    std::vector<FixedPointConfiguration> configurations;
    bool any_feasible = false;
    long forced_budget = 0;  // 2 * sum of E3 branches over O1, O2, O3
    long b_dot_2e3 = 0;
    std::vector<std::string> trace;
};

/// B invariant under the Z3 action: enumerates every nonempty set of fixed
/// points B could pass through, under both orbit conventions, and checks
/// the lower bounds against B.E3 = 2 and B.(E1 + E2) = 4.
CaseAReport case_a_fixed_point_check(const CsLattice& cs);

struct CaseBReport {
    Rational genus_2B;
    Rational genus_C;
    Rational two_b_dot_c;
    bool sections_in_same_bundle = false;  // s1^2 and s2 s3 both in 2B
    bool contradiction = false;
    std::vector<std::string> trace;
};

/// B moved by Z3 to B + tau: the pencil |2B| and the curve C with 2B.C = 0.
CaseBReport case_b_fibration_check(const CsLattice& cs, const BCandidate& survivor);

}  // namespace ballq::cs
