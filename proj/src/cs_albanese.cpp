#include "ballq/cs_albanese.hpp"

#include "ballq/surface.hpp"

#include <stdexcept>

namespace ballq::cs {

namespace {

// Intersection numbers of E1, E2, E3, C1, C2.
RationalMatrix embedded_gram() {
    return RationalMatrix{
        {5, 13, 9, 11, 11},
        {13, 5, 9, 7, 7},
        {9, 9, 9, 9, 9},
        {11, 7, 9, -1, 17},
        {11, 7, 9, 17, -1},
    };
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("CS lattice invariant failed: " + what);
}

}  // namespace

std::uint64_t gram_checksum(const RationalMatrix& gram) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&h](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 0x100000001b3ULL;
        }
    };
    for (std::size_t i = 0; i < gram.rows(); ++i)
        for (std::size_t j = 0; j < gram.cols(); ++j) feed(gram(i, j).str() + ";");
    return h;
}

CsLattice build_cs_lattice() {
    const RationalMatrix gram = embedded_gram();
    require(gram_checksum(gram) == kGramChecksum, "Gram checksum");
    IntersectionLattice lat({"E1", "E2", "E3", "C1", "C2"}, gram);

    const DivisorClass E1 = lat.basis("E1");
    const DivisorClass E2 = lat.basis("E2");
    const DivisorClass E3 = lat.basis("E3");
    const DivisorClass C1 = lat.basis("C1");
    const DivisorClass K = E3;
    const DivisorClass diff = E1 - E2;
    const DivisorClass D = C1 - K + Rational(1, 4) * diff;
    const DivisorClass F = -E1 + Rational(5) * E2;
    const DivisorClass F2 = Rational(4) * K - Rational(3) * diff;

    require(numerically_equivalent(E1 + E2, Rational(2) * E3), "E1 + E2 == 2K");
    require(eliminate_e1(F) == eliminate_e1(F2), "F = -E1 + 5E2 = 4K - 3(E1 - E2)");
    require(square(F).is_zero(), "F.F = 0");

    const std::array<Rational, 3> norms = {square(K), square(diff), square(D)};
    require(norms[0] == Rational(9) && norms[1] == Rational(-16) && norms[2] == Rational(-9),
            "orthogonal basis norms (9, -16, -9)");
    require(pair(K, diff).is_zero() && pair(K, D).is_zero() && pair(diff, D).is_zero(),
            "orthogonality of {K, E1 - E2, D}");

    return CsLattice{lat, K, diff, D, F, F2, norms};
}

DivisorClass eliminate_e1(const DivisorClass& v) {
    const auto& lat = v.lattice();
    const Rational e1 = v.coeff("E1");
    DivisorClass out = v;
    out -= e1 * lat.basis("E1");
    out += e1 * (Rational(2) * lat.basis("E3") - lat.basis("E2"));
    return out;
}

DivisorClass BCandidate::divisor(const CsLattice& cs) const {
    return a * cs.K + b * cs.E1_minus_E2 + c * cs.D;
}

std::vector<BCandidate> solve_b_constraints(const CsLattice& cs) {
    // K.B = 9a = 2.
    const Rational a = Rational(2) / cs.norms[0];
    std::vector<BCandidate> out;
    for (long n = 0; n <= 16; ++n) {
        // F.B = 36a + 48b = n, i.e. 6b = n/8 - 1.
        const Rational b = (Rational(n) - pair(cs.F, a * cs.K)) / pair(cs.F, cs.E1_minus_E2);
        // B.B = 9a^2 - 16b^2 - 9c^2 = 0.
        const Rational c_sq = (cs.norms[0] * a * a + cs.norms[1] * b * b) / (-cs.norms[2]);
        if (c_sq.sign() < 0) continue;
        if (!is_perfect_square(c_sq.numerator()) || !is_perfect_square(c_sq.denominator())) continue;
        Integer num_root, den_root;
        mpz_sqrt(num_root.get_mpz_t(), c_sq.numerator().get_mpz_t());
        mpz_sqrt(den_root.get_mpz_t(), c_sq.denominator().get_mpz_t());
        const Rational root(num_root, den_root);
        std::vector<Rational> signs = {root};
        if (!root.is_zero()) signs.push_back(-root);
        for (const auto& c : signs) {
            BCandidate cand{n, a, b, c, {}, {}, BVerdict::IntegralityFail, {}};
            const DivisorClass B = cand.divisor(cs);
            if (!square(B).is_zero() || pair(cs.K, B) != Rational(2) || pair(cs.F, B) != Rational(n)) {
                throw std::logic_error("B candidate violates its defining equations");
            }
            integrality_eliminate(cs, cand);
            out.push_back(std::move(cand));
        }
    }
    return out;
}

BVerdict integrality_eliminate(const CsLattice& cs, BCandidate& cand) {
    const DivisorClass B = cand.divisor(cs);
    cand.b_dot_c1 = pair(B, cs.lattice.basis("C1"));
    cand.b_dot_c2 = pair(B, cs.lattice.basis("C2"));
    cand.surviving_curve.clear();
    if (!cand.b_dot_c1.is_integer() || !cand.b_dot_c2.is_integer()) {
        cand.verdict = BVerdict::IntegralityFail;
    } else {
        cand.verdict = BVerdict::Survives;
        if (cand.b_dot_c1.is_zero()) cand.surviving_curve = "C1";
        else if (cand.b_dot_c2.is_zero()) cand.surviving_curve = "C2";
    }
    return cand.verdict;
}

BranchTable cky_branch_table() {
    // rows E1, E2, E3; columns O1, O2, O3
    return BranchTable{{{{3, 1, 2}, {2, 1, 3}, {1, 4, 1}}}};
}

std::string to_string(OrbitConvention c) {
    return c == OrbitConvention::FixedPointsOnly ? "fixed-points-only" : "free-orbits";
}

CaseAReport case_a_fixed_point_check(const CsLattice& cs) {
    CaseAReport rep;
    const BranchTable t = cky_branch_table();
    const DivisorClass E1 = cs.lattice.basis("E1");
    const DivisorClass E2 = cs.lattice.basis("E2");
    const DivisorClass E3 = cs.lattice.basis("E3");

    // Any admissible B: K.B = 2 fixes B.E3 and B.(E1 + E2) through the numerical relations.
    const Rational a = Rational(2) / cs.norms[0];
    const DivisorClass Bnum = a * cs.K;
    const long e3_total = pair(Bnum, E3).to_long();
    const long e12_total = pair(Bnum, E1 + E2).to_long();
    rep.trace.push_back("B.E3 = K.B = " + std::to_string(e3_total) + ", B.(E1+E2) = 2K.B = " +
                        std::to_string(e12_total));
    rep.trace.push_back("a free Z3-orbit contributes at least 3 > B.E3, so B meets E3 only at fixed points");

    for (auto conv : {OrbitConvention::FixedPointsOnly, OrbitConvention::FreeOrbits}) {
        for (int mask = 1; mask < 8; ++mask) {
            FixedPointConfiguration cfg;
            cfg.convention = conv;
            for (int p = 0; p < 3; ++p) {
                if (!(mask & (1 << p))) continue;
                cfg.points.push_back(p);
                cfg.e3_lower_bound += t.branches[2][p];
                cfg.e12_lower_bound += t.branches[0][p] + t.branches[1][p];
            }
            // Free orbits only add to B.(E1+E2); fixed-point contributions are unchanged.
            const long e12_room = e12_total;
            if (cfg.e3_lower_bound > e3_total) {
                cfg.reason = "E3 branches " + std::to_string(cfg.e3_lower_bound) + " > " + std::to_string(e3_total);
            } else if (cfg.e12_lower_bound > e12_room) {
                cfg.reason = "E1+E2 branches " + std::to_string(cfg.e12_lower_bound) + " > " +
                             std::to_string(e12_room);
            } else {
                cfg.feasible = true;
                rep.any_feasible = true;
            }
            std::string pts;
            for (int p : cfg.points) pts += (pts.empty() ? "O" : ",O") + std::to_string(p + 1);
            rep.trace.push_back("[" + to_string(conv) + "] B through {" + pts + "}: " +
                                (cfg.feasible ? "feasible" : "infeasible (" + cfg.reason + ")"));
            rep.configurations.push_back(std::move(cfg));
        }
    }

    long e3_all = 0;
    for (int p = 0; p < 3; ++p) e3_all += t.branches[2][p];
    rep.forced_budget = 2 * e3_all;
    rep.b_dot_2e3 = pair(Bnum, Rational(2) * E3).to_long();
    rep.trace.push_back("O1, O2, O3 on B: B.2E3 >= 2(" + std::to_string(t.branches[2][0]) + "+" +
                        std::to_string(t.branches[2][1]) + "+" + std::to_string(t.branches[2][2]) +
                        ") = " + std::to_string(rep.forced_budget) + " > " + std::to_string(rep.b_dot_2e3));
    return rep;
}

CaseBReport case_b_fibration_check(const CsLattice& cs, const BCandidate& survivor) {
    CaseBReport rep;
    if (survivor.verdict != BVerdict::Survives || survivor.surviving_curve.empty()) {
        throw std::invalid_argument("case (b) needs a surviving candidate with B.C = 0");
    }
    const DivisorClass B = survivor.divisor(cs);
    const DivisorClass C = cs.lattice.basis(survivor.surviving_curve);
    const DivisorClass twoB = Rational(2) * B;

    rep.genus_2B = arithmetic_genus(twoB, cs.K);
    rep.genus_C = arithmetic_genus(C, cs.K);
    rep.two_b_dot_c = pair(twoB, C);

    const TorsionClass tau{"tau", 3, 1};
    const PolarizedDivisor s1(B);
    const PolarizedDivisor s2(B, tau);
    const PolarizedDivisor s3(B, TorsionClass{"tau", 3, 2});
    rep.sections_in_same_bundle = (s1 + s1).same_line_bundle(s2 + s3);

    rep.trace.push_back("s1 in B, s2 in B+tau, s3 in B+2tau with 3tau = 0: s1^2 and s2*s3 both in 2B: " +
                        std::string(rep.sections_in_same_bundle ? "yes" : "no"));
    rep.trace.push_back("p_a(2B) = 1 + 2B.(K+2B)/2 = " + rep.genus_2B.str());
    rep.trace.push_back("p_a(" + survivor.surviving_curve + ") = 1 + C.(K+C)/2 = " + rep.genus_C.str());
    rep.trace.push_back("2B." + survivor.surviving_curve + " = " + rep.two_b_dot_c.str() +
                        ": the curve lies in a fibre of |2B|");
    rep.contradiction = rep.sections_in_same_bundle && rep.two_b_dot_c.is_zero() && rep.genus_C > rep.genus_2B;
    return rep;
}

}  // namespace ballq::cs
