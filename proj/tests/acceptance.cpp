// One PASS/FAIL line per acceptance criterion; exit status 1 if any fail.

#include "ballq/covering.hpp"
#include "ballq/cs_albanese.hpp"
#include "ballq/hj.hpp"
#include "ballq/reider.hpp"
#include "ballq/registry.hpp"
#include "ballq/surface.hpp"
#include "ballq/verifier.hpp"
#include "oracles.hpp"

#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <string>

using namespace ballq;

namespace {

struct Criterion {
    std::string name;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

std::string computed(const std::string& id) { return verify::run_check(id).computed; }

std::set<std::tuple<long, long, long, long>> quads(const std::vector<ReiderCandidate>& v) {
    std::set<std::tuple<long, long, long, long>> out;
    for (const auto& c : v) out.insert({c.d1, c.d2, c.delta, c.deg_W});
    return out;
}

void ac1(Criterion& c) {
    const auto nine = enumerate_destabilizations(9, 2);
    c.expect(nine.size() == 2, "(9,2) must give two cases");
    if (nine.size() == 2) {
        const auto& i = nine[0];
        const auto& ii = nine[1];
        c.expect(i.d1 == 7 && i.d2 == 2 && i.delta == 2 && i.B_sq == Rational(0) && i.p_a == Rational(2) &&
                     i.tag == ReiderCase::CaseI,
                 "case (i) is (7,2,2), B^2=0, p_a=2");
        c.expect(ii.d1 == 6 && ii.d2 == 3 && ii.delta == 2 && ii.p_a == Rational(3) && ii.tag == ReiderCase::CaseII,
                 "case (ii) is (6,3,2), p_a=3");
        // K == 3B numerically: (K - 3B)^2 = K^2 - 6 K.B + 9 B^2 = 0 with K.B = d2.
        c.expect(Rational(9) - Rational(6 * ii.d2) + Rational(9) * ii.B_sq == Rational(0), "case (ii) K == 3B");
    }
    c.expect(enumerate_destabilizations(9, 1).empty(), "(9,1) must be empty");
    const auto ten = enumerate_destabilizations(10, 2);
    c.expect(ten.size() == 1 && ten[0].tag == ReiderCase::CaseI, "(10,2) must give only case (i)");
    for (long k = 1; k <= 30; ++k)
        for (long z = 1; z <= 3; ++z)
            c.expect(quads(enumerate_destabilizations(k, z)) == oracle::reider(k, z, true),
                     "oracle disagreement at K^2=" + std::to_string(k) + ", deg Z=" + std::to_string(z));
}

void ac2(Criterion& c) {
    c.expect(computed("lemma2.h0") == "3", "h0(K+H+tau) = 3");
    c.expect(computed("sec4_3.h0_2K") == "10", "h0(2K) = 10");
    c.expect(computed("lemma6.h0_2K_X") == "4", "h0(2K_X) = 4");

    const IntersectionLattice fpp({"H"}, RationalMatrix{{1}});
    const auto H = fpp.basis("H");
    const auto K = Rational(3) * H;
    const auto surf = ball_quotient_invariants(3);
    c.expect(riemann_roch_chi(surf, K + H, K) == Rational(3), "chi(K+H) = 3");
    c.expect(riemann_roch_chi(surf, Rational(2) * K, K) == Rational(10), "chi(2K) = 10");
    const IntersectionLattice x({"H"}, RationalMatrix{{Rational(1, 3)}});
    const auto KX = Rational(3) * x.basis("H");
    const auto surf_x = SurfaceInvariants::smooth(3, 9, 0, 0);
    c.expect(riemann_roch_chi(surf_x, Rational(2) * KX, KX) == Rational(4), "chi(2K_X) = 4");
}

void ac3(Criterion& c) {
    const auto a2 = ExceptionalChain::resolve(CyclicSingularity(3, 2));
    c.expect(hj_expand(CyclicSingularity(3, 2)) == std::vector<long>{2, 2}, "hj(3,2) = [2,2]");
    c.expect(discrepancies(a2) == std::vector<Rational>{0, 0}, "A2 discrepancies zero");

    const auto hj = ExceptionalChain::resolve(CyclicSingularity(7, 3));
    auto si = hj.self_intersections();
    std::sort(si.begin(), si.end());
    c.expect(si == std::vector<long>{-3, -2, -2}, "1/7(1,3) chain is (-2,-2,-3) up to orientation");
    const auto s_order = ExceptionalChain::resolve(CyclicSingularity(7, 3), ChainOrientation::Reversed);
    c.expect(s_order.self_intersections() == std::vector<long>{-2, -2, -3}, "S1,S2,S3 orientation");
    c.expect(discrepancies(s_order) == std::vector<Rational>{Rational(1, 7), Rational(2, 7), Rational(3, 7)},
             "discrepancies (1/7,2/7,3/7)");

    c.expect(computed("lemma6.K_hat_sq") == "3", "A2 resolution K^2 = 3");
    c.expect(computed("lemma7.invariants") == "K^2=0, c2=12", "mixed resolution K^2 = 0, c2 = 12");
    const std::vector<CyclicSingularity> mixed = {{3, 2}, {3, 2}, {3, 2}, {7, 3}};
    const auto inv = resolution_invariants(Rational(3, 7), Rational(3), mixed);
    c.expect(inv.K_hat_sq == Rational(0) && inv.c2_hat == Rational(12), "direct resolution_invariants");
}

void ac4(Criterion& c) {
    const auto eq8 = riemann_hurwitz_solutions(3, 3, {2}, 3);
    c.expect(eq8.size() == 1 && eq8[0].g_down == 1 && eq8[0].l() == 2, "order-3 quotient of a genus-3 curve gives g=1, l=2");
    std::vector<std::string> eq14;
    for (const auto& s : riemann_hurwitz_solutions(3, 3, {2, 6})) eq14.push_back(to_string(s));
    c.expect(eq14 == std::vector<std::string>{"g=1,l=2,b={2,2}", "g=0,l=3,b={2,2,6}", "g=0,l=5,b={2,2,2,2,2}"},
             "branch set with b in {2,6}");
    c.expect(degree_splittings(21).size() == 4, "21 has four factorizations");
    c.expect(computed("sec5_5.eq13_divisibility") == "k in {7,21}", "k in {7,21}");
}

void ac5(Criterion& c) {
    const long nodes = branch_self_intersection(6) + 2 * branch_self_intersection(7);
    c.expect(nodes == 57, "C(6,2)+C(7,2)+C(7,2) = 57");
    c.expect(!budget_check(36, {{"nodes", nodes}, {"extra", 6}}).feasible, "6 + 57 > 36 infeasible");
    c.expect(computed("sec5_5.budget57") == "57", "budget57 check");
    c.expect(computed("sec5_5.b1_self_intersection") == "infeasible: 63 > 36", "B1 self-intersection check");
    c.expect(computed("sec5_4.order6_budget") == "infeasible: 7 > 6", "order-6 tangency check");
    c.expect(computed("appII.case_a") == "infeasible: 12 > 4", "Appendix case (a) check");
    const auto rep = cs::case_a_fixed_point_check(cs::build_cs_lattice());
    c.expect(rep.forced_budget > rep.b_dot_2e3, "12 > 4");
}

void ac6(Criterion& c) {
    const auto cs = cs::build_cs_lattice();
    c.expect(cs.norms == std::array<Rational, 3>{9, -16, -9}, "norms (9,-16,-9)");
    c.expect(pair(cs.K, cs.E1_minus_E2).is_zero() && pair(cs.K, cs.D).is_zero() &&
                 pair(cs.E1_minus_E2, cs.D).is_zero(),
             "orthogonality");
    const auto& g = cs.lattice.gram();
    bool rows = true;
    for (std::size_t j = 0; j < 5; ++j) rows = rows && g(0, j) + g(1, j) == Rational(2) * g(2, j);
    c.expect(rows, "row1 + row2 = 2 row3");
    c.expect(signature(g).n_zero == 2, "Gram singular");

    std::set<long> ns;
    std::set<Rational> fail_c1;
    bool survivor_ok = true;
    cs::BCandidate survivor;
    for (const auto& cand : cs::solve_b_constraints(cs)) {
        ns.insert(cand.n);
        if (cand.n == 0 || cand.n == 16) {
            c.expect(cand.verdict == cs::BVerdict::IntegralityFail, "n=0,16 eliminated");
            fail_c1.insert(cand.b_dot_c1);
        } else {
            survivor_ok = survivor_ok && std::set<Rational>{cand.b_dot_c1, cand.b_dot_c2} ==
                                             std::set<Rational>{Rational(0), Rational(4)};
            survivor = cand;
        }
    }
    c.expect(ns == std::set<long>{0, 8, 16}, "n in {0,8,16}");
    c.expect(fail_c1 == std::set<Rational>{Rational(2) - Rational(2, 3), Rational(2) + Rational(2, 3)},
             "B.C1 = 2 -+ 2/3");
    c.expect(survivor_ok, "n=8 has {B.C1,B.C2} = {0,4}");
    const auto b = cs::case_b_fibration_check(cs, survivor);
    c.expect(b.genus_2B == Rational(3) && b.genus_C == Rational(5) && b.contradiction, "p_a(2B)=3 < p_a(C)=5");
    c.expect(verify::summarize(verify::run_report("appendix2")).mismatched == 0, "appendix2 scope: zero MISMATCH");
}

void ac7(Criterion& c) {
    using namespace ballq::fpp;
    const auto& r = load_registry();
    c.expect(r.size() == 50, "50 records");
    c.expect(query_by_case(r, Case::B).size() == 33 && query_by_case(r, Case::C).size() == 12 &&
                 query_by_case(r, Case::D).size() == 1 && query_by_case(r, Case::MinType).size() == 4,
             "partition (33,12,1,4)");
    std::vector<std::string> names;
    for (const auto& m : query_by_case(r, Case::MinType)) names.push_back(m.raw_name);
    c.expect(names == std::vector<std::string>{"(a=7,p=2,{5})", "(a=7,p=2,{5,7})", "(a=23,p=2,∅)", "(a=23,p=2,{23})"},
             "minimal-type names");
    c.expect(parse_registry(serialize_registry(r)) == r, "round trip");
}

void ac8(Criterion& c) {
    std::mt19937_64 rng(2024);

    {  // bilinearity and symmetry, 1000 random rational vectors
        std::uniform_int_distribution<long> e(-9, 9), num(-30, 30), den(1, 9);
        RationalMatrix g(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i; j < 4; ++j) g(i, j) = g(j, i) = Rational(e(rng));
        const IntersectionLattice lat({"a", "b", "c", "d"}, g);
        auto rnd = [&] {
            std::vector<Rational> v;
            for (int i = 0; i < 4; ++i) v.emplace_back(num(rng), den(rng));
            return lat.make(v);
        };
        bool ok = true;
        for (int i = 0; i < 1000; ++i) {
            const auto u = rnd(), v = rnd(), w = rnd();
            const Rational s(num(rng), den(rng));
            ok = ok && pair(u, v) == pair(v, u) && pair(u + s * v, w) == pair(u, w) + s * pair(v, w);
        }
        c.expect(ok, "pairing bilinear and symmetric");
    }
    {  // signature under 100 random unimodular transforms
        std::uniform_int_distribution<long> e(-5, 5), k(-2, 2);
        std::uniform_int_distribution<std::size_t> idx(0, 3);
        RationalMatrix g(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i; j < 4; ++j) g(i, j) = g(j, i) = Rational(e(rng));
        const auto base = signature(g);
        bool ok = true;
        for (int t = 0; t < 100; ++t) {
            RationalMatrix u = RationalMatrix::identity(4);
            for (int s = 0; s < 8; ++s) {
                const auto i = idx(rng), j = idx(rng);
                if (i == j) continue;
                const Rational m(k(rng));
                for (std::size_t col = 0; col < 4; ++col) u(i, col) += m * u(j, col);
            }
            ok = ok && signature(u * g * u.transpose()) == base;
        }
        c.expect(ok, "signature basis-invariant");
    }
    {  // HJ round trip
        bool ok = true;
        for (long n = 2; n <= 200; ++n)
            for (long q = 1; q < n; ++q)
                if (std::gcd(n, q) == 1)
                    ok = ok && oracle::hj_value(hj_expand(CyclicSingularity(n, q))) == std::make_pair(n, q);
        c.expect(ok, "hj_expand round trip n <= 200");
    }
    {  // adjunction parity with a characteristic K
        std::uniform_int_distribution<long> d(-6, 6), off(-3, 3), o(-3, 2);
        RationalMatrix g(3, 3);
        for (std::size_t i = 0; i < 3; ++i) {
            g(i, i) = Rational(d(rng));
            for (std::size_t j = i + 1; j < 3; ++j) g(i, j) = g(j, i) = Rational(2 * off(rng));
        }
        const IntersectionLattice lat({"x", "y", "z"}, g);
        const auto K = lat.make({2 * o(rng) + 1, 2 * o(rng) + 1, 2 * o(rng) + 1});
        bool ok = true;
        for (long a = -4; a <= 4; ++a)
            for (long b = -4; b <= 4; ++b)
                for (long e = -4; e <= 4; ++e) ok = ok && arithmetic_genus(lat.make({a, b, e}), K).is_integer();
        c.expect(ok, "adjunction parity");
    }
    {  // budget monotonicity
        std::uniform_int_distribution<long> amt(0, 20), tot(0, 60);
        bool ok = true;
        for (int t = 0; t < 500; ++t) {
            std::vector<BudgetContribution> parts = {{"a", amt(rng)}, {"b", amt(rng)}};
            const Rational total(tot(rng));
            const bool before = budget_check(total, parts).feasible;
            parts.push_back({"extra", amt(rng)});
            ok = ok && (before || !budget_check(total, parts).feasible);
        }
        c.expect(ok, "budget monotonicity");
    }
}

void ac9(Criterion& c) {
    const auto results = verify::run_report();
    std::set<std::string> flagged;
    std::size_t mismatched = 0;
    for (const auto& r : results) {
        if (r.status == verify::Status::Flagged) flagged.insert(r.check_id);
        if (r.status == verify::Status::Mismatch) ++mismatched;
    }
    c.expect(flagged == std::set<std::string>{"sec5_3.proper_transform", "sec5_5.eq14_integrality"},
             "exactly the two documented FLAGGED checks");
    c.expect(mismatched == 0, "zero MISMATCH");
    c.expect(verify::exit_status(results, false) == 0 && verify::exit_status(results, true) == 1,
             "--fail-on-flagged flips the exit status");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
        {"Reider enumeration", ac1},      {"dimension counts", ac2},     {"singularity resolution", ac3},
        {"covering arithmetic", ac4},     {"budget contradictions", ac5}, {"Albanese lattice end-to-end", ac6},
        {"registry", ac7},                {"property suites", ac8},      {"flag discipline", ac9},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c{criteria[i].first, {}};
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        std::cout << "AC" << (i + 1) << " " << c.name << ": " << (c.failures.empty() ? "PASS" : "FAIL") << "\n";
        for (const auto& f : c.failures) std::cout << "    " << f << "\n";
        if (!c.failures.empty()) ++failed;
    }
    return failed ? 1 : 0;
}
