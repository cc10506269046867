#include "ballq/verifier.hpp"

#include "ballq/covering.hpp"
#include "ballq/cs_albanese.hpp"
#include "ballq/hj.hpp"
#include "ballq/lattice.hpp"
#include "ballq/registry.hpp"
#include "ballq/reider.hpp"
#include "ballq/surface.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace ballq::verify {

namespace detail {
extern const char* const kEmbeddedChecksJson;
}

namespace {

using nlohmann::json;

struct Evaluation {
    std::string computed;
    std::vector<std::string> trace;
};

using Evaluator = std::function<Evaluation()>;

template <class T, class F>
std::string join(const std::vector<T>& items, const std::string& sep, F&& fmt) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + fmt(items[i]);
    return out;
}

std::string tuple_str(const std::vector<Rational>& v) {
    return "(" + join(v, ",", [](const Rational& r) { return r.str(); }) + ")";
}

std::string tuple_str(const std::vector<long>& v) {
    return "(" + join(v, ",", [](long x) { return std::to_string(x); }) + ")";
}

std::string budget_str(const BudgetCheck& b) {
    return (b.feasible ? "feasible: " : "infeasible: ") + b.demand().str() + (b.feasible ? " <= " : " > ") +
           b.total.str();
}

std::vector<std::string> budget_trace(const BudgetCheck& b) {
    std::vector<std::string> t;
    for (const auto& c : b.contributions) t.push_back("  " + c.label + ": " + c.amount.str());
    t.push_back("demand " + b.demand().str() + " against available " + b.total.str());
    return t;
}

Axiom vanishing_axiom() { return {"vanishing", axiom_catalogue().at("vanishing")}; }

// Rank-one Neron-Severi of a fake projective plane: H.H = 1, K = 3H numerically.
struct FppLattice {
    IntersectionLattice lattice{{"H"}, RationalMatrix{{Rational(1)}}};
    DivisorClass H = lattice.basis("H");
    DivisorClass K = Rational(3) * H;
};

// Euler number of X = M/G from e(M), |G| and the stabilizer orders of the
// points of X with nontrivial stabilizer.
Rational orbifold_euler(long e_m, long order, const std::vector<long>& stabilizers) {
    Rational e = Rational(e_m);
    Rational correction;
    for (long s : stabilizers) correction += Rational(order) / Rational(s);
    e -= correction;
    e /= Rational(order);
    return e + Rational(static_cast<long>(stabilizers.size()));
}

// ---------------------------------------------------------------- surface

Evaluation noether_c2_3() {
    const auto s = ball_quotient_invariants(3);
    return {s.chi_O.str(),
            {"c1^2 = 3 c2 = " + s.c1_sq.str(),
             "12 chi(O) = c1^2 + c2: 12*" + s.chi_O.str() + " = " + s.c1_sq.str() + " + " + s.c2.str(),
             "q = p_g since chi(O) = 1 - q + p_g = 1"}};
}

Evaluation lemma1_divisibility() {
    std::vector<long> accepted;
    bool k_sq_div9 = true;
    for (long c2 = 1; c2 <= 60; ++c2) {
        try {
            const auto s = ball_quotient_invariants(c2);
            accepted.push_back(c2);
            if (!(s.c1_sq / Rational(9)).is_integer()) k_sq_div9 = false;
        } catch (const std::domain_error&) {
        }
    }
    std::vector<long> multiples;
    for (long c2 = 3; c2 <= 60; c2 += 3) multiples.push_back(c2);
    Evaluation e;
    e.trace.push_back("c1^2 = 3 c2 (Miyaoka-Yau equality) and 12 chi = c1^2 + c2 = 4 c2, so chi integral iff 3 | c2");
    e.trace.push_back("c2 accepted in 1..60: " + tuple_str(accepted));
    if (accepted == multiples && k_sq_div9) {
        e.computed = "c2 in {3,6,...,60}, K^2 = 3c2 in 9Z";
    } else {
        e.computed = "c2 in " + tuple_str(accepted) + (k_sq_div9 ? "" : ", some K^2 not in 9Z");
    }
    return e;
}

Evaluation lemma2_h0() {
    const FppLattice f;
    const auto surf = ball_quotient_invariants(3);
    const PolarizedDivisor d(f.K + f.H, TorsionClass{"tau", std::nullopt, 1});
    const Rational chi = riemann_roch_chi(surf, d, f.K);
    const auto count = h0_assuming_vanishing(surf, d.numerical, f.K, vanishing_axiom());
    const Rational half = pair(d.numerical, d.numerical - f.K) / Rational(2);
    return {count.h0.str(),
            {"H.H = 1, K = 3H numerically; tau is numerically trivial",
             "chi(K+H+tau) = (K+H+tau).(H+tau)/2 + chi(O) = " + half.str() + " + " + surf.chi_O.str() + " = " +
                 chi.str(),
             "h^1 = h^2 = 0 by vanishing (H ample), so h^0 = chi = " + count.h0.str()}};
}

Evaluation lemma3_monomials() {
    const FppLattice f;
    const Integer monomials = monomial_section_bound(2, 4);
    const bool same_class = numerically_equivalent(Rational(4) * f.H, f.K + f.H);
    Evaluation e{monomials.get_str(), {}};
    e.trace.push_back("two sections s1, s2 of H+tau give the degree-4 monomials in s1, s2: C(2+4-1, 4) = " +
                      monomials.get_str());
    e.trace.push_back(std::string("4(H+tau) == K+H+tau' numerically: ") + (same_class ? "yes" : "no"));
    e.trace.push_back("distinct vanishing orders along (s1) make them independent: " + monomials.get_str() +
                      " > h^0(K+H+tau') = 3, so h^0(H+tau) <= 1");
    return e;
}

Evaluation sec4_3_h0_2k() {
    const FppLattice f;
    const auto surf = ball_quotient_invariants(3);
    const auto c = h0_assuming_vanishing(surf, Rational(2) * f.K, f.K, vanishing_axiom());
    return {c.h0.str(),
            {"chi(2K) = chi(O) + 2K.(2K - K)/2 = " + surf.chi_O.str() + " + " +
                 (square(f.K)).str() + " = " + c.chi.str(),
             "h^i(2K) = 0 for i > 0 by Kodaira vanishing"}};
}

Evaluation lemma4_b_sq() {
    const FppLattice f;
    const DivisorClass B = Rational(1, 3) * f.K;
    return {square(B).str(), {"B == K/3 numerically: B.B = K.K/9 = " + square(f.K).str() + "/9 = " +
                              square(B).str() + " != 0, so case (ii) cannot sweep out a fibration"}};
}

Evaluation lemma4_fibre_genus() {
    const IntersectionLattice lat({"K", "B"}, RationalMatrix{{Rational(9), Rational(2)}, {Rational(2), Rational(0)}});
    const DivisorClass K = lat.basis("K");
    const DivisorClass B = lat.basis("B");
    const Rational pa = arithmetic_genus(B, K);
    return {pa.str(),
            {"case (i): B.B = 0, K.B = 2",
             "p_a(B) = 1 + (K.B + B.B)/2 = " + pa.str(),
             "a genus-2 fibration has a singular fibre; its components have geometric genus <= 1, "
             "excluded by hyperbolicity"}};
}

Evaluation classification_c2_3() {
    std::vector<std::string> pairs;
    Evaluation e;
    for (long q = 0; q <= 1; ++q) {
        const auto s = ball_quotient_invariants(3, q);
        pairs.push_back("(" + std::to_string(s.q) + "," + std::to_string(s.p_g) + ")");
        e.trace.push_back("q = " + std::to_string(q) + ": p_g = chi - 1 + q = " + std::to_string(s.p_g));
    }
    e.trace.insert(e.trace.begin(), "chi(O) = 1 forces p_g = q; the classification bounds q <= 1");
    e.computed = "(q,p_g) in {" + join(pairs, ",", [](const std::string& s) { return s; }) + "}";
    return e;
}

Evaluation lemma8_degree() {
    const FppLattice f;
    const DivisorClass B = Rational(1, 3) * f.K;
    // deg on B of [p] + [q] - 2B - tau: points contribute 2, 2B contributes -2B.B, tau contributes 0.
    const Rational deg = restriction_degree(Rational(-2) * B, B, 2);
    return {deg.str(),
            {"deg([p]+[q]) = 2, deg(2B|_B) = 2 B.B = " + (Rational(2) * square(B)).str() + ", deg(tau|_B) = 0",
             "deg([p]+[q]-2B-tau) = " + deg.str() +
                 ": a nonzero section exists only if 2B+tau = [p]+[q], fixing the pair"}};
}

// ----------------------------------------------------------------- reider

Evaluation prop1_bogomolov() {
    const ExtensionData ext{Rational(9), 2};
    const Rational disc = ext.c1_sq - Rational(4 * ext.c2);
    const bool unstable = bogomolov_unstable(ext);
    return {unstable ? "9 - 4*2 = " + disc.str() + " >= 1" : "stable (" + disc.str() + ")",
            {"c1(E) = K, c2(E) = deg Z = 2", "c1^2 - 4 c2 = " + disc.str()}};
}

Evaluation prop1_base_point_free() {
    const auto cands = enumerate_candidates(9, 1);
    const auto surv = enumerate_destabilizations(9, 1);
    Evaluation e;
    e.trace.push_back("deg Z = 1: " + std::to_string(cands.size()) + " integer triples (d1, d2, delta) examined");
    for (const auto& c : cands) e.trace.push_back("  " + to_string(c));
    e.computed = surv.empty() ? "none" : join(surv, "; ", [](const ReiderCandidate& c) { return to_string(c); });
    return e;
}

Evaluation prop1_enumeration() {
    const auto cands = enumerate_candidates(9, 2);
    const auto surv = enumerate_destabilizations(9, 2);
    Evaluation e;
    e.trace.push_back("d1 + d2 = 9, d1 > d2 > 0, 0 < delta <= 2, (L-B)^2 = 9 - 4 delta > 4 deg W,");
    e.trace.push_back("Delta = d1 d2 - 9 delta <= 0, 2 d2 - delta even, p_a(B) > 1");
    for (const auto& c : cands) e.trace.push_back("  " + to_string(c));
    e.computed = join(surv, "; ", [](const ReiderCandidate& c) { return to_string(c); });
    return e;
}

Evaluation prop1_d2_1_excluded() {
    const auto open = enumerate_destabilizations(9, 2, no_genus_filter());
    const auto hyp = enumerate_destabilizations(9, 2);
    Evaluation e;
    std::vector<ReiderCandidate> dropped;
    for (const auto& c : open)
        if (std::find(hyp.begin(), hyp.end(), c) == hyp.end()) dropped.push_back(c);
    e.trace.push_back("without the genus filter: " +
                      join(open, "; ", [](const ReiderCandidate& c) { return to_string(c); }));
    e.trace.push_back("B.B = K.B - L.B = d2 - delta; p_a(B) = 1 + (d2 + B.B)/2");
    e.trace.push_back("removed by hyperbolicity (p_a <= 1)");
    e.computed = dropped.empty() ? "none" : join(dropped, "; ", [](const ReiderCandidate& c) { return to_string(c); });
    return e;
}

Evaluation sec5_9_k2_ge_10() {
    std::vector<long> values = {10};
    for (long k = 18; k <= 90; k += 9) values.push_back(k);
    Evaluation e;
    std::vector<std::string> bad;
    for (long k : values) {
        const auto surv = enumerate_destabilizations(k, 2);
        e.trace.push_back("K^2 = " + std::to_string(k) + ": " +
                          (surv.empty() ? std::string("none")
                                        : join(surv, "; ", [](const ReiderCandidate& c) { return to_string(c); })));
        if (surv.empty()) bad.push_back(std::to_string(k) + ": empty");
        for (const auto& c : surv) {
            if (c.tag != ReiderCase::CaseI || c.p_a != Rational(2)) bad.push_back(to_string(c));
        }
    }
    e.computed = bad.empty() ? "K^2 in {10,18,27,...,90}: only CaseI with pa=2"
                             : "exceptions: " + join(bad, "; ", [](const std::string& s) { return s; });
    return e;
}

// ---------------------------------------------------------- singularities

Evaluation lemma6_chain() {
    const CyclicSingularity s(3, 2);
    const auto chain = ExceptionalChain::resolve(s);
    const auto a = discrepancies(chain);
    return {s.str() + ": chain " + tuple_str(chain.self_intersections()) + ", discrepancies " + tuple_str(a),
            {"3/2 = [" + join(hj_expand(s), ",", [](long b) { return std::to_string(b); }) + "]",
             "K.S_i = -2 - S_i^2 = 0 for (-2)-curves, so G a = 0 and a = 0 (du Val)"}};
}

std::vector<CyclicSingularity> lemma6_points() { return {{3, 2}, {3, 2}, {3, 2}}; }

Evaluation lemma6_k_hat_sq() {
    const Rational k_x_sq = Rational(9) / Rational(3);
    const Rational e_x = orbifold_euler(3, 3, {3, 3, 3});
    const auto pts = lemma6_points();
    const auto inv = resolution_invariants(k_x_sq, e_x, pts);
    return {inv.K_hat_sq.str(),
            {"K_X^2 = K_M^2/3 = " + k_x_sq.str(),
             "e(X) = (e(M) - 3)/3 + 3 = " + e_x.str(),
             "three 1/3(1,2) points, each a^T G a = 0: K_Xhat^2 = " + inv.K_hat_sq.str(),
             "c2(Xhat) = e(X) + 3*2 = " + inv.c2_hat.str() + "; Noether 12 chi = " + inv.K_hat_sq.str() + " + " +
                 inv.c2_hat.str()}};
}

Evaluation lemma6_h0_2k_x() {
    const auto pts = lemma6_points();
    const auto inv = resolution_invariants(Rational(3), orbifold_euler(3, 3, {3, 3, 3}), pts);
    const auto surf = SurfaceInvariants::smooth(inv.K_hat_sq, inv.c2_hat, 0, 0);
    const IntersectionLattice lat({"H"}, RationalMatrix{{Rational(1, 3)}});
    const DivisorClass K = Rational(3) * lat.basis("H");
    const auto c = h0_assuming_vanishing(surf, Rational(2) * K, K, vanishing_axiom());
    return {c.h0.str(),
            {"K_Xhat = tau^*K_X, K^2 = " + square(K).str() + ", chi(O) = " + surf.chi_O.str(),
             "chi(2K) = chi(O) + K^2 = " + c.chi.str(),
             "K_Xhat nef and big: higher cohomology of 2K vanishes"}};
}

ExceptionalChain lemma7_chain_s_order() {
    return ExceptionalChain::resolve(CyclicSingularity(7, 3), ChainOrientation::Reversed);
}

Evaluation lemma7_chain() {
    const CyclicSingularity s(7, 3);
    const auto chain = lemma7_chain_s_order();
    return {s.str() + ": chain " + tuple_str(chain.self_intersections()),
            {"7/3 = [" + join(hj_expand(s), ",", [](long b) { return std::to_string(b); }) + "]",
             "listed as S1, S2, S3 with the (-3)-curve last"}};
}

Evaluation lemma7_discrepancies() {
    const auto chain = lemma7_chain_s_order();
    const auto a = discrepancies(chain);
    return {tuple_str(a),
            {"K.S_i = -2 - S_i^2 = " + tuple_str(chain.canonical_degrees()),
             "solve G a = -K.S with G the chain Gram matrix",
             "a = " + tuple_str(a) + ", correction a^T G a = " + canonical_correction(chain).str()}};
}

Evaluation lemma7_invariants() {
    const Rational k_x_sq = Rational(9, 21);
    const Rational e_x = orbifold_euler(3, 21, {3, 3, 3, 7});
    const std::vector<CyclicSingularity> pts = {{3, 2}, {3, 2}, {3, 2}, {7, 3}};
    const auto inv = resolution_invariants(k_x_sq, e_x, pts);
    return {"K^2=" + inv.K_hat_sq.str() + ", c2=" + inv.c2_hat.str(),
            {"K_X^2 = K_M^2/21 = " + k_x_sq.str(),
             "e(X) = (e(M) - 21*3/3 - 21/7)/21 + 4 = " + e_x.str(),
             "K_Xhat^2 = 3/7 + 3*0 + (" + canonical_correction(lemma7_chain_s_order()).str() +
                 ") = " + inv.K_hat_sq.str(),
             "c2(Xhat) = e(X) + 3*2 + 3 = " + inv.c2_hat.str()}};
}

Evaluation lemma7_k_hat_dot_pullback() {
    const auto chain = lemma7_chain_s_order();
    const auto a = discrepancies(chain);
    RationalMatrix g(4, 4);
    g(0, 0) = Rational(3, 7);
    const auto cg = chain.gram();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) g(1 + i, 1 + j) = cg(i, j);
    const IntersectionLattice lat({"P", "S1", "S2", "S3"}, g);
    const DivisorClass P = lat.basis("P");
    DivisorClass k_hat = P;
    for (std::size_t i = 0; i < 3; ++i) k_hat -= a[i] * lat.basis("S" + std::to_string(i + 1));
    const Rational value = pair(k_hat, P);
    return {value.str(),
            {"P = tau^*K_X with P.P = 3/7 and P.S_i = 0",
             "K_Xhat = P - " + tuple_str(a) + ".S",
             "K_Xhat.P = " + value.str() + ", K_Xhat^2 = " + square(k_hat).str()}};
}

Evaluation sec5_3_genus_b() {
    const auto r = replay_elliptic_adjunction(TransformMode::Standard);
    return {r.genus_B.str(), {r.trace.front()}};
}

Evaluation sec5_3_riemann_hurwitz() {
    const auto sols = riemann_hurwitz_solutions(3, 3, {2}, 3);
    return {join(sols, "; ", [](const RamificationSolution& s) { return to_string(s); }),
            {"2(3-1) = 3*2(g-1) + sum b_i with b_i = 2 and l <= 3"}};
}

Evaluation sec5_3_per_curve_replay() {
    const auto r = replay_elliptic_adjunction(TransformMode::PerCurve);
    Evaluation e{r.two_g_minus_2.str(), r.trace};
    e.trace.push_back(std::string("contradicts g(C) = ") + std::to_string(r.genus_C) + ": " +
                      (r.contradicts_genus() ? "yes" : "no"));
    return e;
}

Evaluation sec5_3_proper_transform() {
    const auto std_r = replay_elliptic_adjunction(TransformMode::Standard);
    const auto per_curve = replay_elliptic_adjunction(TransformMode::PerCurve);
    Evaluation e{tuple_str(std_r.coeffs.front()), {}};
    e.trace.push_back("Chat meets E_i1 once and misses E_i2; the A2 Gram matrix is ((-2,1),(1,-2))");
    e.trace.push_back("standard: Chat.E = 0 - G a = meets, so G a = -(1,0): a = " + tuple_str(std_r.coeffs.front()));
    e.trace.push_back("per-curve rule a_i = meets_i / b_i: a = " + tuple_str(per_curve.coeffs.front()));
    for (const auto& t : std_r.trace) e.trace.push_back("standard | " + t);
    for (const auto& t : per_curve.trace) e.trace.push_back("per-curve | " + t);
    e.trace.push_back(std::string("with the standard coefficients the genus contradiction ") +
                      (std_r.contradicts_genus() ? "persists" : "disappears"));
    return e;
}

// -------------------------------------------------------------- coverings

Evaluation sec5_4_vanishing_conditions() {
    const Integer conditions = binomial(3, 2);
    return {conditions.get_str(),
            {"vanishing to order >= 2 at a point kills the Taylor terms 1, x, y: C(2+1, 2) = " +
                 conditions.get_str(),
             "h^0(2K_X) = 4 > " + conditions.get_str() + ": a nonzero section s with mult_Q1 s >= 2 exists"}};
}

Evaluation sec5_4_order6_budget() {
    const FppLattice f;
    const DivisorClass B = f.H;
    const Rational total = pair(B, Rational(2) * f.K);
    const auto b = budget_check(total, {{"p^*s vanishes to order 3*2 at P1", Rational(6)},
                                        {"s.C = 6 exceeds the local order 2 at Q1: one further point", Rational(1)}});
    Evaluation e{budget_str(b), {"B.2K_M = " + total.str()}};
    for (auto& t : budget_trace(b)) e.trace.push_back(std::move(t));
    return e;
}

Evaluation sec5_4_double_point_budget() {
    const FppLattice f;
    const Rational total = pair(f.H, Rational(6) * f.H);
    const auto b = budget_check(total, {{"p^*s at S1", Rational(2)},
                                        {"p^*s at S2", Rational(2)},
                                        {"s.C - 2 at the remaining points", Rational(4)}});
    Evaluation e{budget_str(b), {"B.p^*C = H.6H = " + total.str()}};
    for (auto& t : budget_trace(b)) e.trace.push_back(std::move(t));
    return e;
}

Evaluation sec5_5_dk21() {
    const auto splits = degree_splittings(21);
    Evaluation e;
    e.trace.push_back("1 = B.H_M = d k H_X.H_X = dk/21");
    for (const auto& [d, k] : splits) e.trace.push_back("  d = " + std::to_string(d) + ", k = " + std::to_string(k));
    e.computed = "d in {" + join(splits, ",", [](const std::pair<long, long>& p) { return std::to_string(p.first); }) + "}";
    return e;
}

Evaluation sec5_5_eq13_divisibility() {
    Evaluation e;
    e.trace.push_back("K_Xhat.Chat = k/7 - a_3 with a_3 an integer");
    std::vector<long> kept;
    for (const auto& [d, k] : degree_splittings(21)) {
        const bool ok = divisibility_filter(Rational(k), 7);
        e.trace.push_back("  k = " + std::to_string(k) + ": k/7 = " + (Rational(k) / Rational(7)).str() +
                          (ok ? " integral" : " rejected"));
        if (ok) kept.push_back(k);
    }
    std::sort(kept.begin(), kept.end());
    e.computed = "k in {" + join(kept, ",", [](long k) { return std::to_string(k); }) + "}";
    return e;
}

Evaluation sec5_5_k7_riemann_hurwitz() {
    const auto sols = riemann_hurwitz_solutions(3, 3, {2, 6});
    return {join(sols, "; ", [](const RamificationSolution& s) { return to_string(s); }),
            {"k = 7 forces d = 3; 4 = 3*2(g-1) + sum b_i with b_i in {2, 6}"}};
}

Evaluation sec5_5_budget57() {
    const std::vector<long> branches = {6, 7, 7};
    Evaluation e;
    long total = 0;
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        const long c = branch_self_intersection(branches[i]);
        total += c;
        parts.push_back(std::to_string(c));
        e.trace.push_back("T" + std::to_string(i + 1) + ": " + std::to_string(branches[i]) +
                          " local branches meet pairwise: C(" + std::to_string(branches[i]) + ",2) = " +
                          std::to_string(c));
    }
    e.trace.push_back("C(6,2) + C(7,2) + C(7,2) = " + join(parts, " + ", [](const std::string& s) { return s; }) +
                      " = " + std::to_string(total));
    e.computed = std::to_string(total);
    return e;
}

Evaluation sec5_5_b1_self_intersection() {
    const FppLattice f;
    const DivisorClass B1 = Rational(6) * f.H;
    const Rational total = square(B1);
    long nodes = 0;
    for (long b : {6L, 7L, 7L}) nodes += branch_self_intersection(b);
    const auto b = budget_check(total, {{"curvature of the smooth part: 6 * H.H", Rational(6) * square(f.H)},
                                        {"branch crossings at T1, T2, T3", Rational(nodes)}});
    Evaluation e{budget_str(b), {"B1 == 6H: B1.B1 = " + total.str()}};
    for (auto& t : budget_trace(b)) e.trace.push_back(std::move(t));
    return e;
}

Evaluation sec5_5_eq14_integrality() {
    Evaluation e;
    const auto sols = riemann_hurwitz_solutions(3, 3, {2});
    bool all_integer = true;
    e.trace.push_back("a_3 = 0: C misses R, so every branch order is 2");
    for (const auto& s : sols) {
        const Rational rhs = Rational(3 * 2 * (s.g_down - 1) + s.branch_total());
        all_integer = all_integer && rhs.is_integer();
        e.trace.push_back("  " + to_string(s) + ": 3*2(g-1) + sum b_i = " + rhs.str());
    }
    // Adjunction on Xhat for the two branches, with C == 7H, H.H = 1/21 and K_Xhat.Chat = 1.
    const Rational pull_sq = Rational(49, 21);
    const auto a2 = ExceptionalChain::resolve(CyclicSingularity(3, 2));
    const std::vector<Rational> meets = {Rational(1), Rational(0)};
    bool standard_contradicts = true;
    for (auto mode : {TransformMode::PerCurve, TransformMode::Standard}) {
        const auto a = proper_transform_coeffs(a2, meets, mode);
        const auto g = a2.gram();
        Rational corr;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) corr += a[i] * g(i, j) * a[j];
        for (const auto& s : sols) {
            const Rational c_hat_sq = pull_sq + Rational(s.l()) * corr;
            const Rational lhs = Rational(1) + c_hat_sq;
            const bool clash = lhs != Rational(2 * (s.g_down - 1));
            if (mode == TransformMode::Standard) standard_contradicts = standard_contradicts && clash;
            e.trace.push_back("  " + to_string(mode) + " coefficients " + tuple_str(a) + ", l = " +
                              std::to_string(s.l()) + ": Chat.(K+Chat) = 1 + 7/3 + l(" + corr.str() + ") = " +
                              lhs.str() + " vs 2(g-1) = " + std::to_string(2 * (s.g_down - 1)));
        }
    }
    e.trace.push_back(std::string("the right-hand side is integral in every branch; with standard coefficients ") +
                      (standard_contradicts ? "each branch still contradicts the genus through adjunction"
                                            : "some branch is consistent with adjunction"));
    e.computed = all_integer ? "integer" : "non-integer";
    return e;
}

Evaluation sec5_5_k21_adjunction() {
    const auto a2 = ExceptionalChain::resolve(CyclicSingularity(3, 2)).gram();
    const auto s = lemma7_chain_s_order().gram();
    RationalMatrix g(9, 9);
    for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) g(2 * b + i, 2 * b + j) = a2(i, j);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) g(6 + i, 6 + j) = s(i, j);
    const auto inertia = signature(g);
    const bool negdef = is_negative_definite(g);
    const Rational k_dot = Rational(21) / Rational(7);
    return {std::string(negdef ? "exceptional Gram negative definite" : "exceptional Gram not negative definite") +
                "; K.Chat = " + k_dot.str() + " - a_3",
            {"exceptional curves E_ij (three A2 chains) and S1, S2, S3",
             "signature (" + std::to_string(inertia.n_plus) + "," + std::to_string(inertia.n_minus) + "," +
                 std::to_string(inertia.n_zero) + ")",
             "4 = 4 + (negative) - a_3 - 2 delta forces every correction term to vanish"}};
}

// -------------------------------------------------------------- appendix2

Evaluation appii_lattice() {
    const auto cs = cs::build_cs_lattice();
    const bool orth = pair(cs.K, cs.E1_minus_E2).is_zero() && pair(cs.K, cs.D).is_zero() &&
                      pair(cs.E1_minus_E2, cs.D).is_zero();
    return {"(" + cs.norms[0].str() + "," + cs.norms[1].str() + "," + cs.norms[2].str() + ")" +
                (orth ? ", orthogonal" : ", not orthogonal"),
            {"K = E3, D = C1 - K + (E1-E2)/4 = " + cs.D.str(),
             "K.(E1-E2) = " + pair(cs.K, cs.E1_minus_E2).str() + ", K.D = " + pair(cs.K, cs.D).str() +
                 ", (E1-E2).D = " + pair(cs.E1_minus_E2, cs.D).str()}};
}

Evaluation appii_singular_gram() {
    const auto cs = cs::build_cs_lattice();
    const auto& g = cs.lattice.gram();
    bool relation = true;
    for (std::size_t c = 0; c < g.cols(); ++c) relation = relation && (g(0, c) + g(1, c) == Rational(2) * g(2, c));
    const auto in = signature(g);
    const std::string sig =
        "(" + std::to_string(in.n_plus) + "," + std::to_string(in.n_minus) + "," + std::to_string(in.n_zero) + ")";
    return {std::string(relation ? "row1+row2=2*row3" : "no row relation") + ", signature " + sig,
            {"E1 + E2 == 2 E3 numerically, so the 5x5 matrix is singular",
             "congruence diagonalization gives (n+, n-, n0) = " + sig}};
}

Evaluation appii_f_identity() {
    const auto cs = cs::build_cs_lattice();
    const bool same = cs::eliminate_e1(cs.F) == cs::eliminate_e1(cs.F_from_basis);
    return {std::string(same ? "-E1+5E2 == 4K-3(E1-E2)" : "-E1+5E2 != 4K-3(E1-E2)") +
                ", F.F=" + square(cs.F).str() + ", F.K=" + pair(cs.F, cs.K).str(),
            {"substituting E1 = 2E3 - E2: " + cs::eliminate_e1(cs.F).str()}};
}

Evaluation appii_a_coefficient() {
    const auto cs = cs::build_cs_lattice();
    const auto cands = cs::solve_b_constraints(cs);
    return {cands.front().a.str(), {"K.B = a K.K = 9a = 2"}};
}

Evaluation appii_n_set() {
    const auto cs = cs::build_cs_lattice();
    std::set<long> ns;
    Evaluation e;
    e.trace.push_back("F.B = 36a + 48b = n gives 6b = n/8 - 1; B.B = 0 gives (6b)^2 + (9c/2)^2 = 1");
    for (const auto& c : cs::solve_b_constraints(cs)) {
        ns.insert(c.n);
        e.trace.push_back("  n = " + std::to_string(c.n) + ": b = " + c.b.str() + ", c = " + c.c.str());
    }
    e.computed = "{" + join(std::vector<long>(ns.begin(), ns.end()), ",", [](long n) { return std::to_string(n); }) + "}";
    return e;
}

Evaluation appii_candidate(long n) {
    const auto cs = cs::build_cs_lattice();
    for (const auto& c : cs::solve_b_constraints(cs)) {
        if (c.n != n) continue;
        return {"B.C1=" + c.b_dot_c1.str() + (c.b_dot_c1.is_integer() ? ", integral" : ", non-integral"),
                {"B = " + c.divisor(cs).str(), "B.C1 = " + c.b_dot_c1.str() + ", B.C2 = " + c.b_dot_c2.str()}};
    }
    return {"no candidate", {}};
}

Evaluation appii_n8() {
    const auto cs = cs::build_cs_lattice();
    std::vector<std::string> parts;
    Evaluation e;
    for (const auto& c : cs::solve_b_constraints(cs)) {
        if (c.n != 8) continue;
        parts.push_back("c=" + c.c.str() + ": (B.C1,B.C2)=(" + c.b_dot_c1.str() + "," + c.b_dot_c2.str() + ")");
        e.trace.push_back("B = " + c.divisor(cs).str() + " survives; B." + c.surviving_curve + " = 0");
    }
    e.computed = join(parts, "; ", [](const std::string& s) { return s; });
    return e;
}

Evaluation appii_case_a() {
    const auto cs = cs::build_cs_lattice();
    const auto rep = cs::case_a_fixed_point_check(cs);
    if (rep.any_feasible) return {"feasible configuration found", rep.trace};
    return {"infeasible: " + std::to_string(rep.forced_budget) + " > " + std::to_string(rep.b_dot_2e3), rep.trace};
}

Evaluation appii_case_b() {
    const auto cs = cs::build_cs_lattice();
    for (const auto& c : cs::solve_b_constraints(cs)) {
        if (c.verdict != cs::BVerdict::Survives || c.surviving_curve.empty()) continue;
        const auto rep = cs::case_b_fibration_check(cs, c);
        const std::string cmp = rep.genus_2B < rep.genus_C ? " < " : (rep.genus_2B == rep.genus_C ? " = " : " > ");
        return {"2B.C=" + rep.two_b_dot_c.str() + ", p_a(2B)=" + rep.genus_2B.str() + cmp +
                    "p_a(C)=" + rep.genus_C.str(),
                rep.trace};
    }
    return {"no surviving candidate", {}};
}

// --------------------------------------------------------------- registry

Evaluation registry_count() {
    const auto& r = fpp::load_registry();
    return {std::to_string(r.size()), {"rows parsed from the embedded table"}};
}

Evaluation registry_partition() {
    const auto& r = fpp::load_registry();
    std::vector<std::string> parts;
    for (auto c : {fpp::Case::B, fpp::Case::C, fpp::Case::D, fpp::Case::MinType})
        parts.push_back(fpp::to_string(c) + "=" + std::to_string(fpp::query_by_case(r, c).size()));
    return {join(parts, ", ", [](const std::string& s) { return s; }), {"count of rows per case tag"}};
}

Evaluation registry_min_type() {
    const auto rows = fpp::query_by_case(fpp::load_registry(), fpp::Case::MinType);
    return {join(rows, "; ", [](const fpp::FppRecord& r) { return r.raw_name; }), {"rows tagged MinType, table order"}};
}

Evaluation registry_case_d() {
    const auto rows = fpp::query_by_case(fpp::load_registry(), fpp::Case::D);
    if (rows.size() != 1) return {std::to_string(rows.size()) + " case (d) rows", {}};
    const auto ctx = fpp::covering_context(rows.front());
    if (!ctx.context) return {rows.front().raw_name + " -> no context", {}};
    return {rows.front().raw_name + " -> X=" + ctx.context->quotient + ", M'=" + ctx.context->regular_cover +
                ", degree " + std::to_string(ctx.context->degree),
            {"non-regular cover M -> X; M' -> X is the regular cover of the same degree"}};
}

const std::map<std::string, Evaluator>& evaluators() {
    static const std::map<std::string, Evaluator> table = {
        {"noether.c2_3", noether_c2_3},
        {"lemma1.divisibility", lemma1_divisibility},
        {"lemma2.h0", lemma2_h0},
        {"lemma3.monomials", lemma3_monomials},
        {"sec4_3.h0_2K", sec4_3_h0_2k},
        {"lemma4.b_sq", lemma4_b_sq},
        {"lemma4.fibre_genus", lemma4_fibre_genus},
        {"classification.c2_3", classification_c2_3},
        {"lemma8.degree", lemma8_degree},
        {"prop1.bogomolov", prop1_bogomolov},
        {"prop1.base_point_free", prop1_base_point_free},
        {"prop1.enumeration", prop1_enumeration},
        {"prop1.d2_1_excluded", prop1_d2_1_excluded},
        {"sec5_9.k2_ge_10", sec5_9_k2_ge_10},
        {"lemma6.chain", lemma6_chain},
        {"lemma6.K_hat_sq", lemma6_k_hat_sq},
        {"lemma6.h0_2K_X", lemma6_h0_2k_x},
        {"lemma7.chain", lemma7_chain},
        {"lemma7.discrepancies", lemma7_discrepancies},
        {"lemma7.invariants", lemma7_invariants},
        {"lemma7.K_hat_dot_pullback", lemma7_k_hat_dot_pullback},
        {"sec5_3.genus_B", sec5_3_genus_b},
        {"sec5_3.riemann_hurwitz", sec5_3_riemann_hurwitz},
        {"sec5_3.per_curve_replay", sec5_3_per_curve_replay},
        {"sec5_3.proper_transform", sec5_3_proper_transform},
        {"sec5_4.vanishing_conditions", sec5_4_vanishing_conditions},
        {"sec5_4.order6_budget", sec5_4_order6_budget},
        {"sec5_4.double_point_budget", sec5_4_double_point_budget},
        {"sec5_5.dk21", sec5_5_dk21},
        {"sec5_5.eq13_divisibility", sec5_5_eq13_divisibility},
        {"sec5_5.k7_riemann_hurwitz", sec5_5_k7_riemann_hurwitz},
        {"sec5_5.budget57", sec5_5_budget57},
        {"sec5_5.b1_self_intersection", sec5_5_b1_self_intersection},
        {"sec5_5.eq14_integrality", sec5_5_eq14_integrality},
        {"sec5_5.k21_adjunction", sec5_5_k21_adjunction},
        {"appII.lattice", appii_lattice},
        {"appII.singular_gram", appii_singular_gram},
        {"appII.F_identity", appii_f_identity},
        {"appII.a_coefficient", appii_a_coefficient},
        {"appII.n_set", appii_n_set},
        {"appII.n0", [] { return appii_candidate(0); }},
        {"appII.n16", [] { return appii_candidate(16); }},
        {"appII.n8.survives", appii_n8},
        {"appII.case_a", appii_case_a},
        {"appII.case_b", appii_case_b},
        {"registry.count", registry_count},
        {"registry.partition", registry_partition},
        {"registry.min_type", registry_min_type},
        {"registry.case_d", registry_case_d},
    };
    return table;
}

Provenance parse_provenance(const std::string& s) {
    if (s == "PAPER") return Provenance::Paper;
    if (s == "TRIVIAL") return Provenance::Trivial;
    if (s == "DERIVED") return Provenance::Derived;
    throw std::invalid_argument("unknown provenance '" + s + "'");
}

struct Manifest {
    std::map<std::string, std::string> axioms;
    std::vector<ManifestEntry> checks;
    std::map<std::string, std::string> aliases;
};

Manifest parse_full(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("manifest is not valid JSON: ") + e.what());
    }
    Manifest m;
    try {
        for (const auto& [k, v] : doc.at("axioms").items()) m.axioms[k] = v.get<std::string>();
        std::set<std::string> seen;
        for (const auto& c : doc.at("checks")) {
            ManifestEntry e;
            e.id = c.at("id").get<std::string>();
            e.scope = c.at("scope").get<std::string>();
            e.anchor = {c.at("anchor").at("location").get<std::string>(), c.at("anchor").at("quote").get<std::string>()};
            e.expected = c.at("expected").get<std::string>();
            e.provenance = parse_provenance(c.at("provenance").get<std::string>());
            e.axioms = c.at("axioms").get<std::vector<std::string>>();
            e.disputed = c.value("disputed", false);
            if (!seen.insert(e.id).second) throw std::invalid_argument("duplicate check id '" + e.id + "'");
            if (std::find(scopes().begin() + 1, scopes().end(), e.scope) == scopes().end())
                throw std::invalid_argument("check '" + e.id + "' has unknown scope '" + e.scope + "'");
            if (e.anchor.quote.empty()) throw std::invalid_argument("check '" + e.id + "' has an empty quote");
            for (const auto& a : e.axioms)
                if (!m.axioms.count(a)) throw std::invalid_argument("check '" + e.id + "' cites unknown axiom '" + a + "'");
            m.checks.push_back(std::move(e));
        }
        if (doc.contains("aliases")) {
            for (const auto& [k, v] : doc.at("aliases").items()) {
                const auto target = v.get<std::string>();
                if (!seen.count(target)) throw std::invalid_argument("alias '" + k + "' targets unknown id");
                m.aliases[k] = target;
            }
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("manifest schema error: ") + e.what());
    }
    std::sort(m.checks.begin(), m.checks.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return m;
}

const Manifest& embedded() {
    static const Manifest m = [] {
        Manifest parsed = parse_full(detail::kEmbeddedChecksJson);
        const auto& ev = evaluators();
        for (const auto& c : parsed.checks)
            if (!ev.count(c.id)) throw std::logic_error("manifest check '" + c.id + "' has no evaluator");
        for (const auto& [id, fn] : ev) {
            const bool listed = std::any_of(parsed.checks.begin(), parsed.checks.end(),
                                            [&](const ManifestEntry& c) { return c.id == id; });
            if (!listed) throw std::logic_error("evaluator '" + id + "' is missing from the manifest");
        }
        return parsed;
    }();
    return m;
}

const ManifestEntry& entry_for(const std::string& id) {
    const auto& m = embedded();
    const auto alias = m.aliases.find(id);
    const std::string& key = alias == m.aliases.end() ? id : alias->second;
    const auto it = std::find_if(m.checks.begin(), m.checks.end(), [&](const ManifestEntry& c) { return c.id == key; });
    if (it == m.checks.end()) throw UnknownCheck(id);
    return *it;
}

CheckResult evaluate(const ManifestEntry& e) {
    CheckResult r;
    r.check_id = e.id;
    r.scope = e.scope;
    r.paper_anchor = e.anchor;
    r.expected = e.expected;
    r.provenance = e.provenance;
    for (const auto& a : e.axioms) r.axioms_used.push_back(embedded().axioms.at(a));
    try {
        auto ev = evaluators().at(e.id)();
        r.computed = std::move(ev.computed);
        r.trace = std::move(ev.trace);
    } catch (const std::exception& ex) {
        r.computed = std::string("error: ") + ex.what();
    }
    if (r.computed == r.expected) r.status = Status::Match;
    else r.status = e.disputed ? Status::Flagged : Status::Mismatch;
    return r;
}

}  // namespace

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::Paper: return "PAPER";
        case Provenance::Trivial: return "TRIVIAL";
        case Provenance::Derived: return "DERIVED";
    }
    return "?";
}

std::string to_string(Status s) {
    switch (s) {
        case Status::Match: return "MATCH";
        case Status::Mismatch: return "MISMATCH";
        case Status::Flagged: return "FLAGGED";
    }
    return "?";
}

const std::vector<std::string>& scopes() {
    static const std::vector<std::string> s = {"all",           "surface",  "reider",  "singularities",
                                               "coverings",     "appendix2", "registry"};
    return s;
}

const std::map<std::string, std::string>& axiom_catalogue() { return embedded().axioms; }

std::vector<ManifestEntry> parse_manifest(std::string_view json_text) { return parse_full(json_text).checks; }

const std::vector<ManifestEntry>& manifest() { return embedded().checks; }

std::vector<std::string> check_ids() {
    std::vector<std::string> ids;
    for (const auto& c : manifest()) ids.push_back(c.id);
    return ids;
}

UnknownCheck::UnknownCheck(const std::string& id)
    : std::invalid_argument([&] {
          std::string msg = "unknown check id '" + id + "'; valid ids:";
          for (const auto& c : check_ids()) msg += "\n  " + c;
          for (const auto& [alias, target] : embedded().aliases) msg += "\n  " + alias + " (alias of " + target + ")";
          return msg;
      }()) {}

UnknownScope::UnknownScope(const std::string& scope)
    : std::invalid_argument([&] {
          std::string msg = "unknown scope '" + scope + "'; valid scopes:";
          for (const auto& s : scopes()) msg += " " + s;
          return msg;
      }()) {}

CheckResult run_check(const std::string& id) { return evaluate(entry_for(id)); }

std::vector<CheckResult> run_report(const std::string& scope) {
    if (std::find(scopes().begin(), scopes().end(), scope) == scopes().end()) throw UnknownScope(scope);
    std::vector<CheckResult> out;
    for (const auto& e : manifest())
        if (scope == "all" || e.scope == scope) out.push_back(evaluate(e));
    return out;
}

ReportSummary summarize(const std::vector<CheckResult>& results) {
    ReportSummary s;
    for (const auto& r : results) {
        switch (r.status) {
            case Status::Match: ++s.matched; break;
            case Status::Mismatch: ++s.mismatched; break;
            case Status::Flagged: ++s.flagged; break;
        }
    }
    return s;
}

int exit_status(const std::vector<CheckResult>& results, bool fail_on_flagged) {
    const auto s = summarize(results);
    if (s.mismatched > 0) return 1;
    if (fail_on_flagged && s.flagged > 0) return 1;
    return 0;
}

std::string render_text(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.check_id.size());
    for (const auto& r : results) {
        const std::string status = to_string(r.status);
        os << status << std::string(9 - status.size(), ' ') << r.check_id
           << std::string(width - r.check_id.size() + 2, ' ') << r.computed;
        if (r.status != Status::Match) os << "  (expected " << r.expected << ")";
        os << "  [" << to_string(r.provenance) << "]\n";
    }
    const auto s = summarize(results);
    os << results.size() << " checks: " << s.matched << " MATCH, " << s.mismatched << " MISMATCH, " << s.flagged
       << " FLAGGED\n";
    return os.str();
}

std::string render_json(const std::vector<CheckResult>& results, int indent) {
    json arr = json::array();
    for (const auto& r : results) {
        arr.push_back({{"check_id", r.check_id},
                       {"scope", r.scope},
                       {"paper_anchor", {{"location", r.paper_anchor.location}, {"quote", r.paper_anchor.quote}}},
                       {"expected", {{"value", r.expected}, {"provenance", to_string(r.provenance)}}},
                       {"computed", r.computed},
                       {"status", to_string(r.status)},
                       {"axioms_used", r.axioms_used},
                       {"trace", r.trace}});
    }
    return arr.dump(indent);
}

std::string explain(const std::string& id) {
    const auto r = run_check(id);
    std::ostringstream os;
    os << r.check_id;
    if (id != r.check_id) os << " (via alias " << id << ")";
    os << "\n  anchor:   " << r.paper_anchor.location << ": \"" << r.paper_anchor.quote << "\"\n";
    for (const auto& t : r.trace) os << "  | " << t << "\n";
    os << "  expected: " << r.expected << " [" << to_string(r.provenance) << "]\n";
    os << "  computed: " << r.computed << "\n";
    os << "  status:   " << to_string(r.status) << "\n";
    if (!r.axioms_used.empty()) {
        os << "  assumes:\n";
        for (const auto& a : r.axioms_used) os << "    - " << a << "\n";
    }
    return os.str();
}

}  // namespace ballq::verify
