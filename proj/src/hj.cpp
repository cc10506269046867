#include "ballq/hj.hpp"

#include "ballq/covering.hpp"
#include "ballq/surface.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ballq {

CyclicSingularity::CyclicSingularity(long n_, long q_) : n(n_), q(q_) {
    if (n < 2) throw std::invalid_argument("cyclic quotient order must be >= 2");
    if (q < 1 || q >= n) throw std::invalid_argument("weight q must satisfy 1 <= q < n");
    if (std::gcd(n, q) != 1) throw std::invalid_argument("gcd(n, q) must be 1");
}

std::string CyclicSingularity::str() const {
    return "1/" + std::to_string(n) + "(1," + std::to_string(q) + ")";
}

std::vector<long> hj_expand(const CyclicSingularity& sing) {
    std::vector<long> out;
    long num = sing.n;
    long den = sing.q;
    while (den > 0) {
        const long b = (num + den - 1) / den;  // ceiling
        out.push_back(b);
        const long next = b * den - num;
        num = den;
        den = next;
    }
    return out;
}

Rational hj_fraction(std::span<const long> entries) {
    if (entries.empty()) throw std::invalid_argument("empty continued fraction");
    Rational value(entries.back());
    for (auto it = entries.rbegin() + 1; it != entries.rend(); ++it) {
        value = Rational(*it) - Rational(1) / value;
    }
    return value;
}

ExceptionalChain::ExceptionalChain(std::vector<long> self_intersections)
    : self_intersections_(std::move(self_intersections)) {
    if (self_intersections_.empty()) throw std::invalid_argument("exceptional chain must be nonempty");
    for (long s : self_intersections_)
        if (s > -2) throw std::invalid_argument("chain curves must have self-intersection <= -2");
}

ExceptionalChain ExceptionalChain::resolve(const CyclicSingularity& sing, ChainOrientation orientation) {
    std::vector<long> si;
    for (long b : hj_expand(sing)) si.push_back(-b);
    if (orientation == ChainOrientation::Reversed) std::reverse(si.begin(), si.end());
    return ExceptionalChain(std::move(si));
}

RationalMatrix ExceptionalChain::gram() const {
    const std::size_t r = length();
    RationalMatrix g(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        g(i, i) = Rational(self_intersections_[i]);
        if (i + 1 < r) {
            g(i, i + 1) = 1;
            g(i + 1, i) = 1;
        }
    }
    return g;
}

ExceptionalChain ExceptionalChain::reversed() const {
    std::vector<long> si(self_intersections_.rbegin(), self_intersections_.rend());
    return ExceptionalChain(std::move(si));
}

std::vector<Rational> ExceptionalChain::canonical_degrees() const {
    std::vector<Rational> out;
    for (long s : self_intersections_) out.emplace_back(-2 - s);
    return out;
}

std::vector<Rational> discrepancies(const ExceptionalChain& chain) {
    std::vector<Rational> rhs;
    for (const auto& k : chain.canonical_degrees()) rhs.push_back(-k);
    auto a = solve_linear(chain.gram(), rhs);
    for ([[maybe_unused]] const auto& x : a) assert(x >= Rational(0) && x < Rational(1));
    return a;
}

Rational canonical_correction(const ExceptionalChain& chain) {
    const auto a = discrepancies(chain);
    const auto g = chain.gram();
    Rational total;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) total += a[i] * g(i, j) * a[j];
    return total;
}

ResolutionInvariants resolution_invariants(const Rational& k_x_sq, const Rational& e_x,
                                           std::span<const CyclicSingularity> sings) {
    ResolutionInvariants out{k_x_sq, e_x};
    for (const auto& s : sings) {
        const auto chain = ExceptionalChain::resolve(s);
        out.K_hat_sq += canonical_correction(chain);
        out.c2_hat += Rational(static_cast<long>(chain.length()));
    }
    return out;
}

std::string to_string(TransformMode mode) {
    return mode == TransformMode::Standard ? "standard" : "per-curve";
}

std::vector<Rational> proper_transform_coeffs(const ExceptionalChain& chain, std::span<const Rational> meets,
                                              TransformMode mode) {
    if (meets.size() != chain.length()) throw std::invalid_argument("meets must have one entry per chain curve");
    for (const auto& m : meets)
        if (m.sign() < 0) throw std::invalid_argument("intersection multiplicities must be non-negative");

    if (mode == TransformMode::PerCurve) {
        std::vector<Rational> a;
        for (std::size_t i = 0; i < meets.size(); ++i) {
            a.push_back(-meets[i] / Rational(chain.self_intersections()[i]));
        }
        return a;
    }
    std::vector<Rational> rhs;
    for (const auto& m : meets) rhs.push_back(-m);
    return solve_linear(chain.gram(), rhs);
}

namespace {

std::string join(const std::vector<Rational>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
}

}  // namespace

EllipticReplay replay_elliptic_adjunction(TransformMode mode, bool through_singular_points) {
    EllipticReplay r;
    r.mode = mode;
    r.through_singular_points = through_singular_points;

    // Genus of B on the fake projective plane: B^2 = 1, K_M = 3B numerically.
    const IntersectionLattice fpp({"B"}, RationalMatrix{{Rational(1)}});
    const DivisorClass B = fpp.basis("B");
    const DivisorClass K_M = Rational(3) * B;
    r.genus_B = arithmetic_genus(B, K_M);
    r.trace.push_back("p_a(B) = 1 + B.(K+B)/2 = 1 + (" + pair(B, K_M).str() + " + " + square(B).str() +
                      ")/2 = " + r.genus_B.str());

    // B -> C = B/Z3, ramified only at the (at most three) isolated fixed points, b_i = 2.
    const auto rh = riemann_hurwitz_solutions(r.genus_B.to_long(), 3, {2}, 3);
    assert(rh.size() == 1);
    r.genus_C = rh.front().g_down;
    r.ramification_points = rh.front().l();
    r.trace.push_back("Riemann-Hurwitz 2(3-1) = 3*2(g-1) + sum b_i, b_i = 2, l <= 3: " + to_string(rh.front()));

    r.k_dot_c = pair(K_M, B) / Rational(3);
    r.trace.push_back("K_X.C = K_M.B/3 = " + r.k_dot_c.str());

    const ExceptionalChain a2 = ExceptionalChain::resolve(CyclicSingularity(3, 2));
    const std::vector<Rational> meets = {Rational(1), Rational(0)};
    const std::size_t chains_met = through_singular_points ? 2 : 0;

    if (mode == TransformMode::Standard) {
        // X = M/Z3 has Picard number one: C == H_X with K_X = 3 H_X and K_X^2 = 3.
        std::vector<std::string> labels = {"H"};
        for (std::size_t i = 1; i <= chains_met; ++i) {
            labels.push_back("E" + std::to_string(i) + "1");
            labels.push_back("E" + std::to_string(i) + "2");
        }
        RationalMatrix g(labels.size(), labels.size());
        g(0, 0) = Rational(1, 3);
        const auto block = a2.gram();
        for (std::size_t c = 0; c < chains_met; ++c)
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) g(1 + 2 * c + i, 1 + 2 * c + j) = block(i, j);
        const IntersectionLattice xhat(labels, g);

        const DivisorClass pullback_c = xhat.basis("H");
        const DivisorClass k_hat = Rational(3) * xhat.basis("H");  // du Val: K_Xhat = pi^*K_X
        DivisorClass c_hat = pullback_c;
        DivisorClass exceptional = xhat.zero();
        for (std::size_t c = 1; c <= chains_met; ++c) {
            auto a = proper_transform_coeffs(a2, meets, mode);
            exceptional += a[0] * xhat.basis("E" + std::to_string(c) + "1");
            exceptional += a[1] * xhat.basis("E" + std::to_string(c) + "2");
            r.coeffs.push_back(std::move(a));
        }
        c_hat -= exceptional;
        r.pullback_c_sq = square(pullback_c);
        r.correction = square(exceptional);
        r.c_hat_sq = square(c_hat);
        assert(pair(k_hat, c_hat) == r.k_dot_c);
        r.two_g_minus_2 = pair(c_hat, k_hat + c_hat);
    } else {
        // Scalar replay with the per-curve coefficient and pi^*C.pi^*C = 1.
        r.pullback_c_sq = Rational(1);
        for (std::size_t c = 0; c < chains_met; ++c) {
            auto a = proper_transform_coeffs(a2, meets, mode);
            for (std::size_t i = 0; i < a.size(); ++i)
                r.correction += a[i] * a[i] * Rational(a2.self_intersections()[i]);
            r.coeffs.push_back(std::move(a));
        }
        r.c_hat_sq = r.pullback_c_sq + r.correction;
        r.two_g_minus_2 = r.k_dot_c + r.c_hat_sq;
    }

    for (std::size_t c = 0; c < r.coeffs.size(); ++c) {
        r.trace.push_back("chain " + std::to_string(c + 1) + " (" + to_string(mode) +
                          "): coefficients a = " + join(r.coeffs[c]));
    }
    r.trace.push_back("Chat.Chat = pi^*C.pi^*C + (sum a E)^2 = " + r.pullback_c_sq.str() + " + (" +
                      r.correction.str() + ") = " + r.c_hat_sq.str());
    r.trace.push_back("2(g(Chat)-1) = K_X.C + Chat.Chat = " + r.two_g_minus_2.str() + " versus 2(g(C)-1) = " +
                      std::to_string(2 * (r.genus_C - 1)));
    return r;
}

}  // namespace ballq
