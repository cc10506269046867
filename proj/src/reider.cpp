#include "ballq/reider.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace ballq {

bool bogomolov_unstable(const ExtensionData& ext) {
    return ext.c1_sq - Rational(4 * ext.c2) >= Rational(1);
}

Rational hodge_delta(long d1, long d2, long delta) {
    return Rational(d1) * Rational(d2) - Rational(delta) * Rational(d1 + d2);
}

CurveGenusFilter hyperbolic_filter() {
    return [](const Rational& p_a) { return p_a > Rational(1); };
}

CurveGenusFilter no_genus_filter() {
    return [](const Rational&) { return true; };
}

std::vector<ReiderCandidate> enumerate_candidates(long k_sq, long deg_z, const CurveGenusFilter& genus_ok) {
    if (k_sq < 1) throw std::invalid_argument("K^2 must be positive");
    if (deg_z < 1) throw std::invalid_argument("deg Z must be positive");

    std::vector<ReiderCandidate> out;
    for (long d2 = 1; 2 * d2 < k_sq; ++d2) {
        const long d1 = k_sq - d2;
        for (long delta = 1; delta <= deg_z; ++delta) {
            ReiderCandidate c;
            c.d1 = d1;
            c.d2 = d2;
            c.delta = delta;
            c.deg_W = deg_z - delta;
            // K = L + B paired with B gives B.B = K.B - L.B.
            c.B_sq = Rational(d2 - delta);
            c.p_a = Rational(1) + (Rational(d2) + c.B_sq) / Rational(2);

            // (L - B)^2 = L^2 - 2 L.B + B^2 = (d1 - delta) - 2 delta + (d2 - delta).
            const long l_minus_b_sq = k_sq - 4 * delta;
            const Rational hodge = hodge_delta(d1, d2, delta);
            if (l_minus_b_sq <= 4 * c.deg_W) {
                c.reason = "(L-B)^2 <= 4 deg W";
            } else if (hodge.sign() > 0) {
                c.reason = "Hodge index: d1*d2 - delta*(d1+d2) > 0";
            } else if (!c.p_a.is_integer()) {
                c.reason = "parity: 2p_a - 2 = 2*d2 - delta is odd";
            } else if (!genus_ok(c.p_a)) {
                c.reason = "genus filter: p_a = " + c.p_a.str();
            } else {
                c.tag = hodge.is_zero() ? ReiderCase::CaseII : ReiderCase::CaseI;
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

std::vector<ReiderCandidate> enumerate_destabilizations(long k_sq, long deg_z, const CurveGenusFilter& genus_ok) {
    std::vector<ReiderCandidate> out;
    for (auto& c : enumerate_candidates(k_sq, deg_z, genus_ok)) {
        if (c.tag == ReiderCase::Rejected) continue;
        assert(c.d1 + c.d2 == k_sq && c.d1 > c.d2 && c.d2 > 0);
        assert(c.delta + c.deg_W == deg_z && c.delta > 0 && c.delta % 2 == 0);
        assert(hodge_delta(c.d1, c.d2, c.delta).sign() <= 0);
        out.push_back(std::move(c));
    }
    return out;
}

std::string to_string(ReiderCase c) {
    switch (c) {
        case ReiderCase::CaseI: return "CaseI";
        case ReiderCase::CaseII: return "CaseII";
        case ReiderCase::Rejected: return "Rejected";
    }
    return "?";
}

std::string to_string(const ReiderCandidate& c) {
    std::ostringstream os;
    os << to_string(c.tag) << "(d1=" << c.d1 << ",d2=" << c.d2 << ",delta=" << c.delta
       << ",degW=" << c.deg_W << ",B2=" << c.B_sq << ",pa=" << c.p_a << ")";
    if (!c.reason.empty()) os << " [" << c.reason << "]";
    return os.str();
}

}  // namespace ballq
