#pragma once

// Independent reference implementations used to pin derived values. None of
// these call into the library's algorithms; they use brute force, machine
// integers or floating point so that agreement is meaningful.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

// (d1, d2, delta, deg_W) satisfying the raw Reider constraints, brute force
// over d1, delta in [-2K^2, 2K^2]; d2 and deg_W follow from L + B = K and
// L.B + deg W = deg Z.
inline std::set<std::tuple<long, long, long, long>> reider(long k_sq, long deg_z, bool hyperbolic) {
    std::set<std::tuple<long, long, long, long>> out;
    const long r = 2 * k_sq;
    for (long d1 = -r; d1 <= r; ++d1)
        for (long delta = -r; delta <= r; ++delta) {
            const long d2 = k_sq - d1;
            const long w = deg_z - delta;
            if (w < 0) continue;
            if (!(d1 > d2 && d2 > 0)) continue;       // (L - B).H > 0, B effective
            const long l_minus_b_sq = (d1 - delta) - 2 * delta + (d2 - delta);
            if (!(l_minus_b_sq > 4 * w)) continue;
            if (d1 * d2 - delta * (d1 + d2) > 0) continue;  // Hodge index
            const long two_pa_minus_2 = delta + 2 * (d2 - delta);
            if (two_pa_minus_2 % 2 != 0) continue;
            if (hyperbolic && 1 + two_pa_minus_2 / 2 <= 1) continue;
            out.insert({d1, d2, delta, w});
        }
    return out;
}

// All (g_down, sorted branch multiset) with 2(g_up-1) = deg*2(g_down-1) + sum b,
// enumerated as count vectors over the allowed orders.
inline std::set<std::pair<long, std::vector<long>>> riemann_hurwitz(long g_up, long degree,
                                                                    const std::vector<long>& allowed,
                                                                    long max_points = 1000) {
    std::set<std::pair<long, std::vector<long>>> out;
    const long lhs = 2 * (g_up - 1);
    for (long g = 0; g <= g_up + 1; ++g) {
        const long rest = lhs - degree * 2 * (g - 1);
        if (rest < 0) continue;
        std::vector<long> counts(allowed.size(), 0);
        // odometer over counts[i] in [0, rest / allowed[i]]
        while (true) {
            long sum = 0, pts = 0;
            for (std::size_t i = 0; i < allowed.size(); ++i) {
                sum += counts[i] * allowed[i];
                pts += counts[i];
            }
            if (sum == rest && pts <= max_points) {
                std::vector<long> b;
                for (std::size_t i = 0; i < allowed.size(); ++i) b.insert(b.end(), counts[i], allowed[i]);
                std::sort(b.begin(), b.end());
                out.insert({g, b});
            }
            std::size_t i = 0;
            while (i < counts.size()) {
                if (++counts[i] * allowed[i] <= rest) break;
                counts[i] = 0;
                ++i;
            }
            if (i == counts.size()) break;
        }
    }
    return out;
}

// n/q from a Hirzebruch-Jung expansion [b1, ..., br] with machine integers.
inline std::pair<long, long> hj_value(const std::vector<long>& b) {
    long num = b.back(), den = 1;
    for (auto it = b.rbegin() + 1; it != b.rend(); ++it) {
        const long next_num = *it * num - den;
        den = num;
        num = next_num;
    }
    const long g = std::gcd(num, den);
    return {num / g, den / g};
}

struct Inertia {
    std::size_t plus = 0, minus = 0, zero = 0;
};

// Eigenvalue count of a small symmetric matrix in double precision.
inline Inertia eigen_signature(const Eigen::MatrixXd& m, double tol = 1e-9) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    Inertia in;
    for (double ev : es.eigenvalues()) {
        if (ev > tol) ++in.plus;
        else if (ev < -tol) ++in.minus;
        else ++in.zero;
    }
    return in;
}

// Solves G a = rhs in doubles.
inline Eigen::VectorXd solve(const Eigen::MatrixXd& g, const Eigen::VectorXd& rhs) {
    return g.fullPivLu().solve(rhs);
}

inline Eigen::MatrixXd chain_gram(const std::vector<long>& self_int) {
    const auto r = static_cast<Eigen::Index>(self_int.size());
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(r, r);
    for (Eigen::Index i = 0; i < r; ++i) {
        g(i, i) = static_cast<double>(self_int[static_cast<std::size_t>(i)]);
        if (i + 1 < r) g(i, i + 1) = g(i + 1, i) = 1.0;
    }
    return g;
}

inline long divisor_count(long n) {
    long c = 0;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) ++c;
    return c;
}

inline bool is_square(long v) {
    if (v < 0) return false;
    for (long r = 0; r * r <= v; ++r)
        if (r * r == v) return true;
    return false;
}

inline long binom(long n, long k) {
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace oracle
