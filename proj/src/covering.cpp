#include "ballq/covering.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ballq {

long RamificationSolution::branch_total() const {
    return std::accumulate(branch_orders.begin(), branch_orders.end(), 0L);
}

namespace {

// Non-decreasing multisets from `values` (ascending) summing to `remaining`.
void partitions(const std::vector<long>& values, std::size_t start, long remaining, long max_len,
                std::vector<long>& current, std::vector<std::vector<long>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    if (static_cast<long>(current.size()) == max_len) return;
    for (std::size_t i = start; i < values.size(); ++i) {
        if (values[i] > remaining) break;
        current.push_back(values[i]);
        partitions(values, i, remaining - values[i], max_len, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<RamificationSolution> riemann_hurwitz_solutions(long g_up, long degree, const std::set<long>& allowed_b,
                                                            std::optional<long> max_points) {
    if (g_up < 0) throw std::invalid_argument("g_up must be non-negative");
    if (degree < 1) throw std::invalid_argument("degree must be positive");

    std::vector<long> values;
    for (long b : allowed_b)
        if (b > 0) values.push_back(b);

    const long lhs = 2 * (g_up - 1);
    const long max_len = max_points.value_or(lhs + 2 * degree);

    std::vector<RamificationSolution> out;
    // degree*2(g_down - 1) <= lhs bounds g_down from above.
    const long g_max = (lhs + 2 * degree) / (2 * degree);
    for (long g = g_max; g >= 0; --g) {
        const long remaining = lhs - degree * 2 * (g - 1);
        if (remaining < 0) continue;
        std::vector<std::vector<long>> parts;
        std::vector<long> current;
        partitions(values, 0, remaining, max_len, current, parts);
        std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        for (auto& p : parts) out.push_back({g, std::move(p)});
    }
    return out;
}

std::vector<std::pair<long, long>> degree_splittings(long total) {
    if (total < 1) throw std::invalid_argument("total must be positive");
    std::vector<std::pair<long, long>> out;
    for (long d = 1; d <= total; ++d)
        if (total % d == 0) out.emplace_back(d, total / d);
    return out;
}

bool divisibility_filter(const Rational& k, long modulus, const Rational& offset) {
    if (modulus == 0) throw std::invalid_argument("modulus must be nonzero");
    return (k / Rational(modulus) - offset).is_integer();
}

Rational BudgetCheck::demand() const {
    Rational sum;
    for (const auto& c : contributions) sum += c.amount;
    return sum;
}

BudgetCheck budget_check(const Rational& total, std::vector<BudgetContribution> contributions) {
    BudgetCheck b{total, std::move(contributions), true};
    b.feasible = b.demand() <= total;
    return b;
}

long branch_self_intersection(long branches) {
    if (branches < 0) throw std::invalid_argument("branch count must be non-negative");
    return branches * (branches - 1) / 2;
}

std::string to_string(const RamificationSolution& s) {
    std::ostringstream os;
    os << "g=" << s.g_down << ",l=" << s.l() << ",b={";
    for (std::size_t i = 0; i < s.branch_orders.size(); ++i) os << (i ? "," : "") << s.branch_orders[i];
    os << "}";
    return os.str();
}

}  // namespace ballq
