#pragma once

/**
 * @file covering.hpp
 * @brief Riemann-Hurwitz enumeration, covering-degree factorizations and
 *        intersection-budget checks.
 */

#include "ballq/rational.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ballq {

struct RamificationSolution {
    long g_down = 0;
    std::vector<long> branch_orders;  // non-decreasing; zeros never appear

    long l() const { return static_cast<long>(branch_orders.size()); }
    long branch_total() const;

    friend bool operator==(const RamificationSolution&, const RamificationSolution&) = default;
};

/// All (g_down, {b_i}) with 2(g_up - 1) = degree * 2(g_down - 1) + sum b_i,
/// g_down >= 0 and every b_i drawn from allowed_b (non-positive values are
/// ignored). Ordered by g_down descending, then l ascending, then branch
/// orders lexicographically. max_points caps l when the number of possible
/// ramification points is known.
std::vector<RamificationSolution> riemann_hurwitz_solutions(long g_up, long degree,
                                                            const std::set<long>& allowed_b,
                                                            std::optional<long> max_points = std::nullopt);

/// Ordered factorizations d * k = total, ascending in d.
std::vector<std::pair<long, long>> degree_splittings(long total);

/// True iff k / modulus - offset is an integer.
bool divisibility_filter(const Rational& k, long modulus, const Rational& offset = Rational(0));

struct BudgetContribution {
    std::string label;
    Rational amount;
};

struct BudgetCheck {
    Rational total;
    std::vector<BudgetContribution> contributions;
    bool feasible = true;

    Rational demand() const;
};

/// feasible iff the sum of contributions does not exceed total.
BudgetCheck budget_check(const Rational& total, std::vector<BudgetContribution> contributions);

/// C(branches, 2): local intersection of pairwise distinct smooth branches.
long branch_self_intersection(long branches);

std::string to_string(const RamificationSolution& s);

}  // namespace ballq
