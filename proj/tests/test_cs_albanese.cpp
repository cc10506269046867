#include "ballq/cs_albanese.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace ballq;
using namespace ballq::cs;

TEST_CASE("lattice data and checksum") {
    const auto c = build_cs_lattice();
    CHECK(gram_checksum(c.lattice.gram()) == kGramChecksum);
    CHECK(c.norms == std::array<Rational, 3>{Rational(9), Rational(-16), Rational(-9)});
    CHECK(square(c.F).is_zero());
    CHECK(pair(c.F, c.K) == Rational(36));
    CHECK(eliminate_e1(c.F) == eliminate_e1(c.F_from_basis));
}

TEST_CASE("gram matrix is degenerate with signature (1,2,2)") {
    const auto c = build_cs_lattice();
    const auto& g = c.lattice.gram();
    for (std::size_t j = 0; j < 5; ++j) CHECK(g(0, j) + g(1, j) == Rational(2) * g(2, j));
    const auto s = signature(g);
    CHECK(s == Inertia{1, 2, 2});

    Eigen::MatrixXd m(5, 5);
    for (Eigen::Index i = 0; i < 5; ++i)
        for (Eigen::Index j = 0; j < 5; ++j)
            m(i, j) = g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).raw().get_d();
    const auto o = oracle::eigen_signature(m);
    CHECK(o.plus == 1);
    CHECK(o.minus == 2);
    CHECK(o.zero == 2);
}

TEST_CASE("candidate n values match an independent square scan") {
    // With a = 2/9 and b = (n/8 - 1)/6, c^2 = (16 - n) n / 576.
    std::set<long> scan;
    for (long n = 0; n <= 16; ++n)
        if (oracle::is_square((16 - n) * n)) scan.insert(n);
    CHECK(scan == std::set<long>{0, 8, 16});

    const auto c = build_cs_lattice();
    std::set<long> lib;
    for (const auto& cand : solve_b_constraints(c)) lib.insert(cand.n);
    CHECK(lib == scan);
}

TEST_CASE("integrality eliminates n = 0 and n = 16 but not n = 8") {
    const auto c = build_cs_lattice();
    const auto cands = solve_b_constraints(c);
    REQUIRE(cands.size() == 4);
    int survivors = 0;
    for (const auto& cand : cands) {
        CHECK(cand.a == Rational(2, 9));
        if (cand.n == 0) {
            CHECK(cand.b_dot_c1 == Rational(4, 3));
            CHECK(cand.verdict == BVerdict::IntegralityFail);
        } else if (cand.n == 16) {
            CHECK(cand.b_dot_c1 == Rational(8, 3));
            CHECK(cand.verdict == BVerdict::IntegralityFail);
        } else {
            CHECK(cand.n == 8);
            CHECK(cand.verdict == BVerdict::Survives);
            std::set<Rational> dots = {cand.b_dot_c1, cand.b_dot_c2};
            CHECK(dots == std::set<Rational>{Rational(0), Rational(4)});
            ++survivors;
        }
    }
    CHECK(survivors == 2);
}

TEST_CASE("case (a): fixed points force more than the budget") {
    const auto c = build_cs_lattice();
    const auto rep = case_a_fixed_point_check(c);
    CHECK(rep.forced_budget == 12);
    CHECK(rep.b_dot_2e3 == 4);
    CHECK(rep.configurations.size() == 14);
}

TEST_CASE("case (b): genus comparison along the fibration") {
    const auto c = build_cs_lattice();
    for (const auto& cand : solve_b_constraints(c)) {
        if (cand.verdict != BVerdict::Survives) {
            CHECK_THROWS_AS(case_b_fibration_check(c, cand), std::invalid_argument);
            continue;
        }
        const auto rep = case_b_fibration_check(c, cand);
        CHECK(rep.genus_2B == Rational(3));
        CHECK(rep.genus_C == Rational(5));
        CHECK(rep.two_b_dot_c.is_zero());
        CHECK(rep.sections_in_same_bundle);
        CHECK(rep.contradiction);
    }
}
