#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exch/rng.hpp"
#include "exch/simplex.hpp"

using namespace exch;

namespace {

Rational R(long n, long d = 1) { return Rational(n, d); }

} // namespace

TEST_CASE("feasibility: simple systems") {
    // x0 + x1 = 1 has non-negative solutions
    std::vector<Rational> w;
    CHECK(lp_feasible({{R(1), R(1)}}, {R(1)}, &w));
    CHECK(w[0] + w[1] == 1);
    CHECK(w[0] >= 0);
    CHECK(w[1] >= 0);

    // x0 + x1 = 1, x0 + x1 = 2 is contradictory
    CHECK_FALSE(lp_feasible({{R(1), R(1)}, {R(1), R(1)}}, {R(1), R(2)}));

    // x0 - x1 = -3 with x >= 0 is feasible (negative rhs path)
    CHECK(lp_feasible({{R(1), R(-1)}}, {R(-3)}));

    // x0 = -1 with x0 >= 0 is not
    CHECK_FALSE(lp_feasible({{R(1)}}, {R(-1)}));

    // redundant rows are tolerated
    CHECK(lp_feasible({{R(1), R(1)}, {R(2), R(2)}}, {R(1), R(2)}));
}

TEST_CASE("minimization with exact optimum") {
    // min x0 + 2 x1 st x0 + x1 = 3/2 -> put everything on x0
    LpResult res = solve_lp({{R(1), R(1)}}, {R(3, 2)}, {R(1), R(2)});
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.objective == R(3, 2));
    CHECK(res.x[0] == R(3, 2));
    CHECK(res.x[1] == 0);

    // min -x0 st x0 + x1 = 1, x0 - x1 = 0 -> x = (1/2, 1/2)
    res = solve_lp({{R(1), R(1)}, {R(1), R(-1)}}, {R(1), R(0)}, {R(-1), R(0)});
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.objective == R(-1, 2));
    CHECK(res.x[0] == R(1, 2));
}

TEST_CASE("unbounded detection") {
    // min -x0 st x0 - x1 = 0: ray x0 = x1 -> infinity
    LpResult res = solve_lp({{R(1), R(-1)}}, {R(0)}, {R(-1), R(0)});
    CHECK(res.status == LpStatus::Unbounded);
}

TEST_CASE("degenerate equality ties terminate (Bland)") {
    // many redundant constraints forcing heavy degeneracy
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    for (int i = 0; i < 6; ++i) {
        A.push_back({R(1), R(1), R(1)});
        b.push_back(R(1));
    }
    A.push_back({R(1), R(0), R(0)});
    b.push_back(R(0));
    LpResult res = solve_lp(A, b, {R(0), R(1), R(3)});
    REQUIRE(res.status == LpStatus::Optimal);
    CHECK(res.objective == R(1));
    CHECK(res.x[1] == R(1));
}

TEST_CASE("random transportation-style LPs satisfy constraints exactly") {
    Rng rng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        // min c.x st row sums fixed: x lives on a 3x3 table with given margins
        std::vector<Rational> supply = {R(1, 3), R(1, 3), R(1, 3)};
        std::vector<Rational> demand = {R(1, 2), R(1, 4), R(1, 4)};
        std::vector<std::vector<Rational>> A(6, std::vector<Rational>(9, R(0)));
        std::vector<Rational> b;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) A[i][static_cast<std::size_t>(3 * i + j)] = 1;
            b.push_back(supply[static_cast<std::size_t>(i)]);
        }
        for (int j = 0; j < 3; ++j) {
            for (int i = 0; i < 3; ++i) A[static_cast<std::size_t>(3 + j)][static_cast<std::size_t>(3 * i + j)] = 1;
            b.push_back(demand[static_cast<std::size_t>(j)]);
        }
        std::vector<Rational> c;
        for (int i = 0; i < 9; ++i) c.push_back(R(static_cast<long>(rng.below(20))));
        LpResult res = solve_lp(A, b, c);
        REQUIRE(res.status == LpStatus::Optimal);
        for (std::size_t r = 0; r < A.size(); ++r) {
            Rational lhs(0);
            for (std::size_t j = 0; j < 9; ++j) lhs += A[r][j] * res.x[j];
            CHECK(lhs == b[r]);
        }
        Rational obj(0);
        for (std::size_t j = 0; j < 9; ++j) {
            CHECK(res.x[j] >= 0);
            obj += c[j] * res.x[j];
        }
        CHECK(obj == res.objective);
    }
}
