#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "exch/errors.hpp"
#include "exch/exchangeable.hpp"
#include "exch/urns.hpp"
#include "test_util.hpp"

using namespace exch;
using namespace exch::testutil;

namespace {

FiniteDistribution all_distinct_uniform(int n) {
    // uniform over permutation sequences of an n-letter alphabet
    return without_replacement_dist(UrnSystem({n}, {n}));
}

} // namespace

TEST_CASE("marginal: spec examples") {
    StateSpace cube = StateSpace::sequence(3, {0, 1});
    FiniteDistribution U3 = FiniteDistribution::uniform(cube);
    Projection p = marginal(U3, 2);
    CHECK(p.input_exchangeable);
    CHECK(p.dist == FiniteDistribution::uniform(StateSpace::sequence(2, {0, 1})));

    StateSpace pair = StateSpace::sequence(2, {0, 1});
    FiniteDistribution anti = FiniteDistribution::uniform_on(pair, {pair.encode({0, 1}), pair.encode({1, 0})});
    Projection p1 = marginal(anti, 1);
    CHECK(p1.dist.at(0) == Rational(1, 2));
    CHECK(p1.dist.at(1) == Rational(1, 2));

    CHECK(marginal(anti, 2).dist == anti); // k = n

    // k = 0: point mass on the empty state
    Projection p0 = marginal(anti, 0);
    CHECK(p0.dist.space().cell_count() == 0);
    CHECK(p0.dist.at(0) == 1);
}

TEST_CASE("marginal flags non-exchangeable input but still projects") {
    StateSpace pair = StateSpace::sequence(2, {0, 1});
    FiniteDistribution P(pair);
    P.set(pair.encode({0, 1}), Rational(3, 4));
    P.set(pair.encode({1, 0}), Rational(1, 4));
    Projection p = marginal(P, 1);
    CHECK_FALSE(p.input_exchangeable);
    CHECK(p.dist.at(0) == Rational(3, 4));
    CHECK(p.dist.at(1) == Rational(1, 4));
}

TEST_CASE("blocked_marginal: spec examples") {
    StateSpace blocked = StateSpace::blocked({Block{2, {0, 1}}, Block{2, {0, 1}}});
    StateSpace pair = StateSpace::sequence(2, {0, 1});
    FiniteDistribution anti = FiniteDistribution::uniform_on(pair, {pair.encode({0, 1}), pair.encode({1, 0})});
    FiniteDistribution U2 = FiniteDistribution::uniform(pair);
    FiniteDistribution P = block_product(blocked, {anti, U2});

    CHECK(blocked_marginal(P, {2, 2}).dist == P); // k = n componentwise

    // product factorizes into block marginals
    Projection pm = blocked_marginal(P, {1, 2});
    StateSpace target = StateSpace::blocked({Block{1, {0, 1}}, Block{2, {0, 1}}});
    FiniteDistribution expect = block_product(
        target, {marginal(anti, 1).dist, U2});
    CHECK(pm.dist == expect);

    // all k_i = 0: the empty-state point mass
    Projection p0 = blocked_marginal(P, {0, 0});
    CHECK(p0.dist.space().cell_count() == 0);
    CHECK(p0.dist.at(0) == 1);
}

TEST_CASE("empirical_mixture: spec examples") {
    StateSpace pair = StateSpace::sequence(2, {0, 1});
    FiniteDistribution anti = FiniteDistribution::uniform_on(pair, {pair.encode({0, 1}), pair.encode({1, 0})});
    EmpiricalMixture em = empirical_mixture(anti, 2);
    // mu is a single atom at the (1/2, 1/2) frequency vector
    REQUIRE(em.mu.atoms.size() == 1);
    CHECK(em.mu.atoms[0].weight == 1);
    CHECK(em.mu.atoms[0].components[0] == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
    CHECK(em.projection == FiniteDistribution::uniform(pair));

    // i.i.d. point-mass power stays a point mass
    StateSpace triple = StateSpace::sequence(3, {0, 1});
    FiniteDistribution point = FiniteDistribution::point_mass(triple, {1, 1, 1});
    EmpiricalMixture emp = empirical_mixture(point, 2);
    CHECK(emp.projection == FiniteDistribution::point_mass(StateSpace::sequence(2, {0, 1}), {1, 1}));

    // sharpness witness: uniform over all-distinct sequences, |S| = n
    for (int n = 2; n <= 4; ++n) {
        FiniteDistribution W = all_distinct_uniform(n);
        // the blocked single-urn space is structurally a sequence space
        StateSpace seq = StateSpace::sequence(n, W.space().blocks().front().alphabet);
        FiniteDistribution Wseq(seq);
        for (const auto& [idx, m] : W.mass()) Wseq.set(idx, m);
        for (int k = 1; k <= n; ++k) {
            EmpiricalMixture e = empirical_mixture(Wseq, k);
            REQUIRE(e.mu.atoms.size() == 1);
            CHECK(e.projection == FiniteDistribution::uniform(StateSpace::sequence(k, seq.blocks().front().alphabet)));
        }
    }
}

TEST_CASE("empirical_mixture rejects non-exchangeable input") {
    StateSpace pair = StateSpace::sequence(2, {0, 1});
    FiniteDistribution P(pair);
    P.set(pair.encode({0, 1}), Rational(1));
    CHECK_THROWS_AS(empirical_mixture(P, 1), validation_error);
}

TEST_CASE("empirical_mixture output is exchangeable and reconstructs from mu") {
    Rng rng(1234);
    GroupAction s4 = GroupAction::sequence(4, {0, 1, 2});
    OrbitTable table = orbits(s4);
    for (int trial = 0; trial < 20; ++trial) {
        FiniteDistribution P = random_invariant_mixture(s4, table, rng);
        for (int k = 0; k <= 4; ++k) {
            EmpiricalMixture em = empirical_mixture(P, k);
            CHECK(is_exchangeable(em.projection));
            // independent reconstruction from the mixing measure
            StateSpace target = StateSpace::sequence(k, {0, 1, 2});
            CHECK(em.projection == mixture_projection(em.mu, target));
            Rational wsum(0);
            for (const auto& atom : em.mu.atoms) {
                wsum += atom.weight;
                Rational csum(0);
                for (const Rational& p : atom.components[0]) csum += p;
                CHECK(csum == 1);
            }
            CHECK(wsum == 1);
        }
    }
}

TEST_CASE("blocked_empirical_mixture: factorization and witnesses") {
    StateSpace pair = StateSpace::sequence(2, {0, 1});
    FiniteDistribution anti = FiniteDistribution::uniform_on(pair, {pair.encode({0, 1}), pair.encode({1, 0})});

    // product of two single-block witnesses factorizes
    StateSpace blocked = StateSpace::blocked({Block{2, {0, 1}}, Block{2, {0, 1}}});
    FiniteDistribution P = block_product(blocked, {anti, anti});
    EmpiricalMixture em = blocked_empirical_mixture(P, {2, 2});
    REQUIRE(em.mu.atoms.size() == 1);
    CHECK(em.mu.atoms[0].components.size() == 2);
    // blocked analog of the sharpness witness: product uniform
    FiniteDistribution M = block_product(blocked, {FiniteDistribution::uniform(pair), FiniteDistribution::uniform(pair)});
    CHECK(em.projection == M);

    // blocked i.i.d. point masses stay point masses
    FiniteDistribution p1 = FiniteDistribution::point_mass(pair, {1, 1});
    FiniteDistribution p2 = FiniteDistribution::point_mass(pair, {0, 0});
    FiniteDistribution PP = block_product(blocked, {p1, p2});
    EmpiricalMixture emp = blocked_empirical_mixture(PP, {1, 2});
    StateSpace target = StateSpace::blocked({Block{1, {0, 1}}, Block{2, {0, 1}}});
    CHECK(emp.projection == FiniteDistribution::point_mass(target, {1, 0, 0}));
}

TEST_CASE("check_definetti_bound: spec examples") {
    // point-mass i.i.d. products reproduce themselves exactly: tv 0
    StateSpace triple = StateSpace::sequence(3, {0, 1});
    FiniteDistribution point = FiniteDistribution::point_mass(triple, {1, 1, 1});
    for (int k = 0; k <= 3; ++k) {
        BoundReport r = check_definetti_bound(point, {k});
        CHECK(r.tv == 0);
        CHECK(r.holds);
    }

    // non-degenerate i.i.d.: the constructive mixture uses the law of
    // the empirical measure, not the i.i.d. mixing measure, so tv is
    // positive but well inside the bound. For uniform on {0,1}^3, k=2:
    // P_{mu 2}(00) = 1/8 + (3/8)(4/9) + (3/8)(1/9) = 1/3, and summing
    // the four absolute gaps against 1/4 gives 4 * 1/12 = 1/3.
    FiniteDistribution U = FiniteDistribution::uniform(triple);
    BoundReport ru = check_definetti_bound(U, {2});
    CHECK(ru.tv == Rational(1, 3));
    CHECK(ru.bound == Rational(2, 3));
    CHECK(ru.holds);

    // sharpness witness |S| = n = k = 2: equality at 2 beta(2,2) = 1
    StateSpace pair = StateSpace::sequence(2, {0, 1});
    FiniteDistribution anti = FiniteDistribution::uniform_on(pair, {pair.encode({0, 1}), pair.encode({1, 0})});
    BoundReport r = check_definetti_bound(anti, {2});
    CHECK(r.tv == 1);
    CHECK(r.bound == 1);
    CHECK(r.holds);

    // blocked witness: tv = 2 beta((2,2),(2,2)) = 3/2
    StateSpace blocked = StateSpace::blocked({Block{2, {0, 1}}, Block{2, {0, 1}}});
    FiniteDistribution W = block_product(blocked, {anti, anti});
    BoundReport rb = check_definetti_bound(W, {2, 2});
    CHECK(rb.tv == Rational(3, 2));
    CHECK(rb.bound == Rational(3, 2));
    CHECK(rb.holds);
}

TEST_CASE("bound holds on random exchangeable mixtures") {
    Rng rng(777);
    for (int n = 2; n <= 4; ++n) {
        GroupAction act = GroupAction::sequence(n, {0, 1});
        OrbitTable table = orbits(act);
        for (int trial = 0; trial < 25; ++trial) {
            FiniteDistribution P = random_invariant_mixture(act, table, rng);
            for (int k = 0; k <= n; ++k) CHECK(check_definetti_bound(P, {k}).holds);
        }
    }
}
