#pragma once

#include "exch/distribution.hpp"
#include "exch/group_action.hpp"

namespace exch {

/// Observed states, optionally with positive multiplicities.
struct SampleSet {
    StateSpace space;
    std::vector<std::uint64_t> observations; // state indices
    std::vector<long> counts;                // empty = all ones

    long total_count() const;
};

FiniteDistribution empirical_distribution(const SampleSet& samples);

/// The group-invariance restricted empirical distribution: the Reynolds
/// projection of the empirical distribution, which is also the MLE over
/// G-invariant distributions.
FiniteDistribution invariant_npmle(const SampleSet& samples, const GroupAction& action);

struct TestReport {
    Rational statistic;          // observed T
    Rational p_value;            // (1 + #{null T >= obs}) / (B + 1)
    int B = 0;
    std::uint64_t seed = 0;
    bool reject_at_05 = false;
    bool reject_at_01 = false;
};

/// Invariance test: T = tv_l1(empirical, invariant NPMLE); the null
/// distribution of T comes from a parametric bootstrap that redraws
/// samples of the same size i.i.d. from the NPMLE. Rejects for large T.
TestReport exch_test(const SampleSet& samples, const GroupAction& action, int B, std::uint64_t seed);

struct ExtendTestReport {
    int T = 0; // largest feasible extension size in [k, r_max]
    int r_max = 0;
    Rational p_value; // (1 + #{null T <= obs}) / (B + 1); rejects for small T
    int B = 0;
    std::uint64_t seed = 0;
    bool reject_at_05 = false;
    bool reject_at_01 = false;
};

/// Extendibility test for infinite exchangeability: T is the largest n
/// with the extendibility LP feasible for the invariant NPMLE, scanning
/// upward from the observed size (a failure at n rules out all larger n
/// by marginalization). Null replicates are bootstrapped as above.
ExtendTestReport extendibility_test(const SampleSet& samples, const GroupAction& action, int r_max, int B,
                                    std::uint64_t seed, std::uint64_t cap = kDefaultStateCap);

} // namespace exch
