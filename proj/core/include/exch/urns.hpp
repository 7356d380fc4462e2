#pragma once

#include "exch/distribution.hpp"

namespace exch {

/// d urns with n_i labeled elements each, from which k_i ordered draws
/// are taken. Sample tuples live on the blocked space with block i a
/// length-k_i sequence over {0,...,n_i-1}.
struct UrnSystem {
    std::vector<int> sizes; // n_i
    std::vector<int> draws; // k_i

    UrnSystem(std::vector<int> ns, std::vector<int> ks);
    std::size_t urn_count() const { return sizes.size(); }
    StateSpace sample_space() const;
};

/// 1 - prod_i n_i!/((n_i-k_i)! n_i^{k_i}), the sharp distance between
/// with- and without-replacement sampling. Computed as an incremental
/// product of (n-j)/n factors.
Rational beta_bound(const std::vector<int>& ks, const std::vector<int>& ns);

/// Uniform mass on every draw tuple (sampling with replacement).
FiniteDistribution with_replacement_dist(const UrnSystem& u, std::uint64_t cap = kDefaultStateCap);

/// Uniform mass on tuples with per-urn all-distinct components
/// (sampling without replacement).
FiniteDistribution without_replacement_dist(const UrnSystem& u, std::uint64_t cap = kDefaultStateCap);

/// tv_sup of the two sampling distributions, by enumeration. Within the
/// cap the full sample space is materialized; past it, each urn is
/// enumerated separately (per-urn space still capped) and the product is
/// aggregated exactly over per-urn distinctness classes.
Rational urn_tv(const UrnSystem& u, std::uint64_t cap = kDefaultStateCap);

/// Mass the power measure p^k puts on the all-distinct event:
/// k! * e_k(p_1,...,p_n). Returns 0 when k > n.
Rational power_distinct_mass(const std::vector<Rational>& p, int k);

} // namespace exch
