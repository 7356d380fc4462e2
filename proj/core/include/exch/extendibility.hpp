#pragma once

#include <optional>

#include "exch/exchangeable.hpp"

namespace exch {

struct ExtendibilityResult {
    bool feasible = false;
    std::optional<FiniteDistribution> witness; // verified exchangeable extension, if requested
};

/// Does an exchangeable Q on S^n (resp. the blocked product space with
/// block lengths ns) exist with marginal(Q, ks) = P_k? Decided exactly:
/// variables are orbit weights of the natural action on the extension
/// space, constraints are the marginal equations per orbit of P_k's
/// space plus normalization, solved by phase-1 rational simplex.
/// A returned witness is re-verified against P_k exactly.
ExtendibilityResult extendibility_lp(const FiniteDistribution& Pk, const std::vector<int>& ns,
                                     std::uint64_t cap = kDefaultStateCap, bool want_witness = true);

/// Sequence-space convenience overload.
ExtendibilityResult extendibility_lp(const FiniteDistribution& Pk, int n, std::uint64_t cap = kDefaultStateCap,
                                     bool want_witness = true);

struct GapResult {
    Rational gap;                // minimal tv_l1(P_k, mixture of grid powers)
    std::vector<MixingAtom> argmin; // grid atoms with positive optimal weight
};

/// Minimizes tv_l1(P_k, sum_j mu_j p_j^{(x)k}) over mixing weights on the
/// mesh of component distributions with grid_points levels per simplex
/// edge (binary alphabet: p in {0, 1/(grid_points-1), ..., 1}), as an LP
/// with epigraph variables per absolute-difference term. Exact.
GapResult definetti_gap(const FiniteDistribution& Pk, int grid_points);

} // namespace exch
