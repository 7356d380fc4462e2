#pragma once

#include "exch/distribution.hpp"
#include "exch/group_action.hpp"

namespace exch {

/// The coordinate-permuting action a space carries naturally: S_n for a
/// length-n sequence, the product of per-block symmetric groups for a
/// blocked space. Arrays have two candidate actions, so they get none.
GroupAction natural_action(const StateSpace& space);

/// Invariance of P under the natural action of its space.
bool is_exchangeable(const FiniteDistribution& P);

/// A marginal projection plus a flag recording whether the input was
/// exchangeable; the projection is defined either way, but the theorem
/// guarantees only apply when the flag is set.
struct Projection {
    FiniteDistribution dist;
    bool input_exchangeable = false;
};

/// Sums out the last n-k coordinates of a sequence distribution.
Projection marginal(const FiniteDistribution& P, int k);

/// Per-block truncation to the first k_i coordinates of each block.
Projection blocked_marginal(const FiniteDistribution& P, const std::vector<int>& ks);

/// One mixture atom: a product of per-block distributions over the base
/// alphabets, with a weight. Single-block spaces have one component.
struct MixingAtom {
    std::vector<std::vector<Rational>> components;
    Rational weight;
};

struct MixingMeasure {
    std::vector<MixingAtom> atoms;
};

struct EmpiricalMixture {
    MixingMeasure mu;
    FiniteDistribution projection; // mixture of powers on the k-coordinate space
};

/// The constructive de Finetti mixture: mu is the law of the empirical
/// frequency vector under P (atoms with equal vectors merged), and the
/// projection is sum_x P(x) * p_x^{(x)k} on S^k. Requires exchangeable P.
EmpiricalMixture empirical_mixture(const FiniteDistribution& P, int k);

/// Blocked analog: one frequency vector per block, projection a mixture
/// of products of per-block powers.
EmpiricalMixture blocked_empirical_mixture(const FiniteDistribution& P, const std::vector<int>& ks);

/// Evaluates a mixture of (products of) powers on the given space.
FiniteDistribution mixture_projection(const MixingMeasure& mu, const StateSpace& target,
                                      std::uint64_t cap = kDefaultStateCap);

struct BoundReport {
    std::vector<int> ks;
    std::vector<int> ns;
    Rational tv;    // tv_l1(P_k, P_{mu k})
    Rational bound; // 2 * beta(ks, ns)
    bool holds = false;
};

/// tv_l1 between the k-marginal and the empirical-mixture projection,
/// against 2*beta. Exact; `holds` is tv <= bound.
BoundReport check_definetti_bound(const FiniteDistribution& P, const std::vector<int>& ks);

} // namespace exch
