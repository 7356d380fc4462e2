#pragma once

#include "exch/distribution.hpp"
#include "exch/group_action.hpp"

namespace exch {

/// Full orbit partition of a state space. Orbit ids are assigned in
/// order of first encounter while scanning state indices upward, so the
/// representative (lowest index = lexicographic minimum) is also the
/// first member seen and tables are deterministic.
struct OrbitTable {
    StateSpace space;
    std::vector<std::int32_t> orbit_of;       // state index -> orbit id
    std::vector<std::uint64_t> representative; // orbit id -> minimal state index
    std::vector<std::uint64_t> size;           // orbit id -> member count

    std::size_t orbit_count() const { return representative.size(); }
    std::vector<std::uint64_t> members(std::int32_t orbit) const;
};

OrbitTable orbits(const GroupAction& action, std::uint64_t cap = kDefaultStateCap);

/// Lexicographically minimal member of the orbit of x (row-major cell
/// order, alphabet order). Computed by closure under generators.
State canonical(const State& x, const GroupAction& action);

/// All member indices of the orbit through `index`, sorted.
std::vector<std::uint64_t> orbit_members_of(std::uint64_t index, const GroupAction& action);

/// Uniform distribution on one orbit: the extreme point of the
/// G-invariant simplex attached to that orbit.
FiniteDistribution extreme_measure(std::int32_t orbit, const OrbitTable& table, const GroupAction& action);

/// Orbit-averaging projection onto G-invariant distributions:
/// every orbit's mass is spread uniformly over the orbit.
FiniteDistribution reynolds(const FiniteDistribution& P, const GroupAction& action);

/// Exact invariance check against the generator set. When `worst` is
/// given and P is not invariant, it receives the violating pair with the
/// largest |P(x) - P(gx)|.
struct InvarianceViolation {
    std::uint64_t state = 0;
    std::uint64_t image = 0;
    Rational gap;
};
bool is_invariant(const FiniteDistribution& P, const GroupAction& action, InvarianceViolation* worst = nullptr);

/// Unique weights over orbits with P = sum_o w_o * extreme_measure(o);
/// w_o = P(orbit o), keyed by the orbit's canonical representative
/// index. Throws validation_error (reporting the maximal violating pair)
/// when P is not G-invariant.
std::map<std::uint64_t, Rational> decompose_invariant(const FiniteDistribution& P, const GroupAction& action);

} // namespace exch
