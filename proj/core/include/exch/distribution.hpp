#pragma once

#include <map>

#include "exch/rational.hpp"
#include "exch/state_space.hpp"

namespace exch {

/// Probability mass function over an enumerated finite state space.
/// Sparse: states absent from the map carry zero mass. Keys are state
/// indices, so iteration order is the space's enumeration order.
class FiniteDistribution {
public:
    explicit FiniteDistribution(StateSpace space) : space_(std::move(space)) {}

    static FiniteDistribution point_mass(StateSpace space, const State& x);
    /// Uniform over the whole space (size checked against `cap`).
    static FiniteDistribution uniform(StateSpace space, std::uint64_t cap = kDefaultStateCap);
    /// Uniform over the given distinct state indices.
    static FiniteDistribution uniform_on(StateSpace space, std::vector<std::uint64_t> support);

    const StateSpace& space() const { return space_; }
    const std::map<std::uint64_t, Rational>& mass() const { return mass_; }

    Rational at(std::uint64_t index) const;
    /// Sets the mass at `index`; zero erases the entry.
    void set(std::uint64_t index, const Rational& value);
    void add(std::uint64_t index, const Rational& value);

    Rational total() const;
    std::size_t support_size() const { return mass_.size(); }

    /// Throws validation_error unless all masses are >= 0 and sum to 1.
    void validate() const;
    bool is_normalized() const;

    bool operator==(const FiniteDistribution& other) const {
        return space_ == other.space_ && mass_ == other.mass_;
    }

private:
    StateSpace space_;
    std::map<std::uint64_t, Rational> mass_;
};

/// Sum_x |P(x) - Q(x)|: the norm in which the 2*beta theorem bounds are
/// stated. Requires identical spaces and normalized inputs.
Rational tv_l1(const FiniteDistribution& P, const FiniteDistribution& Q);

/// max_A |P(A) - Q(A)| = tv_l1 / 2: the convention of the urn lemma.
Rational tv_sup(const FiniteDistribution& P, const FiniteDistribution& Q);

} // namespace exch
