#pragma once

#include <functional>

#include "exch/rational.hpp"
#include "exch/state_space.hpp"

namespace exch {

/// image[i] = g(i); a bijection of {0,...,m-1}.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p);
Permutation identity_perm(int m);
/// (g o h)(i) = g[h[i]].
Permutation compose(const Permutation& g, const Permutation& h);

/// One permutation per group factor: {g} for sequence and joint
/// row-column actions, {g1, g2} for separate row-column, one per block
/// for blocked sequences.
using GroupElement = std::vector<Permutation>;

/// Every action here permutes cell positions; a group element reduces to
/// a permutation of {0,...,cells-1} with (g.x)[perm[i]] = x[i].
using CellPerm = std::vector<int>;

enum class ActionKind { Sequence, JointRowCol, SeparateRowCol, BlockedSequences };

/// A symmetric-group action on a finite state space, held as a generator
/// set (adjacent transpositions per factor). Orbit machinery works by
/// closure under generators; full-group iteration exists only for the
/// Burnside validation oracle at desk scale.
class GroupAction {
public:
    static GroupAction sequence(int m, std::vector<Symbol> alphabet);
    static GroupAction joint_row_col(int m, std::vector<Symbol> alphabet);
    static GroupAction separate_row_col(int m, int n, std::vector<Symbol> alphabet);
    static GroupAction blocked_sequences(std::vector<Block> blocks);

    ActionKind kind() const { return kind_; }
    const StateSpace& space() const { return space_; }
    /// Symmetric-group degrees, one per factor.
    const std::vector<int>& factor_sizes() const { return factor_sizes_; }

    /// Generator elements: adjacent transpositions in each factor.
    const std::vector<GroupElement>& generators() const { return generators_; }
    const std::vector<CellPerm>& generator_cell_perms() const { return generator_cell_perms_; }

    CellPerm cell_perm(const GroupElement& g) const;
    State act(const GroupElement& g, const State& x) const;
    State act_cells(const CellPerm& perm, const State& x) const;

    BigInt group_order() const;

    /// Iterates every group element as a cell permutation. Throws
    /// cap_exceeded when the group order exceeds `max_order`.
    void for_each_element(const std::function<void(const CellPerm&)>& fn,
                          std::uint64_t max_order = 1'000'000) const;

    bool operator==(const GroupAction& other) const {
        return kind_ == other.kind_ && space_ == other.space_;
    }

private:
    GroupAction(ActionKind kind, StateSpace space, std::vector<int> factor_sizes);
    void build_generators();

    ActionKind kind_;
    StateSpace space_;
    std::vector<int> factor_sizes_;
    std::vector<GroupElement> generators_;
    std::vector<CellPerm> generator_cell_perms_;
};

/// (1/|G|) sum_g |Fix(g)|, by full group iteration. The independent
/// oracle for orbit counts.
std::uint64_t burnside_orbit_count(const GroupAction& action, std::uint64_t max_order = 1'000'000);

} // namespace exch
