#include "exch/group_action.hpp"

#include <algorithm>
#include <numeric>

#include "exch/errors.hpp"

namespace exch {

bool is_permutation(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    for (int v : p) {
        if (v < 0 || v >= static_cast<int>(p.size()) || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

Permutation identity_perm(int m) {
    Permutation p(static_cast<std::size_t>(m));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation compose(const Permutation& g, const Permutation& h) {
    if (g.size() != h.size()) throw validation_error("composing permutations of different degree");
    Permutation r(g.size());
    for (std::size_t i = 0; i < h.size(); ++i) r[i] = g[static_cast<std::size_t>(h[i])];
    return r;
}

GroupAction::GroupAction(ActionKind kind, StateSpace space, std::vector<int> factor_sizes)
    : kind_(kind), space_(std::move(space)), factor_sizes_(std::move(factor_sizes)) {
    build_generators();
}

GroupAction GroupAction::sequence(int m, std::vector<Symbol> alphabet) {
    if (m < 0) throw validation_error("sequence action needs length >= 0");
    return GroupAction(ActionKind::Sequence, StateSpace::sequence(m, std::move(alphabet)), {m});
}

GroupAction GroupAction::joint_row_col(int m, std::vector<Symbol> alphabet) {
    if (m < 1) throw validation_error("joint row-column action needs m >= 1");
    return GroupAction(ActionKind::JointRowCol, StateSpace::array(m, m, std::move(alphabet)), {m});
}

GroupAction GroupAction::separate_row_col(int m, int n, std::vector<Symbol> alphabet) {
    if (m < 1 || n < 1) throw validation_error("separate row-column action needs m, n >= 1");
    return GroupAction(ActionKind::SeparateRowCol, StateSpace::array(m, n, std::move(alphabet)), {m, n});
}

GroupAction GroupAction::blocked_sequences(std::vector<Block> blocks) {
    std::vector<int> sizes;
    for (const auto& b : blocks) sizes.push_back(b.length);
    return GroupAction(ActionKind::BlockedSequences, StateSpace::blocked(std::move(blocks)), std::move(sizes));
}

void GroupAction::build_generators() {
    generators_.clear();
    generator_cell_perms_.clear();
    for (std::size_t f = 0; f < factor_sizes_.size(); ++f) {
        int m = factor_sizes_[f];
        for (int i = 0; i + 1 < m; ++i) {
            GroupElement g;
            for (std::size_t f2 = 0; f2 < factor_sizes_.size(); ++f2) g.push_back(identity_perm(factor_sizes_[f2]));
            std::swap(g[f][static_cast<std::size_t>(i)], g[f][static_cast<std::size_t>(i + 1)]);
            generator_cell_perms_.push_back(cell_perm(g));
            generators_.push_back(std::move(g));
        }
    }
}

CellPerm GroupAction::cell_perm(const GroupElement& g) const {
    if (g.size() != factor_sizes_.size()) throw validation_error("group element has wrong number of factors");
    for (std::size_t f = 0; f < g.size(); ++f) {
        if (static_cast<int>(g[f].size()) != factor_sizes_[f] || !is_permutation(g[f]))
            throw validation_error("group element factor " + std::to_string(f) + " is not a permutation of the right degree");
    }
    int cells = space_.cell_count();
    CellPerm perm(static_cast<std::size_t>(cells));
    switch (kind_) {
        case ActionKind::Sequence: {
            for (int i = 0; i < cells; ++i) perm[static_cast<std::size_t>(i)] = g[0][static_cast<std::size_t>(i)];
            break;
        }
        case ActionKind::JointRowCol: {
            int m = space_.cols();
            for (int i = 0; i < space_.rows(); ++i)
                for (int j = 0; j < m; ++j)
                    perm[static_cast<std::size_t>(i * m + j)] =
                        g[0][static_cast<std::size_t>(i)] * m + g[0][static_cast<std::size_t>(j)];
            break;
        }
        case ActionKind::SeparateRowCol: {
            int n = space_.cols();
            for (int i = 0; i < space_.rows(); ++i)
                for (int j = 0; j < n; ++j)
                    perm[static_cast<std::size_t>(i * n + j)] =
                        g[0][static_cast<std::size_t>(i)] * n + g[1][static_cast<std::size_t>(j)];
            break;
        }
        case ActionKind::BlockedSequences: {
            for (std::size_t b = 0; b < factor_sizes_.size(); ++b) {
                int off = space_.block_offset(static_cast<int>(b));
                for (int i = 0; i < factor_sizes_[b]; ++i)
                    perm[static_cast<std::size_t>(off + i)] = off + g[b][static_cast<std::size_t>(i)];
            }
            break;
        }
    }
    return perm;
}

State GroupAction::act_cells(const CellPerm& perm, const State& x) const {
    if (static_cast<int>(x.size()) != space_.cell_count() || perm.size() != x.size())
        throw validation_error("act: dimension mismatch");
    State y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[static_cast<std::size_t>(perm[i])] = x[i];
    return y;
}

State GroupAction::act(const GroupElement& g, const State& x) const { return act_cells(cell_perm(g), x); }

BigInt GroupAction::group_order() const {
    BigInt order = 1;
    for (int m : factor_sizes_) order *= factorial(m);
    return order;
}

void GroupAction::for_each_element(const std::function<void(const CellPerm&)>& fn, std::uint64_t max_order) const {
    if (group_order() > max_order)
        throw cap_exceeded("group order " + group_order().str() + " exceeds iteration cap of " +
                           std::to_string(max_order));
    GroupElement g;
    for (int m : factor_sizes_) g.push_back(identity_perm(m));
    // Odometer over the factors, each running through S_m in lexicographic order.
    std::function<void(std::size_t)> rec = [&](std::size_t f) {
        if (f == g.size()) {
            fn(cell_perm(g));
            return;
        }
        Permutation& p = g[f];
        std::sort(p.begin(), p.end());
        do {
            rec(f + 1);
        } while (std::next_permutation(p.begin(), p.end()));
        std::sort(p.begin(), p.end());
    };
    rec(0);
}

std::uint64_t burnside_orbit_count(const GroupAction& action, std::uint64_t max_order) {
    BigInt fixed_total = 0;
    const StateSpace& space = action.space();
    action.for_each_element(
        [&](const CellPerm& perm) {
            // |Fix(g)| = prod over cell cycles of the cycle's alphabet size.
            std::vector<bool> seen(perm.size(), false);
            BigInt fixed = 1;
            for (std::size_t start = 0; start < perm.size(); ++start) {
                if (seen[start]) continue;
                std::size_t cur = start;
                while (!seen[cur]) {
                    seen[cur] = true;
                    cur = static_cast<std::size_t>(perm[cur]);
                }
                fixed *= space.radix(static_cast<int>(start));
            }
            fixed_total += fixed;
        },
        max_order);
    BigInt order = action.group_order();
    BigInt q = fixed_total / order;
    if (q * order != fixed_total) throw numeric_error("Burnside sum not divisible by group order");
    return q.convert_to<std::uint64_t>();
}

} // namespace exch
