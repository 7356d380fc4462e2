#include "exch/exchangeable.hpp"

#include <algorithm>

#include "exch/errors.hpp"
#include "exch/orbits.hpp"
#include "exch/urns.hpp"

namespace exch {

GroupAction natural_action(const StateSpace& space) {
    switch (space.kind()) {
        case SpaceKind::Sequence: {
            const Block& b = space.blocks().front();
            return GroupAction::sequence(b.length, b.alphabet);
        }
        case SpaceKind::Blocked:
            return GroupAction::blocked_sequences(space.blocks());
        case SpaceKind::Array:
            throw validation_error("array spaces have no single natural action; use joint_row_col or separate_row_col");
    }
    throw validation_error("unreachable space kind");
}

bool is_exchangeable(const FiniteDistribution& P) {
    if (P.space().cell_count() <= 1) return true;
    bool trivial = true;
    for (const Block& b : P.space().blocks()) trivial = trivial && b.length <= 1;
    if (trivial) return true;
    return is_invariant(P, natural_action(P.space()));
}

namespace {

Projection project_to_prefix(const FiniteDistribution& P, const std::vector<int>& ks) {
    const StateSpace& space = P.space();
    P.validate();
    if (ks.size() != space.blocks().size()) throw validation_error("marginal: one k per block required");
    std::vector<Block> new_blocks;
    for (std::size_t b = 0; b < ks.size(); ++b) {
        if (ks[b] < 0 || ks[b] > space.blocks()[b].length)
            throw validation_error("marginal: need 0 <= k <= n in block " + std::to_string(b));
        new_blocks.push_back(Block{ks[b], space.blocks()[b].alphabet});
    }
    StateSpace target = space.kind() == SpaceKind::Sequence
                            ? StateSpace::sequence(new_blocks[0].length, new_blocks[0].alphabet)
                            : StateSpace::blocked(new_blocks);

    Projection out{FiniteDistribution(target), is_exchangeable(P)};
    for (const auto& [idx, m] : P.mass()) {
        State x = space.decode(idx);
        State y;
        y.reserve(static_cast<std::size_t>(target.cell_count()));
        for (std::size_t b = 0; b < ks.size(); ++b) {
            int off = space.block_offset(static_cast<int>(b));
            for (int i = 0; i < ks[b]; ++i) y.push_back(x[static_cast<std::size_t>(off + i)]);
        }
        out.dist.add(target.encode(y), m);
    }
    return out;
}

} // namespace

Projection marginal(const FiniteDistribution& P, int k) {
    if (P.space().kind() != SpaceKind::Sequence) throw validation_error("marginal: sequence space required");
    return project_to_prefix(P, {k});
}

Projection blocked_marginal(const FiniteDistribution& P, const std::vector<int>& ks) {
    if (P.space().kind() != SpaceKind::Blocked) throw validation_error("blocked_marginal: blocked space required");
    return project_to_prefix(P, ks);
}

namespace {

/// Per-block empirical frequency vectors of a single state.
std::vector<std::vector<Rational>> frequency_vectors(const StateSpace& space, const State& x) {
    std::vector<std::vector<Rational>> out;
    for (std::size_t b = 0; b < space.blocks().size(); ++b) {
        const Block& blk = space.blocks()[b];
        std::vector<Rational> freq(blk.alphabet.size(), Rational(0));
        int off = space.block_offset(static_cast<int>(b));
        for (int i = 0; i < blk.length; ++i)
            freq[static_cast<std::size_t>(x[static_cast<std::size_t>(off + i)])] += Rational(1, blk.length);
        out.push_back(std::move(freq));
    }
    return out;
}

StateSpace prefix_space(const StateSpace& space, const std::vector<int>& ks) {
    std::vector<Block> blocks;
    for (std::size_t b = 0; b < ks.size(); ++b) blocks.push_back(Block{ks[b], space.blocks()[b].alphabet});
    return space.kind() == SpaceKind::Sequence ? StateSpace::sequence(blocks[0].length, blocks[0].alphabet)
                                               : StateSpace::blocked(blocks);
}

EmpiricalMixture empirical_mixture_impl(const FiniteDistribution& P, const std::vector<int>& ks) {
    const StateSpace& space = P.space();
    P.validate();
    if (ks.size() != space.blocks().size()) throw validation_error("empirical mixture: one k per block required");
    for (std::size_t b = 0; b < ks.size(); ++b) {
        if (space.blocks()[b].length < 1)
            throw validation_error("empirical mixture: block " + std::to_string(b) + " is empty");
        if (ks[b] < 0 || ks[b] > space.blocks()[b].length)
            throw validation_error("empirical mixture: need 0 <= k <= n in block " + std::to_string(b));
    }
    if (!is_exchangeable(P))
        throw validation_error("empirical mixture requires an exchangeable distribution");

    // Atoms keyed by their concatenated frequency vectors, merged exactly.
    std::map<std::vector<Rational>, Rational> atom_weights;
    for (const auto& [idx, m] : P.mass()) {
        auto freqs = frequency_vectors(space, space.decode(idx));
        std::vector<Rational> key;
        for (const auto& f : freqs) key.insert(key.end(), f.begin(), f.end());
        atom_weights[key] += m;
    }

    MixingMeasure mu;
    for (const auto& [key, w] : atom_weights) {
        MixingAtom atom;
        std::size_t pos = 0;
        for (const Block& blk : space.blocks()) {
            atom.components.emplace_back(key.begin() + static_cast<std::ptrdiff_t>(pos),
                                         key.begin() + static_cast<std::ptrdiff_t>(pos + blk.alphabet.size()));
            pos += blk.alphabet.size();
        }
        atom.weight = w;
        mu.atoms.push_back(std::move(atom));
    }

    StateSpace target = prefix_space(space, ks);
    return EmpiricalMixture{mu, mixture_projection(mu, target)};
}

} // namespace

EmpiricalMixture empirical_mixture(const FiniteDistribution& P, int k) {
    if (P.space().kind() != SpaceKind::Sequence) throw validation_error("empirical_mixture: sequence space required");
    return empirical_mixture_impl(P, {k});
}

EmpiricalMixture blocked_empirical_mixture(const FiniteDistribution& P, const std::vector<int>& ks) {
    if (P.space().kind() != SpaceKind::Blocked)
        throw validation_error("blocked_empirical_mixture: blocked space required");
    return empirical_mixture_impl(P, ks);
}

FiniteDistribution mixture_projection(const MixingMeasure& mu, const StateSpace& target, std::uint64_t cap) {
    std::uint64_t n = target.size_checked(cap);
    FiniteDistribution out(target);
    for (const MixingAtom& atom : mu.atoms) {
        if (atom.components.size() != target.blocks().size())
            throw validation_error("mixture atom has wrong number of components");
        for (std::size_t b = 0; b < atom.components.size(); ++b)
            if (atom.components[b].size() != target.blocks()[b].alphabet.size())
                throw validation_error("mixture atom component " + std::to_string(b) + " has wrong alphabet size");
        for (std::uint64_t idx = 0; idx < n; ++idx) {
            State y = target.decode(idx);
            Rational mass = atom.weight;
            for (int c = 0; c < target.cell_count() && mass != 0; ++c)
                mass *= atom.components[static_cast<std::size_t>(target.block_of_cell(c))]
                                       [static_cast<std::size_t>(y[static_cast<std::size_t>(c)])];
            out.add(idx, mass);
        }
    }
    return out;
}

BoundReport check_definetti_bound(const FiniteDistribution& P, const std::vector<int>& ks) {
    const StateSpace& space = P.space();
    std::vector<int> ns;
    for (const Block& b : space.blocks()) ns.push_back(b.length);

    Projection proj = space.kind() == SpaceKind::Sequence ? marginal(P, ks.at(0)) : blocked_marginal(P, ks);
    if (!proj.input_exchangeable)
        throw validation_error("bound check requires an exchangeable distribution");
    EmpiricalMixture mix = space.kind() == SpaceKind::Sequence ? empirical_mixture(P, ks.at(0))
                                                               : blocked_empirical_mixture(P, ks);

    BoundReport report;
    report.ks = ks;
    report.ns = ns;
    report.tv = tv_l1(proj.dist, mix.projection);
    report.bound = 2 * beta_bound(ks, ns);
    report.holds = report.tv <= report.bound;
    return report;
}

} // namespace exch
