#include "exch/orbits.hpp"

#include <algorithm>

#include "exch/errors.hpp"

namespace exch {

std::vector<std::uint64_t> OrbitTable::members(std::int32_t orbit) const {
    if (orbit < 0 || static_cast<std::size_t>(orbit) >= orbit_count())
        throw validation_error("unknown orbit id " + std::to_string(orbit));
    std::vector<std::uint64_t> out;
    out.reserve(size[static_cast<std::size_t>(orbit)]);
    for (std::uint64_t i = 0; i < orbit_of.size(); ++i)
        if (orbit_of[i] == orbit) out.push_back(i);
    return out;
}

OrbitTable orbits(const GroupAction& action, std::uint64_t cap) {
    const StateSpace& space = action.space();
    std::uint64_t n = space.size_checked(cap);
    OrbitTable table{space, std::vector<std::int32_t>(n, -1), {}, {}};
    const auto& gens = action.generator_cell_perms();

    std::vector<std::uint64_t> stack;
    for (std::uint64_t start = 0; start < n; ++start) {
        if (table.orbit_of[start] != -1) continue;
        auto id = static_cast<std::int32_t>(table.representative.size());
        table.representative.push_back(start);
        table.size.push_back(0);
        stack.push_back(start);
        table.orbit_of[start] = id;
        while (!stack.empty()) {
            std::uint64_t cur = stack.back();
            stack.pop_back();
            ++table.size.back();
            State x = space.decode(cur);
            for (const CellPerm& g : gens) {
                std::uint64_t next = space.encode(action.act_cells(g, x));
                if (table.orbit_of[next] == -1) {
                    table.orbit_of[next] = id;
                    stack.push_back(next);
                }
            }
        }
    }
    return table;
}

std::vector<std::uint64_t> orbit_members_of(std::uint64_t index, const GroupAction& action) {
    const StateSpace& space = action.space();
    const auto& gens = action.generator_cell_perms();
    std::vector<std::uint64_t> seen{index};
    std::vector<std::uint64_t> stack{index};
    while (!stack.empty()) {
        State x = space.decode(stack.back());
        stack.pop_back();
        for (const CellPerm& g : gens) {
            std::uint64_t next = space.encode(action.act_cells(g, x));
            auto pos = std::lower_bound(seen.begin(), seen.end(), next);
            if (pos == seen.end() || *pos != next) {
                seen.insert(pos, next);
                stack.push_back(next);
            }
        }
    }
    return seen;
}

State canonical(const State& x, const GroupAction& action) {
    auto members = orbit_members_of(action.space().encode(x), action);
    return action.space().decode(members.front());
}

FiniteDistribution extreme_measure(std::int32_t orbit, const OrbitTable& table, const GroupAction& action) {
    if (orbit < 0 || static_cast<std::size_t>(orbit) >= table.orbit_count())
        throw validation_error("unknown orbit id " + std::to_string(orbit));
    if (table.space != action.space()) throw validation_error("orbit table does not match the action's space");
    auto members = orbit_members_of(table.representative[static_cast<std::size_t>(orbit)], action);
    return FiniteDistribution::uniform_on(table.space, std::move(members));
}

FiniteDistribution reynolds(const FiniteDistribution& P, const GroupAction& action) {
    if (P.space() != action.space()) throw validation_error("reynolds: distribution space does not match the action");
    FiniteDistribution out(P.space());
    std::map<std::uint64_t, Rational> orbit_mass; // canonical rep -> accumulated mass
    std::map<std::uint64_t, std::vector<std::uint64_t>> orbit_cache;
    for (const auto& [idx, m] : P.mass()) {
        auto members = orbit_members_of(idx, action);
        std::uint64_t rep = members.front();
        orbit_mass[rep] += m;
        orbit_cache.try_emplace(rep, std::move(members));
    }
    for (const auto& [rep, mass] : orbit_mass) {
        const auto& members = orbit_cache[rep];
        Rational share = mass / Rational(members.size());
        for (std::uint64_t idx : members) out.set(idx, share);
    }
    return out;
}

bool is_invariant(const FiniteDistribution& P, const GroupAction& action, InvarianceViolation* worst) {
    if (P.space() != action.space()) throw validation_error("invariance check: distribution space does not match the action");
    // Generators suffice: invariance under a generating set implies
    // invariance under the group.
    bool ok = true;
    InvarianceViolation best;
    const StateSpace& space = action.space();
    for (const auto& [idx, m] : P.mass()) {
        State x = space.decode(idx);
        for (const CellPerm& g : action.generator_cell_perms()) {
            std::uint64_t image = space.encode(action.act_cells(g, x));
            Rational gap = abs(m - P.at(image));
            if (gap != 0) {
                ok = false;
                if (worst == nullptr) return false;
                if (gap > best.gap) best = InvarianceViolation{idx, image, gap};
            }
        }
    }
    // Mass moving onto the support from outside is already caught above:
    // if P(x) = 0 < P(gx), scanning gx finds the violation.
    if (!ok && worst != nullptr) *worst = best;
    return ok;
}

std::map<std::uint64_t, Rational> decompose_invariant(const FiniteDistribution& P, const GroupAction& action) {
    P.validate();
    InvarianceViolation worst;
    if (!is_invariant(P, action, &worst)) {
        const StateSpace& space = action.space();
        throw validation_error("distribution is not invariant: P(" + space.format_state(space.decode(worst.state)) +
                               ") and P(" + space.format_state(space.decode(worst.image)) + ") differ by " +
                               rational_str(worst.gap));
    }
    std::map<std::uint64_t, Rational> weights;
    std::map<std::uint64_t, bool> visited;
    for (const auto& [idx, m] : P.mass()) {
        if (visited.count(idx)) continue;
        auto members = orbit_members_of(idx, action);
        Rational w(0);
        for (std::uint64_t i : members) {
            w += P.at(i);
            visited[i] = true;
        }
        weights.emplace(members.front(), w);
    }
    return weights;
}

} // namespace exch
