#include "exch/urns.hpp"

#include <algorithm>
#include <functional>

#include "exch/errors.hpp"

namespace exch {

UrnSystem::UrnSystem(std::vector<int> ns, std::vector<int> ks) : sizes(std::move(ns)), draws(std::move(ks)) {
    if (sizes.empty()) throw validation_error("urn system needs at least one urn");
    if (sizes.size() != draws.size()) throw validation_error("urn sizes and draw counts differ in length");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1) throw validation_error("urn " + std::to_string(i) + " has non-positive size");
        if (draws[i] < 0 || draws[i] > sizes[i])
            throw validation_error("urn " + std::to_string(i) + ": draws must satisfy 0 <= k <= n");
    }
}

StateSpace UrnSystem::sample_space() const {
    std::vector<Block> blocks;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        std::vector<Symbol> alphabet(static_cast<std::size_t>(sizes[i]));
        for (int v = 0; v < sizes[i]; ++v) alphabet[static_cast<std::size_t>(v)] = v;
        blocks.push_back(Block{draws[i], std::move(alphabet)});
    }
    return StateSpace::blocked(std::move(blocks));
}

Rational beta_bound(const std::vector<int>& ks, const std::vector<int>& ns) {
    if (ks.size() != ns.size() || ks.empty()) throw validation_error("beta_bound: ks and ns must be equal-length, non-empty");
    Rational prod(1);
    for (std::size_t i = 0; i < ks.size(); ++i) {
        if (ns[i] < 1) throw validation_error("beta_bound: urn sizes must be positive");
        if (ks[i] < 0 || ks[i] > ns[i]) throw validation_error("beta_bound: need 0 <= k <= n per urn");
        for (int j = 0; j < ks[i]; ++j) prod *= Rational(ns[i] - j, ns[i]);
    }
    return Rational(1) - prod;
}

namespace {

bool per_urn_all_distinct(const StateSpace& space, const State& x) {
    for (std::size_t b = 0; b < space.blocks().size(); ++b) {
        int off = space.block_offset(static_cast<int>(b));
        int len = space.blocks()[b].length;
        for (int i = 0; i < len; ++i)
            for (int j = i + 1; j < len; ++j)
                if (x[static_cast<std::size_t>(off + i)] == x[static_cast<std::size_t>(off + j)]) return false;
    }
    return true;
}

/// Number of per-urn all-distinct tuples, by walking the choice tree.
std::uint64_t count_distinct_tuples(int n, int k) {
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::uint64_t count = 0;
    std::vector<int> choice;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(choice.size()) == k) {
            ++count;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            choice.push_back(v);
            rec();
            choice.pop_back();
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    rec();
    return count;
}

} // namespace

FiniteDistribution with_replacement_dist(const UrnSystem& u, std::uint64_t cap) {
    return FiniteDistribution::uniform(u.sample_space(), cap);
}

FiniteDistribution without_replacement_dist(const UrnSystem& u, std::uint64_t cap) {
    StateSpace space = u.sample_space();
    std::uint64_t n = space.size_checked(cap);
    std::vector<std::uint64_t> support;
    for (std::uint64_t i = 0; i < n; ++i)
        if (per_urn_all_distinct(space, space.decode(i))) support.push_back(i);
    return FiniteDistribution::uniform_on(std::move(space), std::move(support));
}

Rational urn_tv(const UrnSystem& u, std::uint64_t cap) {
    StateSpace space = u.sample_space();
    std::uint64_t total = 0;
    if (space.try_size(&total) && total <= cap)
        return tv_sup(with_replacement_dist(u, cap), without_replacement_dist(u, cap));

    // Product aggregation: M and Q are products of per-urn uniform
    // distributions, and per-urn masses take one value on the distinct
    // tuples and one off them, so |M - Q| is constant on each of the 2^d
    // distinctness classes.
    std::size_t d = u.urn_count();
    std::vector<std::uint64_t> space_size(d), distinct(d);
    for (std::size_t i = 0; i < d; ++i) {
        std::uint64_t per_urn = 1;
        for (int j = 0; j < u.draws[i]; ++j) {
            if (per_urn > cap / static_cast<std::uint64_t>(u.sizes[i]))
                throw cap_exceeded("urn " + std::to_string(i) + " sample space exceeds enumeration cap of " +
                                   std::to_string(cap) + " states");
            per_urn *= static_cast<std::uint64_t>(u.sizes[i]);
        }
        space_size[i] = per_urn;
        distinct[i] = count_distinct_tuples(u.sizes[i], u.draws[i]);
    }
    Rational l1(0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
        BigInt class_count = 1;
        Rational m_mass(1), q_mass(1);
        for (std::size_t i = 0; i < d; ++i) {
            bool in_b = (mask >> i) & 1;
            class_count *= BigInt(in_b ? distinct[i] : space_size[i] - distinct[i]);
            m_mass /= Rational(space_size[i]);
            if (in_b)
                q_mass /= Rational(distinct[i]);
            else
                q_mass = 0;
        }
        if (class_count == 0) continue;
        l1 += Rational(class_count) * abs(q_mass - m_mass);
    }
    return l1 / 2;
}

Rational power_distinct_mass(const std::vector<Rational>& p, int k) {
    if (p.empty()) throw validation_error("power_distinct_mass: empty distribution");
    Rational total(0);
    for (const Rational& pi : p) {
        if (pi < 0) throw validation_error("power_distinct_mass: negative probability");
        total += pi;
    }
    if (total != 1) throw validation_error("power_distinct_mass: probabilities sum to " + rational_str(total));
    if (k < 0) throw validation_error("power_distinct_mass: negative draw count");
    if (k > static_cast<int>(p.size())) return Rational(0); // no distinct tuple exists
    // k! * e_k via the standard elementary-symmetric recurrence.
    std::vector<Rational> e(static_cast<std::size_t>(k) + 1, Rational(0));
    e[0] = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = std::min<int>(k, static_cast<int>(i) + 1); j >= 1; --j)
            e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * p[i];
    return Rational(factorial(k)) * e[static_cast<std::size_t>(k)];
}

} // namespace exch
