#include "exch/distribution.hpp"

#include <algorithm>

#include "exch/errors.hpp"

namespace exch {

FiniteDistribution FiniteDistribution::point_mass(StateSpace space, const State& x) {
    FiniteDistribution d(space);
    d.set(space.encode(x), Rational(1));
    return d;
}

FiniteDistribution FiniteDistribution::uniform(StateSpace space, std::uint64_t cap) {
    std::uint64_t n = space.size_checked(cap);
    FiniteDistribution d(std::move(space));
    Rational w(1, n);
    for (std::uint64_t i = 0; i < n; ++i) d.mass_.emplace(i, w);
    return d;
}

FiniteDistribution FiniteDistribution::uniform_on(StateSpace space, std::vector<std::uint64_t> support) {
    if (support.empty()) throw validation_error("uniform_on: empty support");
    std::sort(support.begin(), support.end());
    if (std::adjacent_find(support.begin(), support.end()) != support.end())
        throw validation_error("uniform_on: duplicate state in support");
    FiniteDistribution d(std::move(space));
    Rational w(1, support.size());
    for (std::uint64_t idx : support) d.mass_.emplace(idx, w);
    return d;
}

Rational FiniteDistribution::at(std::uint64_t index) const {
    auto it = mass_.find(index);
    return it == mass_.end() ? Rational(0) : it->second;
}

void FiniteDistribution::set(std::uint64_t index, const Rational& value) {
    if (value == 0) {
        mass_.erase(index);
    } else {
        mass_[index] = value;
    }
}

void FiniteDistribution::add(std::uint64_t index, const Rational& value) {
    auto it = mass_.find(index);
    if (it == mass_.end()) {
        if (value != 0) mass_.emplace(index, value);
        return;
    }
    it->second += value;
    if (it->second == 0) mass_.erase(it);
}

Rational FiniteDistribution::total() const {
    Rational t(0);
    for (const auto& [idx, m] : mass_) t += m;
    return t;
}

void FiniteDistribution::validate() const {
    std::uint64_t n = 0;
    if (space_.try_size(&n)) {
        if (!mass_.empty() && std::prev(mass_.end())->first >= n)
            throw validation_error("distribution carries mass outside its state space");
    }
    Rational t(0);
    for (const auto& [idx, m] : mass_) {
        if (m < 0) throw validation_error("negative mass at state index " + std::to_string(idx));
        t += m;
    }
    if (t != 1) throw validation_error("distribution mass sums to " + rational_str(t) + ", expected 1");
}

bool FiniteDistribution::is_normalized() const {
    for (const auto& [idx, m] : mass_)
        if (m < 0) return false;
    return total() == 1;
}

namespace {

void check_tv_inputs(const FiniteDistribution& P, const FiniteDistribution& Q) {
    if (P.space() != Q.space()) throw validation_error("total variation of distributions on mismatched state spaces");
    P.validate();
    Q.validate();
}

} // namespace

Rational tv_l1(const FiniteDistribution& P, const FiniteDistribution& Q) {
    check_tv_inputs(P, Q);
    Rational d(0);
    auto pi = P.mass().begin();
    auto qi = Q.mass().begin();
    while (pi != P.mass().end() || qi != Q.mass().end()) {
        if (qi == Q.mass().end() || (pi != P.mass().end() && pi->first < qi->first)) {
            d += abs(pi->second);
            ++pi;
        } else if (pi == P.mass().end() || qi->first < pi->first) {
            d += abs(qi->second);
            ++qi;
        } else {
            d += abs(pi->second - qi->second);
            ++pi;
            ++qi;
        }
    }
    return d;
}

Rational tv_sup(const FiniteDistribution& P, const FiniteDistribution& Q) {
    return tv_l1(P, Q) / 2;
}

} // namespace exch
