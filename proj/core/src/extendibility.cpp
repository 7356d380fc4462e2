#include "exch/extendibility.hpp"

#include "exch/errors.hpp"
#include "exch/orbits.hpp"
#include "exch/simplex.hpp"

namespace exch {

ExtendibilityResult extendibility_lp(const FiniteDistribution& Pk, const std::vector<int>& ns, std::uint64_t cap,
                                     bool want_witness) {
    const StateSpace& small_space = Pk.space();
    if (small_space.kind() == SpaceKind::Array)
        throw validation_error("extendibility: sequence or blocked space required");
    Pk.validate();
    if (!is_exchangeable(Pk)) throw validation_error("extendibility requires an exchangeable distribution");
    if (ns.size() != small_space.blocks().size())
        throw validation_error("extendibility: one target length per block required");

    std::vector<int> ks;
    std::vector<Block> big_blocks;
    for (std::size_t b = 0; b < ns.size(); ++b) {
        const Block& blk = small_space.blocks()[b];
        if (ns[b] < blk.length)
            throw validation_error("extendibility: target length below current length in block " + std::to_string(b));
        ks.push_back(blk.length);
        big_blocks.push_back(Block{ns[b], blk.alphabet});
    }
    StateSpace big_space = small_space.kind() == SpaceKind::Sequence
                               ? StateSpace::sequence(big_blocks[0].length, big_blocks[0].alphabet)
                               : StateSpace::blocked(big_blocks);

    GroupAction big_action = natural_action(big_space);
    OrbitTable big_table = orbits(big_action, cap);

    // One marginal-equation row per orbit of the small space (marginals
    // of invariant measures are exchangeable, and P_k is exchangeable,
    // so per-orbit equality at representatives is the full constraint
    // set), plus one normalization row.
    std::vector<std::uint64_t> small_reps = orbits(natural_action(small_space), cap).representative;

    std::size_t rows = small_reps.size() + 1;
    std::size_t cols = big_table.orbit_count();
    std::vector<std::vector<Rational>> A(rows, std::vector<Rational>(cols, Rational(0)));
    std::vector<Rational> b(rows, Rational(0));

    std::vector<FiniteDistribution> extremes;
    extremes.reserve(cols);
    for (std::size_t o = 0; o < cols; ++o) {
        FiniteDistribution e = extreme_measure(static_cast<std::int32_t>(o), big_table, big_action);
        Projection proj = small_space.kind() == SpaceKind::Sequence ? marginal(e, ks[0]) : blocked_marginal(e, ks);
        for (std::size_t r = 0; r < small_reps.size(); ++r) A[r][o] = proj.dist.at(small_reps[r]);
        A[rows - 1][o] = 1;
        extremes.push_back(std::move(e));
    }
    for (std::size_t r = 0; r < small_reps.size(); ++r) b[r] = Pk.at(small_reps[r]);
    b[rows - 1] = 1;

    std::vector<Rational> weights;
    if (!lp_feasible(A, b, &weights)) return ExtendibilityResult{false, std::nullopt};

    ExtendibilityResult res;
    res.feasible = true;
    if (want_witness) {
        FiniteDistribution Q(big_space);
        for (std::size_t o = 0; o < cols; ++o) {
            if (weights[o] == 0) continue;
            for (const auto& [idx, m] : extremes[o].mass()) Q.add(idx, weights[o] * m);
        }
        Q.validate();
        Projection back = small_space.kind() == SpaceKind::Sequence ? marginal(Q, ks[0]) : blocked_marginal(Q, ks);
        if (!(back.dist == Pk)) throw numeric_error("extendibility witness failed exact re-verification");
        res.witness = std::move(Q);
    }
    return res;
}

ExtendibilityResult extendibility_lp(const FiniteDistribution& Pk, int n, std::uint64_t cap, bool want_witness) {
    if (Pk.space().kind() != SpaceKind::Sequence)
        throw validation_error("extendibility: sequence overload needs a sequence space");
    return extendibility_lp(Pk, std::vector<int>{n}, cap, want_witness);
}

namespace {

/// All length-`parts` vectors of non-negative counts summing to `total`.
void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int c = 0; c <= total; ++c) {
        cur.push_back(c);
        compositions(total - c, parts - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

GapResult definetti_gap(const FiniteDistribution& Pk, int grid_points) {
    const StateSpace& space = Pk.space();
    if (space.kind() != SpaceKind::Sequence) throw validation_error("definetti_gap: sequence space required");
    Pk.validate();
    if (grid_points < 2) throw validation_error("definetti_gap: need at least two grid points");

    const Block& blk = space.blocks().front();
    std::size_t alpha = blk.alphabet.size();
    int mesh = grid_points - 1;

    std::vector<std::vector<int>> counts;
    {
        std::vector<int> cur;
        compositions(mesh, static_cast<int>(alpha), cur, counts);
    }
    std::vector<std::vector<Rational>> grid;
    grid.reserve(counts.size());
    for (const auto& c : counts) {
        std::vector<Rational> p(alpha);
        for (std::size_t s = 0; s < alpha; ++s) p[s] = Rational(c[s], mesh);
        grid.push_back(std::move(p));
    }

    std::uint64_t n_states = space.size_checked();
    std::size_t m_atoms = grid.size();
    if (n_states * (m_atoms + 2 * n_states) > 5'000'000)
        throw cap_exceeded("definetti_gap: LP of " + std::to_string(n_states) + " states x " +
                           std::to_string(m_atoms) + " grid atoms exceeds the cap of 5000000 tableau cells");

    // Variables: mu_0..mu_{m-1}, then t+_y, t-_y per state.
    std::size_t n_vars = m_atoms + 2 * n_states;
    std::vector<std::vector<Rational>> A(n_states + 1, std::vector<Rational>(n_vars, Rational(0)));
    std::vector<Rational> b(n_states + 1, Rational(0));
    std::vector<Rational> c(n_vars, Rational(0));

    for (std::uint64_t y = 0; y < n_states; ++y) {
        State st = space.decode(y);
        for (std::size_t j = 0; j < m_atoms; ++j) {
            Rational q(1);
            for (int cell = 0; cell < space.cell_count() && q != 0; ++cell)
                q *= grid[j][static_cast<std::size_t>(st[static_cast<std::size_t>(cell)])];
            A[y][j] = q;
        }
        A[y][m_atoms + 2 * y] = 1;      // t+
        A[y][m_atoms + 2 * y + 1] = -1; // t-
        b[y] = Pk.at(y);
        c[m_atoms + 2 * y] = 1;
        c[m_atoms + 2 * y + 1] = 1;
    }
    for (std::size_t j = 0; j < m_atoms; ++j) A[n_states][j] = 1;
    b[n_states] = 1;

    LpResult lp = solve_lp(A, b, c);
    if (lp.status != LpStatus::Optimal) throw numeric_error("definetti_gap LP did not reach an optimum");

    GapResult res;
    res.gap = lp.objective;
    for (std::size_t j = 0; j < m_atoms; ++j) {
        if (lp.x[j] == 0) continue;
        MixingAtom atom;
        atom.components = {grid[j]};
        atom.weight = lp.x[j];
        res.argmin.push_back(std::move(atom));
    }
    return res;
}

} // namespace exch
