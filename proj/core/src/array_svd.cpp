#include "exch/array_svd.hpp"

#include <cmath>

#include "exch/errors.hpp"
#include "exch/rng.hpp"

namespace exch {

FiniteDistribution intro_counterexample() {
    StateSpace space = StateSpace::array(2, 2, {0, 1});
    FiniteDistribution P(space);
    P.set(space.encode({0, 1, 0, 0}), Rational(1, 2));
    P.set(space.encode({0, 0, 1, 0}), Rational(1, 2));
    return P;
}

FiniteDistribution project_cells(const FiniteDistribution& P, const std::vector<int>& cells) {
    const StateSpace& space = P.space();
    P.validate();
    if (cells.empty()) throw validation_error("project_cells: empty cell list");
    const auto& alphabet = space.blocks().front().alphabet;
    for (int c : cells) {
        if (c < 0 || c >= space.cell_count()) throw validation_error("project_cells: cell index out of range");
        if (space.blocks()[static_cast<std::size_t>(space.block_of_cell(c))].alphabet != alphabet)
            throw validation_error("project_cells: cells span different alphabets");
    }
    StateSpace target = StateSpace::sequence(static_cast<int>(cells.size()), alphabet);
    FiniteDistribution out(target);
    for (const auto& [idx, m] : P.mass()) {
        State x = space.decode(idx);
        State y;
        y.reserve(cells.size());
        for (int c : cells) y.push_back(x[static_cast<std::size_t>(c)]);
        out.add(target.encode(y), m);
    }
    return out;
}

SvdTriple svd_conventional(const Eigen::MatrixXd& X, double min_rel_gap) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(X, Eigen::ComputeThinU | Eigen::ComputeThinV);
    SvdTriple t{svd.matrixU(), svd.singularValues(), svd.matrixV()};
    int r = static_cast<int>(t.D.size());
    if (r == 0) throw numeric_error("svd: empty matrix");
    double top = t.D(0);
    if (!(top > 0.0)) throw numeric_error("svd: zero matrix is degenerate");
    for (int i = 0; i < r; ++i) {
        if (t.D(i) / top < min_rel_gap)
            throw numeric_error("svd: singular value " + std::to_string(i) + " is zero or near-zero");
        if (i + 1 < r && (t.D(i) - t.D(i + 1)) / top < min_rel_gap)
            throw numeric_error("svd: singular values " + std::to_string(i) + "," + std::to_string(i + 1) +
                                " are degenerate (relative gap below threshold)");
    }
    // Sign convention: largest-magnitude entry of each U column positive.
    for (int j = 0; j < r; ++j) {
        int arg = 0;
        for (int i = 1; i < t.U.rows(); ++i)
            if (std::abs(t.U(i, j)) > std::abs(t.U(arg, j))) arg = i;
        if (t.U(arg, j) < 0.0) {
            t.U.col(j) = -t.U.col(j);
            t.V.col(j) = -t.V.col(j);
        }
    }
    return t;
}

SvdTriple svd_randomized(const Eigen::MatrixXd& X, std::uint64_t seed, double min_rel_gap) {
    SvdTriple t = svd_conventional(X, min_rel_gap);
    Rng rng(seed);
    for (int j = 0; j < t.D.size(); ++j) {
        if (rng.sign() < 0) {
            t.U.col(j) = -t.U.col(j);
            t.V.col(j) = -t.V.col(j);
        }
    }
    return t;
}

namespace {

Eigen::MatrixXd latent_draw(int m, int n, bool joint, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> row_u(static_cast<std::size_t>(m)), col_u;
    for (auto& u : row_u) u = rng.uniform01();
    if (joint) {
        col_u = row_u;
    } else {
        col_u.resize(static_cast<std::size_t>(n));
        for (auto& u : col_u) u = rng.uniform01();
    }
    Eigen::MatrixXd X(m, n);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            double ui = row_u[static_cast<std::size_t>(i)];
            double vj = col_u[static_cast<std::size_t>(j)];
            // Symmetric link in the latent pair; the i.i.d. per-cell noise
            // keeps singular values simple with probability one.
            X(i, j) = ui * vj + 0.5 * (ui + vj) + 0.3 * rng.normal();
        }
    }
    return X;
}

} // namespace

MatrixSampler exchangeable_sampler(int m, int n, bool joint) {
    if (joint && m != n) throw validation_error("joint sampler requires a square matrix");
    return [m, n, joint](std::uint64_t seed) { return latent_draw(m, n, joint, seed); };
}

MatrixSampler row_scaled_sampler(int m, int n, bool joint) {
    MatrixSampler base = exchangeable_sampler(m, n, joint);
    return [base](std::uint64_t seed) {
        Eigen::MatrixXd X = base(seed);
        X.row(0) *= 10.0;
        return X;
    };
}

double SvdCheckReport::max_abs_z() const {
    double best = 0.0;
    for (const auto& s : stats) best = std::max(best, std::abs(s.z));
    return best;
}

SvdCheckReport svd_equivalence_check(const MatrixSampler& sampler, int m, int n, bool joint, int n_draws,
                                     std::uint64_t seed) {
    if (n_draws < 0) throw validation_error("svd_equivalence_check: negative draw count");
    if (joint && m != n) throw validation_error("svd_equivalence_check: joint case requires m == n");

    SvdCheckReport report;
    report.joint = joint;
    report.m = m;
    report.n = n;
    report.n_draws = n_draws;
    if (n_draws == 0) return report;

    int r = std::min(m, n);
    int z_rows = joint ? m : m + n;
    int z_cols = joint ? 2 * r : r;

    // Row blocks that the theorem claims are exchangeable: all rows in
    // the joint case, U rows and V rows separately otherwise.
    std::vector<std::pair<int, int>> blocks;
    if (joint)
        blocks.emplace_back(0, m);
    else {
        blocks.emplace_back(0, m);
        blocks.emplace_back(m, m + n);
    }

    // Per-draw row statistics: mean entry and mean |entry| per row.
    Eigen::MatrixXd sum_stat = Eigen::MatrixXd::Zero(z_rows, 2);
    struct PairAcc {
        double sum = 0.0, sum_sq = 0.0;
    };
    std::vector<std::vector<PairAcc>> acc(2); // per stat, per pair
    std::vector<std::tuple<int, int, int>> pairs;  // block, i, j
    for (std::size_t bidx = 0; bidx < blocks.size(); ++bidx)
        for (int i = blocks[bidx].first; i < blocks[bidx].second; ++i)
            for (int j = i + 1; j < blocks[bidx].second; ++j)
                pairs.emplace_back(static_cast<int>(bidx), i, j);
    acc[0].resize(pairs.size());
    acc[1].resize(pairs.size());

    int accepted = 0;
    for (int d = 0; d < n_draws; ++d) {
        Eigen::MatrixXd X = sampler(derive_seed(seed, static_cast<std::uint64_t>(2 * d)));
        SvdTriple t;
        try {
            t = svd_randomized(X, derive_seed(seed, static_cast<std::uint64_t>(2 * d + 1)));
        } catch (const numeric_error&) {
            ++report.degenerate_draws;
            continue;
        }
        // Joint: Z is m x 2r, so U and V land side by side on the shared
        // row index. Separate: Z is (m+n) x r and V stacks under U.
        Eigen::MatrixXd Z(z_rows, z_cols);
        Z << t.U, t.V;
        Eigen::VectorXd row_mean = Z.rowwise().mean();
        Eigen::VectorXd row_abs_mean = Z.array().abs().matrix().rowwise().mean();
        sum_stat.col(0) += row_mean;
        sum_stat.col(1) += row_abs_mean;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            auto [bidx, i, j] = pairs[p];
            double d0 = row_mean(i) - row_mean(j);
            double d1 = row_abs_mean(i) - row_abs_mean(j);
            acc[0][p].sum += d0;
            acc[0][p].sum_sq += d0 * d0;
            acc[1][p].sum += d1;
            acc[1][p].sum_sq += d1 * d1;
        }
        ++accepted;
    }
    if (report.degenerate_draws * 2 > n_draws)
        throw numeric_error("svd_equivalence_check: more than half of the draws were degenerate; sampler unsuitable");

    const char* names[2] = {"row_mean", "row_abs_mean"};
    for (int s = 0; s < 2; ++s) {
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            auto [bidx, i, j] = pairs[p];
            RowPairStat out;
            out.stat = names[s];
            out.block = bidx;
            out.i = i;
            out.j = j;
            if (accepted > 0) {
                out.mean_i = sum_stat(i, s) / accepted;
                out.mean_j = sum_stat(j, s) / accepted;
                double mean = acc[s][p].sum / accepted;
                out.mean_diff = mean;
                if (accepted > 1) {
                    double var = (acc[s][p].sum_sq - accepted * mean * mean) / (accepted - 1);
                    var = std::max(var, 0.0);
                    out.std_err = std::sqrt(var / accepted);
                }
                out.z = out.std_err > 0.0 ? mean / out.std_err : (mean == 0.0 ? 0.0 : std::copysign(1e300, mean));
            }
            report.stats.push_back(std::move(out));
        }
    }
    return report;
}

} // namespace exch
