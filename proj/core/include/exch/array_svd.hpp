#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>

#include "exch/distribution.hpp"

namespace exch {

/// The 2x2 counterexample to a mixture representation: mass 1/2 on each
/// of [[0,1],[0,0]] and [[0,0],[1,0]] (zero diagonal, off-diagonal
/// entries unequal). Jointly row-column exchangeable by construction.
FiniteDistribution intro_counterexample();

/// Restriction of an exact array/sequence distribution to a subset of
/// cells, as a sequence distribution over those cells in the given order.
FiniteDistribution project_cells(const FiniteDistribution& P, const std::vector<int>& cells);

struct SvdTriple {
    Eigen::MatrixXd U; // m x r, orthonormal columns
    Eigen::VectorXd D; // r descending positive singular values
    Eigen::MatrixXd V; // n x r, orthonormal columns
};

/// Thin SVD with a fixed sign convention: in each U column the entry of
/// largest magnitude is made positive (the paired V column flips with
/// it). Throws numeric_error when singular values are degenerate:
/// any zero/near-zero value or a relative gap below `min_rel_gap`.
SvdTriple svd_conventional(const Eigen::MatrixXd& X, double min_rel_gap = 1e-8);

/// svd_conventional followed by right-multiplication of U and V by the
/// same random diagonal +-1 matrix drawn from the seed. Reconstruction
/// U diag(D) V^t = X is preserved exactly by the sign flips.
SvdTriple svd_randomized(const Eigen::MatrixXd& X, std::uint64_t seed, double min_rel_gap = 1e-8);

/// Seeded matrix generator for the Monte Carlo checker.
using MatrixSampler = std::function<Eigen::MatrixXd(std::uint64_t seed)>;

/// Latent-variable exchangeable law: joint = symmetric link of shared
/// per-index uniforms plus i.i.d. noise; separate = link of independent
/// row and column uniforms plus noise.
MatrixSampler exchangeable_sampler(int m, int n, bool joint);
/// Same construction with row 0 scaled by 10: not exchangeable.
MatrixSampler row_scaled_sampler(int m, int n, bool joint);

struct RowPairStat {
    std::string stat; // "row_mean" or "row_abs_mean"
    int block = 0;    // 0 = U rows, 1 = V rows (separate case)
    int i = 0, j = 0; // row positions compared
    double mean_i = 0.0, mean_j = 0.0;
    double mean_diff = 0.0;
    double std_err = 0.0;
    double z = 0.0;
};

struct SvdCheckReport {
    bool joint = false;
    int m = 0, n = 0;
    int n_draws = 0;
    int degenerate_draws = 0;
    std::vector<RowPairStat> stats;
    double max_abs_z() const;
};

/// Draws N matrices, forms Z from the randomized singular vectors
/// (joint: [U~ | V~] side by side over the shared row index; separate:
/// U~ stacked over V~), and compares permutation-sensitive row-position
/// statistics within each exchangeable row block. If the implication
/// "exchangeable X => row-exchangeable Z" holds, every standardized
/// difference is statistically indistinguishable from zero.
SvdCheckReport svd_equivalence_check(const MatrixSampler& sampler, int m, int n, bool joint, int n_draws,
                                     std::uint64_t seed);

} // namespace exch
