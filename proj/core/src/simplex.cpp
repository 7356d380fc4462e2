#include "exch/simplex.hpp"

#include "exch/errors.hpp"

namespace exch {

namespace {

// Dense tableau: rows 0..m-1 hold [A | b] under the current basis, row m
// is the reduced-cost row with the negated objective in its last column.
struct Tableau {
    std::size_t m, n; // constraints, structural+artificial columns
    std::vector<std::vector<Rational>> t;
    std::vector<std::size_t> basis;

    Rational& at(std::size_t i, std::size_t j) { return t[i][j]; }

    void pivot(std::size_t r, std::size_t c) {
        Rational piv = t[r][c];
        for (auto& v : t[r]) v /= piv;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i == r || t[i][c] == 0) continue;
            Rational f = t[i][c];
            for (std::size_t j = 0; j <= n; ++j) t[i][j] -= f * t[r][j];
        }
        basis[r] = c;
    }

    // Bland: entering = lowest column index with negative reduced cost;
    // leaving = min ratio, ties by lowest basis index. Returns false at
    // optimality; throws on an unbounded ray.
    bool bland_step(std::size_t usable_cols) {
        std::size_t enter = n;
        for (std::size_t j = 0; j < usable_cols; ++j) {
            if (t[m][j] < 0) {
                enter = j;
                break;
            }
        }
        if (enter == n) return false;
        std::size_t leave = m;
        Rational best_ratio;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][n] / t[i][enter];
            if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == m) throw numeric_error("simplex: unbounded ray");
        pivot(leave, enter);
        return true;
    }
};

} // namespace

LpResult solve_lp(std::vector<std::vector<Rational>> A, std::vector<Rational> b, std::vector<Rational> c) {
    std::size_t m = A.size();
    std::size_t n = c.size();
    for (const auto& row : A)
        if (row.size() != n) throw validation_error("simplex: ragged constraint matrix");
    if (b.size() != m) throw validation_error("simplex: |b| != row count");

    for (std::size_t i = 0; i < m; ++i) {
        if (b[i] < 0) {
            for (auto& v : A[i]) v = -v;
            b[i] = -b[i];
        }
    }

    Tableau tab;
    tab.m = m;
    tab.n = n + m; // structural + one artificial per row
    tab.t.assign(m + 1, std::vector<Rational>(tab.n + 1, Rational(0)));
    tab.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = A[i][j];
        tab.t[i][n + i] = 1;
        tab.t[i][tab.n] = b[i];
        tab.basis[i] = n + i;
    }
    // Phase-1 cost: sum of artificials, expressed through the basis.
    for (std::size_t j = 0; j <= tab.n; ++j) {
        Rational s(0);
        for (std::size_t i = 0; i < m; ++i) s += tab.t[i][j];
        tab.t[m][j] = (j >= n && j < tab.n) ? Rational(0) : -s;
    }
    while (tab.bland_step(n)) {
    }
    if (-tab.t[m][tab.n] != 0) return LpResult{LpStatus::Infeasible, Rational(0), {}};

    // Pivot surviving artificials out; a row with no structural pivot
    // column is a redundant constraint and its artificial stays at zero.
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.basis[i] < n) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (tab.t[i][j] != 0) {
                tab.pivot(i, j);
                break;
            }
        }
    }

    // Phase 2 with the real objective.
    for (std::size_t j = 0; j <= tab.n; ++j) tab.t[m][j] = 0;
    for (std::size_t j = 0; j < n; ++j) tab.t[m][j] = c[j];
    for (std::size_t i = 0; i < m; ++i) {
        if (tab.basis[i] >= n) continue; // zeroed artificial in a redundant row
        Rational f = tab.t[m][tab.basis[i]];
        if (f == 0) continue;
        for (std::size_t j = 0; j <= tab.n; ++j) tab.t[m][j] -= f * tab.t[i][j];
    }
    try {
        while (tab.bland_step(n)) {
        }
    } catch (const numeric_error&) {
        return LpResult{LpStatus::Unbounded, Rational(0), {}};
    }

    LpResult res;
    res.status = LpStatus::Optimal;
    res.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.t[i][tab.n];
    res.objective = -tab.t[m][tab.n];
    return res;
}

bool lp_feasible(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                 std::vector<Rational>* witness) {
    std::vector<Rational> c(A.empty() ? 0 : A.front().size(), Rational(0));
    LpResult res = solve_lp(A, b, c);
    if (res.status != LpStatus::Optimal) return false;
    if (witness != nullptr) *witness = std::move(res.x);
    return true;
}

} // namespace exch
