#include "hamrank/zeros.hpp"

#include <algorithm>

namespace hamrank {

namespace {

void check_sweep_n(int n, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
    if (n > kMaxSweepN)
        throw LimitError(std::string(who) + ": n must be <= " + std::to_string(kMaxSweepN) + ", got " +
                         std::to_string(n));
}

// table[m][a] = eigenvalue at (a, n, m), for every a and m in [0, n].
std::vector<std::vector<ExactInt>> eigen_grid(int n, Mode mode) {
    std::vector<std::vector<ExactInt>> grid;
    grid.reserve(n + 1);
    for (int m = 0; m <= n; ++m) grid.push_back(mode == Mode::threshold ? F_by_distance(n, m) : f_by_distance(n, m));
    return grid;
}

ConsecutiveScan scan_grid(int n, const std::vector<std::vector<ExactInt>>& grid, bool strict_a) {
    ConsecutiveScan scan;
    scan.n = n;
    for (int m = 0; m <= n; ++m) {
        for (int a = 0; a <= n; ++a) {
            if (sgn(grid[m][a]) != 0) continue;
            const bool in_triangle = (strict_a ? a < m : a <= m) && m < n;
            if (!in_triangle) {
                // m == n has no successor and is not recorded.
                if (strict_a ? a >= m : a > m) scan.outside_triangle.push_back({a, m});
                continue;
            }
            if (sgn(grid[m + 1][a]) == 0) {
                if (scan.holds) scan.counterexample = ZeroLocus{a, m};
                scan.holds = false;
            } else {
                scan.witnesses.push_back({a, m});
            }
        }
    }
    return scan;
}

}  // namespace

bool ZeroCensus::contains(int a, int m) const {
    return std::find(entries.begin(), entries.end(), ZeroLocus{a, m}) != entries.end();
}

std::vector<int> ZeroCensus::weights_for(int a) const {
    std::vector<int> out;
    for (const auto& e : entries)
        if (e.a == a) out.push_back(e.m);
    return out;
}

ZeroCensus census(int n, Mode mode) {
    check_sweep_n(n, "census");
    const auto grid = eigen_grid(n, mode);
    ZeroCensus c;
    c.n = n;
    c.mode = mode;
    for (int a = 0; a <= n; ++a) {
        int count = 0;
        for (int m = 0; m <= n; ++m) {
            if (sgn(grid[m][a]) == 0) {
                c.entries.push_back({a, m});
                ++count;
            }
        }
        if (count > a)
            c.violations.push_back("a=" + std::to_string(a) + ": " + std::to_string(count) +
                                   " vanishing weights exceed the bound " + std::to_string(a));
    }
    return c;
}

ConsecutiveScan scan_no_consecutive_f(int n) {
    check_sweep_n(n, "scan_no_consecutive_f");
    return scan_grid(n, eigen_grid(n, Mode::exact), false);
}

ConsecutiveScan scan_no_consecutive_F(int n) {
    check_sweep_n(n, "scan_no_consecutive_F");
    return scan_grid(n, eigen_grid(n, Mode::threshold), true);
}

ExactInt F_shift_residual(int a, int n, int m) {
    if (m < 1 || m > n || a < 0 || a > n - 1)
        throw std::invalid_argument("F_shift_residual: need 1 <= m <= n and 0 <= a <= n-1");
    return F_eval(a, n, m) - f_eval(a, n - 1, m - 1);
}

std::vector<ConjectureRow> conjecture_sweep(int max_n) {
    check_sweep_n(max_n, "conjecture_sweep");
    std::vector<ConjectureRow> rows;
    for (int n = 1; n <= max_n; ++n) {
        for (Mode mode : {Mode::threshold, Mode::exact}) {
            const int max_a = mode == Mode::threshold ? n - 1 : n;
            for (int a = 0; a <= max_a; ++a) {
                SpectrumTable table(HammingInstance::make(n, a, mode));
                ConjectureRow row;
                row.n = n;
                row.a = a;
                row.mode = mode;
                row.rank = table.rank();
                row.log_rank_bound = lg_ceil(table.rank());
                row.target = n + 1;
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

}  // namespace hamrank
