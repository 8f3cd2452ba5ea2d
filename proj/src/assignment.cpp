#include "scriptstats/assignment.hpp"

#include <limits>
#include <stdexcept>

namespace scriptstats {

// Jonker-Volgenant style shortest augmenting path algorithm with row/column
// potentials, 1-indexed internally with column 0 as the virtual start.
long long min_cost_assignment(const Eigen::MatrixXi& cost,
                              std::vector<int>& row_to_col) {
    if (cost.rows() != cost.cols())
        throw std::invalid_argument("min_cost_assignment: matrix must be square");
    const int n = static_cast<int>(cost.rows());
    row_to_col.assign(n, -1);
    if (n == 0) return 0;

    constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> u(n + 1, 0), v(n + 1, 0);
    std::vector<int> match(n + 1, 0);  // match[col] = row (1-indexed)

    for (int i = 1; i <= n; ++i) {
        match[0] = i;
        int j0 = 0;
        std::vector<long long> minv(n + 1, kInf);
        std::vector<bool> used(n + 1, false);
        std::vector<int> way(n + 1, 0);
        do {
            used[j0] = true;
            const int i0 = match[j0];
            long long delta = kInf;
            int j1 = 0;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const long long cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const int j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    long long total = 0;
    for (int j = 1; j <= n; ++j) {
        if (match[j] != 0) row_to_col[match[j] - 1] = j - 1;
    }
    for (int i = 0; i < n; ++i) total += cost(i, row_to_col[i]);
    return total;
}

long long min_cost_assignment(const Eigen::MatrixXi& cost) {
    std::vector<int> perm;
    return min_cost_assignment(cost, perm);
}

}  // namespace scriptstats
