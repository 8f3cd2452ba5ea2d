#pragma once

#include <Eigen/Core>
#include <vector>

namespace scriptstats {

/// Minimum total cost over all perfect matchings of a square cost matrix,
/// solved by shortest augmenting paths with potentials in O(n^3).
/// Equals the exhaustive minimum over all row-to-column bijections.
long long min_cost_assignment(const Eigen::MatrixXi& cost);

/// Same, also reporting the matched column for each row.
long long min_cost_assignment(const Eigen::MatrixXi& cost,
                              std::vector<int>& row_to_col);

}  // namespace scriptstats
