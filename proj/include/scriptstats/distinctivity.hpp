#pragma once

#include <Eigen/Core>
#include <optional>

#include "scriptstats/types.hpp"

namespace scriptstats {

enum class AbsenceCostMode { component_weight, fixed };

/// Attribute-difference weights for component matching. The defaults are a
/// documented placeholder calibration; load alternatives from a weights file.
struct DifferenceWeightTable {
    int kind_mismatch = 3;
    int orientation_mismatch = 1;
    AbsenceCostMode absence_mode = AbsenceCostMode::component_weight;
    int absence_fixed = 2;            // used when absence_mode == fixed
    int connection_count_weight = 0;  // optional |#conn1 - #conn2| term
};

/// Pairwise component cost: 0 for identical components; kind and orientation
/// mismatches add their weights independently; an absent side costs the
/// present component's weight (or the fixed cost). Both sides absent is a
/// domain error.
int component_difference(const std::optional<Component>& c1,
                         const std::optional<Component>& c2,
                         const DifferenceWeightTable& w);

/// Minimum over all component matchings of the summed component differences,
/// the shorter list padded with absences. Solved as an assignment problem;
/// equals the exhaustive-permutation minimum.
int letter_distance(const Letter& l1, const Letter& l2,
                    const DifferenceWeightTable& w);

struct DistanceMatrix {
    std::vector<std::string> labels;
    Eigen::MatrixXi values;  // symmetric, zero diagonal
};

/// Each unordered pair computed once; symmetry holds by construction.
DistanceMatrix distance_matrix(const Alphabet& a, const DifferenceWeightTable& w);

struct DistinctivityStats {
    std::vector<std::pair<std::string, double>> per_letter_mean;  // row sum / (I-1)
    double overall_mean = 0.0;
};

DistinctivityStats mean_distinctivities(const DistanceMatrix& m);

}  // namespace scriptstats
