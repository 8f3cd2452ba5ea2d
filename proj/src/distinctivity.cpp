#include "scriptstats/distinctivity.hpp"

#include <cstdlib>
#include <stdexcept>

#include "scriptstats/assignment.hpp"

namespace scriptstats {

int component_difference(const std::optional<Component>& c1,
                         const std::optional<Component>& c2,
                         const DifferenceWeightTable& w) {
    if (!c1 && !c2)
        throw std::domain_error("component_difference: both components absent");
    if (!c1 || !c2) {
        const Component& present = c1 ? *c1 : *c2;
        return w.absence_mode == AbsenceCostMode::component_weight
                   ? weight(present.kind)
                   : w.absence_fixed;
    }
    int cost = 0;
    if (c1->kind != c2->kind) cost += w.kind_mismatch;
    if (c1->orientation != c2->orientation) cost += w.orientation_mismatch;
    return cost;
}

int letter_distance(const Letter& l1, const Letter& l2,
                    const DifferenceWeightTable& w) {
    const int n = static_cast<int>(std::max(l1.components.size(), l2.components.size()));
    int total = 0;
    if (n > 0) {
        Eigen::MatrixXi cost(n, n);
        for (int i = 0; i < n; ++i) {
            const std::optional<Component> a =
                i < static_cast<int>(l1.components.size())
                    ? std::optional<Component>(l1.components[i])
                    : std::nullopt;
            for (int j = 0; j < n; ++j) {
                // n = max(sizes), so at most one side of any pair is padding
                const std::optional<Component> b =
                    j < static_cast<int>(l2.components.size())
                        ? std::optional<Component>(l2.components[j])
                        : std::nullopt;
                cost(i, j) = component_difference(a, b, w);
            }
        }
        total = static_cast<int>(min_cost_assignment(cost));
    }
    total += w.connection_count_weight *
             std::abs(static_cast<int>(l1.connections.size()) -
                      static_cast<int>(l2.connections.size()));
    return total;
}

DistanceMatrix distance_matrix(const Alphabet& a, const DifferenceWeightTable& w) {
    const int n = static_cast<int>(a.letters.size());
    DistanceMatrix m;
    m.values = Eigen::MatrixXi::Zero(n, n);
    for (const Letter& l : a.letters) m.labels.push_back(l.glyph);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int d = letter_distance(a.letters[i], a.letters[j], w);
            m.values(i, j) = d;
            m.values(j, i) = d;
        }
    }
    return m;
}

DistinctivityStats mean_distinctivities(const DistanceMatrix& m) {
    const int n = static_cast<int>(m.values.rows());
    if (n < 2)
        throw std::invalid_argument("mean_distinctivities: need at least two letters");
    if (m.values.cols() != n)
        throw std::invalid_argument("mean_distinctivities: matrix must be square");

    DistinctivityStats stats;
    double sum_of_means = 0.0;
    for (int i = 0; i < n; ++i) {
        const double row_mean =
            static_cast<double>(m.values.row(i).sum()) / (n - 1);
        stats.per_letter_mean.emplace_back(
            i < static_cast<int>(m.labels.size()) ? m.labels[i] : "", row_mean);
        sum_of_means += row_mean;
    }
    stats.overall_mean = sum_of_means / n;
    return stats;
}

}  // namespace scriptstats
