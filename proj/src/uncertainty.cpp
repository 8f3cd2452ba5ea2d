#include "scriptstats/uncertainty.hpp"

#include <cmath>
#include <stdexcept>

namespace scriptstats {

UncertaintyStats mean_uncertainty(const FrequencyTable& t, std::string label) {
    if (t.empty() || t.total() < 1) throw std::invalid_argument("empty table");
    if (t.min_support() < 1)
        throw std::domain_error(
            "mean_uncertainty: representation counts must be >= 1");

    UncertaintyStats s;
    s.label = std::move(label);
    s.n = t.total();
    double bits = 0.0;
    for (const auto& [x, f] : t.counts)
        bits += static_cast<double>(f) * std::log2(static_cast<double>(x));
    s.u_bar = bits / static_cast<double>(s.n);

    const Moments m = table_moments(t, VarianceMode::population);
    s.mean = m.mean;
    s.variance = m.variance;
    s.v = s.variance / (0.48 * static_cast<double>(s.n) * s.mean * s.mean);
    return s;
}

namespace {

ComparisonResult compare_values(const std::string& left, double u1, double v1,
                                const std::string& right, double u2, double v2,
                                VarianceCombination mode) {
    if (!(v1 > 0.0) || !(v2 > 0.0))
        throw std::invalid_argument("compare_uncertainty: variances must be positive");
    const double combined = mode == VarianceCombination::sum ? v1 + v2 : v1 - v2;
    if (!(combined > 0.0))
        throw std::invalid_argument(
            "compare_uncertainty: non-positive combined variance (V1 " +
            std::to_string(v1) + ", V2 " + std::to_string(v2) +
            ", difference mode)");
    ComparisonResult r;
    r.left = left;
    r.right = right;
    r.z = std::abs(u1 - u2) / std::sqrt(combined);
    r.significant = r.z > 1.96;
    return r;
}

}  // namespace

ComparisonResult compare_uncertainty(const UncertaintyStats& s1,
                                     const UncertaintyStats& s2,
                                     VarianceCombination mode) {
    return compare_values(s1.label, s1.u_bar, s1.v, s2.label, s2.u_bar, s2.v, mode);
}

std::vector<ComparisonResult> comparison_table(
    const UncertaintyStats& target, const std::vector<ExternalUncertainty>& others,
    VarianceCombination mode) {
    std::vector<ComparisonResult> rows;
    rows.reserve(others.size());
    for (const ExternalUncertainty& o : others)
        rows.push_back(
            compare_values(target.label, target.u_bar, target.v, o.label, o.u_bar,
                           o.v, mode));
    return rows;
}

}  // namespace scriptstats
