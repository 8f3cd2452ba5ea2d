#include "scriptstats/complexity.hpp"

#include <cmath>
#include <stdexcept>

namespace scriptstats {

int letter_complexity(const Letter& l) {
    int c = 0;
    for (const Component& comp : l.components) c += weight(comp.kind);
    for (ConnectionKind conn : l.connections) c += weight(conn);
    return c;
}

FrequencyTable complexity_distribution(const Alphabet& a) {
    if (a.letters.empty()) throw std::invalid_argument("empty alphabet");
    FrequencyTable t;
    for (const Letter& l : a.letters) t.counts[letter_complexity(l)] += 1;
    return t.densified();
}

ComplexityStats complexity_stats(const Alphabet& a) {
    ComplexityStats stats;
    stats.distribution = complexity_distribution(a);
    for (const Letter& l : a.letters)
        stats.per_letter.emplace_back(l.glyph, letter_complexity(l));
    const Moments m = table_moments(stats.distribution, VarianceMode::sample);
    stats.mean = m.mean;
    stats.sample_sd = m.sd;
    return stats;
}

RunsTestResult runs_test_uniform(const FrequencyTable& table) {
    const FrequencyTable t = table.densified();
    const long long total = t.total();
    if (total < 1) throw std::invalid_argument("empty table");

    RunsTestResult r;
    r.n = static_cast<int>(t.counts.size());
    r.uniform_expectation = static_cast<double>(total) / r.n;

    // A frequency exactly equal to E classifies as "below".
    bool prev_above = false;
    bool first = true;
    for (const auto& [x, f] : t.counts) {
        const bool above = static_cast<double>(f) > r.uniform_expectation;
        if (above)
            ++r.n_above;
        else
            ++r.n_below;
        if (first || above != prev_above) ++r.runs;
        prev_above = above;
        first = false;
    }

    if (r.n_below == 0 || r.n_above == 0)
        throw std::invalid_argument(
            "degenerate: all frequencies on one side of the uniform expectation");

    const double n1 = r.n_below, n2 = r.n_above, n = r.n;
    r.expected_runs = 1.0 + 2.0 * n1 * n2 / n;
    r.sigma_runs =
        std::sqrt(2.0 * n1 * n2 * (2.0 * n1 * n2 - n) / (n * n * (n - 1.0)));
    if (r.sigma_runs <= 0.0)
        throw std::invalid_argument("runs test undefined: sigma_r is zero");
    r.z = (std::abs(r.runs - r.expected_runs) - 0.5) / r.sigma_runs;
    r.significant = r.z >= 1.96;
    return r;
}

}  // namespace scriptstats
