#pragma once

#include "scriptstats/types.hpp"

namespace scriptstats {

/// Composition-method score: sum of component weights plus sum of
/// connection weights.
int letter_complexity(const Letter& l);

/// Histogram of letter_complexity over the alphabet, densified over
/// [min C, max C] so zero-count classes participate in the runs test.
FrequencyTable complexity_distribution(const Alphabet& a);

struct ComplexityStats {
    std::vector<std::pair<std::string, int>> per_letter;  // alphabet order
    double mean = 0.0;
    double sample_sd = 0.0;
    FrequencyTable distribution;
};

ComplexityStats complexity_stats(const Alphabet& a);

struct RunsTestResult {
    double uniform_expectation = 0.0;  // E = N / number of classes
    int runs = 0;                      // r
    int n = 0;                         // classes, = n_below + n_above
    int n_below = 0;                   // n1: frequencies <= E (ties count as below)
    int n_above = 0;                   // n2: frequencies strictly greater than E
    double expected_runs = 0.0;        // E(r) = 1 + 2 n1 n2 / n
    double sigma_runs = 0.0;
    double z = 0.0;                    // (|r - E(r)| - 0.5) / sigma_r
    bool significant = false;          // z >= 1.96
};

/// Runs test about the uniform mean. The table is densified internally, so
/// every class in [min, max] counts. Throws if all frequencies fall on one
/// side of E (sigma_r undefined).
RunsTestResult runs_test_uniform(const FrequencyTable& t);

}  // namespace scriptstats
