#pragma once

#include "scriptstats/types.hpp"

namespace scriptstats {

/// Mean orthographic uncertainty in bits, with the pieces of its variance
/// estimator. The variance convention here is population (divide by N).
struct UncertaintyStats {
    std::string label;
    double u_bar = 0.0;    // (1/N) sum f(n) log2 n
    long long n = 0;       // phoneme count N
    double mean = 0.0;     // x-bar of the representation counts
    double variance = 0.0; // population s^2
    double v = 0.0;        // V(U-bar) = s^2 / (0.48 N x-bar^2)
};

/// Computes U-bar, the moments and V together from a representation-count
/// histogram. Support must start at 1: a phoneme cannot have zero
/// representations.
UncertaintyStats mean_uncertainty(const FrequencyTable& t, std::string label = {});

enum class VarianceCombination { sum, difference };

struct ComparisonResult {
    std::string left;
    std::string right;
    double z = 0.0;           // |U1 - U2| / sqrt(V1 (+|-) V2)
    bool significant = false; // z > 1.96
};

/// The sum combination is the default; the difference form is retained for
/// reproduction attempts and errors out when the combined variance is not
/// positive.
ComparisonResult compare_uncertainty(const UncertaintyStats& s1,
                                     const UncertaintyStats& s2,
                                     VarianceCombination mode = VarianceCombination::sum);

/// Externally supplied (label, U-bar, V) triple for cross-language rows.
struct ExternalUncertainty {
    std::string label;
    double u_bar = 0.0;
    double v = 0.0;
};

std::vector<ComparisonResult> comparison_table(
    const UncertaintyStats& target, const std::vector<ExternalUncertainty>& others,
    VarianceCombination mode = VarianceCombination::sum);

}  // namespace scriptstats
