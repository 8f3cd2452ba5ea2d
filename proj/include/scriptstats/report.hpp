#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scriptstats/complexity.hpp"
#include "scriptstats/distinctivity.hpp"
#include "scriptstats/distributions.hpp"
#include "scriptstats/types.hpp"
#include "scriptstats/uncertainty.hpp"

namespace scriptstats {

enum class ReportFormat { text, csv, markdown };

struct ReportTable {
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;
};

struct Report {
    std::vector<ReportTable> sections;
};

/// Deterministic rendering: fixed numeric formatting upstream, fixed
/// ordering, no locale dependence. CSV renders header + data rows only
/// (notes and titles are prose and stay in the text/markdown formats).
std::string emit_report(const Report& report, ReportFormat format);

/// "%.Nf" with negative zero normalized away.
std::string format_fixed(double value, int decimals);

Report complexity_report(const Alphabet& a, const ComplexityStats& stats);
Report runs_report(const RunsTestResult& r);
Report fit_report(const DiscreteModelFit& fit, std::optional<int> df_override = {});
Report uncertainty_report(const UncertaintyStats& stats,
                          const std::vector<ComparisonResult>& comparisons);
Report distinctivity_report(const DistinctivityStats& stats);

/// Reference parameter values carried with the bundled dataset, used for
/// side-by-side evaluation in reports.
struct ReferenceParams {
    std::optional<SSGeometricParams> ss;
    std::optional<PoissonParams> poisson;
};

/// All files of a reference dataset directory. Files are discovered by
/// suffix: *.alphabet, *_mapping.csv, *_distances.csv, *_comparison.csv,
/// *_connections.csv, *_components.csv, *_reference.csv.
struct DatasetBundle {
    Alphabet alphabet;
    MappingTable mapping;
    DistanceMatrix reference_matrix;
    std::vector<ExternalUncertainty> comparison_stats;
    FrequencyTable connection_counts;
    FrequencyTable component_counts;
    ReferenceParams reference;
};

DatasetBundle load_bundle(const std::string& directory);

/// Reproduces every analysis of the bundled dataset in one report.
Report bundle_report(const DatasetBundle& bundle);

}  // namespace scriptstats
