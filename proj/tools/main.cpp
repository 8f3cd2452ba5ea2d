// Command-line front end: parses dataset files, runs the analyses and prints
// deterministic reports in text, CSV or markdown form.
#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "scriptstats/io.hpp"
#include "scriptstats/report.hpp"

namespace {

using namespace scriptstats;

ReportFormat to_format(const std::string& name) {
    if (name == "text") return ReportFormat::text;
    if (name == "csv") return ReportFormat::csv;
    if (name == "md") return ReportFormat::markdown;
    throw CLI::ValidationError("--format", "unknown format '" + name + "'");
}

int run(int argc, char** argv) {
    CLI::App app{"Quantitative writing-system analysis toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // let --format appear after the subcommand
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "md"}))
        ->capture_default_str();

    std::string alphabet_path, mapping_path, freq_path, matrix_path, weights_path,
        compare_path, bundle_dir, model_name = "ss-geometric",
        method_name = "chisq-min", df_spec = "auto", label = "target";

    CLI::App* cmd_complexity =
        app.add_subcommand("complexity", "Letter complexities of an alphabet");
    cmd_complexity->add_option("alphabet", alphabet_path, "Alphabet file")->required();

    CLI::App* cmd_runs = app.add_subcommand(
        "runs-test", "Runs test for uniformity of the complexity distribution");
    cmd_runs->add_option("alphabet", alphabet_path, "Alphabet file")->required();

    CLI::App* cmd_fit =
        app.add_subcommand("fit", "Fit a discrete model to a frequency table");
    cmd_fit->add_option("table", freq_path, "Frequency CSV (value,count)")->required();
    cmd_fit->add_option("--model", model_name, "Model")
        ->check(CLI::IsMember({"ss-geometric", "poisson"}))
        ->capture_default_str();
    cmd_fit->add_option("--method", method_name, "Estimation method")
        ->check(CLI::IsMember({"chisq-min", "moment"}))
        ->capture_default_str();
    cmd_fit->add_option("--df", df_spec, "Degrees of freedom: auto or an integer")
        ->capture_default_str();

    CLI::App* cmd_uncertainty = app.add_subcommand(
        "uncertainty", "Mean orthographic uncertainty of a phoneme mapping");
    cmd_uncertainty->add_option("mapping", mapping_path, "Mapping CSV")->required();
    cmd_uncertainty->add_option("--compare", compare_path,
                                "Comparison-stats CSV (label,u_bar,variance)");
    cmd_uncertainty->add_option("--label", label, "Label for the target system")
        ->capture_default_str();

    CLI::App* cmd_distinctivity = app.add_subcommand(
        "distinctivity", "Mean letter distinctivities from an alphabet or a matrix");
    cmd_distinctivity->add_option("alphabet", alphabet_path, "Alphabet file");
    cmd_distinctivity->add_option("--weights", weights_path,
                                  "Difference weight configuration");
    cmd_distinctivity->add_option("--matrix", matrix_path,
                                  "Precomputed labeled distance matrix CSV");

    CLI::App* cmd_report =
        app.add_subcommand("report", "Reproduce every analysis of a dataset bundle");
    cmd_report->add_option("--bundle", bundle_dir, "Bundle directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    const ReportFormat fmt = to_format(format);
    Report report;

    if (cmd_complexity->parsed()) {
        const Alphabet a = parse_alphabet_file(alphabet_path);
        report = complexity_report(a, complexity_stats(a));
    } else if (cmd_runs->parsed()) {
        const Alphabet a = parse_alphabet_file(alphabet_path);
        report = runs_report(runs_test_uniform(complexity_distribution(a)));
    } else if (cmd_fit->parsed()) {
        const FrequencyTable t = parse_frequency_file(freq_path);
        const ModelKind kind = model_name == "poisson" ? ModelKind::poisson
                                                       : ModelKind::ss_geometric;
        const FitMethod method = method_name == "moment" ? FitMethod::moment
                                                         : FitMethod::chisq_min;
        std::optional<int> df_override;
        if (df_spec != "auto") {
            try {
                df_override = std::stoi(df_spec);
            } catch (const std::exception&) {
                std::cerr << "error: --df expects 'auto' or an integer\n";
                return 1;
            }
            if (*df_override < 1) {
                std::cerr << "error: --df must be >= 1\n";
                return 1;
            }
        }
        report = fit_report(fit_discrete(t, kind, method), df_override);
    } else if (cmd_uncertainty->parsed()) {
        const MappingTable m = parse_mapping_file(mapping_path);
        const UncertaintyStats stats =
            mean_uncertainty(representation_histogram(m), label);
        std::vector<ComparisonResult> rows;
        if (!compare_path.empty())
            rows = comparison_table(stats, parse_comparison_file(compare_path));
        report = uncertainty_report(stats, rows);
    } else if (cmd_distinctivity->parsed()) {
        if (!matrix_path.empty()) {
            report = distinctivity_report(
                mean_distinctivities(parse_matrix_file(matrix_path)));
        } else if (!alphabet_path.empty()) {
            const Alphabet a = parse_alphabet_file(alphabet_path);
            DifferenceWeightTable w;
            if (!weights_path.empty()) w = parse_weights_file(weights_path);
            report = distinctivity_report(mean_distinctivities(distance_matrix(a, w)));
        } else {
            std::cerr << "error: distinctivity needs an alphabet file or --matrix\n";
            return 1;
        }
    } else if (cmd_report->parsed()) {
        report = bundle_report(load_bundle(bundle_dir));
    }

    std::cout << emit_report(report, fmt);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const scriptstats::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
