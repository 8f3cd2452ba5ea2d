#include "scriptstats/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "scriptstats/io.hpp"

namespace scriptstats {

std::string format_fixed(double value, int decimals) {
    if (value == 0.0) value = 0.0;  // flush negative zero
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
    return buf;
}

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string md_cell(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += "\\|";
        else out.push_back(c);
    }
    return out;
}

void emit_text_table(std::ostringstream& out, const ReportTable& t) {
    if (!t.title.empty()) out << "== " << t.title << " ==\n";
    if (!t.header.empty()) {
        std::vector<std::size_t> widths(t.header.size(), 0);
        for (std::size_t i = 0; i < t.header.size(); ++i)
            widths[i] = utf8_length(t.header[i]);
        for (const auto& row : t.rows)
            for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i)
                widths[i] = std::max(widths[i], utf8_length(row[i]));
        const auto emit_row = [&](const std::vector<std::string>& row) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << row[i];
                if (i + 1 < row.size())
                    out << std::string(widths[i] - utf8_length(row[i]) + 2, ' ');
            }
            out << "\n";
        };
        emit_row(t.header);
        for (const auto& row : t.rows) emit_row(row);
    }
    for (const std::string& note : t.notes) out << note << "\n";
}

void emit_csv_table(std::ostringstream& out, const ReportTable& t) {
    const auto emit_row = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            out << csv_cell(row[i]);
        }
        out << "\n";
    };
    if (!t.header.empty()) emit_row(t.header);
    for (const auto& row : t.rows) emit_row(row);
}

void emit_md_table(std::ostringstream& out, const ReportTable& t) {
    if (!t.title.empty()) out << "## " << t.title << "\n\n";
    if (!t.header.empty()) {
        out << "|";
        for (const std::string& h : t.header) out << " " << md_cell(h) << " |";
        out << "\n|";
        for (std::size_t i = 0; i < t.header.size(); ++i) out << " --- |";
        out << "\n";
        for (const auto& row : t.rows) {
            out << "|";
            for (const std::string& c : row) out << " " << md_cell(c) << " |";
            out << "\n";
        }
        out << "\n";
    }
    for (const std::string& note : t.notes) out << note << "\n";
}

}  // namespace

std::string emit_report(const Report& report, ReportFormat format) {
    std::ostringstream out;
    bool first = true;
    for (const ReportTable& section : report.sections) {
        if (!first) out << "\n";
        first = false;
        switch (format) {
            case ReportFormat::text: emit_text_table(out, section); break;
            case ReportFormat::csv: emit_csv_table(out, section); break;
            case ReportFormat::markdown: emit_md_table(out, section); break;
        }
    }
    return out.str();
}

namespace {

std::string grouped_weights(const std::vector<int>& weights) {
    if (weights.empty()) return "-";
    std::ostringstream out;
    bool first = true;
    for (int w = 1; w <= 3; ++w) {
        const auto count = std::count(weights.begin(), weights.end(), w);
        if (count == 0) continue;
        if (!first) out << "+";
        first = false;
        if (count > 1) out << count << "x";
        out << w;
    }
    return out.str();
}

std::string components_code(const Letter& l) {
    std::vector<int> w;
    for (const Component& c : l.components) w.push_back(weight(c.kind));
    return grouped_weights(w);
}

std::string connections_code(const Letter& l) {
    std::vector<int> w;
    for (ConnectionKind c : l.connections) w.push_back(weight(c));
    return grouped_weights(w);
}

ReportTable frequency_section(const std::string& title, const FrequencyTable& t,
                              const std::string& value_header) {
    ReportTable section;
    section.title = title;
    section.header = {value_header, "f"};
    for (const auto& [x, f] : t.counts)
        section.rows.push_back({std::to_string(x), std::to_string(f)});
    return section;
}

ReportTable fit_section(const std::string& title, const DiscreteModelFit& fit,
                        std::optional<int> df_override,
                        const std::optional<DiscreteModel>& reference) {
    ReportTable section;
    section.title = title;
    section.header = {"x", "observed", "expected"};
    std::vector<PooledClass> ref_classes;
    if (reference) {
        section.header.push_back("expected_ref");
        FrequencyTable t;
        for (const PooledClass& c : fit.classes) t.counts[c.support] = c.observed;
        ref_classes = pool_open_tail(t, *reference);
    }
    for (std::size_t i = 0; i < fit.classes.size(); ++i) {
        const PooledClass& c = fit.classes[i];
        std::vector<std::string> row = {
            c.open ? ">=" + std::to_string(c.support) : std::to_string(c.support),
            std::to_string(c.observed), format_fixed(c.expected, 2)};
        if (reference) row.push_back(format_fixed(ref_classes[i].expected, 2));
        section.rows.push_back(std::move(row));
    }

    const int classes = static_cast<int>(fit.classes.size());
    const int params = model_param_count(fit.model.kind);
    const int df_plain = std::max(classes - 1, 1);
    const int df_params = std::max(classes - 1 - params, 1);

    if (fit.model.kind == ModelKind::ss_geometric) {
        section.notes.push_back("model=ss-geometric p=" +
                                format_fixed(fit.model.ss.p, 4) +
                                " a=" + format_fixed(fit.model.ss.a, 4));
    } else {
        section.notes.push_back("model=poisson lambda=" +
                                format_fixed(fit.model.poisson.lambda, 4));
    }
    section.notes.push_back(std::string("method=") +
                            (fit.method == FitMethod::chisq_min ? "chisq-min"
                                                                : "moment"));
    section.notes.push_back("chi_square=" + format_fixed(fit.chi_square, 2));
    if (df_override && *df_override != df_plain && *df_override != df_params)
        section.notes.push_back(
            "P(df=" + std::to_string(*df_override) + ")=" +
            format_fixed(chi_square_sf(fit.chi_square, *df_override), 2));
    section.notes.push_back(
        "P(df=" + std::to_string(df_params) + ")=" +
        format_fixed(chi_square_sf(fit.chi_square, df_params), 2));
    if (df_plain != df_params)
        section.notes.push_back(
            "P(df=" + std::to_string(df_plain) + ")=" +
            format_fixed(chi_square_sf(fit.chi_square, df_plain), 2));
    section.notes.push_back(
        "note: degrees of freedom are shown for both conventions (classes-1 and "
        "classes-1-parameters); they differ by the number of estimated parameters.");

    if (reference) {
        const double ref_chi = chi_square_statistic(ref_classes);
        std::string params_text =
            reference->kind == ModelKind::ss_geometric
                ? "p=" + format_fixed(reference->ss.p, 4) +
                      " a=" + format_fixed(reference->ss.a, 4)
                : "lambda=" + format_fixed(reference->poisson.lambda, 4);
        section.notes.push_back("reference " + params_text + " chi_square=" +
                                format_fixed(ref_chi, 2));
        section.notes.push_back(
            "reference P(df=" + std::to_string(df_params) + ")=" +
            format_fixed(chi_square_sf(ref_chi, df_params), 2) + " P(df=" +
            std::to_string(df_plain) + ")=" +
            format_fixed(chi_square_sf(ref_chi, df_plain), 2));
    }
    return section;
}

ReportTable runs_section(const RunsTestResult& r) {
    ReportTable section;
    section.title = "Runs test about the uniform mean";
    section.header = {"E", "r", "n", "n1", "n2", "E(r)", "sigma_r", "z",
                      "significant"};
    section.rows.push_back(
        {format_fixed(r.uniform_expectation, 2), std::to_string(r.runs),
         std::to_string(r.n), std::to_string(r.n_below), std::to_string(r.n_above),
         format_fixed(r.expected_runs, 2), format_fixed(r.sigma_runs, 2),
         format_fixed(r.z, 2), r.significant ? "yes" : "no"});
    section.notes.push_back(
        r.significant
            ? "verdict: the uniform distribution is rejected (z >= 1.96)."
            : "verdict: the number of runs is compatible with a uniform "
              "distribution (z < 1.96).");
    section.notes.push_back(
        "note: z is computed at full precision and rounded for display; "
        "rounding E(r) first can shift the last digit.");
    return section;
}

}  // namespace

Report complexity_report(const Alphabet& a, const ComplexityStats& stats) {
    Report report;
    ReportTable letters;
    letters.title = "Letter complexities";
    letters.header = {"glyph", "components", "connections", "complexity"};
    for (const Letter& l : a.letters)
        letters.rows.push_back({l.glyph, components_code(l), connections_code(l),
                                std::to_string(letter_complexity(l))});
    letters.notes.push_back("mean_complexity=" + format_fixed(stats.mean, 2));
    letters.notes.push_back("sd_complexity=" + format_fixed(stats.sample_sd, 2) +
                            " (sample convention)");
    report.sections.push_back(std::move(letters));
    report.sections.push_back(
        frequency_section("Distribution of complexities", stats.distribution, "C"));
    return report;
}

Report runs_report(const RunsTestResult& r) {
    Report report;
    report.sections.push_back(runs_section(r));
    return report;
}

Report fit_report(const DiscreteModelFit& fit, std::optional<int> df_override) {
    Report report;
    report.sections.push_back(
        fit_section("Discrete model fit", fit, df_override, std::nullopt));
    return report;
}

Report uncertainty_report(const UncertaintyStats& stats,
                          const std::vector<ComparisonResult>& comparisons) {
    Report report;
    ReportTable section;
    section.title = "Mean orthographic uncertainty";
    section.header = {"label", "U_bar", "N", "mean", "variance", "V"};
    section.rows.push_back({stats.label.empty() ? "-" : stats.label,
                            format_fixed(stats.u_bar, 4), std::to_string(stats.n),
                            format_fixed(stats.mean, 4),
                            format_fixed(stats.variance, 4),
                            format_fixed(stats.v, 6)});
    section.notes.push_back("U_bar=" + format_fixed(stats.u_bar, 4) + " bits");
    report.sections.push_back(std::move(section));

    if (!comparisons.empty()) {
        ReportTable table;
        table.title = "Cross-system comparison";
        table.header = {"system", "z", "significant"};
        for (const ComparisonResult& row : comparisons)
            table.rows.push_back(
                {row.right, format_fixed(row.z, 2), row.significant ? "yes" : "no"});
        table.notes.push_back(
            "note: comparison variances are externally supplied inputs.");
        report.sections.push_back(std::move(table));
    }
    return report;
}

Report distinctivity_report(const DistinctivityStats& stats) {
    Report report;
    ReportTable section;
    section.title = "Mean distinctivities";
    section.header = {"glyph", "mean_distinctivity"};
    for (const auto& [glyph, mean] : stats.per_letter_mean)
        section.rows.push_back({glyph, format_fixed(mean, 2)});
    section.notes.push_back("D_bar=" + format_fixed(stats.overall_mean, 2));
    report.sections.push_back(std::move(section));
    return report;
}

namespace {

std::string find_bundle_file(const std::string& directory, const std::string& suffix,
                             bool required) {
    namespace fs = std::filesystem;
    std::vector<std::string> matches;
    if (!fs::is_directory(directory))
        throw parse_error(directory, 0, "not a directory");
    for (const auto& entry : fs::directory_iterator(directory)) {
        if (!entry.is_regular_file()) continue;
        const std::string name = entry.path().filename().string();
        if (name.size() >= suffix.size() &&
            name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
            matches.push_back(entry.path().string());
    }
    std::sort(matches.begin(), matches.end());
    if (matches.empty()) {
        if (required)
            throw parse_error(directory, 0, "bundle is missing a *" + suffix + " file");
        return {};
    }
    return matches.front();
}

ReferenceParams parse_reference_file(const std::string& path) {
    ReferenceParams ref;
    if (path.empty()) return ref;
    std::ifstream in(path);
    if (!in) throw parse_error(path, 0, "cannot open file");
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    double ss_p = -1.0, ss_a = -1.0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = line.substr(0, line.find('#'));
        if (t.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        if (!header_seen) {
            header_seen = true;
            continue;
        }
        std::istringstream row(t);
        std::string key, value;
        if (!std::getline(row, key, ',') || !std::getline(row, value, ','))
            throw parse_error(path, line_no, "expected key,value");
        const double v = std::stod(value);
        if (key == "ss_p") ss_p = v;
        else if (key == "ss_a") ss_a = v;
        else if (key == "poisson_lambda") ref.poisson = PoissonParams{v};
        else throw parse_error(path, line_no, "unknown reference key '" + key + "'");
    }
    if (ss_p > 0.0 && ss_a >= 0.0) ref.ss = SSGeometricParams{ss_p, ss_a};
    return ref;
}

}  // namespace

DatasetBundle load_bundle(const std::string& directory) {
    DatasetBundle bundle;
    bundle.alphabet =
        parse_alphabet_file(find_bundle_file(directory, ".alphabet", true));
    bundle.mapping =
        parse_mapping_file(find_bundle_file(directory, "_mapping.csv", true));
    bundle.reference_matrix =
        parse_matrix_file(find_bundle_file(directory, "_distances.csv", true));
    bundle.comparison_stats =
        parse_comparison_file(find_bundle_file(directory, "_comparison.csv", true));
    bundle.connection_counts =
        parse_frequency_file(find_bundle_file(directory, "_connections.csv", true));
    bundle.component_counts =
        parse_frequency_file(find_bundle_file(directory, "_components.csv", true));
    bundle.reference =
        parse_reference_file(find_bundle_file(directory, "_reference.csv", false));
    return bundle;
}

Report bundle_report(const DatasetBundle& bundle) {
    Report report;

    // graphemic representations and the SS-geometric fit
    const FrequencyTable hist = representation_histogram(bundle.mapping);
    const DiscreteModelFit ss_fit =
        fit_discrete(hist, ModelKind::ss_geometric, FitMethod::chisq_min);
    std::optional<DiscreteModel> ss_ref;
    if (bundle.reference.ss)
        ss_ref = DiscreteModel::ss_geometric(bundle.reference.ss->p,
                                             bundle.reference.ss->a);
    report.sections.push_back(
        fit_section("Graphemic representations", ss_fit, std::nullopt, ss_ref));

    // uncertainty and the cross-system rows
    const UncertaintyStats u = mean_uncertainty(hist, bundle.alphabet.name);
    const std::vector<ComparisonResult> rows =
        comparison_table(u, bundle.comparison_stats);
    Report u_report = uncertainty_report(u, rows);
    for (ReportTable& s : u_report.sections) report.sections.push_back(std::move(s));

    // complexities and the runs test
    const ComplexityStats c = complexity_stats(bundle.alphabet);
    Report c_report = complexity_report(bundle.alphabet, c);
    for (ReportTable& s : c_report.sections) report.sections.push_back(std::move(s));
    report.sections.push_back(runs_section(runs_test_uniform(c.distribution)));

    // component / connection counts and the Poisson fit
    ReportTable comp =
        frequency_section("Component counts", bundle.component_counts, "x");
    comp.notes.push_back(
        "note: too few degrees of freedom for a chi-square test of the "
        "component counts.");
    report.sections.push_back(std::move(comp));
    const DiscreteModelFit pois_fit = fit_discrete(
        bundle.connection_counts, ModelKind::poisson, FitMethod::chisq_min);
    std::optional<DiscreteModel> pois_ref;
    if (bundle.reference.poisson)
        pois_ref = DiscreteModel::make_poisson(bundle.reference.poisson->lambda);
    report.sections.push_back(
        fit_section("Connection counts", pois_fit, std::nullopt, pois_ref));

    // distinctivity means from the reference matrix
    report.sections.push_back(std::move(
        distinctivity_report(mean_distinctivities(bundle.reference_matrix))
            .sections.front()));

    return report;
}

}  // namespace scriptstats
