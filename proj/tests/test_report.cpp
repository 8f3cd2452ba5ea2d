#include <doctest.h>

#include <sstream>

#include "scriptstats/io.hpp"
#include "scriptstats/report.hpp"
#include "test_util.hpp"

using namespace scriptstats;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("format_fixed") {
    CHECK(format_fixed(1.905, 2) == "1.91");
    CHECK(format_fixed(1.1227212, 4) == "1.1227");
    CHECK(format_fixed(-0.0000001, 2) == "0.00");
    CHECK(format_fixed(0.0, 2) == "0.00");
    CHECK(format_fixed(-1.5, 1) == "-1.5");
}

TEST_CASE("complexity report in CSV is the 4-column contract") {
    const Alphabet a = parse_alphabet_file(data_path("uk/uk_cyrillic.alphabet"));
    const Report report = complexity_report(a, complexity_stats(a));
    const std::string csv = emit_report(report, ReportFormat::csv);
    const auto lines = lines_of(csv);
    REQUIRE(lines.size() >= 34);
    CHECK(lines[0] == "glyph,components,connections,complexity");
    CHECK(lines[1] == "А,3x2,3x2,12");
    CHECK(lines[12] == "І,2,-,2");
    int rows = 0;
    for (std::size_t i = 1; i < lines.size() && !lines[i].empty(); ++i) ++rows;
    CHECK(rows == 33);
}

TEST_CASE("fit report carries the statistic and both df conventions") {
    const DiscreteModelFit fit = fit_discrete(fixtures::representation_counts(),
                                              ModelKind::ss_geometric,
                                              FitMethod::chisq_min);
    const std::string text = emit_report(fit_report(fit), ReportFormat::text);
    CHECK(contains(text, "chi_square=1.87"));
    CHECK(contains(text, "P(df=3)=0.60"));
    CHECK(contains(text, "P(df=5)=0.87"));
    CHECK(contains(text, "degrees of freedom"));
    CHECK(contains(text, "model=ss-geometric"));
    SUBCASE("df override adds its own line") {
        const std::string with_df =
            emit_report(fit_report(fit, 4), ReportFormat::text);
        CHECK(contains(with_df, "P(df=4)="));
    }
}

TEST_CASE("emit_report") {
    Report report;
    ReportTable t;
    t.title = "T";
    t.header = {"a", "b"};
    t.rows = {{"x,y", "1"}, {"plain", "2"}};
    t.notes = {"note line"};
    report.sections.push_back(t);

    SUBCASE("deterministic output") {
        for (ReportFormat f :
             {ReportFormat::text, ReportFormat::csv, ReportFormat::markdown})
            CHECK(emit_report(report, f) == emit_report(report, f));
    }
    SUBCASE("empty report renders as an empty string") {
        for (ReportFormat f :
             {ReportFormat::text, ReportFormat::csv, ReportFormat::markdown})
            CHECK(emit_report(Report{}, f).empty());
    }
    SUBCASE("csv quotes cells containing commas and omits prose") {
        const std::string csv = emit_report(report, ReportFormat::csv);
        CHECK(contains(csv, "\"x,y\",1"));
        CHECK_FALSE(contains(csv, "note line"));
        CHECK_FALSE(contains(csv, "T"));
    }
    SUBCASE("text keeps the title and notes") {
        const std::string text = emit_report(report, ReportFormat::text);
        CHECK(contains(text, "== T =="));
        CHECK(contains(text, "note line"));
    }
    SUBCASE("markdown renders a pipe table") {
        const std::string md = emit_report(report, ReportFormat::markdown);
        CHECK(contains(md, "## T"));
        CHECK(contains(md, "| a | b |"));
        CHECK(contains(md, "| --- | --- |"));
    }
}

TEST_CASE("bundle report reproduces the published values side by side") {
    const DatasetBundle bundle = load_bundle(data_path("uk"));
    const std::string text = emit_report(bundle_report(bundle), ReportFormat::text);

    // reference-parameter evaluation of the graphemic-representation fit
    CHECK(contains(text, "chi_square=1.90"));
    CHECK(contains(text, "P(df=3)=0.59"));
    CHECK(contains(text, "P(df=5)=0.86"));
    // uncertainty and comparison rows
    CHECK(contains(text, "1.1227"));
    CHECK(contains(text, "Slovak"));
    // complexity and distinctivity anchors
    CHECK(contains(text, "mean_complexity=11.79"));
    CHECK(contains(text, "sd_complexity=5.24"));
    CHECK(contains(text, "D_bar=22.55"));
    // reference Poisson evaluation
    CHECK(contains(text, "lambda=2.4900 chi_square=1.52"));

    SUBCASE("byte-deterministic across two renders") {
        const DatasetBundle again = load_bundle(data_path("uk"));
        CHECK(emit_report(bundle_report(again), ReportFormat::text) == text);
    }
}

TEST_CASE("load_bundle rejects a directory without the dataset") {
    CHECK_THROWS_AS(load_bundle(data_path("nonexistent")), parse_error);
}
