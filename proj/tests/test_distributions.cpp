#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "scriptstats/distributions.hpp"
#include "test_util.hpp"

using namespace scriptstats;

namespace {

const SSGeometricParams kPublished{0.5737, 0.7105};

// Closed-form chi-square survival function, used as an independent oracle:
// even df uses the truncated exponential sum, odd df the erfc recurrence.
// This never touches the series / continued-fraction code under test.
double sf_closed_form(double x, int df) {
    const double h = x / 2.0;
    if (df % 2 == 0) {
        double sum = 0.0, term = 1.0;
        for (int k = 0; k < df / 2; ++k) {
            sum += term;
            term *= h / (k + 1);
        }
        return std::exp(-h) * sum;
    }
    double q = std::erfc(std::sqrt(h));
    for (int k = 1; k < df; k += 2)
        q += std::pow(h, k / 2.0) * std::exp(-h) / std::tgamma(k / 2.0 + 1.0);
    return q;
}

}  // namespace

TEST_CASE("SS-geometric parameter box") {
    CHECK(SSGeometricParams{0.5, 0.0}.valid());
    CHECK(SSGeometricParams{0.5, 1.0}.valid());       // a_max(0.5) = 1
    CHECK(SSGeometricParams{1.0, 0.0}.valid());
    CHECK_FALSE(SSGeometricParams{1.0, 0.1}.valid()); // p = 1 forces a = 0
    CHECK_FALSE(SSGeometricParams{0.0, 0.0}.valid());
    CHECK_FALSE(SSGeometricParams{1.2, 0.0}.valid());
    CHECK_FALSE(SSGeometricParams{0.5, -0.1}.valid());
    CHECK_FALSE(SSGeometricParams{0.5, 1.01}.valid());
    CHECK_THROWS_AS(ss_geometric_pmf({0.5, 2.0}, 1), std::invalid_argument);
}

TEST_CASE("ss_geometric_pmf") {
    SUBCASE("published parameter values") {
        CHECK(ss_geometric_pmf(kPublished, 1) == doctest::Approx(0.2708139).epsilon(1e-6));
        CHECK(38.0 * ss_geometric_pmf(kPublished, 1) == doctest::Approx(10.29).epsilon(1e-3));
        CHECK(ss_geometric_pmf(kPublished, 2) == doctest::Approx(0.2892137).epsilon(1e-6));
        CHECK(38.0 * ss_geometric_pmf(kPublished, 2) == doctest::Approx(10.99).epsilon(1e-3));
    }
    SUBCASE("a = 0 reduces to the plain geometric") {
        CHECK(ss_geometric_pmf({0.5, 0.0}, 3) == doctest::Approx(0.125).epsilon(1e-12));
    }
    SUBCASE("x below support is a domain error") {
        CHECK_THROWS_AS(ss_geometric_pmf({0.5, 0.0}, 0), std::domain_error);
    }
    SUBCASE("P(1) vanishes on the a = p/(1-p) boundary") {
        for (double p : {0.2, 0.5737, 0.9}) {
            const SSGeometricParams params{p, SSGeometricParams{p, 0.0}.max_a()};
            const double p1 = ss_geometric_pmf(params, 1);
            CHECK(p1 >= 0.0);  // clamped, never negative from rounding
            CHECK(p1 <= 1e-15);
        }
    }
    SUBCASE("non-negative over a box sample") {
        for (int i = 1; i <= 10; ++i) {
            const double p = i / 10.0;
            const double amax = SSGeometricParams{p, 0.0}.max_a();
            for (int j = 0; j <= 10; ++j) {
                const SSGeometricParams params{p, amax * (j / 10.0)};
                for (int x = 1; x <= 50; ++x) CHECK(ss_geometric_pmf(params, x) >= 0.0);
            }
        }
    }
}

TEST_CASE("ss_geometric normalization over the parameter box") {
    // 100-point sample including both boundaries a = 0 and a = p/(1-p)
    double worst = 0.0;
    for (int i = 1; i <= 10; ++i) {
        const double p = 0.05 + (1.0 - 0.05) * (i - 1) / 9.0;
        const double amax = SSGeometricParams{p, 0.0}.max_a();
        for (int j = 0; j <= 9; ++j) {
            const SSGeometricParams params{p, amax * (j / 9.0)};
            double sum = 0.0;
            for (int x = 1; x <= 3000; ++x) sum += ss_geometric_pmf(params, x);
            worst = std::max(worst, std::abs(sum - 1.0));
        }
    }
    CHECK(worst <= 1e-9);
}

TEST_CASE("ss_geometric_mean") {
    SUBCASE("published parameters, against the truncated numeric sum") {
        const double analytic = ss_geometric_mean(kPublished);
        CHECK(analytic == doctest::Approx(2.6633307).epsilon(1e-6));
        double numeric = 0.0;
        for (int x = 1; x <= 5000; ++x)
            numeric += x * ss_geometric_pmf(kPublished, x);
        CHECK(analytic == doctest::Approx(numeric).epsilon(1e-9));
    }
    SUBCASE("a = 0 gives the geometric mean 1/p") {
        CHECK(ss_geometric_mean({0.4, 0.0}) == doctest::Approx(2.5).epsilon(1e-12));
    }
    SUBCASE("degenerate point mass at 1") {
        CHECK(ss_geometric_mean({1.0, 0.0}) == doctest::Approx(1.0));
    }
}

TEST_CASE("poisson_pmf") {
    SUBCASE("x = 0 is e^-lambda") {
        CHECK(poisson_pmf({2.0}, 0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
    }
    SUBCASE("log-space evaluation matches the direct formula") {
        CHECK(poisson_pmf({2.49}, 2) == doctest::Approx(0.2570250).epsilon(1e-6));
        CHECK(poisson_pmf({2.49}, 2) ==
              doctest::Approx(std::exp(-2.49) * 2.49 * 2.49 / 2.0).epsilon(1e-12));
    }
    SUBCASE("lambda = 1, x = 1") {
        CHECK(poisson_pmf({1.0}, 1) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    }
    SUBCASE("stable for large x") {
        CHECK(poisson_pmf({5.0}, 1000) >= 0.0);
        CHECK(std::isfinite(poisson_pmf({5.0}, 1000)));
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(poisson_pmf({0.0}, 1), std::invalid_argument);
        CHECK_THROWS_AS(poisson_pmf({-1.0}, 1), std::invalid_argument);
        CHECK_THROWS_AS(poisson_pmf({2.0}, -1), std::domain_error);
    }
    SUBCASE("normalization and mean") {
        for (double lambda : {0.5, 2.49, 10.0}) {
            double sum = 0.0, mean = 0.0;
            for (int x = 0; x <= 400; ++x) {
                const double p = poisson_pmf({lambda}, x);
                sum += p;
                mean += x * p;
            }
            CHECK(std::abs(sum - 1.0) <= 1e-12);
            CHECK(std::abs(mean - lambda) <= 1e-9);
        }
    }
}

TEST_CASE("pool_open_tail") {
    SUBCASE("published SS parameters on the representation counts") {
        const auto classes =
            pool_open_tail(fixtures::representation_counts(),
                           DiscreteModel::ss_geometric(kPublished.p, kPublished.a));
        REQUIRE(classes.size() == 6);
        CHECK_FALSE(classes[0].open);
        CHECK(classes.back().open);
        CHECK(classes.back().support == 6);
        CHECK(classes.back().expected == doctest::Approx(2.4355).epsilon(2e-4));
        // the point-mass convention would give a much smaller tail value
        CHECK(38.0 * ss_geometric_pmf(kPublished, 6) == doctest::Approx(1.238).epsilon(1e-2));
        double total = 0.0;
        for (const auto& c : classes) total += c.expected;
        CHECK(total == 38.0);  // bit-exact: the tail is defined by subtraction
    }
    SUBCASE("connection counts at lambda 2.49") {
        const auto classes = pool_open_tail(fixtures::connection_counts(),
                                            DiscreteModel::make_poisson(2.49));
        REQUIRE(classes.size() == 7);
        CHECK(classes.back().expected == doctest::Approx(1.3649).epsilon(2e-4));
        CHECK(33.0 * poisson_pmf({2.49}, 6) == doctest::Approx(0.9057).epsilon(1e-3));
        double total = 0.0;
        for (const auto& c : classes) total += c.expected;
        CHECK(total == 33.0);
    }
    SUBCASE("single-class table pools to one open class") {
        FrequencyTable t;
        t.counts = {{1, 9}};
        const auto classes = pool_open_tail(t, DiscreteModel::ss_geometric(0.5, 0.0));
        REQUIRE(classes.size() == 1);
        CHECK(classes[0].open);
        CHECK(classes[0].expected == 9.0);
    }
    SUBCASE("support below the model is an error") {
        FrequencyTable t;
        t.counts = {{0, 3}, {1, 2}};
        CHECK_THROWS_AS(pool_open_tail(t, DiscreteModel::ss_geometric(0.5, 0.0)),
                        std::invalid_argument);
    }
}

TEST_CASE("chi_square_statistic") {
    SUBCASE("published SS parameters give 1.90") {
        const double chi = chi_square_statistic(
            pool_open_tail(fixtures::representation_counts(),
                           DiscreteModel::ss_geometric(kPublished.p, kPublished.a)));
        CHECK(chi == doctest::Approx(1.9012).epsilon(1e-3));
    }
    SUBCASE("lambda 2.49 on the connection counts gives 1.52") {
        const double chi = chi_square_statistic(pool_open_tail(
            fixtures::connection_counts(), DiscreteModel::make_poisson(2.49)));
        CHECK(chi == doctest::Approx(1.5228).epsilon(1e-3));
    }
    SUBCASE("observed equal to expected gives zero") {
        CHECK(chi_square_statistic({{1, false, 4, 4.0}, {2, true, 6, 6.0}}) == 0.0);
    }
    SUBCASE("zero expected is an error") {
        CHECK_THROWS_AS(chi_square_statistic({{1, false, 4, 0.0}}),
                        std::invalid_argument);
    }
}

TEST_CASE("chi_square_sf") {
    SUBCASE("published p-values") {
        CHECK(chi_square_sf(1.52, 5) == doctest::Approx(0.910750).epsilon(1e-5));
        CHECK(chi_square_sf(1.90, 3) == doctest::Approx(0.593419).epsilon(1e-5));
        CHECK(chi_square_sf(1.90, 5) == doctest::Approx(0.862802).epsilon(1e-5));
    }
    SUBCASE("sf(0, k) = 1") {
        for (int df : {1, 2, 5, 10}) CHECK(chi_square_sf(0.0, df) == 1.0);
    }
    SUBCASE("agrees with the closed-form oracle") {
        for (int df = 1; df <= 8; ++df) {
            for (double x = 0.1; x <= 25.0; x += 0.7) {
                CHECK(chi_square_sf(x, df) ==
                      doctest::Approx(sf_closed_form(x, df)).epsilon(1e-10));
            }
        }
    }
    SUBCASE("strictly decreasing in x, bounded in [0, 1]") {
        for (int df : {1, 3, 5, 8}) {
            double prev = 1.1;
            for (double x = 0.0; x <= 30.0; x += 0.5) {
                const double v = chi_square_sf(x, df);
                CHECK(v >= 0.0);
                CHECK(v <= 1.0);
                CHECK(v < prev);
                prev = v;
            }
        }
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(chi_square_sf(-1.0, 3), std::domain_error);
        CHECK_THROWS_AS(chi_square_sf(1.0, 0), std::domain_error);
    }
}

TEST_CASE("fit_discrete poisson") {
    const FrequencyTable t = fixtures::connection_counts();
    SUBCASE("moment estimate is exactly the sample mean") {
        const DiscreteModelFit fit =
            fit_discrete(t, ModelKind::poisson, FitMethod::moment);
        CHECK(fit.model.poisson.lambda == 81.0 / 33.0);
    }
    SUBCASE("chisq-min lands near 2.49") {
        const DiscreteModelFit fit =
            fit_discrete(t, ModelKind::poisson, FitMethod::chisq_min);
        CHECK(fit.model.poisson.lambda == doctest::Approx(2.49049).epsilon(2e-4));
        CHECK(fit.chi_square == doctest::Approx(1.52278).epsilon(1e-3));
        CHECK(fit.df == 5);  // 7 classes - 1 - 1 parameter
        CHECK(fit.p_value == doctest::Approx(0.9104).epsilon(1e-3));
    }
    SUBCASE("df mode classes-1") {
        const DiscreteModelFit fit = fit_discrete(t, ModelKind::poisson,
                                                  FitMethod::chisq_min,
                                                  DfMode::classes_minus_one);
        CHECK(fit.df == 6);
    }
    SUBCASE("minimizer dominance over the moment estimate") {
        const DiscreteModelFit m = fit_discrete(t, ModelKind::poisson, FitMethod::moment);
        const DiscreteModelFit c =
            fit_discrete(t, ModelKind::poisson, FitMethod::chisq_min);
        CHECK(c.chi_square <= m.chi_square);
        CHECK(m.chi_square == doctest::Approx(1.537449).epsilon(1e-5));
    }
}

TEST_CASE("fit_discrete ss-geometric") {
    const FrequencyTable t = fixtures::representation_counts();
    SUBCASE("moment estimate matches the two-moment solution") {
        const DiscreteModelFit fit =
            fit_discrete(t, ModelKind::ss_geometric, FitMethod::moment);
        CHECK(fit.model.ss.p == doctest::Approx(0.6256476).epsilon(1e-6));
        CHECK(fit.model.ss.a == doctest::Approx(0.9978339).epsilon(1e-5));
        CHECK(ss_geometric_mean(fit.model.ss) ==
              doctest::Approx(97.0 / 38.0).epsilon(1e-9));
    }
    SUBCASE("chisq-min finds the pooled-chi-square minimum") {
        const DiscreteModelFit fit =
            fit_discrete(t, ModelKind::ss_geometric, FitMethod::chisq_min);
        CHECK(fit.model.ss.p == doctest::Approx(0.58331).epsilon(2e-3));
        CHECK(fit.model.ss.a == doctest::Approx(0.77328).epsilon(3e-3));
        CHECK(fit.chi_square == doctest::Approx(1.86919).epsilon(1e-3));
        CHECK(fit.df == 3);  // 6 classes - 1 - 2 parameters
    }
    SUBCASE("minimizer dominance") {
        const DiscreteModelFit m =
            fit_discrete(t, ModelKind::ss_geometric, FitMethod::moment);
        const DiscreteModelFit c =
            fit_discrete(t, ModelKind::ss_geometric, FitMethod::chisq_min);
        CHECK(c.chi_square <= m.chi_square);
        CHECK(m.chi_square == doctest::Approx(2.396992).epsilon(1e-4));
    }
    SUBCASE("degenerate point-mass table") {
        FrequencyTable d;
        d.counts = {{1, 12}};
        for (FitMethod method : {FitMethod::moment, FitMethod::chisq_min}) {
            const DiscreteModelFit fit = fit_discrete(d, ModelKind::ss_geometric, method);
            CHECK(fit.model.ss.p == 1.0);
            CHECK(fit.model.ss.a == 0.0);
            CHECK(fit.chi_square == 0.0);
        }
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(
            fit_discrete(FrequencyTable{}, ModelKind::ss_geometric, FitMethod::moment),
            std::invalid_argument);
        FrequencyTable zero_support;
        zero_support.counts = {{0, 3}, {1, 4}};
        CHECK_THROWS_AS(
            fit_discrete(zero_support, ModelKind::ss_geometric, FitMethod::moment),
            std::invalid_argument);
    }
}

TEST_CASE("chisq-min dominance on random histograms") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> count(0, 10);
    for (int trial = 0; trial < 8; ++trial) {
        FrequencyTable t;
        for (int x = 1; x <= 5; ++x) t.counts[x] = count(rng) + (x == 1 ? 1 : 0);
        const DiscreteModelFit m =
            fit_discrete(t, ModelKind::ss_geometric, FitMethod::moment);
        const DiscreteModelFit c =
            fit_discrete(t, ModelKind::ss_geometric, FitMethod::chisq_min);
        CHECK(c.chi_square <= m.chi_square + 1e-12);
    }
}
