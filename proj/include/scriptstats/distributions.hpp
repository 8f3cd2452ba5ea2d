#pragma once

#include "scriptstats/types.hpp"

namespace scriptstats {

/// Geometric distribution on {1,2,...} with a linear correction term:
/// P(x) = p (1-p)^(x-1) [1 + a (x - 1/p)].
/// Valid box: 0 < p <= 1 and 0 <= a <= p/(1-p); p = 1 forces a = 0.
struct SSGeometricParams {
    double p = 1.0;
    double a = 0.0;

    double max_a() const { return p < 1.0 ? p / (1.0 - p) : 0.0; }
    bool valid() const;
    void require_valid() const;  // throws std::invalid_argument
};

struct PoissonParams {
    double lambda = 1.0;

    bool valid() const { return lambda > 0.0; }
    void require_valid() const;
};

/// Exact pmf value; clamped at zero so rounding at the box boundary
/// (where P(1) vanishes) never yields a negative probability.
double ss_geometric_pmf(const SSGeometricParams& params, int x);

/// Analytic mean 1/p + a (1-p) / p^2.
double ss_geometric_mean(const SSGeometricParams& params);

/// e^-lambda lambda^x / x!, evaluated in log space.
double poisson_pmf(const PoissonParams& params, int x);

enum class ModelKind { ss_geometric, poisson };

/// Number of estimated parameters, for degree-of-freedom bookkeeping.
int model_param_count(ModelKind kind);

/// A fitted or candidate model carried by value. Only the member matching
/// `kind` is meaningful.
struct DiscreteModel {
    ModelKind kind = ModelKind::poisson;
    SSGeometricParams ss;
    PoissonParams poisson;

    double pmf(int x) const;
    int support_min() const { return kind == ModelKind::ss_geometric ? 1 : 0; }

    static DiscreteModel ss_geometric(double p, double a);
    static DiscreteModel make_poisson(double lambda);
};

struct PooledClass {
    int support = 0;        // class value, or lower bound of the open class
    bool open = false;      // true for the final ">= support" class
    long long observed = 0;
    double expected = 0.0;
};

/// Classes below the maximum observed support keep their point-mass
/// expectations; the final class is open (">= x_max") with expected
/// N - sum of the lower classes, so expectations total N exactly.
std::vector<PooledClass> pool_open_tail(const FrequencyTable& t,
                                        const DiscreteModel& model);

/// Pearson statistic over pooled classes. Requires every expected > 0.
double chi_square_statistic(const std::vector<PooledClass>& classes);

/// Survival function of the chi-square distribution, via the regularized
/// upper incomplete gamma function (series / continued-fraction evaluation).
/// Absolute accuracy well below 1e-6 over the statistic ranges used here.
double chi_square_sf(double x, int df);

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
double regularized_gamma_q(double a, double x);

enum class FitMethod { moment, chisq_min };
enum class DfMode { classes_minus_one, classes_minus_one_minus_params };

struct DiscreteModelFit {
    DiscreteModel model;
    std::vector<PooledClass> classes;
    double chi_square = 0.0;
    int df = 0;
    double p_value = 0.0;
    FitMethod method = FitMethod::chisq_min;
    DfMode df_mode = DfMode::classes_minus_one_minus_params;
};

/// Moment method matches sample moments (Poisson: lambda = mean;
/// SS-geometric: first two moments, projected onto the valid box).
/// chisq_min seeds at the moment estimate, scans a coarse grid
/// (step 1e-3, the SS `a` coordinate normalized by its box ceiling) and
/// refines by coordinate descent down to step 1e-5. Deterministic: the grid
/// is scanned in lexicographic order and only strict improvements are
/// accepted, so ties resolve to the lexicographically smallest vector.
DiscreteModelFit fit_discrete(const FrequencyTable& t, ModelKind kind,
                              FitMethod method,
                              DfMode df_mode = DfMode::classes_minus_one_minus_params);

}  // namespace scriptstats
