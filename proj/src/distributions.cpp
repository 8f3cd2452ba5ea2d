#include "scriptstats/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace scriptstats {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

bool SSGeometricParams::valid() const {
    if (!(p > 0.0 && p <= 1.0)) return false;
    if (p == 1.0) return a == 0.0;
    return a >= 0.0 && a <= max_a();
}

void SSGeometricParams::require_valid() const {
    if (!valid())
        throw std::invalid_argument(
            "invalid SS-geometric parameters: need 0 < p <= 1 and 0 <= a <= p/(1-p)");
}

void PoissonParams::require_valid() const {
    if (!valid()) throw std::invalid_argument("invalid Poisson parameter: lambda > 0 required");
}

double ss_geometric_pmf(const SSGeometricParams& params, int x) {
    params.require_valid();
    if (x < 1) throw std::domain_error("ss_geometric_pmf: support starts at x = 1");
    const double q = 1.0 - params.p;
    const double value = params.p * std::pow(q, x - 1) *
                         (1.0 + params.a * (x - 1.0 / params.p));
    return std::max(0.0, value);
}

double ss_geometric_mean(const SSGeometricParams& params) {
    params.require_valid();
    return 1.0 / params.p + params.a * (1.0 - params.p) / (params.p * params.p);
}

double poisson_pmf(const PoissonParams& params, int x) {
    params.require_valid();
    if (x < 0) throw std::domain_error("poisson_pmf: support starts at x = 0");
    return std::exp(-params.lambda + x * std::log(params.lambda) -
                    std::lgamma(x + 1.0));
}

int model_param_count(ModelKind kind) {
    return kind == ModelKind::ss_geometric ? 2 : 1;
}

double DiscreteModel::pmf(int x) const {
    return kind == ModelKind::ss_geometric ? ss_geometric_pmf(ss, x)
                                           : poisson_pmf(poisson, x);
}

DiscreteModel DiscreteModel::ss_geometric(double p, double a) {
    DiscreteModel m;
    m.kind = ModelKind::ss_geometric;
    m.ss = {p, a};
    m.ss.require_valid();
    return m;
}

DiscreteModel DiscreteModel::make_poisson(double lambda) {
    DiscreteModel m;
    m.kind = ModelKind::poisson;
    m.poisson = {lambda};
    m.poisson.require_valid();
    return m;
}

std::vector<PooledClass> pool_open_tail(const FrequencyTable& t,
                                        const DiscreteModel& model) {
    if (t.empty()) throw std::invalid_argument("empty table");
    if (t.min_support() < model.support_min())
        throw std::invalid_argument("table support below the model's support");

    const double n = static_cast<double>(t.total());
    std::vector<PooledClass> classes;
    double lower_sum = 0.0;
    for (auto it = t.counts.begin(); it != t.counts.end(); ++it) {
        PooledClass c;
        c.support = it->first;
        c.observed = it->second;
        if (std::next(it) == t.counts.end()) {
            c.open = true;
            c.expected = n - lower_sum;  // open tail absorbs the remainder
        } else {
            c.expected = n * model.pmf(it->first);
            lower_sum += c.expected;
        }
        classes.push_back(c);
    }
    return classes;
}

double chi_square_statistic(const std::vector<PooledClass>& classes) {
    double stat = 0.0;
    for (const PooledClass& c : classes) {
        if (!(c.expected > 0.0))
            throw std::invalid_argument(
                "chi_square_statistic: non-positive expected value; pool classes first");
        const double d = static_cast<double>(c.observed) - c.expected;
        stat += d * d / c.expected;
    }
    return stat;
}

namespace {

// Pooled chi-square as the fit objective; infeasible points map to +inf.
double objective(const FrequencyTable& t, const DiscreteModel& model) {
    std::vector<PooledClass> classes;
    try {
        classes = pool_open_tail(t, model);
    } catch (const std::exception&) {
        return kInf;
    }
    for (const PooledClass& c : classes)
        if (!(c.expected > 0.0)) return kInf;
    return chi_square_statistic(classes);
}

DiscreteModel clamp_ss(double p, double a) {
    p = std::clamp(p, 1e-12, 1.0);
    const SSGeometricParams probe{p, 0.0};
    a = std::clamp(a, 0.0, probe.max_a());
    DiscreteModel m;
    m.kind = ModelKind::ss_geometric;
    m.ss = {p, a};
    return m;
}

// Moment estimate for the SS-geometric: match the first two sample moments.
// Substituting a(p) from the mean equation into the second-moment equation
// yields (m2 + m1) p^2 - 4 m1 p + 2 = 0.
DiscreteModel ss_moment_estimate(const FrequencyTable& t) {
    const double n = static_cast<double>(t.total());
    double m1 = 0.0, m2 = 0.0;
    for (const auto& [x, f] : t.counts) {
        m1 += static_cast<double>(x) * f / n;
        m2 += static_cast<double>(x) * x * f / n;
    }
    if (m1 <= 1.0 + 1e-12) return clamp_ss(1.0, 0.0);  // degenerate at x = 1

    const double qa = m2 + m1, qb = -4.0 * m1, qc = 2.0;
    const double disc = qb * qb - 4.0 * qa * qc;
    DiscreteModel best = clamp_ss(1.0 / m1, 0.0);  // plain geometric fallback
    double best_gap = kInf;
    if (disc >= 0.0) {
        const double root = std::sqrt(disc);
        for (double p : {(-qb + root) / (2.0 * qa), (-qb - root) / (2.0 * qa)}) {
            if (!(p > 0.0 && p <= 1.0)) continue;
            const double a = (m1 - 1.0 / p) * p * p / (1.0 - p);
            const DiscreteModel cand = clamp_ss(p, a);  // boundary projection
            const double gap = std::abs(ss_geometric_mean(cand.ss) - m1);
            if (gap < best_gap) {
                best_gap = gap;
                best = cand;
            }
        }
    }
    return best;
}

DiscreteModel poisson_moment_estimate(const FrequencyTable& t) {
    double sum = 0.0;
    for (const auto& [x, f] : t.counts) sum += static_cast<double>(x) * f;
    const double mean = sum / static_cast<double>(t.total());
    return DiscreteModel::make_poisson(std::max(mean, 1e-12));
}

// Coarse lexicographic grid scan followed by coordinate descent with
// halving steps. Strict-improvement acceptance keeps the result
// deterministic and never worse than the seed.
DiscreteModel minimize_chisq_ss(const FrequencyTable& t, DiscreteModel seed) {
    double best = objective(t, seed);
    DiscreteModel best_model = seed;

    for (int i = 1; i <= 1000; ++i) {
        const double p = i / 1000.0;
        const double amax = SSGeometricParams{p, 0.0}.max_a();
        const int jmax = amax > 0.0 ? 1000 : 0;
        for (int j = 0; j <= jmax; ++j) {
            const DiscreteModel cand = clamp_ss(p, (j / 1000.0) * amax);
            const double c = objective(t, cand);
            if (c < best) {
                best = c;
                best_model = cand;
            }
        }
    }

    // Descend in (p, t) with t = a / a_max(p), so moves track the box edge.
    double p = best_model.ss.p;
    double tt = best_model.ss.max_a() > 0.0 ? best_model.ss.a / best_model.ss.max_a() : 0.0;
    for (double step = 5e-4; step >= 1e-5; step *= 0.5) {
        bool improved = true;
        while (improved) {
            improved = false;
            for (const auto& [dp, dt] :
                 std::initializer_list<std::pair<double, double>>{
                     {step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step},
                     {step, step}, {step, -step}, {-step, step}, {-step, -step}}) {
                const double np = std::clamp(p + dp, 1e-6, 1.0);
                const double nt = std::clamp(tt + dt, 0.0, 1.0);
                const DiscreteModel cand =
                    clamp_ss(np, nt * SSGeometricParams{np, 0.0}.max_a());
                const double c = objective(t, cand);
                if (c < best) {
                    best = c;
                    best_model = cand;
                    p = np;
                    tt = nt;
                    improved = true;
                }
            }
        }
    }
    return best_model;
}

DiscreteModel minimize_chisq_poisson(const FrequencyTable& t, DiscreteModel seed) {
    double best = objective(t, seed);
    DiscreteModel best_model = seed;

    const double hi = std::max(2.0 * seed.poisson.lambda,
                               static_cast<double>(t.max_support()));
    const int cells = static_cast<int>(hi * 1000.0);
    for (int i = 1; i <= cells; ++i) {
        const DiscreteModel cand = DiscreteModel::make_poisson(i / 1000.0);
        const double c = objective(t, cand);
        if (c < best) {
            best = c;
            best_model = cand;
        }
    }

    double lambda = best_model.poisson.lambda;
    for (double step = 5e-4; step >= 1e-5; step *= 0.5) {
        bool improved = true;
        while (improved) {
            improved = false;
            for (double d : {step, -step}) {
                const double nl = lambda + d;
                if (nl <= 0.0) continue;
                const DiscreteModel cand = DiscreteModel::make_poisson(nl);
                const double c = objective(t, cand);
                if (c < best) {
                    best = c;
                    best_model = cand;
                    lambda = nl;
                    improved = true;
                }
            }
        }
    }
    return best_model;
}

}  // namespace

DiscreteModelFit fit_discrete(const FrequencyTable& t, ModelKind kind,
                              FitMethod method, DfMode df_mode) {
    if (t.empty() || t.total() < 1) throw std::invalid_argument("empty table");
    if (t.min_support() < (kind == ModelKind::ss_geometric ? 1 : 0))
        throw std::invalid_argument("table support below the model's support");

    DiscreteModel model = kind == ModelKind::ss_geometric ? ss_moment_estimate(t)
                                                          : poisson_moment_estimate(t);
    if (method == FitMethod::chisq_min)
        model = kind == ModelKind::ss_geometric ? minimize_chisq_ss(t, model)
                                                : minimize_chisq_poisson(t, model);

    DiscreteModelFit fit;
    fit.model = model;
    fit.method = method;
    fit.df_mode = df_mode;
    fit.classes = pool_open_tail(t, model);
    fit.chi_square = chi_square_statistic(fit.classes);
    const int classes = static_cast<int>(fit.classes.size());
    fit.df = df_mode == DfMode::classes_minus_one
                 ? classes - 1
                 : classes - 1 - model_param_count(kind);
    fit.df = std::max(fit.df, 1);
    fit.p_value = chi_square_sf(fit.chi_square, fit.df);
    return fit;
}

}  // namespace scriptstats
