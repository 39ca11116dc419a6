#include "clausal/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "clausal/optim.hpp"

namespace clausal {

double mal_eval(double x, double amplitude, double exponent, double decay) {
  if (!(x > 0.0)) throw std::domain_error("mal_eval requires x > 0");
  return amplitude * std::pow(x, exponent) * std::exp(-decay / x);
}

double mal_eval(double x, const MalParams& params) {
  return mal_eval(x, params.amplitude, params.exponent, params.decay);
}

double negbin_pmf(int x, double p, double r) {
  if (x < 1) throw std::domain_error("negbin_pmf requires x >= 1");
  if (!(p > 0.0 && p < 1.0) || !(r > 0.0)) {
    throw std::domain_error("negbin_pmf requires 0 < p < 1 and r > 0");
  }
  const double log_pmf = std::lgamma(r + x - 1) - std::lgamma(static_cast<double>(x)) -
                         std::lgamma(r) + r * std::log(p) + (x - 1) * std::log1p(-p);
  return std::exp(log_pmf);
}

double negbin_pmf(int x, const NegBinParams& params) {
  return negbin_pmf(x, params.p, params.r);
}

namespace {

struct FitPoint {
  double x;
  double observed;
  double weight;
};

std::vector<FitPoint> collect_points(const AggregateTable& table, MalTarget target,
                                     Weighting weighting) {
  std::vector<FitPoint> pts;
  long long total = 0;
  for (const auto& row : table.rows) {
    if (row.sentences > 0) total += row.sentences;
  }
  for (const auto& row : table.rows) {
    if (row.sentences == 0) continue;
    FitPoint p;
    p.x = static_cast<double>(row.x);
    p.observed = target == MalTarget::Words ? row.mean_words(table.mode)
                                            : row.mean_syllables(table.mode);
    p.weight = weighting == Weighting::Count
                   ? static_cast<double>(row.sentences) / static_cast<double>(total)
                   : 1.0;
    pts.push_back(p);
  }
  return pts;
}

std::vector<std::array<double, 3>> mal_starts(const std::vector<FitPoint>& pts) {
  // A = f(1) e^0.3; b = log-log slope over the first 5 points; c = 0.3
  const double f1 = pts.front().observed > 0 ? pts.front().observed : 1.0;
  const double a0 = f1 * std::exp(0.3);
  double b0 = 0.0;
  {
    const std::size_t k = std::min<std::size_t>(5, pts.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t used = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (pts[i].observed <= 0) continue;
      const double lx = std::log(pts[i].x);
      const double ly = std::log(pts[i].observed);
      sx += lx; sy += ly; sxx += lx * lx; sxy += lx * ly;
      ++used;
    }
    const double denom = used * sxx - sx * sx;
    if (used >= 2 && std::abs(denom) > 1e-12) b0 = (used * sxy - sx * sy) / denom;
  }
  std::vector<std::array<double, 3>> starts;
  starts.push_back({a0, b0, 0.3});
  for (double fa : {0.8, 1.2}) {
    for (double b : {-0.3, 0.0}) {
      for (double c : {0.1, 0.6}) {
        starts.push_back({a0 * fa, b, c});
      }
    }
  }
  return starts;
}

}  // namespace

MalParams fit_mal(const AggregateTable& table, MalTarget target, Weighting weighting) {
  const auto pts = collect_points(table, target, weighting);
  if (pts.size() < 4) {
    throw InsufficientDataError("fit_mal needs at least 4 nonzero rows, got " +
                                std::to_string(pts.size()));
  }
  ResidualFn residuals = [&pts](std::span<const double> p, std::span<double> out) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double f = p[0] * std::pow(pts[i].x, p[1]) * std::exp(-p[2] / pts[i].x);
      out[i] = std::sqrt(pts[i].weight) * (pts[i].observed - f);
    }
  };

  OptimOptions opts;
  opts.max_iterations = 500;
  opts.step_tolerance = 1e-14;
  opts.cost_tolerance = 1e-18;
  bool any_converged = false;
  OptimResult best;
  best.cost = std::numeric_limits<double>::infinity();
  for (const auto& start : mal_starts(pts)) {
    auto res = levenberg_marquardt(residuals, pts.size(), {start[0], start[1], start[2]}, opts);
    any_converged = any_converged || res.converged;
    if (res.cost < best.cost) best = std::move(res);  // ties keep the earlier start
  }

  MalParams params;
  params.amplitude = best.params[0];
  params.exponent = best.params[1];
  params.decay = best.params[2];
  params.chi2_per_n = best.cost / static_cast<double>(pts.size());
  if (best.covariance.size() == 9) {
    for (std::size_t i = 0; i < 3; ++i) {
      params.std_errors[i] = std::sqrt(std::max(0.0, best.covariance[i * 3 + i]));
    }
  }
  if (!any_converged) {
    throw ConvergenceError("fit_mal did not converge within the iteration cap", params);
  }
  if (!(params.amplitude > 0)) {
    throw ConvergenceError("fit_mal converged to a non-positive amplitude", params);
  }
  return params;
}

namespace {

struct CountPoint {
  int x;
  double count;
  double empirical;
};

std::vector<CountPoint> collect_counts(const AggregateTable& table) {
  std::vector<CountPoint> pts;
  double total = 0;
  for (const auto& row : table.rows) total += row.sentences;
  for (const auto& row : table.rows) {
    if (row.sentences == 0) continue;
    pts.push_back({row.x, static_cast<double>(row.sentences),
                   static_cast<double>(row.sentences) / total});
  }
  return pts;
}

double logistic(double t) { return 1.0 / (1.0 + std::exp(-t)); }

}  // namespace

NegBinParams fit_negbin(const AggregateTable& table, NegBinMethod method) {
  const auto pts = collect_counts(table);
  if (pts.size() == 1) {
    throw DegenerateDataError("all sentences fall in a single clause-count bucket");
  }
  if (pts.size() < 3) {
    throw InsufficientDataError("fit_negbin needs at least 3 nonzero rows, got " +
                                std::to_string(pts.size()));
  }

  // moment-based start on the shifted variable y = x - 1
  double total = 0, mean = 0;
  for (const auto& p : pts) {
    total += p.count;
    mean += p.count * (p.x - 1);
  }
  mean /= total;
  double var = 0;
  for (const auto& p : pts) var += p.count * (p.x - 1 - mean) * (p.x - 1 - mean);
  var /= total;
  double r0 = (var > mean && mean > 0) ? mean * mean / (var - mean) : 1.0;
  double p0 = r0 / (r0 + std::max(mean, 1e-6));
  p0 = std::clamp(p0, 0.05, 0.95);
  r0 = std::clamp(r0, 0.05, 50.0);
  const std::vector<double> t0{std::log(p0 / (1 - p0)), std::log(r0)};

  OptimOptions opts;
  opts.max_iterations = 500;
  opts.step_tolerance = 1e-13;
  opts.cost_tolerance = 1e-15;

  NegBinParams params;
  if (method == NegBinMethod::MaxLikelihood) {
    ScalarFn nll = [&pts](std::span<const double> t) {
      const double p = logistic(t[0]);
      const double r = std::exp(t[1]);
      if (!(p > 0 && p < 1) || !(r > 0) || !std::isfinite(r)) {
        return std::numeric_limits<double>::infinity();
      }
      double s = 0.0;
      for (const auto& pt : pts) {
        const double log_pmf = std::lgamma(r + pt.x - 1) -
                               std::lgamma(static_cast<double>(pt.x)) - std::lgamma(r) +
                               r * std::log(p) + (pt.x - 1) * std::log1p(-p);
        s -= pt.count * log_pmf;
      }
      return s;
    };
    auto res = minimize_newton(nll, t0, opts);
    if (!res.converged) throw FitError("negative binomial MLE did not converge");
    params.p = logistic(res.params[0]);
    params.r = std::exp(res.params[1]);
    if (res.covariance.size() == 4) {
      // delta method back to (p, r)
      params.std_errors[0] =
          params.p * (1 - params.p) * std::sqrt(std::max(0.0, res.covariance[0]));
      params.std_errors[1] = params.r * std::sqrt(std::max(0.0, res.covariance[3]));
    }
  } else {
    ResidualFn residuals = [&pts](std::span<const double> t, std::span<double> out) {
      const double p = logistic(t[0]);
      const double r = std::exp(t[1]);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const double log_pmf = std::lgamma(r + pts[i].x - 1) -
                               std::lgamma(static_cast<double>(pts[i].x)) - std::lgamma(r) +
                               r * std::log(p) + (pts[i].x - 1) * std::log1p(-p);
        out[i] = pts[i].empirical - std::exp(log_pmf);
      }
    };
    auto res = levenberg_marquardt(residuals, pts.size(), t0, opts);
    if (!res.converged) throw FitError("negative binomial least squares did not converge");
    params.p = logistic(res.params[0]);
    params.r = std::exp(res.params[1]);
    if (res.covariance.size() == 4) {
      params.std_errors[0] =
          params.p * (1 - params.p) * std::sqrt(std::max(0.0, res.covariance[0]));
      params.std_errors[1] = params.r * std::sqrt(std::max(0.0, res.covariance[3]));
    }
  }

  double chi2 = 0.0;
  for (const auto& pt : pts) {
    const double d = pt.empirical - negbin_pmf(pt.x, params.p, params.r);
    chi2 += d * d;
  }
  params.chi2_per_n = chi2 / static_cast<double>(pts.size());
  return params;
}

std::vector<double> predicted_counts(const NegBinParams& params, long long total, int x_max) {
  if (total <= 0) throw std::invalid_argument("predicted_counts requires total > 0");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(0, x_max)));
  for (int x = 1; x <= x_max; ++x) {
    out.push_back(static_cast<double>(total) * negbin_pmf(x, params));
  }
  return out;
}

}  // namespace clausal
