#include "clausal/optim.hpp"

#include <cmath>
#include <limits>

namespace clausal {

bool solve_dense(std::vector<double> a, std::vector<double> b, std::size_t n,
                 std::vector<double>& x) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (std::abs(a[row * n + col]) > std::abs(a[pivot * n + col])) pivot = row;
    }
    if (std::abs(a[pivot * n + col]) < 1e-300) return false;
    if (pivot != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[col * n + k], a[pivot * n + k]);
      std::swap(b[col], b[pivot]);
    }
    for (std::size_t row = col + 1; row < n; ++row) {
      const double f = a[row * n + col] / a[col * n + col];
      for (std::size_t k = col; k < n; ++k) a[row * n + k] -= f * a[col * n + k];
      b[row] -= f * b[col];
    }
  }
  x.assign(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i * n + k] * x[k];
    x[i] = s / a[i * n + i];
  }
  return true;
}

std::vector<double> invert_dense(const std::vector<double>& a, std::size_t n) {
  std::vector<double> inv(n * n, 0.0);
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<double> e(n, 0.0);
    e[col] = 1.0;
    std::vector<double> x;
    if (!solve_dense(a, e, n, x)) return {};
    for (std::size_t row = 0; row < n; ++row) inv[row * n + col] = x[row];
  }
  return inv;
}

namespace {

double squared_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

// central-difference Jacobian, column-major by parameter
std::vector<double> jacobian(const ResidualFn& f, std::span<const double> p, std::size_t m) {
  const std::size_t n = p.size();
  std::vector<double> jac(m * n);
  std::vector<double> pp(p.begin(), p.end());
  std::vector<double> rp(m), rm(m);
  for (std::size_t j = 0; j < n; ++j) {
    const double h = std::max(1e-7, 1e-7 * std::abs(p[j]));
    pp[j] = p[j] + h;
    f(pp, rp);
    pp[j] = p[j] - h;
    f(pp, rm);
    pp[j] = p[j];
    for (std::size_t i = 0; i < m; ++i) jac[i * n + j] = (rp[i] - rm[i]) / (2.0 * h);
  }
  return jac;
}

}  // namespace

OptimResult levenberg_marquardt(const ResidualFn& residuals, std::size_t n_residuals,
                                std::vector<double> initial, const OptimOptions& options) {
  const std::size_t n = initial.size();
  const std::size_t m = n_residuals;
  OptimResult result;
  result.params = std::move(initial);
  std::vector<double> r(m);
  residuals(result.params, r);
  result.cost = squared_norm(r);
  double lambda = options.initial_lambda;

  std::vector<double> jtj(n * n), jtr(n), trial(n), rt(m), step;
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    result.iterations = iter + 1;
    const auto jac = jacobian(residuals, result.params, m);
    for (std::size_t a = 0; a < n; ++a) {
      jtr[a] = 0.0;
      for (std::size_t i = 0; i < m; ++i) jtr[a] += jac[i * n + a] * r[i];
      for (std::size_t b = 0; b <= a; ++b) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += jac[i * n + a] * jac[i * n + b];
        jtj[a * n + b] = jtj[b * n + a] = s;
      }
    }
    bool improved = false;
    for (int attempt = 0; attempt < 30; ++attempt) {
      auto damped = jtj;
      for (std::size_t a = 0; a < n; ++a) {
        damped[a * n + a] += lambda * std::max(jtj[a * n + a], 1e-12);
      }
      std::vector<double> neg_jtr(n);
      for (std::size_t a = 0; a < n; ++a) neg_jtr[a] = -jtr[a];
      if (!solve_dense(damped, neg_jtr, n, step)) {
        lambda *= 10.0;
        continue;
      }
      for (std::size_t a = 0; a < n; ++a) trial[a] = result.params[a] + step[a];
      residuals(trial, rt);
      const double trial_cost = squared_norm(rt);
      if (std::isfinite(trial_cost) && trial_cost < result.cost) {
        const double drop = result.cost - trial_cost;
        result.params = trial;
        result.cost = trial_cost;
        r = rt;
        lambda = std::max(lambda * 0.3, 1e-14);
        improved = true;
        double step_norm = std::sqrt(squared_norm(step));
        if (step_norm < options.step_tolerance || drop < options.cost_tolerance) {
          result.converged = true;
        }
        break;
      }
      lambda *= 10.0;
    }
    if (!improved) {
      // no downhill step found at any damping: stationary point
      result.converged = true;
      break;
    }
    if (result.converged) break;
  }
  // Gauss-Newton covariance at the optimum, scaled by the residual variance
  const auto jac = jacobian(residuals, result.params, m);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b <= a; ++b) {
      double s = 0.0;
      for (std::size_t i = 0; i < m; ++i) s += jac[i * n + a] * jac[i * n + b];
      jtj[a * n + b] = jtj[b * n + a] = s;
    }
  }
  result.covariance = invert_dense(jtj, n);
  if (!result.covariance.empty() && m > n) {
    const double s2 = result.cost / static_cast<double>(m - n);
    for (auto& v : result.covariance) v *= s2;
  }
  return result;
}

OptimResult minimize_newton(const ScalarFn& objective, std::vector<double> initial,
                            const OptimOptions& options) {
  const std::size_t n = initial.size();
  OptimResult result;
  result.params = std::move(initial);
  result.cost = objective(result.params);
  double lambda = options.initial_lambda;

  std::vector<double> grad(n), hess(n * n), p(result.params), step, trial(n);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    result.iterations = iter + 1;
    p = result.params;
    for (std::size_t j = 0; j < n; ++j) {
      const double h = std::max(1e-5, 1e-5 * std::abs(p[j]));
      p[j] = result.params[j] + h;
      const double fp = objective(p);
      p[j] = result.params[j] - h;
      const double fm = objective(p);
      p[j] = result.params[j];
      grad[j] = (fp - fm) / (2.0 * h);
      hess[j * n + j] = (fp - 2.0 * result.cost + fm) / (h * h);
    }
    for (std::size_t a = 0; a < n; ++a) {
      const double ha = std::max(1e-5, 1e-5 * std::abs(p[a]));
      for (std::size_t b = 0; b < a; ++b) {
        const double hb = std::max(1e-5, 1e-5 * std::abs(p[b]));
        p[a] += ha; p[b] += hb; const double fpp = objective(p);
        p[b] -= 2 * hb;         const double fpm = objective(p);
        p[a] -= 2 * ha;         const double fmm = objective(p);
        p[b] += 2 * hb;         const double fmp = objective(p);
        p[a] += ha; p[b] -= hb;
        hess[a * n + b] = hess[b * n + a] = (fpp - fpm - fmp + fmm) / (4.0 * ha * hb);
      }
    }
    bool improved = false;
    for (int attempt = 0; attempt < 40; ++attempt) {
      auto damped = hess;
      for (std::size_t a = 0; a < n; ++a) {
        damped[a * n + a] += lambda * std::max(std::abs(hess[a * n + a]), 1e-10);
      }
      std::vector<double> neg_grad(n);
      for (std::size_t a = 0; a < n; ++a) neg_grad[a] = -grad[a];
      if (!solve_dense(damped, neg_grad, n, step)) {
        lambda *= 10.0;
        continue;
      }
      for (std::size_t a = 0; a < n; ++a) trial[a] = result.params[a] + step[a];
      const double trial_cost = objective(trial);
      if (std::isfinite(trial_cost) && trial_cost < result.cost) {
        const double drop = result.cost - trial_cost;
        result.params = trial;
        result.cost = trial_cost;
        lambda = std::max(lambda * 0.3, 1e-14);
        improved = true;
        if (std::sqrt(squared_norm(step)) < options.step_tolerance ||
            drop < options.cost_tolerance) {
          result.converged = true;
        }
        break;
      }
      lambda *= 10.0;
    }
    if (!improved) {
      result.converged = true;
      break;
    }
    if (result.converged) break;
  }
  result.covariance = invert_dense(hess, n);
  return result;
}

}  // namespace clausal
