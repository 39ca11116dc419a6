#ifndef CLAUSAL_OPTIM_HPP
#define CLAUSAL_OPTIM_HPP

#include <functional>
#include <span>
#include <vector>

namespace clausal {

// Residual callback: fills `out` (fixed length) from `params`.
using ResidualFn = std::function<void(std::span<const double>, std::span<double>)>;
// Scalar objective for the damped Newton minimizer.
using ScalarFn = std::function<double(std::span<const double>)>;

struct OptimOptions {
  int max_iterations = 300;
  double initial_lambda = 1e-3;
  double step_tolerance = 1e-12;
  double cost_tolerance = 1e-14;
};

struct OptimResult {
  std::vector<double> params;
  double cost = 0.0;  // sum of squared residuals (LM) or objective value
  bool converged = false;
  int iterations = 0;
  // Row-major inverse of the Gauss-Newton/Newton Hessian approximation;
  // empty if the matrix was singular at the optimum.
  std::vector<double> covariance;
};

// Damped least squares: minimizes ||r(p)||^2 with a central-difference
// Jacobian and lambda-scaled diagonal regularization.
OptimResult levenberg_marquardt(const ResidualFn& residuals, std::size_t n_residuals,
                                std::vector<double> initial,
                                const OptimOptions& options = {});

// Damped Newton on a scalar objective; gradient and Hessian by central
// differences. Shares the lambda acceptance loop with the LM fitter.
OptimResult minimize_newton(const ScalarFn& objective, std::vector<double> initial,
                            const OptimOptions& options = {});

// Solves A x = b in place (partial pivoting); returns false if singular.
bool solve_dense(std::vector<double> a, std::vector<double> b, std::size_t n,
                 std::vector<double>& x);
// Inverse of a symmetric positive matrix (row-major); empty on failure.
std::vector<double> invert_dense(const std::vector<double>& a, std::size_t n);

}  // namespace clausal

#endif  // CLAUSAL_OPTIM_HPP
