#ifndef CLAUSAL_FITTING_HPP
#define CLAUSAL_FITTING_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "clausal/aggregate.hpp"

namespace clausal {

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InsufficientDataError : public FitError {
 public:
  using FitError::FitError;
};

class DegenerateDataError : public FitError {
 public:
  using FitError::FitError;
};

// f(x) = A * x^b * exp(-c/x)
struct MalParams {
  double amplitude = 1.0;   // A > 0
  double exponent = 0.0;    // b
  double decay = 0.0;       // c
  double chi2_per_n = 0.0;  // weighted mean squared residual
  std::array<double, 3> std_errors{0.0, 0.0, 0.0};
};

// Shifted negative binomial over x >= 1 with non-integer dispersion.
struct NegBinParams {
  double p = 0.5;   // in (0,1)
  double r = 1.0;   // > 0
  double chi2_per_n = 0.0;
  std::array<double, 2> std_errors{0.0, 0.0};
};

class ConvergenceError : public FitError {
 public:
  ConvergenceError(const std::string& what, MalParams best) : FitError(what), best_(best) {}
  const MalParams& best_so_far() const { return best_; }

 private:
  MalParams best_;
};

double mal_eval(double x, const MalParams& params);
double mal_eval(double x, double amplitude, double exponent, double decay);

// pmf(x) = Gamma(r+x-1) / (Gamma(x) Gamma(r)) * p^r * (1-p)^(x-1)
double negbin_pmf(int x, const NegBinParams& params);
double negbin_pmf(int x, double p, double r);

enum class MalTarget { Words, Syllables };
enum class Weighting { Count, Uniform };
enum class NegBinMethod { MaxLikelihood, LeastSquares };

// Weighted least squares over rows with sentences > 0; deterministic
// multi-start Levenberg-Marquardt. Throws InsufficientDataError for
// fewer than 4 nonzero rows, ConvergenceError (carrying the best
// parameters) if no start converges.
MalParams fit_mal(const AggregateTable& table, MalTarget target,
                  Weighting weighting = Weighting::Count);

// Fits (p, r) to the empirical distribution sentences_x / total.
// Default: maximum likelihood on the counts in (logit p, log r)
// coordinates; LeastSquares minimizes sum (empirical - pmf)^2.
// chi2_per_n is always sum (empirical - pmf)^2 / n_nonzero_rows.
NegBinParams fit_negbin(const AggregateTable& table,
                        NegBinMethod method = NegBinMethod::MaxLikelihood);

// total * pmf(x) for x = 1..x_max.
std::vector<double> predicted_counts(const NegBinParams& params, long long total, int x_max);

}  // namespace clausal

#endif  // CLAUSAL_FITTING_HPP
