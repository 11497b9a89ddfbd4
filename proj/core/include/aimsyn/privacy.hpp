#pragma once

#include <span>
#include <vector>

#include "aimsyn/marginal.hpp"
#include "aimsyn/random.hpp"

namespace aimsyn {

/// A zCDP budget amount. Non-negative and finite; composes additively.
class Rho {
 public:
  Rho() = default;
  explicit Rho(double value);
  double value() const { return value_; }

  Rho operator+(Rho other) const { return Rho(value_ + other.value_); }

 private:
  double value_ = 0.0;
};

/// zCDP cost of the Gaussian mechanism at scale sigma: 1 / (2 sigma^2).
Rho zcdp_of_gaussian(double sigma);

/// zCDP cost of the exponential mechanism at parameter epsilon: epsilon^2 / 8.
Rho zcdp_of_exponential(double epsilon);

/// Privacy filter: tracks irrevocable charges against a fixed total budget.
class PrivacyLedger {
 public:
  explicit PrivacyLedger(Rho total) : total_(total) {}

  /// Throws OverspendError if the charge would exceed the total (beyond a
  /// 1e-12 float allowance); a spend landing within that allowance of the
  /// total snaps to it exactly.
  void charge(Rho rho);

  Rho total() const { return total_; }
  Rho spent() const { return spent_; }
  double remaining() const { return total_.value() - spent_.value(); }
  bool exhausted() const { return spent_.value() >= total_.value(); }

 private:
  Rho total_;
  Rho spent_;
};

/// Adds i.i.d. N(0, sigma^2) noise to every cell (sensitivity 1, unbounded
/// neighboring relation).
Marginal gaussian_mechanism(const Marginal& counts, double sigma,
                            RandomSource& rng);

/// Samples index i with probability proportional to
/// exp(epsilon * scores[i] / (2 * sensitivity)), via Gumbel-max.
size_t exponential_mechanism(std::span<const double> scores, double epsilon,
                             double sensitivity, RandomSource& rng);

/// The selection distribution of exponential_mechanism, for direct checks.
std::vector<double> exponential_mechanism_probabilities(
    std::span<const double> scores, double epsilon, double sensitivity);

/// delta achieved by a rho-zCDP mechanism at a given epsilon:
/// min over alpha > 1 of exp((alpha-1)(alpha rho - epsilon)) / (alpha-1)
/// * (1 - 1/alpha)^alpha.
double zcdp_delta(Rho rho, double epsilon);

/// Smallest epsilon >= 0 such that zcdp_delta(rho, epsilon) <= delta.
double zcdp_to_dp(Rho rho, double delta);

/// Largest rho whose (epsilon, delta) conversion stays within epsilon.
Rho dp_to_zcdp(double epsilon, double delta);

}  // namespace aimsyn
