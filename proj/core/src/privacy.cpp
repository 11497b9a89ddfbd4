#include "aimsyn/privacy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aimsyn/errors.hpp"

namespace aimsyn {

Rho::Rho(double value) : value_(value) {
  if (!std::isfinite(value_) || value_ < 0.0) {
    throw ValueError("rho must be finite and non-negative");
  }
}

Rho zcdp_of_gaussian(double sigma) {
  if (!(sigma > 0.0)) throw ValueError("gaussian scale must be positive");
  return Rho(1.0 / (2.0 * sigma * sigma));
}

Rho zcdp_of_exponential(double epsilon) {
  if (epsilon < 0.0) throw ValueError("epsilon must be non-negative");
  return Rho(epsilon * epsilon / 8.0);
}

void PrivacyLedger::charge(Rho rho) {
  double next = spent_.value() + rho.value();
  if (next > total_.value() + 1e-12) {
    throw OverspendError("privacy ledger overspend: " + std::to_string(next) +
                         " > " + std::to_string(total_.value()));
  }
  spent_ = Rho(std::min(next, total_.value()));
}

Marginal gaussian_mechanism(const Marginal& counts, double sigma,
                            RandomSource& rng) {
  if (!(sigma > 0.0)) throw ValueError("gaussian scale must be positive");
  Marginal noisy = counts;
  for (double& c : noisy.counts) c += sigma * rng.gaussian();
  return noisy;
}

size_t exponential_mechanism(std::span<const double> scores, double epsilon,
                             double sensitivity, RandomSource& rng) {
  if (scores.empty()) throw ValueError("exponential mechanism: no candidates");
  if (!(epsilon > 0.0)) throw ValueError("epsilon must be positive");
  if (!(sensitivity > 0.0)) throw ValueError("sensitivity must be positive");
  double scale = epsilon / (2.0 * sensitivity);
  size_t best = 0;
  double best_key = -std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < scores.size(); ++i) {
    double key = scale * scores[i] + rng.gumbel();
    if (key > best_key) {
      best_key = key;
      best = i;
    }
  }
  return best;
}

std::vector<double> exponential_mechanism_probabilities(
    std::span<const double> scores, double epsilon, double sensitivity) {
  if (scores.empty()) throw ValueError("exponential mechanism: no candidates");
  if (!(epsilon > 0.0)) throw ValueError("epsilon must be positive");
  if (!(sensitivity > 0.0)) throw ValueError("sensitivity must be positive");
  double scale = epsilon / (2.0 * sensitivity);
  double max_score = *std::max_element(scores.begin(), scores.end());
  std::vector<double> probs(scores.size());
  double z = 0.0;
  for (size_t i = 0; i < scores.size(); ++i) {
    probs[i] = std::exp(scale * (scores[i] - max_score));
    z += probs[i];
  }
  for (double& p : probs) p /= z;
  return probs;
}

namespace {

// log of the zCDP->DP expression at a fixed Renyi order:
// (a-1)(a rho - eps) + (a-1) log(a-1) - a log a.
double log_delta_at(double alpha, double rho, double epsilon) {
  double am1 = alpha - 1.0;
  return am1 * (alpha * rho - epsilon) + am1 * std::log(am1) -
         alpha * std::log(alpha);
}

// The expression is convex in alpha, so a golden-section search over the
// bracket converges to the minimizer.
double log_delta_min(double rho, double epsilon) {
  constexpr double kLo = 1.0 + 1e-6;
  constexpr double kHi = 1e4;
  constexpr double kInvPhi = 0.6180339887498949;
  double a = kLo, b = kHi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = log_delta_at(x1, rho, epsilon);
  double f2 = log_delta_at(x2, rho, epsilon);
  while (b - a > 1e-10) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = log_delta_at(x1, rho, epsilon);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = log_delta_at(x2, rho, epsilon);
    }
  }
  return std::min(f1, f2);
}

}  // namespace

double zcdp_delta(Rho rho, double epsilon) {
  if (rho.value() == 0.0 && epsilon == 0.0) return 0.0;
  return std::exp(log_delta_min(rho.value(), epsilon));
}

double zcdp_to_dp(Rho rho, double delta) {
  if (!(delta > 0.0) || !(delta < 1.0)) throw ValueError("delta must be in (0,1)");
  if (rho.value() == 0.0) return 0.0;
  double log_target = std::log(delta);
  if (log_delta_min(rho.value(), 0.0) <= log_target) return 0.0;
  double hi = rho.value() + 2.0 * std::sqrt(rho.value() * std::log(1.0 / delta)) + 1.0;
  for (int i = 0; i < 100 && log_delta_min(rho.value(), hi) > log_target; ++i) {
    hi *= 2.0;
  }
  double lo = 0.0;
  while (hi - lo > 1e-9) {
    double mid = 0.5 * (lo + hi);
    if (log_delta_min(rho.value(), mid) <= log_target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

Rho dp_to_zcdp(double epsilon, double delta) {
  if (!(epsilon > 0.0)) throw ValueError("epsilon must be positive");
  if (!(delta > 0.0) || !(delta < 1.0)) throw ValueError("delta must be in (0,1)");
  double hi = 1.0;
  for (int i = 0; i < 100 && zcdp_to_dp(Rho(hi), delta) <= epsilon; ++i) hi *= 2.0;
  double lo = 0.0;
  while (hi - lo > 1e-12 * std::max(1.0, hi)) {
    double mid = 0.5 * (lo + hi);
    if (zcdp_to_dp(Rho(mid), delta) <= epsilon) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return Rho(lo);
}

}  // namespace aimsyn
