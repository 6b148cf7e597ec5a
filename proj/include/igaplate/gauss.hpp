#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace igaplate {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  Eigen::VectorXd points;
  Eigen::VectorXd weights;

  /// Rule mapped to [a, b].
  GaussRule mapped(double a, double b) const {
    GaussRule out;
    out.points = 0.5 * (b - a) * points.array() + 0.5 * (a + b);
    out.weights = 0.5 * (b - a) * weights;
    return out;
  }
};

/// Nodes and weights by Newton iteration on the Legendre recurrence.
/// Accurate to machine precision for any order used here (element rules
/// and the 50/200-point through-thickness rules).
inline GaussRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  GaussRule rule;
  rule.points.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-based initial guess for the i-th root of P_n
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.points[i] = -x;
    rule.points[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.points[n / 2] = 0.0;
  return rule;
}

}  // namespace igaplate
