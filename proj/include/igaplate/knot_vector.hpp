#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace igaplate {

/// Open (clamped) knot vector with its polynomial degree.
///
/// Spans are half-open [knots[i], knots[i+1]); the global right endpoint
/// belongs to the last non-empty span.
class KnotVector {
 public:
  KnotVector(std::vector<double> knots, int degree)
      : knots_(std::move(knots)), degree_(degree) {
    if (degree_ < 0) throw std::invalid_argument("KnotVector: negative degree");
    if (!std::is_sorted(knots_.begin(), knots_.end()))
      throw std::invalid_argument("KnotVector: knots must be non-decreasing");
    const int n = num_basis();
    if (n < degree_ + 1)
      throw std::invalid_argument("KnotVector: too few knots for degree");
    for (int k = 0; k <= degree_; ++k) {
      if (knots_[k] != knots_.front() ||
          knots_[knots_.size() - 1 - k] != knots_.back())
        throw std::invalid_argument(
            "KnotVector: not open (end knots must repeat degree+1 times)");
    }
  }

  /// Open uniform knot vector on [lo, hi] with `spans` non-empty spans.
  static KnotVector open_uniform(int degree, int spans, double lo = 0.0,
                                 double hi = 1.0) {
    if (spans < 1) throw std::invalid_argument("open_uniform: spans must be >= 1");
    std::vector<double> knots;
    knots.reserve(2 * (degree + 1) + spans - 1);
    for (int k = 0; k <= degree; ++k) knots.push_back(lo);
    for (int k = 1; k < spans; ++k)
      knots.push_back(lo + (hi - lo) * static_cast<double>(k) / spans);
    for (int k = 0; k <= degree; ++k) knots.push_back(hi);
    return KnotVector(std::move(knots), degree);
  }

  int degree() const { return degree_; }
  const std::vector<double>& knots() const { return knots_; }
  int num_basis() const { return static_cast<int>(knots_.size()) - degree_ - 1; }
  double front() const { return knots_.front(); }
  double back() const { return knots_.back(); }

  /// Index i with knots[i] <= xi < knots[i+1]; the right endpoint maps to
  /// the last non-empty span.
  int find_span(double xi) const {
    const int n = num_basis();
    if (xi < front() || xi > back())
      throw std::domain_error("find_span: parameter " + std::to_string(xi) +
                              " outside knot range");
    if (xi >= knots_[n]) {
      // right-endpoint convention: last span with knots[i] < knots[i+1]
      int i = n - 1;
      while (i > degree_ && knots_[i] == knots_[i + 1]) --i;
      return i;
    }
    int low = degree_, high = n;
    int mid = (low + high) / 2;
    while (xi < knots_[mid] || xi >= knots_[mid + 1]) {
      if (xi < knots_[mid])
        high = mid;
      else
        low = mid;
      mid = (low + high) / 2;
    }
    return mid;
  }

  /// Values and derivatives of the p+1 B-splines that are nonzero at xi.
  ///
  /// Row k holds the k-th derivative; rows beyond the degree are zero
  /// (the polynomial is exhausted). Uses the triangular-table form of the
  /// Cox-de Boor recursion with the 0/0 := 0 convention.
  Eigen::MatrixXd basis_derivs(double xi, int order) const {
    const int p = degree_;
    const int span = find_span(xi);
    Eigen::MatrixXd ders = Eigen::MatrixXd::Zero(order + 1, p + 1);

    Eigen::MatrixXd ndu(p + 1, p + 1);
    Eigen::VectorXd left(p + 1), right(p + 1);
    ndu(0, 0) = 1.0;
    for (int j = 1; j <= p; ++j) {
      left[j] = xi - knots_[span + 1 - j];
      right[j] = knots_[span + j] - xi;
      double saved = 0.0;
      for (int r = 0; r < j; ++r) {
        ndu(j, r) = right[r + 1] + left[j - r];
        const double temp = ndu(j, r) == 0.0 ? 0.0 : ndu(r, j - 1) / ndu(j, r);
        ndu(r, j) = saved + right[r + 1] * temp;
        saved = left[j - r] * temp;
      }
      ndu(j, j) = saved;
    }
    for (int j = 0; j <= p; ++j) ders(0, j) = ndu(j, p);

    const int nd = std::min(order, p);
    Eigen::MatrixXd a(2, p + 1);
    for (int r = 0; r <= p; ++r) {
      int s1 = 0, s2 = 1;
      a(0, 0) = 1.0;
      for (int k = 1; k <= nd; ++k) {
        double d = 0.0;
        const int rk = r - k, pk = p - k;
        if (r >= k) {
          a(s2, 0) = a(s1, 0) / ndu(pk + 1, rk);
          d = a(s2, 0) * ndu(rk, pk);
        }
        const int j1 = rk >= -1 ? 1 : -rk;
        const int j2 = r - 1 <= pk ? k - 1 : p - r;
        for (int j = j1; j <= j2; ++j) {
          a(s2, j) = (a(s1, j) - a(s1, j - 1)) / ndu(pk + 1, rk + j);
          d += a(s2, j) * ndu(rk + j, pk);
        }
        if (r <= pk) {
          a(s2, k) = -a(s1, k - 1) / ndu(pk + 1, r);
          d += a(s2, k) * ndu(r, pk);
        }
        ders(k, r) = d;
        std::swap(s1, s2);
      }
    }
    double fac = p;
    for (int k = 1; k <= nd; ++k) {
      ders.row(k) *= fac;
      fac *= (p - k);
    }
    return ders;
  }

  /// Indices of the non-empty spans, in parametric order.
  std::vector<int> nonempty_spans() const {
    std::vector<int> spans;
    for (int i = degree_; i < num_basis(); ++i)
      if (knots_[i + 1] > knots_[i]) spans.push_back(i);
    return spans;
  }

  /// Greville abscissae (knot averages); exact linear reproduction points.
  std::vector<double> greville() const {
    std::vector<double> g(num_basis());
    for (int i = 0; i < num_basis(); ++i) {
      double s = 0.0;
      for (int k = 1; k <= degree_; ++k) s += knots_[i + k];
      g[i] = degree_ > 0 ? s / degree_ : 0.5 * (knots_[i] + knots_[i + 1]);
    }
    return g;
  }

 private:
  std::vector<double> knots_;
  int degree_;
};

}  // namespace igaplate
