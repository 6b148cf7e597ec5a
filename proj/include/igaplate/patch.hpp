#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "igaplate/knot_vector.hpp"

namespace igaplate {

/// Rational basis data at one parametric point, pushed forward to
/// physical coordinates.
struct BasisEval {
  std::vector<int> active;  ///< global control-point indices
  Eigen::VectorXd R;        ///< basis values (partition of unity)
  Eigen::MatrixXd dR;       ///< columns (d/dx, d/dy)
  Eigen::MatrixXd d2R;      ///< columns (d2/dxx, d2/dyy, d2/dxy)
  double jacobian_det = 0.0;
};

namespace detail {

/// One curve-direction knot insertion pass on homogeneous control rows.
/// `ctrl` is (num_basis x dim); every row is one control point.
inline std::pair<std::vector<double>, Eigen::MatrixXd> insert_knots_1d(
    const KnotVector& kv, const Eigen::MatrixXd& ctrl,
    const std::vector<double>& xs) {
  const int p = kv.degree();
  const auto& U = kv.knots();
  const int n = kv.num_basis() - 1;
  const int r = static_cast<int>(xs.size()) - 1;
  if (r < 0) return {U, ctrl};

  const int a = kv.find_span(xs.front());
  const int b = kv.find_span(xs.back()) + 1;
  const int m = n + p + 1;

  Eigen::MatrixXd Q(n + r + 2, ctrl.cols());
  std::vector<double> Ubar(m + r + 2);

  for (int j = 0; j <= a - p; ++j) Q.row(j) = ctrl.row(j);
  for (int j = b - 1; j <= n; ++j) Q.row(j + r + 1) = ctrl.row(j);
  for (int j = 0; j <= a; ++j) Ubar[j] = U[j];
  for (int j = b + p; j <= m; ++j) Ubar[j + r + 1] = U[j];

  int i = b + p - 1;
  int k = b + p + r;
  for (int j = r; j >= 0; --j) {
    while (xs[j] <= U[i] && i > a) {
      Q.row(k - p - 1) = ctrl.row(i - p - 1);
      Ubar[k] = U[i];
      --k;
      --i;
    }
    Q.row(k - p - 1) = Q.row(k - p);
    for (int l = 1; l <= p; ++l) {
      const int ind = k - p + l;
      double alfa = Ubar[k + l] - xs[j];
      if (std::abs(alfa) == 0.0) {
        Q.row(ind - 1) = Q.row(ind);
      } else {
        alfa /= (Ubar[k + l] - U[i - p + l]);
        Q.row(ind - 1) = alfa * Q.row(ind - 1) + (1.0 - alfa) * Q.row(ind);
      }
    }
    Ubar[k] = xs[j];
    --k;
  }
  return {std::move(Ubar), std::move(Q)};
}

inline double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / i;
  return r;
}

/// One curve-direction degree elevation by t on homogeneous control rows.
/// Bezier-segment elevation with knot-multiplicity bookkeeping; preserves
/// the curve exactly and keeps interior continuity.
inline std::pair<std::vector<double>, Eigen::MatrixXd> elevate_degree_1d(
    const KnotVector& kv, const Eigen::MatrixXd& ctrl, int t) {
  const int p = kv.degree();
  const auto& U = kv.knots();
  const int dim = static_cast<int>(ctrl.cols());
  if (t == 0) return {U, ctrl};

  const int n = kv.num_basis() - 1;
  const int m = n + p + 1;
  const int ph = p + t;
  const int ph2 = ph / 2;

  // Bezier elevation coefficients
  Eigen::MatrixXd bezalfs = Eigen::MatrixXd::Zero(ph + 1, p + 1);
  bezalfs(0, 0) = 1.0;
  bezalfs(ph, p) = 1.0;
  for (int i = 1; i <= ph2; ++i) {
    const double inv = 1.0 / binomial(ph, i);
    for (int j = std::max(0, i - t); j <= std::min(p, i); ++j)
      bezalfs(i, j) = inv * binomial(p, j) * binomial(t, i - j);
  }
  for (int i = ph2 + 1; i <= ph - 1; ++i)
    for (int j = std::max(0, i - t); j <= std::min(p, i); ++j)
      bezalfs(i, j) = bezalfs(ph - i, p - j);

  // generous upper bounds on output sizes
  const int max_pts = (n + 1) * (t + 1) + ph + 1;
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(max_pts, dim);
  std::vector<double> Uh(max_pts + ph + 2, 0.0);

  Eigen::MatrixXd bpts(p + 1, dim), ebpts(ph + 1, dim), next_bpts(p + 1, dim);
  Eigen::VectorXd alfs(p + 1);

  int mh = ph, kind = ph + 1, r = -1, a = p, b = p + 1, cind = 1;
  double ua = U[0];
  Q.row(0) = ctrl.row(0);
  for (int i = 0; i <= ph; ++i) Uh[i] = ua;
  for (int i = 0; i <= p; ++i) bpts.row(i) = ctrl.row(i);

  while (b < m) {
    const int i0 = b;
    while (b < m && U[b] == U[b + 1]) ++b;
    const int mul = b - i0 + 1;
    mh += mul + t;
    const double ub = U[b];
    const int oldr = r;
    r = p - mul;
    const int lbz = oldr > 0 ? (oldr + 2) / 2 : 1;
    const int rbz = r > 0 ? ph - (r + 1) / 2 : ph;
    if (r > 0) {
      // insert knot ub r times to extract the Bezier segment
      const double numer = ub - ua;
      for (int q = p; q > mul; --q) alfs[q - mul - 1] = numer / (U[a + q] - ua);
      for (int j = 1; j <= r; ++j) {
        const int save = r - j;
        const int s = mul + j;
        for (int q = p; q >= s; --q)
          bpts.row(q) =
              alfs[q - s] * bpts.row(q) + (1.0 - alfs[q - s]) * bpts.row(q - 1);
        next_bpts.row(save) = bpts.row(p);
      }
    }
    for (int i = lbz; i <= ph; ++i) {
      ebpts.row(i).setZero();
      for (int j = std::max(0, i - t); j <= std::min(p, i); ++j)
        ebpts.row(i) += bezalfs(i, j) * bpts.row(j);
    }
    if (oldr > 1) {
      // remove the previously inserted knot ua oldr-1 times
      int first = kind - 2, last = kind;
      const double den = ub - ua;
      const double bet = (ub - Uh[kind - 1]) / den;
      for (int tr = 1; tr < oldr; ++tr) {
        int i = first, j = last;
        int kj = j - kind + 1;
        while (j - i > tr) {
          if (i < cind) {
            const double alf = (ub - Uh[i]) / (ua - Uh[i]);
            Q.row(i) = alf * Q.row(i) + (1.0 - alf) * Q.row(i - 1);
          }
          if (j >= lbz) {
            if (j - tr <= kind - ph + oldr) {
              const double gam = (ub - Uh[j - tr]) / den;
              ebpts.row(kj) =
                  gam * ebpts.row(kj) + (1.0 - gam) * ebpts.row(kj + 1);
            } else {
              ebpts.row(kj) =
                  bet * ebpts.row(kj) + (1.0 - bet) * ebpts.row(kj + 1);
            }
          }
          ++i;
          --j;
          --kj;
        }
        --first;
        ++last;
      }
    }
    if (a != p) {
      for (int i = 0; i < ph - oldr; ++i) {
        Uh[kind] = ua;
        ++kind;
      }
    }
    for (int j = lbz; j <= rbz; ++j) {
      Q.row(cind) = ebpts.row(j);
      ++cind;
    }
    if (b < m) {
      for (int j = 0; j < r; ++j) bpts.row(j) = next_bpts.row(j);
      for (int j = r; j <= p; ++j) bpts.row(j) = ctrl.row(b - p + j);
      a = b;
      ++b;
      ua = ub;
    } else {
      for (int i = 0; i <= ph; ++i) Uh[kind + i] = ub;
    }
  }
  const int nh = mh - ph - 1;
  std::vector<double> knots_out(Uh.begin(), Uh.begin() + nh + ph + 2);
  return {std::move(knots_out), Q.topRows(nh + 1)};
}

}  // namespace detail

/// Tensor-product NURBS surface in the plane: the geometry and the
/// approximation space of an analysis.
class Patch {
 public:
  Patch(KnotVector ku, KnotVector kv, Eigen::MatrixXd px, Eigen::MatrixXd py,
        Eigen::MatrixXd pw)
      : ku_(std::move(ku)),
        kv_(std::move(kv)),
        px_(std::move(px)),
        py_(std::move(py)),
        pw_(std::move(pw)) {
    const int n = ku_.num_basis(), m = kv_.num_basis();
    if (px_.rows() != n || px_.cols() != m || py_.rows() != n ||
        py_.cols() != m || pw_.rows() != n || pw_.cols() != m)
      throw std::invalid_argument("Patch: control grid does not match bases");
    if ((pw_.array() <= 0.0).any())
      throw std::invalid_argument("Patch: weights must be strictly positive");
  }

  const KnotVector& knots_u() const { return ku_; }
  const KnotVector& knots_v() const { return kv_; }
  int num_u() const { return ku_.num_basis(); }
  int num_v() const { return kv_.num_basis(); }
  int num_points() const { return num_u() * num_v(); }
  int degree_u() const { return ku_.degree(); }
  int degree_v() const { return kv_.degree(); }
  const Eigen::MatrixXd& x() const { return px_; }
  const Eigen::MatrixXd& y() const { return py_; }
  const Eigen::MatrixXd& weights() const { return pw_; }

  int global_index(int i, int j) const { return j * num_u() + i; }

  /// Physical image of a parametric point.
  Eigen::Vector2d map_point(double xi, double eta) const {
    const int su = ku_.find_span(xi), sv = kv_.find_span(eta);
    const Eigen::MatrixXd Nu = ku_.basis_derivs(xi, 0);
    const Eigen::MatrixXd Nv = kv_.basis_derivs(eta, 0);
    const int p = ku_.degree(), q = kv_.degree();
    double w = 0.0;
    Eigen::Vector2d num = Eigen::Vector2d::Zero();
    for (int iu = 0; iu <= p; ++iu)
      for (int iv = 0; iv <= q; ++iv) {
        const int gi = su - p + iu, gj = sv - q + iv;
        const double a = Nu(0, iu) * Nv(0, iv) * pw_(gi, gj);
        w += a;
        num.x() += a * px_(gi, gj);
        num.y() += a * py_(gi, gj);
      }
    return num / w;
  }

  /// Rational basis with first and second physical derivatives.
  ///
  /// Second derivatives come from the full second-order chain rule with
  /// the mapping Hessian, so curved (circular) patches are handled by the
  /// same path as affine ones.
  BasisEval eval_basis(double xi, double eta) const {
    const int p = ku_.degree(), q = kv_.degree();
    const int su = ku_.find_span(xi), sv = kv_.find_span(eta);
    const Eigen::MatrixXd Nu = ku_.basis_derivs(xi, 2);
    const Eigen::MatrixXd Nv = kv_.basis_derivs(eta, 2);
    const int nact = (p + 1) * (q + 1);

    BasisEval out;
    out.active.resize(nact);
    // parametric derivative table of the weighted numerators:
    // columns (A, A_xi, A_eta, A_xixi, A_etaeta, A_xieta)
    Eigen::MatrixXd num(nact, 6);
    Eigen::Matrix<double, 6, 1> W = Eigen::Matrix<double, 6, 1>::Zero();
    int a = 0;
    for (int iv = 0; iv <= q; ++iv)
      for (int iu = 0; iu <= p; ++iu, ++a) {
        const int gi = su - p + iu, gj = sv - q + iv;
        out.active[a] = global_index(gi, gj);
        const double w = pw_(gi, gj);
        num(a, 0) = Nu(0, iu) * Nv(0, iv) * w;
        num(a, 1) = Nu(1, iu) * Nv(0, iv) * w;
        num(a, 2) = Nu(0, iu) * Nv(1, iv) * w;
        num(a, 3) = Nu(2, iu) * Nv(0, iv) * w;
        num(a, 4) = Nu(0, iu) * Nv(2, iv) * w;
        num(a, 5) = Nu(1, iu) * Nv(1, iv) * w;
        W += num.row(a).transpose();
      }

    const double w0 = W[0];
    Eigen::VectorXd R = num.col(0) / w0;
    Eigen::VectorXd Rxi = (num.col(1) - R * W[1]) / w0;
    Eigen::VectorXd Reta = (num.col(2) - R * W[2]) / w0;
    Eigen::VectorXd Rxixi = (num.col(3) - 2.0 * W[1] * Rxi - W[3] * R) / w0;
    Eigen::VectorXd Retaeta = (num.col(4) - 2.0 * W[2] * Reta - W[4] * R) / w0;
    Eigen::VectorXd Rxieta =
        (num.col(5) - W[2] * Rxi - W[1] * Reta - W[5] * R) / w0;

    // geometry map derivatives
    Eigen::VectorXd cx(nact), cy(nact);
    a = 0;
    for (int iv = 0; iv <= q; ++iv)
      for (int iu = 0; iu <= p; ++iu, ++a) {
        cx[a] = px_(su - p + iu, sv - q + iv);
        cy[a] = py_(su - p + iu, sv - q + iv);
      }
    const double x_xi = Rxi.dot(cx), y_xi = Rxi.dot(cy);
    const double x_eta = Reta.dot(cx), y_eta = Reta.dot(cy);
    const double x_xixi = Rxixi.dot(cx), y_xixi = Rxixi.dot(cy);
    const double x_etaeta = Retaeta.dot(cx), y_etaeta = Retaeta.dot(cy);
    const double x_xieta = Rxieta.dot(cx), y_xieta = Rxieta.dot(cy);

    Eigen::Matrix2d J;
    J << x_xi, x_eta, y_xi, y_eta;
    const double det = J.determinant();
    if (det <= 1e-14)
      throw std::runtime_error("eval_basis: singular geometry Jacobian at (" +
                               std::to_string(xi) + ", " + std::to_string(eta) +
                               ")");

    // first-order pushforward
    Eigen::Matrix2d Jinv = J.inverse();
    out.dR.resize(nact, 2);
    out.dR.col(0) = Jinv(0, 0) * Rxi + Jinv(1, 0) * Reta;
    out.dR.col(1) = Jinv(0, 1) * Rxi + Jinv(1, 1) * Reta;

    // second-order chain rule: solve for (R_xx, R_yy, R_xy)
    Eigen::Matrix3d M2;
    M2 << x_xi * x_xi, y_xi * y_xi, 2.0 * x_xi * y_xi,            //
        x_eta * x_eta, y_eta * y_eta, 2.0 * x_eta * y_eta,        //
        x_xi * x_eta, y_xi * y_eta, x_xi * y_eta + x_eta * y_xi;  //
    Eigen::MatrixXd rhs(3, nact);
    rhs.row(0) =
        (Rxixi - x_xixi * out.dR.col(0) - y_xixi * out.dR.col(1)).transpose();
    rhs.row(1) = (Retaeta - x_etaeta * out.dR.col(0) - y_etaeta * out.dR.col(1))
                     .transpose();
    rhs.row(2) =
        (Rxieta - x_xieta * out.dR.col(0) - y_xieta * out.dR.col(1)).transpose();
    Eigen::MatrixXd second = M2.partialPivLu().solve(rhs);
    out.d2R.resize(nact, 3);
    out.d2R.col(0) = second.row(0).transpose();
    out.d2R.col(1) = second.row(1).transpose();
    out.d2R.col(2) = second.row(2).transpose();

    out.R = std::move(R);
    out.jacobian_det = det;
    return out;
  }

  /// Knot insertion splitting every non-empty span into `su` x `sv`
  /// equal pieces. The mapped surface is unchanged.
  Patch refine_uniform(int su, int sv) const {
    if (su < 1 || sv < 1)
      throw std::invalid_argument("refine_uniform: subdivisions must be >= 1");
    Patch out = *this;
    if (su > 1) out = out.refined_direction(true, su);
    if (sv > 1) out = out.refined_direction(false, sv);
    return out;
  }

  /// Degree elevation of both directions to `target_p`; geometry unchanged.
  Patch elevate_degree(int target_p) const {
    if (target_p < ku_.degree() || target_p < kv_.degree())
      throw std::invalid_argument(
          "elevate_degree: target below current degree");
    Patch out = *this;
    if (target_p > out.degree_u())
      out = out.elevated_direction(true, target_p - out.degree_u());
    if (target_p > out.degree_v())
      out = out.elevated_direction(false, target_p - out.degree_v());
    return out;
  }

  /// Parametric preimage of a physical point by Newton iteration,
  /// initialized at the parametric center.
  Eigen::Vector2d inverse_map(const Eigen::Vector2d& target,
                              double tol = 1e-12, int max_iter = 50) const {
    Eigen::Vector2d uv(0.5 * (ku_.front() + ku_.back()),
                       0.5 * (kv_.front() + kv_.back()));
    const double scale =
        std::max({px_.cwiseAbs().maxCoeff(), py_.cwiseAbs().maxCoeff(), 1e-30});
    for (int it = 0; it < max_iter; ++it) {
      const Eigen::Vector2d res = target - map_point(uv[0], uv[1]);
      if (res.norm() < tol * scale) return uv;
      const Eigen::Matrix2d J = geometry_jacobian(uv[0], uv[1]);
      uv += J.partialPivLu().solve(res);
      uv[0] = std::clamp(uv[0], ku_.front(), ku_.back());
      uv[1] = std::clamp(uv[1], kv_.front(), kv_.back());
    }
    throw std::domain_error(
        "inverse_map: Newton did not converge (point outside geometry?)");
  }

  /// Jacobian d(x,y)/d(xi,eta) of the geometry map.
  Eigen::Matrix2d geometry_jacobian(double xi, double eta) const {
    const int p = ku_.degree(), q = kv_.degree();
    const int su = ku_.find_span(xi), sv = kv_.find_span(eta);
    const Eigen::MatrixXd Nu = ku_.basis_derivs(xi, 1);
    const Eigen::MatrixXd Nv = kv_.basis_derivs(eta, 1);
    double W = 0.0, Wxi = 0.0, Weta = 0.0;
    Eigen::Vector2d S = Eigen::Vector2d::Zero(), Sxi = Eigen::Vector2d::Zero(),
                    Seta = Eigen::Vector2d::Zero();
    for (int iv = 0; iv <= q; ++iv)
      for (int iu = 0; iu <= p; ++iu) {
        const int gi = su - p + iu, gj = sv - q + iv;
        const double w = pw_(gi, gj);
        const Eigen::Vector2d P(px_(gi, gj), py_(gi, gj));
        const double A = Nu(0, iu) * Nv(0, iv) * w;
        const double Axi = Nu(1, iu) * Nv(0, iv) * w;
        const double Aeta = Nu(0, iu) * Nv(1, iv) * w;
        W += A;
        Wxi += Axi;
        Weta += Aeta;
        S += A * P;
        Sxi += Axi * P;
        Seta += Aeta * P;
      }
    const Eigen::Vector2d xp = S / W;
    Eigen::Matrix2d J;
    J.col(0) = (Sxi - Wxi * xp) / W;
    J.col(1) = (Seta - Weta * xp) / W;
    return J;
  }

 private:
  Patch refined_direction(bool u_dir, int subdivisions) const {
    const KnotVector& kv = u_dir ? ku_ : kv_;
    std::vector<double> xs;
    const auto& knots = kv.knots();
    for (int s : kv.nonempty_spans()) {
      const double lo = knots[s], hi = knots[s + 1];
      for (int k = 1; k < subdivisions; ++k)
        xs.push_back(lo + (hi - lo) * static_cast<double>(k) / subdivisions);
    }
    if (xs.empty()) return *this;
    return apply_1d(u_dir, [&](const KnotVector& k1, const Eigen::MatrixXd& c) {
      return detail::insert_knots_1d(k1, c, xs);
    });
  }

  Patch elevated_direction(bool u_dir, int t) const {
    return apply_1d(u_dir, [&](const KnotVector& k1, const Eigen::MatrixXd& c) {
      return detail::elevate_degree_1d(k1, c, t);
    });
  }

  /// Runs a 1D homogeneous-coordinate transform along one direction,
  /// treating the other direction's control lines as vector payload.
  template <typename Op>
  Patch apply_1d(bool u_dir, Op&& op) const {
    const int n = num_u(), m = num_v();
    if (u_dir) {
      Eigen::MatrixXd C(n, 3 * m);
      for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i) {
          C(i, 3 * j + 0) = px_(i, j) * pw_(i, j);
          C(i, 3 * j + 1) = py_(i, j) * pw_(i, j);
          C(i, 3 * j + 2) = pw_(i, j);
        }
      auto [knots, Q] = op(ku_, C);
      const int nn = static_cast<int>(Q.rows());
      const int new_p = static_cast<int>(knots.size()) - nn - 1;
      Eigen::MatrixXd X(nn, m), Y(nn, m), Wm(nn, m);
      for (int j = 0; j < m; ++j)
        for (int i = 0; i < nn; ++i) {
          const double w = Q(i, 3 * j + 2);
          X(i, j) = Q(i, 3 * j + 0) / w;
          Y(i, j) = Q(i, 3 * j + 1) / w;
          Wm(i, j) = w;
        }
      return Patch(KnotVector(std::move(knots), new_p), kv_, std::move(X),
                   std::move(Y), std::move(Wm));
    }
    Eigen::MatrixXd C(m, 3 * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < m; ++j) {
        C(j, 3 * i + 0) = px_(i, j) * pw_(i, j);
        C(j, 3 * i + 1) = py_(i, j) * pw_(i, j);
        C(j, 3 * i + 2) = pw_(i, j);
      }
    auto [knots, Q] = op(kv_, C);
    const int mm = static_cast<int>(Q.rows());
    const int new_q = static_cast<int>(knots.size()) - mm - 1;
    Eigen::MatrixXd X(n, mm), Y(n, mm), Wm(n, mm);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < mm; ++j) {
        const double w = Q(j, 3 * i + 2);
        X(i, j) = Q(j, 3 * i + 0) / w;
        Y(i, j) = Q(j, 3 * i + 1) / w;
        Wm(i, j) = w;
      }
    return Patch(ku_, KnotVector(std::move(knots), new_q), std::move(X),
                 std::move(Y), std::move(Wm));
  }

  KnotVector ku_, kv_;
  Eigen::MatrixXd px_, py_, pw_;
};

/// Degree-p patch mapping [0,1]^2 onto [0,a] x [0,b] with elems_u x elems_v
/// non-empty spans; all weights one. Control points sit at the Greville
/// abscissae so the affine map is reproduced exactly.
inline Patch make_square_patch(double a, double b, int p, int elems_u,
                               int elems_v) {
  if (a <= 0.0 || b <= 0.0)
    throw std::invalid_argument("make_square_patch: dimensions must be positive");
  if (p < 2)
    throw std::invalid_argument(
        "make_square_patch: degree must be >= 2 (the plate kinematics take "
        "second derivatives of the basis)");
  if (elems_u < 1 || elems_v < 1)
    throw std::invalid_argument("make_square_patch: need at least one element");
  KnotVector ku = KnotVector::open_uniform(p, elems_u);
  KnotVector kv = KnotVector::open_uniform(p, elems_v);
  const auto gu = ku.greville();
  const auto gv = kv.greville();
  const int n = ku.num_basis(), m = kv.num_basis();
  Eigen::MatrixXd X(n, m), Y(n, m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      X(i, j) = a * gu[i];
      Y(i, j) = b * gv[j];
    }
  return Patch(std::move(ku), std::move(kv), std::move(X), std::move(Y),
               Eigen::MatrixXd::Ones(n, m));
}

/// Full disk of radius R as a single rational patch: the 9-control-point
/// quadratic net (corner weights 1, mid-edge weights sqrt(2)/2) whose four
/// parameter-square edges each map onto a quarter of the circle, degree
/// elevated to p and uniformly refined to elems x elems. The parametric
/// corners are degenerate; quadrature points stay interior.
inline Patch make_circle_patch(double R, int p, int elems) {
  if (R <= 0.0) throw std::invalid_argument("make_circle_patch: R must be > 0");
  if (p < 2) throw std::invalid_argument("make_circle_patch: degree must be >= 2");
  if (elems < 1)
    throw std::invalid_argument("make_circle_patch: need at least one element");
  const double c = R * std::sqrt(2.0) / 2.0;
  const double s = std::sqrt(2.0) / 2.0;
  Eigen::MatrixXd X(3, 3), Y(3, 3), W(3, 3);
  // u varies along rows, v along columns; edge v=0 is the bottom arc
  X << -c, -2.0 * c, -c,  //
      0.0, 0.0, 0.0,      //
      c, 2.0 * c, c;
  Y << -c, 0.0, c,          //
      -2.0 * c, 0.0, 2.0 * c,  //
      -c, 0.0, c;
  W << 1.0, s, 1.0,  //
      s, 1.0, s,     //
      1.0, s, 1.0;
  Patch coarse(KnotVector({0, 0, 0, 1, 1, 1}, 2),
               KnotVector({0, 0, 0, 1, 1, 1}, 2), std::move(X), std::move(Y),
               std::move(W));
  return coarse.elevate_degree(p).refine_uniform(elems, elems);
}

}  // namespace igaplate
