#pragma once

#include <stdexcept>

#include <Eigen/Dense>

#include "igaplate/patch.hpp"

namespace igaplate {

/// Four degrees of freedom per control point, interleaved.
struct DofLayout {
  static constexpr int kDofsPerPoint = 4;
  enum Component { kU0 = 0, kV0 = 1, kWb = 2, kWs = 3 };
  static int global(int point, int component) {
    return kDofsPerPoint * point + component;
  }
};

/// Discrete strain operators at one quadrature point, columns over the
/// active DOFs in the order (u0, v0, wb, ws) per active function.
struct StrainOperators {
  Eigen::MatrixXd Bm;   ///< 3 x 4n membrane
  Eigen::MatrixXd Bb1;  ///< 3 x 4n bending curvature (wb)
  Eigen::MatrixXd Bb2;  ///< 3 x 4n shear-bending curvature (ws)
  Eigen::MatrixXd Bs;   ///< 2 x 4n transverse shear
  Eigen::MatrixXd Bz;   ///< 1 x 4n thickness stretch
};

/// Couple-stress curvature operators (chi blocks).
struct CurvatureOperators {
  Eigen::MatrixXd Bb0;  ///< 3 x 4n on wb
  Eigen::MatrixXd Bb1;  ///< 3 x 4n on ws (f' block)
  Eigen::MatrixXd Bb3;  ///< 3 x 4n on ws (phi block)
  Eigen::MatrixXd Bs0;  ///< 2 x 4n on (u0, v0)
  Eigen::MatrixXd Bs2;  ///< 2 x 4n on ws (f'' block)
  Eigen::MatrixXd Bs4;  ///< 2 x 4n on ws (phi' block)
};

namespace detail {
inline void require_second_derivatives(const BasisEval& basis) {
  if (basis.d2R.rows() != basis.R.size() || basis.d2R.cols() != 3)
    throw std::invalid_argument(
        "point operators need second physical derivatives");
}
}  // namespace detail

inline StrainOperators strain_operators(const BasisEval& basis) {
  detail::require_second_derivatives(basis);
  const int n = static_cast<int>(basis.R.size());
  StrainOperators op;
  op.Bm = Eigen::MatrixXd::Zero(3, 4 * n);
  op.Bb1 = Eigen::MatrixXd::Zero(3, 4 * n);
  op.Bb2 = Eigen::MatrixXd::Zero(3, 4 * n);
  op.Bs = Eigen::MatrixXd::Zero(2, 4 * n);
  op.Bz = Eigen::MatrixXd::Zero(1, 4 * n);
  for (int a = 0; a < n; ++a) {
    const double Rx = basis.dR(a, 0), Ry = basis.dR(a, 1);
    const double Rxx = basis.d2R(a, 0), Ryy = basis.d2R(a, 1),
                 Rxy = basis.d2R(a, 2);
    const int u0 = 4 * a + DofLayout::kU0, v0 = 4 * a + DofLayout::kV0;
    const int wb = 4 * a + DofLayout::kWb, ws = 4 * a + DofLayout::kWs;
    op.Bm(0, u0) = Rx;
    op.Bm(1, v0) = Ry;
    op.Bm(2, u0) = Ry;
    op.Bm(2, v0) = Rx;
    op.Bb1(0, wb) = -Rxx;
    op.Bb1(1, wb) = -Ryy;
    op.Bb1(2, wb) = -2.0 * Rxy;
    op.Bb2(0, ws) = Rxx;
    op.Bb2(1, ws) = Ryy;
    op.Bb2(2, ws) = 2.0 * Rxy;
    op.Bs(0, ws) = Rx;
    op.Bs(1, ws) = Ry;
    op.Bz(0, ws) = basis.R[a];
  }
  return op;
}

inline CurvatureOperators curvature_operators(const BasisEval& basis) {
  detail::require_second_derivatives(basis);
  const int n = static_cast<int>(basis.R.size());
  CurvatureOperators op;
  op.Bb0 = Eigen::MatrixXd::Zero(3, 4 * n);
  op.Bb1 = Eigen::MatrixXd::Zero(3, 4 * n);
  op.Bb3 = Eigen::MatrixXd::Zero(3, 4 * n);
  op.Bs0 = Eigen::MatrixXd::Zero(2, 4 * n);
  op.Bs2 = Eigen::MatrixXd::Zero(2, 4 * n);
  op.Bs4 = Eigen::MatrixXd::Zero(2, 4 * n);
  for (int a = 0; a < n; ++a) {
    const double Rx = basis.dR(a, 0), Ry = basis.dR(a, 1);
    const double Rxx = basis.d2R(a, 0), Ryy = basis.d2R(a, 1),
                 Rxy = basis.d2R(a, 2);
    const int u0 = 4 * a + DofLayout::kU0, v0 = 4 * a + DofLayout::kV0;
    const int wb = 4 * a + DofLayout::kWb, ws = 4 * a + DofLayout::kWs;
    op.Bb0(0, wb) = 0.5 * 2.0 * Rxy;
    op.Bb0(1, wb) = -0.5 * 2.0 * Rxy;
    op.Bb0(2, wb) = 0.5 * (-Rxx + Ryy);
    op.Bb1(0, ws) = 0.25 * -2.0 * Rxy;
    op.Bb1(1, ws) = 0.25 * 2.0 * Rxy;
    op.Bb1(2, ws) = 0.25 * (Rxx - Ryy);
    op.Bb3(0, ws) = 0.25 * 2.0 * Rxy;
    op.Bb3(1, ws) = 0.25 * -2.0 * Rxy;
    op.Bb3(2, ws) = 0.25 * (-Rxx + Ryy);
    op.Bs0(0, u0) = 0.25 * -Rxy;
    op.Bs0(0, v0) = 0.25 * Rxx;
    op.Bs0(1, u0) = 0.25 * -Ryy;
    op.Bs0(1, v0) = 0.25 * Rxy;
    op.Bs2(0, ws) = 0.25 * -Ry;
    op.Bs2(1, ws) = 0.25 * Rx;
    op.Bs4(0, ws) = 0.25 * Ry;
    op.Bs4(1, ws) = 0.25 * -Rx;
  }
  return op;
}

/// 9-row inertia operator stacking the velocity field components
/// (u0, -wb_x, ws_x | v0, -wb_y, ws_y | wb, ws, 0).
inline Eigen::MatrixXd mass_operator(const BasisEval& basis) {
  const int n = static_cast<int>(basis.R.size());
  Eigen::MatrixXd op = Eigen::MatrixXd::Zero(9, 4 * n);
  for (int a = 0; a < n; ++a) {
    const double R = basis.R[a];
    const double Rx = basis.dR(a, 0), Ry = basis.dR(a, 1);
    const int u0 = 4 * a + DofLayout::kU0, v0 = 4 * a + DofLayout::kV0;
    const int wb = 4 * a + DofLayout::kWb, ws = 4 * a + DofLayout::kWs;
    op(0, u0) = R;
    op(1, wb) = -Rx;
    op(2, ws) = Rx;
    op(3, v0) = R;
    op(4, wb) = -Ry;
    op(5, ws) = Ry;
    op(6, wb) = R;
    op(7, ws) = R;
  }
  return op;
}

/// Gradient operator of the prebuckling work term, acting on the midplane
/// deflection wb + phi(0) ws.
inline Eigen::MatrixXd geometric_operator(const BasisEval& basis, double phi0) {
  const int n = static_cast<int>(basis.R.size());
  Eigen::MatrixXd op = Eigen::MatrixXd::Zero(2, 4 * n);
  for (int a = 0; a < n; ++a) {
    const double Rx = basis.dR(a, 0), Ry = basis.dR(a, 1);
    const int wb = 4 * a + DofLayout::kWb, ws = 4 * a + DofLayout::kWs;
    op(0, wb) = Rx;
    op(0, ws) = phi0 * Rx;
    op(1, wb) = Ry;
    op(1, ws) = phi0 * Ry;
  }
  return op;
}

}  // namespace igaplate
