#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "igaplate/gauss.hpp"
#include "igaplate/material.hpp"

namespace igaplate {

/// Through-thickness-integrated material matrices of one plate section.
struct SectionMatrices {
  Eigen::Matrix3d A, B, D, E, F, H;
  Eigen::Vector3d X, Yb, Ys;
  double Z33 = 0.0;
  Eigen::Matrix2d Ds;

  Eigen::Matrix3d Ac, Bc, Dc, Ec, Fc, Hc;
  Eigen::Matrix2d Xc, Yc, Zc, Tc, Vc, Wc;

  double I1 = 0, I2 = 0, I3 = 0, I4 = 0, I5 = 0, I6 = 0, I7 = 0, I8 = 0;

  double h = 0.0;

  /// 10x10 classical block pairing the stacked (eps0, kappa_b, kappa_s, w_s).
  Eigen::Matrix<double, 10, 10> Db() const {
    Eigen::Matrix<double, 10, 10> out;
    out.block<3, 3>(0, 0) = A;
    out.block<3, 3>(0, 3) = B;
    out.block<3, 3>(0, 6) = E;
    out.block<3, 1>(0, 9) = X;
    out.block<3, 3>(3, 0) = B;
    out.block<3, 3>(3, 3) = D;
    out.block<3, 3>(3, 6) = F;
    out.block<3, 1>(3, 9) = Yb;
    out.block<3, 3>(6, 0) = E;
    out.block<3, 3>(6, 3) = F;
    out.block<3, 3>(6, 6) = H;
    out.block<3, 1>(6, 9) = Ys;
    out.block<1, 3>(9, 0) = X.transpose();
    out.block<1, 3>(9, 3) = Yb.transpose();
    out.block<1, 3>(9, 6) = Ys.transpose();
    out(9, 9) = Z33;
    return out;
  }

  /// 9x9 couple-stress bending block pairing (chi_b0, chi_b1, chi_b3).
  Eigen::Matrix<double, 9, 9> Dcb() const {
    Eigen::Matrix<double, 9, 9> out;
    out.block<3, 3>(0, 0) = Ac;
    out.block<3, 3>(0, 3) = Bc;
    out.block<3, 3>(0, 6) = Ec;
    out.block<3, 3>(3, 0) = Bc;
    out.block<3, 3>(3, 3) = Dc;
    out.block<3, 3>(3, 6) = Fc;
    out.block<3, 3>(6, 0) = Ec;
    out.block<3, 3>(6, 3) = Fc;
    out.block<3, 3>(6, 6) = Hc;
    return out;
  }

  /// 6x6 couple-stress shear block pairing (chi_s0, chi_s2, chi_s4).
  Eigen::Matrix<double, 6, 6> Dcs() const {
    Eigen::Matrix<double, 6, 6> out;
    out.block<2, 2>(0, 0) = Xc;
    out.block<2, 2>(0, 2) = Yc;
    out.block<2, 2>(0, 4) = Tc;
    out.block<2, 2>(2, 0) = Yc;
    out.block<2, 2>(2, 2) = Zc;
    out.block<2, 2>(2, 4) = Vc;
    out.block<2, 2>(4, 0) = Tc;
    out.block<2, 2>(4, 2) = Vc;
    out.block<2, 2>(4, 4) = Wc;
    return out;
  }

  /// 9x9 inertia block pairing the stacked velocity field
  /// (u0, -wb_x, ws_x | v0, -wb_y, ws_y | wb, ws, 0).
  Eigen::Matrix<double, 9, 9> inertia() const {
    Eigen::Matrix3d I0;
    I0 << I1, I2, I4, I2, I3, I5, I4, I5, I6;
    Eigen::Matrix3d Iw;
    Iw << I1, I7, 0.0, I7, I8, 0.0, 0.0, 0.0, 0.0;
    Eigen::Matrix<double, 9, 9> out = Eigen::Matrix<double, 9, 9>::Zero();
    out.block<3, 3>(0, 0) = I0;
    out.block<3, 3>(3, 3) = I0;
    out.block<3, 3>(6, 6) = Iw;
    return out;
  }
};

/// Integrates every section matrix over [-h/2, h/2] with a fixed-order
/// Gauss-Legendre rule. 50 points over-resolve all material indices used
/// in the verification tables (the test suite checks 50 vs 200 points).
inline SectionMatrices section_matrices(const FgmSpec& spec,
                                        const TheoryConfig& theory,
                                        int quad_points = 50) {
  const double h = theory.h;
  if (h <= 0.0) throw std::invalid_argument("section_matrices: h must be > 0");
  const double l = theory.length_scale;

  SectionMatrices s;
  s.h = h;
  s.A.setZero();
  s.B.setZero();
  s.D.setZero();
  s.E.setZero();
  s.F.setZero();
  s.H.setZero();
  s.X.setZero();
  s.Yb.setZero();
  s.Ys.setZero();
  s.Ds.setZero();
  s.Ac.setZero();
  s.Bc.setZero();
  s.Dc.setZero();
  s.Ec.setZero();
  s.Fc.setZero();
  s.Hc.setZero();
  s.Xc.setZero();
  s.Yc.setZero();
  s.Zc.setZero();
  s.Tc.setZero();
  s.Vc.setZero();
  s.Wc.setZero();

  // Fixed-order Gauss-Legendre under the substitution z = (h/2) sin(pi u/2).
  // The substitution turns the volume-fraction factor (1/2 +- z/h)^n into
  // sin/cos powers that are analytic in u for every tabulated index
  // (including n = 1/2, whose plain-z integrand has an endpoint derivative
  // singularity that a fixed rule cannot resolve to 1e-12).
  GaussRule rule = gauss_legendre(quad_points);
  for (int g = 0; g < quad_points; ++g) {
    const double u = rule.points[g];
    rule.weights[g] *= 0.5 * h * 0.5 * M_PI * std::cos(0.5 * M_PI * u);
    rule.points[g] = 0.5 * h * std::sin(0.5 * M_PI * u);
  }
  const bool quasi3d = theory.kind == TheoryKind::Quasi3d;

  for (int g = 0; g < quad_points; ++g) {
    const double z = rule.points[g];
    const double wq = rule.weights[g];
    const EffectiveProperties ep = effective_properties(spec, z, h);

    double Q11, Q12, Q13, Q33;
    if (quasi3d) {
      const double den = (1.0 - 2.0 * ep.nu) * (1.0 + ep.nu);
      Q11 = (1.0 - ep.nu) * ep.E / den;
      Q12 = ep.nu * ep.E / den;
      Q13 = Q12;
      Q33 = Q11;
    } else {
      Q11 = ep.E / (1.0 - ep.nu * ep.nu);
      Q12 = ep.nu * ep.E / (1.0 - ep.nu * ep.nu);
      Q13 = 0.0;
      Q33 = 0.0;
    }
    const double Q66 = ep.G;

    Eigen::Matrix3d Qbar;
    Qbar << Q11, Q12, 0.0, Q12, Q11, 0.0, 0.0, 0.0, Q66;
    const Eigen::Vector3d Qtil(Q13, Q13, 0.0);

    const double f = theory.dist.f(z);
    const double fp = theory.dist.fp(z);
    const double fpp = theory.dist.fpp(z);
    const double phi = theory.dist.phi(z);
    const double phip = theory.dist.phip(z);

    s.A += wq * Qbar;
    s.B += wq * z * Qbar;
    s.D += wq * z * z * Qbar;
    s.E += wq * f * Qbar;
    s.F += wq * z * f * Qbar;
    s.H += wq * f * f * Qbar;
    s.X += wq * phip * Qtil;
    s.Yb += wq * z * phip * Qtil;
    s.Ys += wq * f * phip * Qtil;
    s.Z33 += wq * phip * phip * Q33;
    const double shear_factor = fp + phi;
    s.Ds += wq * shear_factor * shear_factor * ep.G *
            Eigen::Matrix2d::Identity();

    const double gbar = 2.0 * ep.G * l * l;
    const Eigen::Matrix3d G3 = gbar * Eigen::Matrix3d::Identity();
    const Eigen::Matrix2d G2 = gbar * Eigen::Matrix2d::Identity();
    s.Ac += wq * G3;
    s.Bc += wq * fp * G3;
    s.Dc += wq * fp * fp * G3;
    s.Ec += wq * phi * G3;
    s.Fc += wq * fp * phi * G3;
    s.Hc += wq * phi * phi * G3;
    s.Xc += wq * G2;
    s.Yc += wq * fpp * G2;
    s.Zc += wq * fpp * fpp * G2;
    s.Tc += wq * phip * G2;
    s.Vc += wq * fpp * phip * G2;
    s.Wc += wq * phip * phip * G2;

    s.I1 += wq * ep.rho;
    s.I2 += wq * ep.rho * z;
    s.I3 += wq * ep.rho * z * z;
    s.I4 += wq * ep.rho * f;
    s.I5 += wq * ep.rho * z * f;
    s.I6 += wq * ep.rho * f * f;
    s.I7 += wq * ep.rho * phi;
    s.I8 += wq * ep.rho * phi * phi;
  }
  return s;
}

}  // namespace igaplate
