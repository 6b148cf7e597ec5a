#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "igaplate/assembly.hpp"
#include "igaplate/material.hpp"
#include "igaplate/patch.hpp"

namespace igaplate {

struct BendingSolution {
  Eigen::VectorXd q;  ///< full-length DOF vector, zeros on constrained entries
  double residual = 0.0;
};

/// Direct symmetric-definite solve of K q = F on the reduced system.
inline BendingSolution solve_bending(const GlobalSystem& sys) {
  Eigen::LLT<Eigen::MatrixXd> llt(sys.K);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error(
        "solve_bending: stiffness not positive definite (check boundary "
        "conditions)");
  const Eigen::VectorXd q = llt.solve(sys.F);
  BendingSolution out;
  out.residual = (sys.K * q - sys.F).norm() / std::max(sys.F.norm(), 1e-300);
  out.q = sys.expand(q);
  return out;
}

/// Midsurface-relative deflection w(x, y, z) = sum R_A (wb_A + phi(z) ws_A).
inline double evaluate_deflection(const BendingSolution& sol, const Patch& patch,
                                  const TheoryConfig& theory, double x,
                                  double y, double z) {
  if (std::abs(z) > theory.h / 2.0 * (1.0 + 1e-12))
    throw std::domain_error("evaluate_deflection: z outside the section");
  const Eigen::Vector2d uv = patch.inverse_map({x, y});
  const BasisEval be = patch.eval_basis(uv[0], uv[1]);
  const double phi = theory.dist.phi(z);
  double w = 0.0;
  for (size_t a = 0; a < be.active.size(); ++a) {
    w += be.R[a] * (sol.q[DofLayout::global(be.active[a], DofLayout::kWb)] +
                    phi * sol.q[DofLayout::global(be.active[a], DofLayout::kWs)]);
  }
  return w;
}

struct EigenSolution {
  Eigen::VectorXd values;  ///< ascending frequencies or load factors
  Eigen::MatrixXd modes;   ///< full-length mode columns
};

/// First k natural frequencies of (K - w^2 M) q = 0 via the
/// symmetric-definite reduction of M.
inline EigenSolution solve_vibration(const GlobalSystem& sys, int k) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> eig(sys.K, sys.M);
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("solve_vibration: eigensolver failed (M not SPD?)");
  const int kk = std::min<int>(k, eig.eigenvalues().size());
  EigenSolution out;
  out.values.resize(kk);
  out.modes.resize(sys.total_dofs, kk);
  for (int i = 0; i < kk; ++i) {
    const double lambda = eig.eigenvalues()[i];
    if (lambda < 0.0 && lambda < -1e-10 * eig.eigenvalues().cwiseAbs().maxCoeff())
      throw std::runtime_error("solve_vibration: negative eigenvalue (K not SPD?)");
    out.values[i] = std::sqrt(std::max(lambda, 0.0));
    out.modes.col(i) = sys.expand(eig.eigenvectors().col(i));
  }
  return out;
}

/// First k positive load factors of (K - lambda Kg) q = 0 with Kg assembled
/// for unit compression. Solved as (-Kg) q = (1/lambda) K q so the definite
/// matrix sits on the right-hand side.
inline EigenSolution solve_buckling(const GlobalSystem& sys, int k) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> eig(-sys.Kg, sys.K);
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("solve_buckling: eigensolver failed (K not SPD?)");
  const Eigen::VectorXd mu = eig.eigenvalues();
  const double mu_max = mu.cwiseAbs().maxCoeff();
  std::vector<int> positive;
  for (int i = mu.size() - 1; i >= 0; --i)
    if (mu[i] > 1e-12 * mu_max) positive.push_back(i);
  if (positive.empty())
    throw std::runtime_error("solve_buckling: no positive load factor found");
  const int kk = std::min<int>(k, static_cast<int>(positive.size()));
  EigenSolution out;
  out.values.resize(kk);
  out.modes.resize(sys.total_dofs, kk);
  for (int i = 0; i < kk; ++i) {
    out.values[i] = 1.0 / mu[positive[i]];
    out.modes.col(i) = sys.expand(eig.eigenvectors().col(positive[i]));
  }
  return out;
}

/// Named table scalings.
enum class NondimKind {
  Deflection10Ech3,    ///< 10 Ec h^3 / (q0 a^4) * w
  FreqCeramic,         ///< w a^2/h sqrt(rho_c / E_c)
  FreqMetal,           ///< w a^2/h sqrt(rho_m / E_m)
  FreqCircCeramic,     ///< w R^2 sqrt(rho_c h / D_c), D = E h^3 / 12(1-nu^2)
  BucklingE2h3,        ///< P a^2 / (E_m h^3)
  BucklingDm,          ///< P a^2 / D_m
  BucklingCircDm,      ///< P R^2 / D_m
};

struct NondimContext {
  PhaseProperties metal{0, 0, 0};
  PhaseProperties ceramic{0, 0, 0};
  double a = 0.0;   ///< square edge length
  double R = 0.0;   ///< disk radius
  double h = 0.0;
  double q0 = 0.0;
};

inline NondimKind nondim_from_name(std::string_view name) {
  if (name == "deflection_10Ech3") return NondimKind::Deflection10Ech3;
  if (name == "freq_ceramic") return NondimKind::FreqCeramic;
  if (name == "freq_metal") return NondimKind::FreqMetal;
  if (name == "freq_circ_ceramic") return NondimKind::FreqCircCeramic;
  if (name == "buckling_E2h3") return NondimKind::BucklingE2h3;
  if (name == "buckling_Dm") return NondimKind::BucklingDm;
  if (name == "buckling_circ_Dm") return NondimKind::BucklingCircDm;
  throw std::invalid_argument("nondim_from_name: unknown convention '" +
                              std::string(name) + "'");
}

inline double nondimensionalize(double raw, NondimKind kind,
                                const NondimContext& ctx) {
  const auto need = [](double v, const char* what) {
    if (v <= 0.0)
      throw std::invalid_argument(std::string("nondimensionalize: missing ") +
                                  what);
    return v;
  };
  const auto bending_rigidity = [&](const PhaseProperties& p) {
    return p.E * std::pow(ctx.h, 3) / (12.0 * (1.0 - p.nu * p.nu));
  };
  switch (kind) {
    case NondimKind::Deflection10Ech3:
      return raw * 10.0 * need(ctx.ceramic.E, "ceramic modulus") *
             std::pow(need(ctx.h, "thickness"), 3) /
             (need(ctx.q0, "load") * std::pow(need(ctx.a, "edge length"), 4));
    case NondimKind::FreqCeramic:
      return raw * ctx.a * ctx.a / need(ctx.h, "thickness") *
             std::sqrt(need(ctx.ceramic.rho, "ceramic density") /
                       need(ctx.ceramic.E, "ceramic modulus"));
    case NondimKind::FreqMetal:
      return raw * ctx.a * ctx.a / need(ctx.h, "thickness") *
             std::sqrt(need(ctx.metal.rho, "metal density") /
                       need(ctx.metal.E, "metal modulus"));
    case NondimKind::FreqCircCeramic:
      return raw * ctx.R * ctx.R *
             std::sqrt(need(ctx.ceramic.rho, "ceramic density") *
                       need(ctx.h, "thickness") /
                       bending_rigidity(ctx.ceramic));
    case NondimKind::BucklingE2h3:
      return raw * ctx.a * ctx.a /
             (need(ctx.metal.E, "metal modulus") * std::pow(ctx.h, 3));
    case NondimKind::BucklingDm:
      return raw * ctx.a * ctx.a / bending_rigidity(ctx.metal);
    case NondimKind::BucklingCircDm:
      return raw * ctx.R * ctx.R / bending_rigidity(ctx.metal);
  }
  throw std::logic_error("nondimensionalize: unreachable");
}

/// Collapses numerically repeated eigenvalues (degenerate pairs) so the
/// first k *distinct* values can be compared against tables that list each
/// pair once.
inline std::vector<double> distinct_values(const Eigen::VectorXd& values,
                                           double rel_tol = 1e-6) {
  std::vector<double> out;
  for (int i = 0; i < values.size(); ++i) {
    if (out.empty() || std::abs(values[i] - out.back()) >
                           rel_tol * std::abs(out.back()))
      out.push_back(values[i]);
  }
  return out;
}

}  // namespace igaplate
