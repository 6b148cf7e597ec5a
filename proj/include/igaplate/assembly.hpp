#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "igaplate/gauss.hpp"
#include "igaplate/material.hpp"
#include "igaplate/patch.hpp"
#include "igaplate/plate_model.hpp"
#include "igaplate/section.hpp"

namespace igaplate {

/// Transverse pressure acting on the top surface.
struct Load {
  enum class Kind { None, Uniform, Sinusoidal };
  Kind kind = Kind::None;
  double q0 = 0.0;
};

/// In-plane prebuckling state feeding the geometric stiffness.
/// Biaxial is unit compression N0 = diag(-1, -1); radial compression of a
/// disk reduces to the same Cartesian pattern.
enum class PrebucklingPattern { None, Biaxial };

/// Assembled matrices over either all DOFs or, after reduce(), the free set.
struct GlobalSystem {
  Eigen::MatrixXd K;
  Eigen::MatrixXd M;
  Eigen::MatrixXd Kg;
  Eigen::VectorXd F;
  int total_dofs = 0;
  std::vector<int> free_dofs;     ///< global indices of retained rows
  std::vector<int> constrained;   ///< global indices removed by reduce()

  bool reduced() const { return static_cast<int>(free_dofs.size()) != total_dofs; }

  /// Scatter a reduced vector back to the full DOF ordering (zeros on
  /// constrained entries).
  Eigen::VectorXd expand(const Eigen::VectorXd& v) const {
    Eigen::VectorXd full = Eigen::VectorXd::Zero(total_dofs);
    for (size_t i = 0; i < free_dofs.size(); ++i) full[free_dofs[i]] = v[i];
    return full;
  }
};

/// Per-element tensor Gauss rule: (p+1) x (q+1) points on [-1,1]^2.
struct TensorRule {
  GaussRule u;
  GaussRule v;
};

inline TensorRule quadrature_rule(int p_u, int p_v) {
  if (p_u < 2 || p_v < 2)
    throw std::invalid_argument("quadrature_rule: degrees must be >= 2");
  return {gauss_legendre(p_u + 1), gauss_legendre(p_v + 1)};
}

/// Builds K = Ks + Kc, M, Kg, and F over all DOFs of the patch.
inline GlobalSystem assemble(const Patch& patch, const SectionMatrices& section,
                             const TheoryConfig& theory, const Load& load,
                             PrebucklingPattern pattern) {
  if (std::abs(section.h - theory.h) > 1e-14 * theory.h)
    throw std::invalid_argument(
        "assemble: section and theory disagree on thickness");

  const int ndof = DofLayout::kDofsPerPoint * patch.num_points();
  GlobalSystem sys;
  sys.total_dofs = ndof;
  sys.free_dofs.resize(ndof);
  for (int i = 0; i < ndof; ++i) sys.free_dofs[i] = i;
  sys.K = Eigen::MatrixXd::Zero(ndof, ndof);
  sys.M = Eigen::MatrixXd::Zero(ndof, ndof);
  sys.Kg = Eigen::MatrixXd::Zero(ndof, ndof);
  sys.F = Eigen::VectorXd::Zero(ndof);

  const Eigen::Matrix<double, 10, 10> Db = section.Db();
  const Eigen::Matrix<double, 9, 9> Dcb = section.Dcb();
  const Eigen::Matrix<double, 6, 6> Dcs = section.Dcs();
  const Eigen::Matrix<double, 9, 9> inertia = section.inertia();
  const Eigen::Matrix2d N0 = -Eigen::Matrix2d::Identity();
  const double phi0 = theory.phi0();
  const double phi_top = theory.phi_top();
  const bool couple_stress = theory.length_scale > 0.0;
  const bool want_mass = true;
  const bool want_kg = pattern != PrebucklingPattern::None;

  // plate extents for the sinusoidal pressure profile
  double ax = 1.0, by = 1.0;
  if (load.kind == Load::Kind::Sinusoidal) {
    const Eigen::Vector2d far = patch.map_point(patch.knots_u().back(),
                                                patch.knots_v().back());
    ax = far.x();
    by = far.y();
  }

  const TensorRule ref = quadrature_rule(patch.degree_u(), patch.degree_v());
  const auto& ku = patch.knots_u();
  const auto& kv = patch.knots_v();

  for (int su : ku.nonempty_spans()) {
    const GaussRule gu = ref.u.mapped(ku.knots()[su], ku.knots()[su + 1]);
    for (int sv : kv.nonempty_spans()) {
      const GaussRule gv = ref.v.mapped(kv.knots()[sv], kv.knots()[sv + 1]);
      for (int i = 0; i < gu.points.size(); ++i) {
        for (int j = 0; j < gv.points.size(); ++j) {
          const double xi = gu.points[i], eta = gv.points[j];
          const BasisEval be = patch.eval_basis(xi, eta);
          if (!(be.jacobian_det > 1e-14))
            throw std::runtime_error("assemble: degenerate Jacobian at quadrature point");
          const double w = gu.weights[i] * gv.weights[j] * be.jacobian_det;
          const int na = static_cast<int>(be.R.size());
          const int ncol = 4 * na;

          const StrainOperators so = strain_operators(be);
          Eigen::MatrixXd Bcl(10, ncol);
          Bcl.topRows<3>() = so.Bm;
          Bcl.middleRows<3>(3) = so.Bb1;
          Bcl.middleRows<3>(6) = so.Bb2;
          Bcl.bottomRows<1>() = so.Bz;

          Eigen::MatrixXd Ke = Bcl.transpose() * (w * Db) * Bcl;
          Ke.noalias() += so.Bs.transpose() * (w * section.Ds) * so.Bs;

          if (couple_stress) {
            const CurvatureOperators co = curvature_operators(be);
            Eigen::MatrixXd Bcb(9, ncol);
            Bcb.topRows<3>() = co.Bb0;
            Bcb.middleRows<3>(3) = co.Bb1;
            Bcb.bottomRows<3>() = co.Bb3;
            Eigen::MatrixXd Bcs(6, ncol);
            Bcs.topRows<2>() = co.Bs0;
            Bcs.middleRows<2>(2) = co.Bs2;
            Bcs.bottomRows<2>() = co.Bs4;
            Ke.noalias() += Bcb.transpose() * (w * Dcb) * Bcb;
            Ke.noalias() += Bcs.transpose() * (w * Dcs) * Bcs;
          }

          Eigen::MatrixXd Me;
          if (want_mass) {
            const Eigen::MatrixXd Rm = mass_operator(be);
            Me = Rm.transpose() * (w * inertia) * Rm;
          }
          Eigen::MatrixXd Kge;
          if (want_kg) {
            const Eigen::MatrixXd Bg = geometric_operator(be, phi0);
            Kge = Bg.transpose() * (w * N0) * Bg;
          }

          Eigen::VectorXd Fe;
          if (load.kind != Load::Kind::None) {
            double q = load.q0;
            if (load.kind == Load::Kind::Sinusoidal) {
              const Eigen::Vector2d x = patch.map_point(xi, eta);
              q *= std::sin(M_PI * x.x() / ax) * std::sin(M_PI * x.y() / by);
            }
            Fe = Eigen::VectorXd::Zero(ncol);
            for (int a = 0; a < na; ++a) {
              Fe[4 * a + DofLayout::kWb] = w * q * be.R[a];
              Fe[4 * a + DofLayout::kWs] = w * q * phi_top * be.R[a];
            }
          }

          // scatter
          std::vector<int> gdof(ncol);
          for (int a = 0; a < na; ++a)
            for (int c = 0; c < 4; ++c)
              gdof[4 * a + c] = DofLayout::global(be.active[a], c);
          for (int r = 0; r < ncol; ++r) {
            const int gr = gdof[r];
            for (int c = 0; c < ncol; ++c) {
              const int gc = gdof[c];
              sys.K(gr, gc) += Ke(r, c);
              if (want_mass) sys.M(gr, gc) += Me(r, c);
              if (want_kg) sys.Kg(gr, gc) += Kge(r, c);
            }
            if (load.kind != Load::Kind::None) sys.F[gr] += Fe[r];
          }
        }
      }
    }
  }
  return sys;
}

/// Boundary conditions: per-edge codes for rectangles (edge order x=0, x=a,
/// y=0, y=b), one code for the whole disk boundary.
struct BcSpec {
  enum class Edge { SimplySupported, Clamped, Free };
  enum class Kind { Rectangle, Disk };

  Kind kind = Kind::Rectangle;
  std::array<Edge, 4> edges{Edge::SimplySupported, Edge::SimplySupported,
                            Edge::SimplySupported, Edge::SimplySupported};
  Edge disk_edge = Edge::SimplySupported;

  static BcSpec rectangle(std::string_view name) {
    if (name.size() != 4)
      throw std::invalid_argument("BcSpec: rectangle name needs 4 edge codes");
    BcSpec bc;
    bc.kind = Kind::Rectangle;
    for (int e = 0; e < 4; ++e) {
      switch (name[e]) {
        case 'S': bc.edges[e] = Edge::SimplySupported; break;
        case 'C': bc.edges[e] = Edge::Clamped; break;
        case 'F': bc.edges[e] = Edge::Free; break;
        default:
          throw std::invalid_argument("BcSpec: unknown edge code '" +
                                      std::string(1, name[e]) + "'");
      }
    }
    return bc;
  }

  static BcSpec disk(std::string_view name) {
    BcSpec bc;
    bc.kind = Kind::Disk;
    if (name == "simple")
      bc.disk_edge = Edge::SimplySupported;
    else if (name == "clamped")
      bc.disk_edge = Edge::Clamped;
    else
      throw std::invalid_argument("BcSpec: unknown disk support '" +
                                  std::string(name) + "'");
    return bc;
  }
};

/// Constrained global DOF set for the patch under the given conditions.
///
/// Simply supported edges pin the tangential in-plane component and both
/// deflection parts on the boundary control row. Clamped edges zero all
/// four DOFs on the boundary row and the adjacent row, which enforces the
/// normal-slope conditions through the control net.
inline std::vector<int> resolve_bcs(const Patch& patch, const BcSpec& bc) {
  const int n = patch.num_u(), m = patch.num_v();
  std::set<int> fixed;
  const auto fix = [&](int i, int j, std::initializer_list<int> comps) {
    for (int c : comps)
      fixed.insert(DofLayout::global(patch.global_index(i, j), c));
  };
  constexpr int kU0 = DofLayout::kU0, kV0 = DofLayout::kV0;
  constexpr int kWb = DofLayout::kWb, kWs = DofLayout::kWs;

  if (bc.kind == BcSpec::Kind::Disk) {
    const auto ring = [&](int layer, std::initializer_list<int> comps) {
      for (int i = layer; i < n - layer; ++i) {
        fix(i, layer, comps);
        fix(i, m - 1 - layer, comps);
      }
      for (int j = layer; j < m - layer; ++j) {
        fix(layer, j, comps);
        fix(n - 1 - layer, j, comps);
      }
    };
    if (bc.disk_edge == BcSpec::Edge::Clamped) {
      ring(0, {kU0, kV0, kWb, kWs});
      ring(1, {kU0, kV0, kWb, kWs});
    } else {
      // simple support applies the rectangle rule on the parameter-square
      // edges: the u-edge arcs lose v0, the v-edge arcs lose u0, both lose
      // the deflection parts (corners end up fully pinned in-plane)
      for (int j = 0; j < m; ++j) {
        fix(0, j, {kV0, kWb, kWs});
        fix(n - 1, j, {kV0, kWb, kWs});
      }
      for (int i = 0; i < n; ++i) {
        fix(i, 0, {kU0, kWb, kWs});
        fix(i, m - 1, {kU0, kWb, kWs});
      }
    }
    return {fixed.begin(), fixed.end()};
  }

  // rectangle edges in spec order: x=0, x=a, y=0, y=b
  for (int e = 0; e < 4; ++e) {
    const BcSpec::Edge kind = bc.edges[e];
    if (kind == BcSpec::Edge::Free) continue;
    const bool x_edge = e < 2;  // normal along x
    const auto along_edge = [&](int row, std::initializer_list<int> comps) {
      if (x_edge) {
        const int i = (e == 0) ? row : n - 1 - row;
        for (int j = 0; j < m; ++j) fix(i, j, comps);
      } else {
        const int j = (e == 2) ? row : m - 1 - row;
        for (int i = 0; i < n; ++i) fix(i, j, comps);
      }
    };
    if (kind == BcSpec::Edge::SimplySupported) {
      // tangential in-plane component plus both deflection parts
      along_edge(0, x_edge ? std::initializer_list<int>{kV0, kWb, kWs}
                           : std::initializer_list<int>{kU0, kWb, kWs});
    } else {
      along_edge(0, {kU0, kV0, kWb, kWs});
      along_edge(1, {kU0, kV0, kWb, kWs});
    }
  }
  return {fixed.begin(), fixed.end()};
}

/// Row/column elimination onto the free DOF set.
inline GlobalSystem reduce(const GlobalSystem& sys,
                           const std::vector<int>& constrained) {
  std::vector<char> is_fixed(sys.total_dofs, 0);
  for (int c : constrained) {
    if (c < 0 || c >= sys.total_dofs)
      throw std::invalid_argument("reduce: constraint index out of range");
    is_fixed[c] = 1;
  }
  std::vector<int> free;
  free.reserve(sys.total_dofs);
  for (int i = 0; i < sys.total_dofs; ++i)
    if (!is_fixed[i]) free.push_back(i);
  if (free.empty()) throw std::invalid_argument("reduce: all DOFs constrained");

  GlobalSystem out;
  out.total_dofs = sys.total_dofs;
  out.free_dofs = free;
  out.constrained.assign(constrained.begin(), constrained.end());
  std::sort(out.constrained.begin(), out.constrained.end());
  out.K = sys.K(free, free);
  if (sys.M.size() > 0) out.M = sys.M(free, free);
  if (sys.Kg.size() > 0) out.Kg = sys.Kg(free, free);
  if (sys.F.size() > 0) out.F = sys.F(free);
  return out;
}

}  // namespace igaplate
