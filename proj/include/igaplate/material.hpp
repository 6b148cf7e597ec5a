#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace igaplate {

/// Isotropic phase constants.
struct PhaseProperties {
  double E;    ///< Young's modulus [Pa]
  double nu;   ///< Poisson ratio
  double rho;  ///< density [kg/m^3]
};

enum class Scheme { RuleOfMixtures, MoriTanaka };

/// Which phase carries the power-law exponent through the thickness.
/// CeramicPower: V_c = (1/2 + z/h)^n (ceramic-rich top).
/// MetalPower:   V_m = (1/2 - z/h)^n (metal fraction graded instead).
enum class GradingLaw { CeramicPower, MetalPower };

/// Two-phase functionally graded section.
struct FgmSpec {
  PhaseProperties metal;
  PhaseProperties ceramic;
  double n = 0.0;  ///< material index, >= 0
  Scheme scheme = Scheme::RuleOfMixtures;
  GradingLaw law = GradingLaw::CeramicPower;
};

/// Ceramic volume fraction at height z in [-h/2, h/2].
inline double volume_fraction(const FgmSpec& spec, double z, double h) {
  if (spec.n < 0.0) throw std::invalid_argument("volume_fraction: n < 0");
  if (std::abs(z) > h / 2.0 * (1.0 + 1e-12))
    throw std::domain_error("volume_fraction: z outside [-h/2, h/2]");
  const double zeta = std::clamp(z / h, -0.5, 0.5);
  if (spec.law == GradingLaw::CeramicPower) return std::pow(0.5 + zeta, spec.n);
  return 1.0 - std::pow(0.5 - zeta, spec.n);
}

struct EffectiveProperties {
  double E;
  double nu;
  double rho;
  double G;
};

/// Effective constants at height z: linear blend for the rule of mixtures,
/// bulk/shear interpolation for Mori-Tanaka. Density always blends linearly;
/// shear modulus is always recomputed from (E, nu) so the stress and couple
/// stress laws stay consistent.
inline EffectiveProperties effective_properties(const FgmSpec& spec, double z,
                                                double h) {
  const double Vc = volume_fraction(spec, z, h);
  const double Vm = 1.0 - Vc;
  EffectiveProperties out;
  out.rho = spec.metal.rho * Vm + spec.ceramic.rho * Vc;
  if (spec.scheme == Scheme::RuleOfMixtures) {
    out.E = spec.metal.E * Vm + spec.ceramic.E * Vc;
    out.nu = spec.metal.nu * Vm + spec.ceramic.nu * Vc;
  } else {
    const auto bulk = [](const PhaseProperties& p) {
      return p.E / (3.0 * (1.0 - 2.0 * p.nu));
    };
    const auto shear = [](const PhaseProperties& p) {
      return p.E / (2.0 * (1.0 + p.nu));
    };
    const double Km = bulk(spec.metal), Kc = bulk(spec.ceramic);
    const double Gm = shear(spec.metal), Gc = shear(spec.ceramic);
    const double f1 = Gm * (9.0 * Km + 8.0 * Gm) / (6.0 * (Km + 2.0 * Gm));
    const double Ke =
        Km + (Kc - Km) * Vc / (1.0 + Vm * (Kc - Km) / (Km + 4.0 / 3.0 * Gm));
    const double Ge = Gm + (Gc - Gm) * Vc / (1.0 + Vm * (Gc - Gm) / (Gm + f1));
    out.E = 9.0 * Ke * Ge / (3.0 * Ke + Ge);
    out.nu = (3.0 * Ke - 2.0 * Ge) / (2.0 * (3.0 * Ke + Ge));
  }
  out.G = out.E / (2.0 * (1.0 + out.nu));
  return out;
}

enum class TheoryKind { Rpt, Quasi3d };

/// Through-thickness shape functions of the four-unknown kinematics:
/// in-plane profile f(z) multiplying w_s gradients and deflection profile
/// phi(z) multiplying w_s. RPT entries fold the -z shift into f and fix
/// phi = 1 (no thickness stretching).
class Distribution {
 public:
  enum class Family {
    CubicRpt,
    ArctanRpt,
    SinQuasi3d,
    SinhQuasi3d,
    FifthOrderQuasi3d,
    SeventhOrderRpt,
    SeventhOrderQuasi3d,
  };

  Distribution(Family family, double h) : family_(family), h_(h) {
    if (h <= 0.0) throw std::invalid_argument("Distribution: h must be > 0");
  }

  Family family() const { return family_; }
  double h() const { return h_; }

  TheoryKind kind() const {
    switch (family_) {
      case Family::CubicRpt:
      case Family::ArctanRpt:
      case Family::SeventhOrderRpt:
        return TheoryKind::Rpt;
      default:
        return TheoryKind::Quasi3d;
    }
  }

  double f(double z) const {
    switch (family_) {
      case Family::CubicRpt:
        return -4.0 * z * z * z / (3.0 * h_ * h_);
      case Family::ArctanRpt:
        return std::atan(std::sin(M_PI * z / h_)) - z;
      case Family::SinQuasi3d:
        return h_ / M_PI * std::sin(M_PI * z / h_) - z;
      case Family::SinhQuasi3d:
        return h_ * std::sinh(z / h_) -
               4.0 * z * z * z / (3.0 * h_ * h_) * std::cosh(0.5);
      case Family::FifthOrderQuasi3d:
        return M_PI / h_ * z - 9.0 * M_PI / (5.0 * std::pow(h_, 3)) * z * z * z +
               28.0 * M_PI / (25.0 * std::pow(h_, 5)) * std::pow(z, 5);
      case Family::SeventhOrderRpt:
        return seventh(z) - z;
      case Family::SeventhOrderQuasi3d:
        return seventh(z);
    }
    return 0.0;
  }

  double fp(double z) const {
    switch (family_) {
      case Family::CubicRpt:
        return -4.0 * z * z / (h_ * h_);
      case Family::ArctanRpt: {
        const double s = std::sin(M_PI * z / h_);
        return M_PI / h_ * std::cos(M_PI * z / h_) / (1.0 + s * s) - 1.0;
      }
      case Family::SinQuasi3d:
        return std::cos(M_PI * z / h_) - 1.0;
      case Family::SinhQuasi3d:
        return std::cosh(z / h_) -
               4.0 * z * z / (h_ * h_) * std::cosh(0.5);
      case Family::FifthOrderQuasi3d:
        return M_PI / h_ - 27.0 * M_PI / (5.0 * std::pow(h_, 3)) * z * z +
               28.0 * M_PI / (5.0 * std::pow(h_, 5)) * std::pow(z, 4);
      case Family::SeventhOrderRpt:
        return seventh_p(z) - 1.0;
      case Family::SeventhOrderQuasi3d:
        return seventh_p(z);
    }
    return 0.0;
  }

  double fpp(double z) const {
    switch (family_) {
      case Family::CubicRpt:
        return -8.0 * z / (h_ * h_);
      case Family::ArctanRpt: {
        const double c = std::cos(M_PI * z / h_);
        const double s = std::sin(M_PI * z / h_);
        const double d = 1.0 + s * s;
        const double k = M_PI / h_;
        return -k * k * s * (1.0 / d + 2.0 * c * c / (d * d));
      }
      case Family::SinQuasi3d:
        return -M_PI / h_ * std::sin(M_PI * z / h_);
      case Family::SinhQuasi3d:
        return std::sinh(z / h_) / h_ -
               8.0 * z / (h_ * h_) * std::cosh(0.5);
      case Family::FifthOrderQuasi3d:
        return -54.0 * M_PI / (5.0 * std::pow(h_, 3)) * z +
               112.0 * M_PI / (5.0 * std::pow(h_, 5)) * z * z * z;
      case Family::SeventhOrderRpt:
      case Family::SeventhOrderQuasi3d:
        return seventh_pp(z);
    }
    return 0.0;
  }

  double phi(double z) const {
    switch (family_) {
      case Family::CubicRpt:
      case Family::ArctanRpt:
      case Family::SeventhOrderRpt:
        return 1.0;
      case Family::SinQuasi3d:
        return fp(z) + 1.0;
      case Family::SinhQuasi3d:
        return fp(z) / 12.0;
      case Family::FifthOrderQuasi3d:
        return fp(z) / 8.0;
      case Family::SeventhOrderQuasi3d:
        return 3.0 / 20.0 * fp(z);
    }
    return 0.0;
  }

  double phip(double z) const {
    switch (family_) {
      case Family::CubicRpt:
      case Family::ArctanRpt:
      case Family::SeventhOrderRpt:
        return 0.0;
      case Family::SinQuasi3d:
        return fpp(z);
      case Family::SinhQuasi3d:
        return fpp(z) / 12.0;
      case Family::FifthOrderQuasi3d:
        return fpp(z) / 8.0;
      case Family::SeventhOrderQuasi3d:
        return 3.0 / 20.0 * fpp(z);
    }
    return 0.0;
  }

 private:
  double seventh(double z) const {
    const double z3 = z * z * z;
    return -8.0 * z + 10.0 * z3 / (h_ * h_) +
           6.0 * z3 * z * z / (5.0 * std::pow(h_, 4)) +
           8.0 * z3 * z3 * z / (7.0 * std::pow(h_, 6));
  }
  double seventh_p(double z) const {
    const double z2 = z * z;
    return -8.0 + 30.0 * z2 / (h_ * h_) + 6.0 * z2 * z2 / std::pow(h_, 4) +
           8.0 * z2 * z2 * z2 / std::pow(h_, 6);
  }
  double seventh_pp(double z) const {
    return 60.0 * z / (h_ * h_) + 24.0 * z * z * z / std::pow(h_, 4) +
           48.0 * std::pow(z, 5) / std::pow(h_, 6);
  }

  Family family_;
  double h_;
};

/// Catalog lookup by name.
inline Distribution distribution_catalog(std::string_view name, double h) {
  using F = Distribution::Family;
  if (name == "cubic_rpt") return Distribution(F::CubicRpt, h);
  if (name == "arctan_rpt") return Distribution(F::ArctanRpt, h);
  if (name == "sin_quasi3d") return Distribution(F::SinQuasi3d, h);
  if (name == "sinh_quasi3d") return Distribution(F::SinhQuasi3d, h);
  if (name == "fifth_order_quasi3d") return Distribution(F::FifthOrderQuasi3d, h);
  if (name == "seventh_order_rpt") return Distribution(F::SeventhOrderRpt, h);
  if (name == "seventh_order_quasi3d")
    return Distribution(F::SeventhOrderQuasi3d, h);
  throw std::invalid_argument("distribution_catalog: unknown entry '" +
                              std::string(name) + "'");
}

/// Kinematic model in use: distribution functions plus the couple stress
/// length scale and section thickness.
struct TheoryConfig {
  TheoryKind kind;
  Distribution dist;
  double length_scale;  ///< l [m]
  double h;             ///< thickness [m]

  TheoryConfig(Distribution d, double l)
      : kind(d.kind()), dist(d), length_scale(l), h(d.h()) {
    if (l < 0.0) throw std::invalid_argument("TheoryConfig: l must be >= 0");
  }

  double phi0() const { return dist.phi(0.0); }
  double phi_top() const { return dist.phi(h / 2.0); }
};

inline TheoryConfig make_theory(std::string_view distribution_name, double l,
                                double h) {
  return TheoryConfig(distribution_catalog(distribution_name, h), l);
}

}  // namespace igaplate
