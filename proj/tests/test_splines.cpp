#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "igaplate/gauss.hpp"
#include "igaplate/knot_vector.hpp"
#include "igaplate/patch.hpp"

using namespace igaplate;

namespace {

std::mt19937& rng() {
  static std::mt19937 gen(0x5eed);
  return gen;
}

double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

/// Quadrature of |J| over the whole patch.
double patch_area(const Patch& patch, int pts_per_dir) {
  const GaussRule g = gauss_legendre(pts_per_dir);
  const auto& ku = patch.knots_u();
  const auto& kv = patch.knots_v();
  double area = 0.0;
  for (int su : ku.nonempty_spans())
    for (int sv : kv.nonempty_spans()) {
      const GaussRule gu = g.mapped(ku.knots()[su], ku.knots()[su + 1]);
      const GaussRule gv = g.mapped(kv.knots()[sv], kv.knots()[sv + 1]);
      for (int i = 0; i < pts_per_dir; ++i)
        for (int j = 0; j < pts_per_dir; ++j) {
          const BasisEval be = patch.eval_basis(gu.points[i], gv.points[j]);
          area += gu.weights[i] * gv.weights[j] * be.jacobian_det;
        }
    }
  return area;
}

/// Central-difference check of physical derivatives through the inverse map.
void check_derivatives_fd(const Patch& patch, double xi, double eta,
                          double rel_tol = 1e-5) {
  const double h = 1e-5;
  const BasisEval be = patch.eval_basis(xi, eta);
  const Eigen::Vector2d x0 = patch.map_point(xi, eta);
  for (int dir = 0; dir < 2; ++dir) {
    Eigen::Vector2d dx = Eigen::Vector2d::Zero();
    dx[dir] = h;
    const Eigen::Vector2d up = patch.inverse_map(x0 + dx);
    const Eigen::Vector2d dn = patch.inverse_map(x0 - dx);
    const BasisEval bp = patch.eval_basis(up[0], up[1]);
    const BasisEval bm = patch.eval_basis(dn[0], dn[1]);
    const Eigen::VectorXd fd1 = (bp.R - bm.R) / (2.0 * h);
    REQUIRE((fd1 - be.dR.col(dir)).norm() <=
            rel_tol * std::max(1.0, be.dR.col(dir).norm()));
    // second derivatives from first-derivative differences
    for (int c = 0; c < 2; ++c) {
      const Eigen::VectorXd fd2 =
          (bp.dR.col(c) - bm.dR.col(c)) / (2.0 * h);
      // (c, dir): (0,0)=xx, (1,1)=yy, (0,1)/(1,0)=xy
      const int col = (c == dir) ? (c == 0 ? 0 : 1) : 2;
      REQUIRE((fd2 - be.d2R.col(col)).norm() <=
              rel_tol * std::max(1.0, be.d2R.col(col).norm()));
    }
  }
}

}  // namespace

TEST_CASE("find_span follows the half-open convention") {
  KnotVector kv({0, 0, 0, 1, 1, 1}, 2);
  CHECK(kv.find_span(0.0) == 2);
  CHECK(kv.find_span(0.4) == 2);
  CHECK(kv.find_span(1.0) == 2);  // right endpoint folds into the last span

  KnotVector kv2({0, 0, 0, 0, .2, .4, .6, .6, .6, .8, 1, 1, 1, 1}, 3);
  CHECK(kv2.find_span(0.5) == 5);
  CHECK(kv2.find_span(0.6) == 8);
  CHECK(kv2.find_span(1.0) == 9);
  CHECK_THROWS_AS(kv2.find_span(-0.1), std::domain_error);
  CHECK_THROWS_AS(kv2.find_span(1.1), std::domain_error);
}

TEST_CASE("KnotVector validation") {
  CHECK_THROWS_AS(KnotVector({0, 0, 1, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(KnotVector({0, 0, 0, 0.5, 0.2, 1, 1, 1}, 2),
                  std::invalid_argument);
  CHECK(KnotVector::open_uniform(3, 11).num_basis() == 14);
}

TEST_CASE("quadratic basis reduces to Bernstein polynomials") {
  KnotVector kv({0, 0, 0, 1, 1, 1}, 2);
  const Eigen::MatrixXd d = kv.basis_derivs(0.5, 2);
  CHECK(d(0, 0) == Catch::Approx(0.25).margin(1e-15));
  CHECK(d(0, 1) == Catch::Approx(0.5).margin(1e-15));
  CHECK(d(0, 2) == Catch::Approx(0.25).margin(1e-15));
  CHECK(d(1, 0) == Catch::Approx(-1.0).margin(1e-14));
  CHECK(d(1, 1) == Catch::Approx(0.0).margin(1e-14));
  CHECK(d(1, 2) == Catch::Approx(1.0).margin(1e-14));
  // (1-x)^2, 2x(1-x), x^2 second derivatives: 2, -4, 2
  CHECK(d(2, 0) == Catch::Approx(2.0).margin(1e-13));
  CHECK(d(2, 1) == Catch::Approx(-4.0).margin(1e-13));
  CHECK(d(2, 2) == Catch::Approx(2.0).margin(1e-13));
}

TEST_CASE("basis derivative rows beyond the degree are zero") {
  KnotVector kv({0, 0, 1, 1}, 1);
  const Eigen::MatrixXd d = kv.basis_derivs(0.3, 2);
  CHECK(d(2, 0) == 0.0);
  CHECK(d(2, 1) == 0.0);
}

TEST_CASE("cubic basis matches central differences and sums correctly") {
  KnotVector kv({0, 0, 0, 0, .2, .4, .6, .6, .6, .8, 1, 1, 1, 1}, 3);
  const double h = 1e-6;
  for (int trial = 0; trial < 50; ++trial) {
    const double xi = uniform(2 * h, 1.0 - 2 * h);
    const Eigen::MatrixXd d = kv.basis_derivs(xi, 2);
    CHECK(d.row(0).sum() == Catch::Approx(1.0).margin(1e-13));
    CHECK(d.row(1).sum() == Catch::Approx(0.0).margin(1e-10));
    CHECK(d.row(2).sum() == Catch::Approx(0.0).margin(1e-8));
    // FD oracle only works away from knots where the span changes
    const int span = kv.find_span(xi);
    if (kv.find_span(xi - h) != span || kv.find_span(xi + h) != span) continue;
    const Eigen::MatrixXd dp = kv.basis_derivs(xi + h, 1);
    const Eigen::MatrixXd dm = kv.basis_derivs(xi - h, 1);
    for (int j = 0; j <= 3; ++j) {
      const double fd1 = (dp(0, j) - dm(0, j)) / (2 * h);
      CHECK(fd1 == Catch::Approx(d(1, j)).margin(1e-4));
      const double fd2 = (dp(1, j) - dm(1, j)) / (2 * h);
      CHECK(fd2 == Catch::Approx(d(2, j)).margin(1e-3));
    }
  }
}

TEST_CASE("basis continuity across single interior knots") {
  KnotVector kv = KnotVector::open_uniform(3, 5);
  const double eps = 1e-13;
  for (int s = 1; s < 5; ++s) {
    const double knot = static_cast<double>(s) / 5.0;
    const Eigen::MatrixXd right = kv.basis_derivs(knot, 1);
    const Eigen::MatrixXd left = kv.basis_derivs(knot - eps, 1);
    const int span_r = kv.find_span(knot);
    const int span_l = kv.find_span(knot - eps);
    // compare the functions active on both sides by global index
    for (int j = 0; j <= 3; ++j) {
      const int global_l = span_l - 3 + j;
      const int offset = global_l - (span_r - 3);
      if (offset < 0 || offset > 3) {
        CHECK(std::abs(left(0, j)) < 1e-12);
        continue;
      }
      CHECK(left(0, j) == Catch::Approx(right(0, offset)).margin(1e-12));
      CHECK(left(1, j) == Catch::Approx(right(1, offset)).margin(1e-10));
    }
  }
}

TEST_CASE("square patch construction and affine map") {
  const double a = 2.5, b = 1.25;
  Patch patch = make_square_patch(a, b, 3, 11, 11);
  CHECK(patch.num_u() == 14);
  CHECK(patch.num_v() == 14);

  const Eigen::Vector2d mid = patch.map_point(0.5, 0.5);
  CHECK(mid.x() == Catch::Approx(a / 2).margin(1e-13));
  CHECK(mid.y() == Catch::Approx(b / 2).margin(1e-13));

  CHECK(patch_area(patch, 4) == Catch::Approx(a * b).epsilon(1e-12));

  // affine-map oracle: geometry Jacobian is diag(a, b) everywhere
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Matrix2d J =
        patch.geometry_jacobian(uniform(0, 1), uniform(0, 1));
    CHECK(J(0, 0) == Catch::Approx(a).margin(1e-12));
    CHECK(J(1, 1) == Catch::Approx(b).margin(1e-12));
    CHECK(std::abs(J(0, 1)) < 1e-12);
    CHECK(std::abs(J(1, 0)) < 1e-12);
  }
  CHECK_THROWS_AS(make_square_patch(1, 1, 1, 4, 4), std::invalid_argument);
}

TEST_CASE("partition of unity and derivative sums on random points") {
  const Patch square = make_square_patch(1.0, 1.0, 3, 7, 7);
  const Patch circle = make_circle_patch(1.0, 3, 7);
  for (const Patch* patch : {&square, &circle}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const double xi = uniform(0.01, 0.99), eta = uniform(0.01, 0.99);
      const BasisEval be = patch->eval_basis(xi, eta);
      REQUIRE(std::abs(be.R.sum() - 1.0) < 1e-12);
      REQUIRE(std::abs(be.dR.col(0).sum()) < 1e-9 * std::max(1.0, be.dR.col(0).cwiseAbs().maxCoeff()));
      REQUIRE(std::abs(be.dR.col(1).sum()) < 1e-9 * std::max(1.0, be.dR.col(1).cwiseAbs().maxCoeff()));
      for (int c = 0; c < 3; ++c)
        REQUIRE(std::abs(be.d2R.col(c).sum()) <
                1e-9 * std::max(1.0, be.d2R.col(c).cwiseAbs().maxCoeff()));
      REQUIRE(be.jacobian_det > 0.0);
    }
  }
}

TEST_CASE("physical derivatives match finite differences") {
  const Patch square = make_square_patch(1.7, 0.9, 3, 5, 5);
  for (int trial = 0; trial < 5; ++trial)
    check_derivatives_fd(square, uniform(0.2, 0.8), uniform(0.2, 0.8));

  const Patch circle = make_circle_patch(1.3, 2, 4);
  for (int trial = 0; trial < 5; ++trial)
    check_derivatives_fd(circle, uniform(0.3, 0.7), uniform(0.3, 0.7), 1e-5);
}

TEST_CASE("uniform refinement preserves geometry") {
  const Patch square = make_square_patch(1.0, 2.0, 3, 3, 3);
  SECTION("identity refinement") {
    const Patch same = square.refine_uniform(1, 1);
    CHECK(same.num_u() == square.num_u());
    CHECK(same.knots_u().knots() == square.knots_u().knots());
  }
  SECTION("affine geometry is preserved pointwise") {
    const Patch fine = square.refine_uniform(4, 2);
    CHECK(fine.knots_u().nonempty_spans().size() == 12);
    CHECK(fine.knots_v().nonempty_spans().size() == 6);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        const double xi = i / 4.0, eta = j / 4.0;
        const Eigen::Vector2d p0 = square.map_point(xi, eta);
        const Eigen::Vector2d p1 = fine.map_point(xi, eta);
        REQUIRE((p0 - p1).norm() < 1e-12);
      }
  }
  SECTION("circle stays on the circle after refinement") {
    const double R = 0.75;
    const Patch circle = make_circle_patch(R, 2, 1).refine_uniform(4, 4);
    for (int k = 0; k <= 20; ++k) {
      const double t = k / 20.0;
      for (const Eigen::Vector2d& bp :
           {circle.map_point(t, 0.0), circle.map_point(t, 1.0),
            circle.map_point(0.0, t), circle.map_point(1.0, t)}) {
        REQUIRE(std::abs(bp.norm() - R) < 1e-10);
      }
    }
  }
}

TEST_CASE("degree elevation preserves geometry") {
  SECTION("multi-span affine patch") {
    const Patch p2 = make_square_patch(1.5, 1.0, 2, 4, 4);
    const Patch p3 = p2.elevate_degree(3);
    CHECK(p3.degree_u() == 3);
    CHECK(p3.degree_v() == 3);
    for (int i = 0; i <= 6; ++i)
      for (int j = 0; j <= 6; ++j) {
        const Eigen::Vector2d a = p2.map_point(i / 6.0, j / 6.0);
        const Eigen::Vector2d b = p3.map_point(i / 6.0, j / 6.0);
        REQUIRE((a - b).norm() < 1e-12);
      }
  }
  SECTION("rational circle elevated two degrees") {
    const double R = 2.0;
    const Patch circle = make_circle_patch(R, 4, 3);
    CHECK(circle.degree_u() == 4);
    for (int k = 0; k <= 16; ++k) {
      const double t = k / 16.0;
      REQUIRE(std::abs(circle.map_point(t, 0.0).norm() - R) < 1e-10);
      REQUIRE(std::abs(circle.map_point(1.0, t).norm() - R) < 1e-10);
    }
  }
  SECTION("basis count for the elevate-then-refine pipeline") {
    // n = spans + p per direction when interior knots stay single
    const Patch c = make_circle_patch(1.0, 3, 11);
    CHECK(c.num_u() == 11 + 3);
    CHECK(c.num_v() == 11 + 3);
  }
  SECTION("lowering the degree is rejected") {
    const Patch p3 = make_square_patch(1.0, 1.0, 3, 2, 2);
    CHECK_THROWS_AS(p3.elevate_degree(2), std::invalid_argument);
  }
}

TEST_CASE("circle patch: exact boundary, area, and weights") {
  const double R = 1.0;
  const Patch coarse = make_circle_patch(R, 2, 1);
  const double s = std::sqrt(2.0) / 2.0;
  CHECK(coarse.weights()(1, 0) == Catch::Approx(s).margin(1e-15));
  CHECK(coarse.weights()(0, 1) == Catch::Approx(s).margin(1e-15));
  CHECK(coarse.weights()(0, 0) == Catch::Approx(1.0).margin(1e-15));

  for (int k = 0; k <= 32; ++k) {
    const double t = k / 32.0;
    REQUIRE(std::abs(coarse.map_point(t, 0.0).norm() - R) < 1e-10);
    REQUIRE(std::abs(coarse.map_point(t, 1.0).norm() - R) < 1e-10);
    REQUIRE(std::abs(coarse.map_point(0.0, t).norm() - R) < 1e-10);
    REQUIRE(std::abs(coarse.map_point(1.0, t).norm() - R) < 1e-10);
  }

  const Patch mesh = make_circle_patch(R, 3, 11);
  CHECK(patch_area(mesh, 4) == Catch::Approx(M_PI * R * R).epsilon(1e-8));
}

TEST_CASE("inverse map recovers parametric points") {
  const Patch circle = make_circle_patch(1.0, 3, 5);
  for (int trial = 0; trial < 20; ++trial) {
    const double xi = uniform(0.1, 0.9), eta = uniform(0.1, 0.9);
    const Eigen::Vector2d x = circle.map_point(xi, eta);
    const Eigen::Vector2d uv = circle.inverse_map(x);
    REQUIRE((circle.map_point(uv[0], uv[1]) - x).norm() < 1e-11);
  }
}
