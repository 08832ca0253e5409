#include "liemetric/spray_geometry.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "liemetric/errors.hpp"

using namespace liemetric;  // NOLINT

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

GroupPoint identity(int m) { return {Matrix::Identity(m, m)}; }

AlgebraElement coords(std::initializer_list<double> values) {
  AlgebraElement v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return v;
}

// Rodrigues: rotation by `angle` about the unit `axis`.
Matrix rodrigues(const Eigen::Vector3d& axis, double angle) {
  Matrix k(3, 3);
  k << 0, -axis(2), axis(1), axis(2), 0, -axis(0), -axis(1), axis(0), 0;
  return Matrix::Identity(3, 3) + std::sin(angle) * k + (1.0 - std::cos(angle)) * k * k;
}

// Distance from p to the polyline through `curve`.
double distance_to_polyline(const Matrix& p, const std::vector<Matrix>& curve) {
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i + 1 < curve.size(); ++i) {
    const Vector a = curve[i].reshaped(), b = curve[i + 1].reshaped(), q = p.reshaped();
    const Vector ab = b - a;
    const double len2 = ab.squaredNorm();
    const double s = len2 > 0.0 ? std::clamp((q - a).dot(ab) / len2, 0.0, 1.0) : 0.0;
    best = std::min(best, (a + s * ab - q).norm());
  }
  return best;
}

double hausdorff(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  double d = 0.0;
  for (const auto& p : a) d = std::max(d, distance_to_polyline(p, b));
  for (const auto& p : b) d = std::max(d, distance_to_polyline(p, a));
  return d;
}

}  // namespace

TEST(CanonicalSpray, HasNoFiberComponent) {
  Sampler sampler(3);
  for (const char* name : {"so3", "heisenberg3", "sl2r", "abelian(2)"}) {
    const LieAlgebra a = catalog(name);
    const TangentState state{identity(a.rep()->size), sampler.vector(a.dim())};
    const SecondTangentVector w = canonical_spray(a, state);
    EXPECT_EQ(max_abs(w.b), 0.0);
    EXPECT_EQ(max_abs(w.a - state.alpha), 0.0);
  }
}

TEST(CanonicalSpray, BaseVelocity) {
  const LieAlgebra ab = catalog("abelian(2)");
  const TangentState s0{identity(2), coords({1.0, 2.0})};
  EXPECT_EQ(max_abs(base_velocity(ab, s0, canonical_spray(ab, s0)) - ab.rep()->of(s0.alpha)), 0.0);

  // x = exp(e1) = I + E12, so x * E23 = E23 + E13.
  const LieAlgebra h = catalog("heisenberg3");
  const GroupPoint x = exp_orbit(h, identity(3), coords({1, 0, 0}), 1.0);
  const TangentState s1{x, coords({0, 1, 0})};
  Matrix expected = Matrix::Zero(3, 3);
  expected(1, 2) = 1.0;
  expected(0, 2) = 1.0;
  EXPECT_LE(max_abs(base_velocity(h, s1, canonical_spray(h, s1)) - expected), 1e-15);
}

TEST(CanonicalSpray, MissingRep) {
  const LieAlgebra bare = from_brackets(3, {{0, 1, 2, 1.0}});
  EXPECT_THROW(canonical_spray(bare, {identity(3), coords({1, 0, 0})}), MissingRep);
  EXPECT_THROW(exp_orbit(bare, identity(3), coords({1, 0, 0}), 1.0), MissingRep);
}

TEST(ExpOrbit, ZeroGeneratorIsIdentity) {
  const LieAlgebra so3 = catalog("so3");
  const GroupPoint x0{rodrigues(Eigen::Vector3d(0, 0.6, 0.8), 0.3)};
  EXPECT_EQ(max_abs(exp_orbit(so3, x0, AlgebraElement::Zero(3), 2.0).matrix - x0.matrix), 0.0);
}

TEST(ExpOrbit, HeisenbergPolynomial) {
  const LieAlgebra h = catalog("heisenberg3");
  const Matrix x = h.rep()->of(coords({1, 1, 0}));
  EXPECT_TRUE(is_nilpotent(x));
  const Matrix expected = Matrix::Identity(3, 3) + x + 0.5 * x * x;
  EXPECT_EQ(max_abs(exp_orbit(h, identity(3), coords({1, 1, 0}), 1.0).matrix - expected), 0.0);
}

TEST(ExpOrbit, So3QuarterTurn) {
  const LieAlgebra so3 = catalog("so3");
  EXPECT_FALSE(is_nilpotent(so3.rep()->of(coords({0, 0, 1}))));
  const Matrix r = exp_orbit(so3, identity(3), coords({0, 0, 1}), std::numbers::pi / 2).matrix;
  EXPECT_LE(max_abs(r - rodrigues(Eigen::Vector3d::UnitZ(), std::numbers::pi / 2)), 1e-14);
}

TEST(IntegrateSode, ZeroVelocityIsConstant) {
  const GroupPoint x0{rodrigues(Eigen::Vector3d(1, 0, 0), 0.4)};
  const auto tr = integrate_canonical_sode(x0, Matrix::Zero(3, 3), 2.0, 10);
  ASSERT_EQ(tr.points.size(), 11u);
  for (const auto& p : tr.points) EXPECT_EQ(max_abs(p.matrix - x0.matrix), 0.0);
  EXPECT_EQ(tr.times.front(), 0.0);
  EXPECT_EQ(tr.times.back(), 2.0);
}

TEST(IntegrateSode, HeisenbergMatchesExactExponential) {
  const LieAlgebra h = catalog("heisenberg3");
  const AlgebraElement alpha = coords({1, 1, 0});
  const auto tr = integrate_canonical_sode(identity(3), h.rep()->of(alpha), 1.0, 1000);
  EXPECT_LE(max_abs(tr.points.back().matrix - exp_orbit(h, identity(3), alpha, 1.0).matrix), 1e-8);
}

TEST(IntegrateSode, So3MatchesRodrigues) {
  const LieAlgebra so3 = catalog("so3");
  const auto tr = integrate_canonical_sode(identity(3), so3.rep()->of(coords({0, 1, 0})), 1.0, 1000);
  EXPECT_LE(max_abs(tr.points.back().matrix - rodrigues(Eigen::Vector3d::UnitY(), 1.0)), 1e-8);
}

TEST(IntegrateSode, FourthOrderConvergence) {
  // Large rotation angle keeps every error well above roundoff.
  struct Case {
    const char* name;
    AlgebraElement alpha;
  };
  for (const Case& c : {Case{"so3", coords({0, 10, 0})}, Case{"e2", coords({2, -1, 6})},
                        Case{"sl2r", coords({1.5, 1.0, -0.5})}}) {
    const LieAlgebra a = catalog(c.name);
    const GroupPoint x0 = identity(a.rep()->size);
    const Matrix exact = exp_orbit(a, x0, c.alpha, 1.0).matrix;
    std::vector<double> errors;
    for (int steps : {250, 500, 1000}) {
      const auto tr = integrate_canonical_sode(x0, a.rep()->of(c.alpha), 1.0, steps);
      errors.push_back(max_abs(tr.points.back().matrix - exact));
    }
    EXPECT_GE(std::log2(errors[0] / errors[1]), 3.7) << c.name;
    EXPECT_GE(std::log2(errors[1] / errors[2]), 3.7) << c.name;
  }
}

TEST(IntegrateSode, HeisenbergIsExactToRoundoff) {
  // RK4 reproduces the quadratic-polynomial orbit at every step count, so
  // there is no truncation error whose order could be observed.
  const LieAlgebra h = catalog("heisenberg3");
  for (const AlgebraElement& alpha : {coords({1, 1, 0}), coords({5, -3, 2})}) {
    const Matrix exact = exp_orbit(h, identity(3), alpha, 2.0).matrix;
    for (int steps : {250, 500, 1000}) {
      const auto tr = integrate_canonical_sode(identity(3), h.rep()->of(alpha), 2.0, steps);
      EXPECT_LE(max_abs(tr.points.back().matrix - exact), 1e-11);
    }
  }
}

TEST(IntegrateSode, LeftInvariance) {
  const LieAlgebra sl2 = catalog("sl2r");
  const Matrix g = exp_orbit(sl2, identity(2), coords({0.3, -0.7, 0.2}), 1.0).matrix;
  const GroupPoint x0 = exp_orbit(sl2, identity(2), coords({-0.1, 0.4, 0.9}), 1.0);
  const Matrix v0 = x0.matrix * sl2.rep()->of(coords({0.5, 0.5, -1.0}));
  const auto base = integrate_canonical_sode(x0, v0, 1.5, 400);
  const auto moved = integrate_canonical_sode({g * x0.matrix}, g * v0, 1.5, 400);
  for (size_t i = 0; i < base.points.size(); ++i) {
    EXPECT_LE(max_abs(moved.points[i].matrix - g * base.points[i].matrix), 1e-8);
  }
}

TEST(IntegrateSode, Errors) {
  EXPECT_THROW(integrate_canonical_sode(identity(2), Matrix::Zero(2, 2), 1.0, 0), InvalidArgument);
  EXPECT_THROW(integrate_canonical_sode({Matrix::Zero(2, 2)}, Matrix::Identity(2, 2), 1.0, 5),
               SingularMatrix);
  // |det| below 1e-12 counts as singular.
  Matrix m0 = Matrix::Identity(2, 2);
  m0(1, 1) = 1e-14;
  EXPECT_THROW(integrate_canonical_sode({m0}, Matrix::Identity(2, 2), 1.0, 5), SingularMatrix);
}

TEST(Projectors, Examples) {
  const LieAlgebra ab = catalog("abelian(3)");
  const SecondTangentVector w{coords({1, 2, 3}), coords({-1, 0, 4})};
  EXPECT_EQ(max_abs(vertical_apply(ab, coords({1, 1, 1}), w) - w.b), 0.0);
  const SecondTangentVector hab = horizontal_apply(ab, coords({1, 1, 1}), w);
  EXPECT_EQ(max_abs(hab.a - w.a), 0.0);
  EXPECT_EQ(max_abs(hab.b), 0.0);

  const LieAlgebra h = catalog("heisenberg3");
  const SecondTangentVector we1{coords({1, 0, 0}), coords({0, 0, 0})};
  EXPECT_LE(max_abs(vertical_apply(h, coords({0, 1, 0}), we1) - coords({0, 0, 0.5})), 1e-15);
  EXPECT_LE(max_abs(horizontal_apply(h, coords({0, 1, 0}), we1).b - coords({0, 0, -0.5})), 1e-15);

  const SecondTangentVector pure_vertical{coords({0, 0, 0}), coords({3, -2, 1})};
  const SecondTangentVector killed = horizontal_apply(h, coords({0.2, 1, 0}), pure_vertical);
  EXPECT_EQ(max_abs(killed.a), 0.0);
  EXPECT_EQ(max_abs(killed.b), 0.0);

  EXPECT_THROW(vertical_apply(h, coords({1, 0}), we1), DimensionMismatch);
}

TEST(Projectors, Properties) {
  for (const auto& name : catalog_names()) {
    const LieAlgebra a = catalog(name);
    const int n = a.dim();
    Sampler sampler(11);
    for (int s = 0; s < 200; ++s) {
      const AlgebraElement alpha = sampler.vector(n);
      const SecondTangentVector w{sampler.vector(n), sampler.vector(n)};
      const AlgebraElement v = vertical_apply(a, alpha, w);
      const SecondTangentVector h = horizontal_apply(a, alpha, w);
      EXPECT_LE(max_abs(h.a - w.a), 1e-14);
      EXPECT_LE(max_abs(h.b + v - w.b), 1e-14);
      EXPECT_LE(max_abs(vertical_apply(a, alpha, {AlgebraElement::Zero(n), v}) - v), 1e-14);
      const SecondTangentVector hh = horizontal_apply(a, alpha, h);
      EXPECT_LE(max_abs(hh.b - h.b), 1e-14);
      const auto spray = canonical_spray(a, {identity(a.rep()->size), alpha});
      EXPECT_LE(max_abs(vertical_apply(a, alpha, spray)), 1e-14) << name;
    }
  }
}

TEST(HomogeneityCheck, Examples) {
  const Matrix g = (Matrix(3, 3) << 2, 0.5, 0, 0.5, 1, 0.1, 0, 0.1, 3).finished();
  auto energy = [&](const AlgebraElement& a) { return 0.5 * a.dot(g * a); };
  auto norm = [&](const AlgebraElement& a) { return std::sqrt(2.0 * energy(a)); };
  auto shifted = [&](const AlgebraElement& a) { return energy(a) + 1.0; };
  EXPECT_LE(homogeneity_check(energy, 2.0, 3, 200), 1e-12);
  EXPECT_LE(homogeneity_check(norm, 1.0, 3, 200), 1e-12);
  EXPECT_GE(homogeneity_check(shifted, 2.0, 3, 200), 0.1);
}

TEST(ProjectiveDeform, Substitution) {
  const FiberField zero = [](const AlgebraElement& a) { return AlgebraElement::Zero(a.size()); };
  const FiberField some = [](const AlgebraElement& a) { return AlgebraElement(a.cwiseProduct(a)); };
  const ScalarFiberFunction none = [](const AlgebraElement&) { return 0.0; };
  const ScalarFiberFunction norm = [](const AlgebraElement& a) { return a.norm(); };
  const AlgebraElement alpha = coords({0.3, -1.2, 0.5});
  EXPECT_EQ(max_abs(projective_deform(some, none, alpha) - some(alpha)), 0.0);
  EXPECT_LE(max_abs(projective_deform(zero, norm, alpha) + 2.0 * alpha.norm() * alpha), 1e-15);
  EXPECT_LE(homogeneity_check(norm, 1.0, 3, 100), 1e-12);
}

TEST(ProjectiveDeform, SamePointSetOnHeisenberg) {
  const LieAlgebra h = catalog("heisenberg3");
  const AlgebraElement alpha0 = coords({1.0, 0.5, -0.3});
  const ScalarFiberFunction p = [](const AlgebraElement& a) { return a.norm(); };
  const FiberField canonical = [](const AlgebraElement& a) { return AlgebraElement::Zero(a.size()); };
  const FiberField deformed = [&](const AlgebraElement& a) { return projective_deform(canonical, p, a); };

  const double t_end = 2.0;
  const int steps = 2000;
  const auto flow = integrate_fiber_flow(h, identity(3), alpha0, deformed, t_end, steps);
  // The fiber keeps its direction, so the deformed parameter is the integral
  // of <alpha, alpha0>/|alpha0|^2 (trapezoid on the RK4 samples).
  double s_end = 0.0;
  const double dt = t_end / steps;
  for (int i = 0; i < steps; ++i) {
    s_end += 0.5 * dt *
             (flow.alphas[i].dot(alpha0) + flow.alphas[i + 1].dot(alpha0)) / alpha0.squaredNorm();
  }
  ASSERT_GT(s_end, 0.1);
  for (const auto& a : flow.alphas) {
    EXPECT_LE((a.normalized() - alpha0.normalized()).norm(), 1e-12);
  }

  std::vector<Matrix> deformed_points, original_points;
  for (const auto& p : flow.base.points) deformed_points.push_back(p.matrix);
  for (int i = 0; i <= steps; ++i) {
    original_points.push_back(exp_orbit(h, identity(3), alpha0, s_end * i / steps).matrix);
  }
  EXPECT_LE(hausdorff(deformed_points, original_points), 1e-6);
}

TEST(TrajectoryCsv, HeaderAndRows) {
  const auto tr = integrate_canonical_sode(identity(2), Matrix::Identity(2, 2), 1.0, 2);
  std::ostringstream out;
  write_trajectory_csv(out, tr);
  std::istringstream in(out.str());
  std::string header, row;
  std::getline(in, header);
  EXPECT_EQ(header, "t,x_11,x_12,x_21,x_22,v_11,v_12,v_21,v_22");
  int rows = 0;
  while (std::getline(in, row)) ++rows;
  EXPECT_EQ(rows, 3);
}
