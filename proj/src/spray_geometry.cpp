#include "liemetric/spray_geometry.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <unsupported/Eigen/MatrixFunctions>

#include "liemetric/errors.hpp"

namespace liemetric {

namespace {

constexpr double kSingularDet = 1e-12;

const MatrixRep& require_rep(const LieAlgebra& algebra) {
  if (!algebra.has_rep()) throw MissingRep("algebra has no matrix representation");
  return *algebra.rep();
}

void require_dims(const LieAlgebra& algebra, const AlgebraElement& alpha,
                  const SecondTangentVector& w) {
  const auto n = algebra.dim();
  if (alpha.size() != n || w.a.size() != n || w.b.size() != n) {
    throw DimensionMismatch("tangent data does not match algebra dim " + std::to_string(n));
  }
}

Matrix solve_checked(const Matrix& m, const Matrix& rhs) {
  Eigen::PartialPivLU<Matrix> lu(m);
  if (std::abs(lu.determinant()) < kSingularDet) {
    throw SingularMatrix("|det M| = " + std::to_string(std::abs(lu.determinant())));
  }
  return lu.solve(rhs);
}

void append_number(std::string& line, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  line += buf;
}

}  // namespace

SecondTangentVector canonical_spray(const LieAlgebra& algebra, const TangentState& state) {
  require_rep(algebra);
  if (state.alpha.size() != algebra.dim()) {
    throw DimensionMismatch("alpha does not match algebra dim");
  }
  return {state.alpha, AlgebraElement::Zero(algebra.dim())};
}

Matrix base_velocity(const LieAlgebra& algebra, const TangentState& state,
                     const SecondTangentVector& w) {
  return state.x.matrix * require_rep(algebra).of(w.a);
}

bool is_nilpotent(const Matrix& x) {
  const auto m = x.rows();
  const double norm = std::max(1.0, x.cwiseAbs().maxCoeff());
  Matrix power = x;
  double scale = norm;
  for (Eigen::Index k = 1; k <= m; ++k) {
    if (power.cwiseAbs().maxCoeff() <= 64.0 * 2.220446049250313e-16 * scale) return true;
    power = power * x;
    scale *= norm;
  }
  return false;
}

Matrix matrix_exp(const Matrix& x) {
  if (x.rows() != x.cols()) throw DimensionMismatch("matrix_exp needs a square matrix");
  if (is_nilpotent(x)) {
    Matrix result = Matrix::Identity(x.rows(), x.cols());
    Matrix term = result;
    for (Eigen::Index k = 1; k < x.rows(); ++k) {
      term = term * x / static_cast<double>(k);
      result += term;
    }
    return result;
  }
  return x.exp();
}

GroupPoint exp_orbit(const LieAlgebra& algebra, const GroupPoint& x0,
                     const AlgebraElement& alpha, double t) {
  const Matrix generator = require_rep(algebra).of(alpha);
  return {x0.matrix * matrix_exp(t * generator)};
}

GeodesicTrajectory integrate_canonical_sode(const GroupPoint& x0, const Matrix& v0,
                                            double t_end, int steps) {
  if (steps < 1) throw InvalidArgument("steps must be >= 1");
  if (!std::isfinite(t_end)) throw InvalidArgument("t_end must be finite");
  if (v0.rows() != x0.matrix.rows() || v0.cols() != x0.matrix.cols()) {
    throw DimensionMismatch("initial velocity does not match the group point");
  }
  const double h = t_end / steps;
  auto accel = [](const Matrix& m, const Matrix& v) -> Matrix {
    return v * solve_checked(m, v);
  };

  GeodesicTrajectory out;
  out.times.reserve(static_cast<size_t>(steps) + 1);
  Matrix m = x0.matrix;
  Matrix v = v0;
  solve_checked(m, v);
  out.times.push_back(0.0);
  out.points.push_back({m});
  out.velocities.push_back(v);
  for (int s = 0; s < steps; ++s) {
    const Matrix k1m = v;
    const Matrix k1v = accel(m, v);
    const Matrix k2m = v + 0.5 * h * k1v;
    const Matrix k2v = accel(m + 0.5 * h * k1m, k2m);
    const Matrix k3m = v + 0.5 * h * k2v;
    const Matrix k3v = accel(m + 0.5 * h * k2m, k3m);
    const Matrix k4m = v + h * k3v;
    const Matrix k4v = accel(m + h * k3m, k4m);
    m += (h / 6.0) * (k1m + 2.0 * k2m + 2.0 * k3m + k4m);
    v += (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    out.times.push_back(s + 1 == steps ? t_end : (s + 1) * h);
    out.points.push_back({m});
    out.velocities.push_back(v);
  }
  return out;
}

AlgebraElement vertical_apply(const LieAlgebra& algebra, const AlgebraElement& alpha,
                              const SecondTangentVector& w) {
  require_dims(algebra, alpha, w);
  return 0.5 * bracket(algebra, w.a, alpha) + w.b;
}

SecondTangentVector horizontal_apply(const LieAlgebra& algebra, const AlgebraElement& alpha,
                                     const SecondTangentVector& w) {
  require_dims(algebra, alpha, w);
  return {w.a, -0.5 * bracket(algebra, w.a, alpha)};
}

double homogeneity_check(const ScalarFiberFunction& f, double degree, int dim, int samples,
                         std::uint64_t seed) {
  constexpr double kFloor = 1e-30;
  Sampler sampler(seed);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const AlgebraElement alpha = sampler.nonzero_vector(dim);
    // (0, 2]
    const double s = 2.0 - sampler.uniform(0.0, 2.0);
    const double base = f(alpha);
    const double residual = std::abs(f(s * alpha) - std::pow(s, degree) * base) /
                            (std::abs(base) + kFloor);
    worst = std::max(worst, residual);
  }
  return worst;
}

AlgebraElement projective_deform(const FiberField& fiber, const ScalarFiberFunction& factor,
                                 const AlgebraElement& alpha) {
  return fiber(alpha) - 2.0 * factor(alpha) * alpha;
}

FiberFlowTrajectory integrate_fiber_flow(const LieAlgebra& algebra, const GroupPoint& x0,
                                         const AlgebraElement& alpha0, const FiberField& fiber,
                                         double t_end, int steps) {
  if (steps < 1) throw InvalidArgument("steps must be >= 1");
  const MatrixRep& rep = require_rep(algebra);
  if (alpha0.size() != algebra.dim()) throw DimensionMismatch("alpha0 does not match algebra dim");
  const double h = t_end / steps;

  FiberFlowTrajectory out;
  Matrix x = x0.matrix;
  AlgebraElement alpha = alpha0;
  auto record = [&](double t) {
    out.base.times.push_back(t);
    out.base.points.push_back({x});
    out.base.velocities.push_back(x * rep.of(alpha));
    out.alphas.push_back(alpha);
  };
  record(0.0);
  for (int s = 0; s < steps; ++s) {
    const Matrix k1x = x * rep.of(alpha);
    const AlgebraElement k1a = fiber(alpha);
    const AlgebraElement a2 = alpha + 0.5 * h * k1a;
    const Matrix k2x = (x + 0.5 * h * k1x) * rep.of(a2);
    const AlgebraElement k2a = fiber(a2);
    const AlgebraElement a3 = alpha + 0.5 * h * k2a;
    const Matrix k3x = (x + 0.5 * h * k2x) * rep.of(a3);
    const AlgebraElement k3a = fiber(a3);
    const AlgebraElement a4 = alpha + h * k3a;
    const Matrix k4x = (x + h * k3x) * rep.of(a4);
    const AlgebraElement k4a = fiber(a4);
    x += (h / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    alpha += (h / 6.0) * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
    record(s + 1 == steps ? t_end : (s + 1) * h);
  }
  return out;
}

void write_trajectory_csv(std::ostream& out, const GeodesicTrajectory& trajectory) {
  const Eigen::Index m = trajectory.points.empty() ? 0 : trajectory.points.front().matrix.rows();
  std::string header = "t";
  for (const char* prefix : {"x", "v"}) {
    for (Eigen::Index r = 1; r <= m; ++r) {
      for (Eigen::Index c = 1; c <= m; ++c) {
        header += "," + std::string(prefix) + "_" + std::to_string(r) + std::to_string(c);
      }
    }
  }
  out << header << '\n';
  for (size_t i = 0; i < trajectory.times.size(); ++i) {
    std::string line;
    append_number(line, trajectory.times[i]);
    for (const Matrix* mat : {&trajectory.points[i].matrix, &trajectory.velocities[i]}) {
      for (Eigen::Index r = 0; r < m; ++r) {
        for (Eigen::Index c = 0; c < m; ++c) {
          line += ',';
          append_number(line, (*mat)(r, c));
        }
      }
    }
    out << line << '\n';
  }
}

}  // namespace liemetric
