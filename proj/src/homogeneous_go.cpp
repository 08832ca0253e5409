#include "liemetric/homogeneous_go.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "liemetric/errors.hpp"
#include "liemetric/metrizability.hpp"

namespace liemetric {

namespace {

constexpr double kSeriesThreshold = 1e-4;
constexpr double kMetrizableTolerance = 1e-9;
constexpr int kMetrizabilityDirections = 16;

Mat2 rotation(double theta) {
  Mat2 r;
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return r;
}

Mat3 lift_rotation(double theta) {
  Mat3 g = Mat3::Identity();
  g.topLeftCorner<2, 2>() = rotation(theta);
  return g;
}

Vec2 unit_direction(double theta) { return {std::cos(theta), std::sin(theta)}; }

struct Phase {
  Vec2 x;
  Vec2 v;
};

Phase go_rhs(double kappa, const Phase& p) { return {p.v, go_spray_fiber(kappa, p.v)}; }

void append_number(std::string& line, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  line += buf;
}

}  // namespace

HomogeneousLift HomogeneousLift::sigma(double kappa) {
  return {kappa, [kappa](const Vec2& v) { return sigma_kappa(kappa, v); }};
}

Mat3 sigma_kappa(double kappa, const Vec2& v) {
  const double w = kappa * v.norm();
  Mat3 m = Mat3::Zero();
  m(0, 1) = -w;
  m(1, 0) = w;
  m(0, 2) = v(0);
  m(1, 2) = v(1);
  return m;
}

Mat3 e2_element(double theta, const Vec2& b) {
  Mat3 g = lift_rotation(theta);
  g.topRightCorner<2, 1>() = b;
  return g;
}

GoState go_geodesic_exp(double kappa, const Vec2& v, double t) {
  const double omega = kappa * v.norm();
  const double theta = omega * t;
  // exp(t sigma) o = [[S, -C], [C, S]] v with S = sin(theta)/omega and
  // C = (1 - cos(theta))/omega.
  double s = 0.0;
  double c = 0.0;
  if (std::abs(theta) < kSeriesThreshold) {
    const double th2 = theta * theta;
    s = t * (1.0 - th2 / 6.0 + th2 * th2 / 120.0);
    c = t * theta * (0.5 - th2 / 24.0 + th2 * th2 / 720.0);
  } else {
    s = std::sin(theta) / omega;
    c = (1.0 - std::cos(theta)) / omega;
  }
  GoState out;
  out.position = {s * v(0) - c * v(1), c * v(0) + s * v(1)};
  out.velocity = rotation(theta) * v;
  return out;
}

Vec2 go_spray_fiber(double kappa, const Vec2& y) {
  const double w = kappa * y.norm();
  return {-w * y(1), w * y(0)};
}

std::vector<GoState> go_geodesic_ode(double kappa, const GoState& state0, double t_end,
                                     int steps) {
  if (steps < 1) throw InvalidArgument("steps must be >= 1");
  const double h = t_end / steps;
  std::vector<GoState> out;
  out.reserve(static_cast<size_t>(steps) + 1);
  Phase p{state0.position, state0.velocity};
  out.push_back(state0);
  for (int s = 0; s < steps; ++s) {
    const Phase k1 = go_rhs(kappa, p);
    const Phase k2 = go_rhs(kappa, {p.x + 0.5 * h * k1.x, p.v + 0.5 * h * k1.v});
    const Phase k3 = go_rhs(kappa, {p.x + 0.5 * h * k2.x, p.v + 0.5 * h * k2.v});
    const Phase k4 = go_rhs(kappa, {p.x + h * k3.x, p.v + h * k3.v});
    p.x += (h / 6.0) * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
    p.v += (h / 6.0) * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v);
    out.push_back({p.x, p.v});
  }
  return out;
}

Mat2 go_connection(double kappa, const Vec2& y) {
  const double h = 1e-5 * (1.0 + y.norm());
  Mat2 n;
  for (int j = 0; j < 2; ++j) {
    const Vec2 dy = h * Vec2::Unit(j);
    n.col(j) = -0.5 * (go_spray_fiber(kappa, y + dy) - go_spray_fiber(kappa, y - dy)) / (2.0 * h);
  }
  return n;
}

Vec2 curvature_kappa(double kappa, const Vec2& y) {
  const double k2 = kappa * kappa;
  return {-k2 * y(1), k2 * y(0)};
}

Vec2 curvature_numeric(double kappa, const Vec2& y) {
  if (y.isZero(0.0)) throw ZeroVelocity("curvature needs y != 0");
  const Mat2 n = go_connection(kappa, y);
  // dn[l](i, j) = d N^i_j / d y^l, one level coarser than go_connection.
  const double h = 1e-4 * (1.0 + y.norm());
  Mat2 dn[2];
  for (int l = 0; l < 2; ++l) {
    const Vec2 dy = h * Vec2::Unit(l);
    dn[l] = (go_connection(kappa, y + dy) - go_connection(kappa, y - dy)) / (2.0 * h);
  }
  // R^i = N^l_1 d_l N^i_2 - N^l_2 d_l N^i_1; the orientation matches the
  // closed form at kappa = 1, y = (1, 0).
  Vec2 r = Vec2::Zero();
  for (int i = 0; i < 2; ++i) {
    for (int l = 0; l < 2; ++l) {
      r(i) += n(l, 0) * dn[l](i, 1) - n(l, 1) * dn[l](i, 0);
    }
  }
  return r;
}

double lift_homogeneity_residual(const HomogeneousLift& lift, const Vec2& v, double s) {
  return (lift.evaluate(s * v) - s * lift.evaluate(v)).cwiseAbs().maxCoeff();
}

LiftAxiomReport lift_axiom_report(const HomogeneousLift& lift, int samples, std::uint64_t seed) {
  if (samples < 1) throw InvalidArgument("samples must be >= 1");
  Sampler sampler(seed);
  LiftAxiomReport report;
  for (int i = 0; i < samples; ++i) {
    const Vec2 v = unit_direction(sampler.uniform(0.0, 2.0 * std::numbers::pi));
    const Mat3 x = lift.evaluate(v);
    report.projection =
        std::max(report.projection, (x.topRightCorner<2, 1>() - v).cwiseAbs().maxCoeff());
    const double s = 2.0 - sampler.uniform(0.0, 2.0);
    report.positive_homogeneity =
        std::max(report.positive_homogeneity, lift_homogeneity_residual(lift, v, s));
    const double theta = sampler.uniform(0.0, 2.0 * std::numbers::pi);
    const Mat3 g = lift_rotation(theta);
    const Mat3 ad = g * x * g.transpose();
    const Mat3 rotated = lift.evaluate(rotation(theta) * v);
    report.equivariance = std::max(report.equivariance, (rotated - ad).cwiseAbs().maxCoeff());
    report.real_homogeneity =
        std::max(report.real_homogeneity, lift_homogeneity_residual(lift, v, -1.0));
  }
  return report;
}

FirstIntegralReport go_first_integral_check(double kappa, int samples, int steps,
                                            std::uint64_t seed) {
  constexpr double kHorizon = 5.0;
  Sampler sampler(seed);
  FirstIntegralReport report;
  for (int i = 0; i < samples; ++i) {
    GoState start;
    start.position = sampler.vector(2, -1.0, 1.0);
    start.velocity = sampler.uniform(0.5, 2.0) *
                     unit_direction(sampler.uniform(0.0, 2.0 * std::numbers::pi));
    const double l0 = start.velocity.squaredNorm();
    for (const GoState& s : go_geodesic_ode(kappa, start, kHorizon, steps)) {
      report.max_deviation = std::max(report.max_deviation, std::abs(s.velocity.squaredNorm() - l0));
      report.noninvariant_deviation = std::max(
          report.noninvariant_deviation, std::abs(s.velocity(0) - start.velocity(0)));
    }
  }
  return report;
}

std::string to_string(GoVerdict v) {
  return v == GoVerdict::Metrizable ? "Metrizable" : "NotInvariantMetrizable";
}

GoMetrizabilityReport go_invariant_metrizability(double kappa) {
  GoMetrizabilityReport report;
  report.kappa = kappa;
  report.samples = kMetrizabilityDirections;
  for (int i = 0; i < kMetrizabilityDirections; ++i) {
    const Vec2 y = unit_direction(2.0 * std::numbers::pi * i / kMetrizabilityDirections);
    const Mat2 n = go_connection(kappa, y);
    // dE/dx vanishes for E = 1/2 |y|^2; d_h E along d/dx^i is -N^j_i y_j.
    const Vec2 dh = n.transpose() * y;
    report.max_residual = std::max(report.max_residual, dh.cwiseAbs().maxCoeff());
  }
  report.verdict = report.max_residual <= kMetrizableTolerance
                       ? GoVerdict::Metrizable
                       : GoVerdict::NotInvariantMetrizable;
  return report;
}

double go_projective_factor(double kappa, const Vec2& v, double t) {
  const InvariantLagrangian norm = InvariantLagrangian::finsler_norm(Matrix::Identity(2, 2));
  auto fiber_curve = [&](double s) -> AlgebraElement {
    return go_geodesic_exp(kappa, v, s).velocity;
  };
  return projective_factor_along(norm, fiber_curve, t);
}

void write_go_csv(std::ostream& out, const std::vector<GoState>& states, double t_end) {
  out << "t,x1,x2,v1,v2,speed\n";
  const auto steps = states.size() > 1 ? states.size() - 1 : 1;
  for (size_t i = 0; i < states.size(); ++i) {
    const double t = i + 1 == states.size() && states.size() > 1
                         ? t_end
                         : t_end * static_cast<double>(i) / static_cast<double>(steps);
    std::string line;
    for (double value : {t, states[i].position(0), states[i].position(1), states[i].velocity(0),
                         states[i].velocity(1), states[i].velocity.norm()}) {
      if (!line.empty()) line += ',';
      append_number(line, value);
    }
    out << line << '\n';
  }
}

}  // namespace liemetric
