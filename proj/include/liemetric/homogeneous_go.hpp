#ifndef LIEMETRIC_HOMOGENEOUS_GO_HPP
#define LIEMETRIC_HOMOGENEOUS_GO_HPP

#include <Eigen/Dense>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "liemetric/sampling.hpp"

namespace liemetric {

// Geodesic-orbit structures on R^2 = E(2)/SO(2). The Lie algebra of E(2) is
// represented by 3x3 matrices [[0, -w, v1], [w, 0, v2], [0, 0, 0]] acting on
// points (x1, x2, 1); the origin o = (0, 0) has stabilizer SO(2).

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

/// Map from T_o R^2 to the Lie algebra of E(2), selecting the geodesic
/// vector for each initial velocity.
struct HomogeneousLift {
  double kappa = 0.0;
  std::function<Mat3(const Vec2&)> evaluate;

  /// The rotation-invariant family sigma_kappa.
  static HomogeneousLift sigma(double kappa);
};

struct GoState {
  Vec2 position = Vec2::Zero();
  Vec2 velocity = Vec2::Zero();
};

/// Rotation block kappa |v| J, translation column v.
Mat3 sigma_kappa(double kappa, const Vec2& v);

/// Group element with rotation angle `theta` and translation `b`.
Mat3 e2_element(double theta, const Vec2& b);

/// Closed-form exp(t sigma_kappa(v)) applied to the origin, with velocity.
GoState go_geodesic_exp(double kappa, const Vec2& v, double t);

/// RK4 on x1'' = -kappa |x'| x2', x2'' = kappa |x'| x1'. Returns steps + 1
/// samples, endpoints included.
std::vector<GoState> go_geodesic_ode(double kappa, const GoState& state0, double t_end,
                                     int steps);

/// Spray fiber f(y) = kappa |y| (-y2, y1).
Vec2 go_spray_fiber(double kappa, const Vec2& y);

/// N(i, j) = -1/2 d f^i / d y^j by central differences, h = 1e-5 (1 + |y|).
Mat2 go_connection(double kappa, const Vec2& y);

/// Closed-form R(d/dx1, d/dx2) = (-kappa^2 y2, kappa^2 y1).
Vec2 curvature_kappa(double kappa, const Vec2& y);

/// Curvature from finite-difference connection coefficients. Throws
/// ZeroVelocity at y = 0.
Vec2 curvature_numeric(double kappa, const Vec2& y);

struct LiftAxiomReport {
  double projection = 0.0;            // translation block vs v
  double positive_homogeneity = 0.0;  // s in (0, 2]
  double equivariance = 0.0;          // Ad of sampled rotations
  double real_homogeneity = 0.0;      // s = -1, reported separately
};

/// |evaluate(s v) - s evaluate(v)|_max.
double lift_homogeneity_residual(const HomogeneousLift& lift, const Vec2& v, double s);

/// Residuals over `samples` unit directions v.
LiftAxiomReport lift_axiom_report(const HomogeneousLift& lift, int samples,
                                  std::uint64_t seed = kDefaultSeed);

struct FirstIntegralReport {
  double max_deviation = 0.0;              // L = |v|^2
  double noninvariant_deviation = 0.0;     // L = v1, informational
};

/// Integrates random geodesics over [0, 5] and tracks |v|^2.
FirstIntegralReport go_first_integral_check(double kappa, int samples, int steps = 5000,
                                            std::uint64_t seed = kDefaultSeed);

enum class GoVerdict { Metrizable, NotInvariantMetrizable };

std::string to_string(GoVerdict v);

struct GoMetrizabilityReport {
  GoVerdict verdict = GoVerdict::Metrizable;
  double kappa = 0.0;
  double max_residual = 0.0;
  int samples = 0;
};

/// Tests d_h E = 0 for E = 1/2 |v|^2, the only E(2)-invariant candidate up
/// to scale, against the kappa-spray's horizontal distribution.
GoMetrizabilityReport go_invariant_metrizability(double kappa);

/// Projective factor (d_S F)/(2F) of F = |v| along the geodesic with initial
/// velocity v, at time t.
double go_projective_factor(double kappa, const Vec2& v, double t);

/// CSV with columns t,x1,x2,v1,v2,speed.
void write_go_csv(std::ostream& out, const std::vector<GoState>& states, double t_end);

}  // namespace liemetric

#endif  // LIEMETRIC_HOMOGENEOUS_GO_HPP
