#ifndef LIEMETRIC_SPRAY_GEOMETRY_HPP
#define LIEMETRIC_SPRAY_GEOMETRY_HPP

#include <functional>
#include <iosfwd>
#include <vector>

#include "liemetric/lie_algebra.hpp"
#include "liemetric/sampling.hpp"

namespace liemetric {

/// Element of the represented group, stored as its matrix.
struct GroupPoint {
  Matrix matrix;
};

/// Point (x, alpha) of TG in the left trivialization TG = G x g.
struct TangentState {
  GroupPoint x;
  AlgebraElement alpha;
};

/// Vector tangent to TG at (x, alpha). The base slot holds the left
/// logarithm `a`, so the actual base component is the left translate x*a;
/// `b` is the fiber component.
struct SecondTangentVector {
  AlgebraElement a;
  AlgebraElement b;
};

struct GeodesicTrajectory {
  std::vector<double> times;
  std::vector<GroupPoint> points;
  std::vector<Matrix> velocities;
};

/// Base curve together with the fiber coordinates along it.
struct FiberFlowTrajectory {
  GeodesicTrajectory base;
  std::vector<AlgebraElement> alphas;
};

using FiberField = std::function<AlgebraElement(const AlgebraElement&)>;
using ScalarFiberFunction = std::function<double(const AlgebraElement&)>;

/// Canonical spray at (x, alpha): base velocity the left translate of alpha,
/// no fiber component. Requires a representation (MissingRep).
SecondTangentVector canonical_spray(const LieAlgebra& algebra, const TangentState& state);

/// Matrix of the base component x * rep(w.a).
Matrix base_velocity(const LieAlgebra& algebra, const TangentState& state,
                     const SecondTangentVector& w);

/// True when some power X^k, k <= size, vanishes.
bool is_nilpotent(const Matrix& x);

/// Matrix exponential. Nilpotent inputs use the terminating power series,
/// everything else scaling and squaring.
Matrix matrix_exp(const Matrix& x);

/// x0 * exp(t rep(alpha)).
GroupPoint exp_orbit(const LieAlgebra& algebra, const GroupPoint& x0,
                     const AlgebraElement& alpha, double t);

/// Classical RK4 on M'' = M' M^-1 M' with `steps` fixed steps over [0, t_end].
/// Throws SingularMatrix when |det M| < 1e-12 at a stage.
GeodesicTrajectory integrate_canonical_sode(const GroupPoint& x0, const Matrix& v0,
                                            double t_end, int steps);

/// Fiber component of v(w) at alpha: 1/2 [w.a, alpha] + w.b.
AlgebraElement vertical_apply(const LieAlgebra& algebra, const AlgebraElement& alpha,
                              const SecondTangentVector& w);

/// h(w) at alpha: (w.a, -1/2 [w.a, alpha]).
SecondTangentVector horizontal_apply(const LieAlgebra& algebra, const AlgebraElement& alpha,
                                     const SecondTangentVector& w);

/// Max over random alpha in [-1,1]^dim and s in (0, 2] of
/// |f(s alpha) - s^degree f(alpha)| / (|f(alpha)| + 1e-30).
double homogeneity_check(const ScalarFiberFunction& f, double degree, int dim,
                         int samples, std::uint64_t seed = kDefaultSeed);

/// Fiber coefficients f(alpha) - 2 P(alpha) alpha of the projectively
/// deformed spray.
AlgebraElement projective_deform(const FiberField& fiber, const ScalarFiberFunction& factor,
                                 const AlgebraElement& alpha);

/// RK4 on x' = x rep(alpha), alpha' = fiber(alpha). With fiber == 0 this is
/// the canonical flow.
FiberFlowTrajectory integrate_fiber_flow(const LieAlgebra& algebra, const GroupPoint& x0,
                                         const AlgebraElement& alpha0, const FiberField& fiber,
                                         double t_end, int steps);

/// CSV with header t,x_11..x_mm,v_11..v_mm, row-major, 17 significant digits.
void write_trajectory_csv(std::ostream& out, const GeodesicTrajectory& trajectory);

}  // namespace liemetric

#endif  // LIEMETRIC_SPRAY_GEOMETRY_HPP
