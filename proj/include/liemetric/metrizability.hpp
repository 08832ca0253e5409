#ifndef LIEMETRIC_METRIZABILITY_HPP
#define LIEMETRIC_METRIZABILITY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "liemetric/lie_algebra.hpp"
#include "liemetric/sampling.hpp"
#include "liemetric/spray_geometry.hpp"

namespace liemetric {

/// Left-invariant Lagrangian, i.e. a function of the fiber coordinate alpha
/// only. Energies (degree 2) and Finsler norms (degree 1) are the two cases
/// the library builds.
struct InvariantLagrangian {
  std::function<double(const AlgebraElement&)> value;
  std::function<AlgebraElement(const AlgebraElement&)> gradient;
  std::optional<double> homogeneity_degree;

  /// E(alpha) = 1/2 alpha^T G alpha with closed-form gradient G alpha.
  static InvariantLagrangian quadratic_energy(const Matrix& metric);

  /// F(alpha) = sqrt(alpha^T G alpha), degree 1, gradient G alpha / F.
  static InvariantLagrangian finsler_norm(const Matrix& metric);

  /// Gradient by central differences with step 1e-6 (1 + |alpha|).
  static InvariantLagrangian from_value(std::function<double(const AlgebraElement&)> value,
                                        std::optional<double> degree = std::nullopt);

  /// F-type Lagrangians are undefined on the zero section.
  bool is_finsler_type() const { return homogeneity_degree && *homogeneity_degree == 1.0; }
};

/// Central-difference gradient used by from_value().
AlgebraElement finite_difference_gradient(const std::function<double(const AlgebraElement&)>& f,
                                          const AlgebraElement& alpha);

/// Max relative disagreement between the directional derivative from
/// `gradient` and a finite difference of `value` over random samples.
double gradient_consistency(const InvariantLagrangian& lagrangian, int dim, int samples,
                            std::uint64_t seed = kDefaultSeed);

/// Symmetric bilinear form on the algebra; symmetry is exact to 1e-14
/// (AsymmetricInput otherwise).
class MetricCandidate {
 public:
  explicit MetricCandidate(Matrix g);
  const Matrix& matrix() const { return g_; }
  const Vector& eigenvalues() const { return eigenvalues_; }
  double lambda_min() const { return eigenvalues_.minCoeff(); }

 private:
  Matrix g_;
  Vector eigenvalues_;
};

enum class Verdict { Feasible, Infeasible, Undetermined };

std::string to_string(Verdict v);

struct FeasibilityReport {
  Verdict status = Verdict::Undetermined;
  std::optional<MetricCandidate> witness;
  /// Direction u != 0 with u^T G u = 0 for every G in the constraint subspace.
  std::optional<AlgebraElement> certificate;
  double lambda_min_achieved = 0.0;
  int subspace_dim = 0;
  int iterations = 0;
  std::uint64_t seed = kDefaultSeed;
};

struct FeasibilityOptions {
  std::uint64_t seed = kDefaultSeed;
  int restarts = 5;
  int max_iterations = 5000;
};

/// <grad L(alpha), [a, alpha]>; the invariant Euler-Lagrange residual.
double el_residual(const LieAlgebra& algebra, const InvariantLagrangian& lagrangian,
                   const AlgebraElement& a, const AlgebraElement& alpha);

/// Same pairing for a 1-homogeneous F, i.e. the reduced Rapcsak residual.
double rapcsak_residual(const LieAlgebra& algebra, const InvariantLagrangian& finsler,
                        const AlgebraElement& a, const AlgebraElement& alpha);

/// max_i |ad_{e_i}^T G + G ad_{e_i}|_inf.
double skewness_residual(const LieAlgebra& algebra, const MetricCandidate& metric);
double skewness_residual(const LieAlgebra& algebra, const Matrix& metric);

/// Orthonormal (Frobenius) basis of {G symmetric : ad_{e_i}^T G + G ad_{e_i} = 0}.
std::vector<Matrix> invariant_form_subspace(const LieAlgebra& algebra);

/// Unit basis direction e_p with G_pp = 0 for every G in `subspace`, if any.
std::optional<AlgebraElement> isotropic_certificate(const std::vector<Matrix>& subspace);

/// max_k |u^T B_k u| over the subspace basis.
double certificate_residual(const std::vector<Matrix>& subspace, const AlgebraElement& u);

/// Decides whether a scalar product with every ad_a skew-adjoint exists.
/// This one decision covers left-invariant Riemann, Finsler, projective
/// Riemann and projective Finsler metrizability of the canonical spray.
/// Throws BadAlgebra if the Jacobi residual exceeds 1e-10.
FeasibilityReport invariant_metrizability(const LieAlgebra& algebra,
                                          const FeasibilityOptions& options = {});

/// Projective route: assembles the constraints from sampled Rapcsak
/// residuals of F = sqrt(alpha^T G alpha) instead of the polarized linear
/// system, then runs the same positive-definite search.
FeasibilityReport projective_metrizability(const LieAlgebra& algebra,
                                           const FeasibilityOptions& options = {});

/// (d_S F) / (2F) at a state, with d_S F a central difference of F along the
/// canonical flow (dt = 1e-6). Throws ZeroFinslerNorm if F(alpha) == 0.
double projective_factor(const LieAlgebra& algebra, const InvariantLagrangian& finsler,
                         const TangentState& state);

/// Same quotient along an arbitrary fiber curve t -> y(t), at t.
double projective_factor_along(const InvariantLagrangian& finsler,
                               const std::function<AlgebraElement(double)>& fiber_curve,
                               double t, double dt = 1e-6);

}  // namespace liemetric

#endif  // LIEMETRIC_METRIZABILITY_HPP
