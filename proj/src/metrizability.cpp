#include "liemetric/metrizability.hpp"

#include <cmath>
#include <limits>

#include "liemetric/errors.hpp"

namespace liemetric {

namespace {

constexpr double kJacobiTolerance = 1e-10;
constexpr double kNullTolerance = 1e-10;      // relative to sigma_max
constexpr double kIsotropicTolerance = 1e-10;
constexpr double kPdMargin = 1e-6;
constexpr double kSymmetryTolerance = 1e-14;

// Frobenius-orthonormal basis of symmetric n x n matrices.
std::vector<Matrix> symmetric_basis(int n) {
  std::vector<Matrix> basis;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int p = 0; p < n; ++p) {
    for (int q = p; q < n; ++q) {
      Matrix s = Matrix::Zero(n, n);
      if (p == q) {
        s(p, p) = 1.0;
      } else {
        s(p, q) = s(q, p) = inv_sqrt2;
      }
      basis.push_back(std::move(s));
    }
  }
  return basis;
}

// Null space of `rows` (one constraint per row, one column per symmetric
// basis element), returned as symmetric matrices.
std::vector<Matrix> null_space(const Matrix& rows, const std::vector<Matrix>& sym) {
  const auto cols = static_cast<Eigen::Index>(sym.size());
  Matrix padded = rows;
  if (padded.rows() < cols) {
    padded.conservativeResize(cols, Eigen::NoChange);
    padded.bottomRows(cols - rows.rows()).setZero();
  }
  Eigen::JacobiSVD<Matrix> svd(padded, Eigen::ComputeFullV);
  const Vector& sigma = svd.singularValues();
  const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
  std::vector<Matrix> out;
  for (Eigen::Index k = 0; k < cols; ++k) {
    if (sigma_max > 0.0 && sigma(k) >= kNullTolerance * sigma_max) continue;
    Matrix g = Matrix::Zero(sym.front().rows(), sym.front().cols());
    for (Eigen::Index s = 0; s < cols; ++s) g += svd.matrixV()(s, k) * sym[static_cast<size_t>(s)];
    out.push_back(std::move(g));
  }
  return out;
}

// Projected supgradient ascent of lambda_min over the subspace slice tr G = n.
void search_positive_definite(const std::vector<Matrix>& subspace, int n,
                              const FeasibilityOptions& options, FeasibilityReport& report) {
  const auto d = static_cast<Eigen::Index>(subspace.size());
  Vector traces(d);
  for (Eigen::Index k = 0; k < d; ++k) traces(k) = subspace[static_cast<size_t>(k)].trace();
  const double trace_norm2 = traces.squaredNorm();
  if (trace_norm2 < 1e-24) {
    // Every candidate is traceless, so none is positive definite.
    report.lambda_min_achieved = 0.0;
    report.iterations = 0;
    return;
  }
  auto assemble = [&](const Vector& c) {
    Matrix g = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < d; ++k) g += c(k) * subspace[static_cast<size_t>(k)];
    return g;
  };
  auto project = [&](const Vector& v) -> Vector {
    return v - (traces.dot(v) / trace_norm2) * traces;
  };

  const Vector center = (static_cast<double>(n) / trace_norm2) * traces;
  Sampler sampler(options.seed);
  double best_lambda = -std::numeric_limits<double>::infinity();
  Matrix best_g;
  int iterations = 0;
  for (int r = 0; r < options.restarts; ++r) {
    // Restart 0 starts at the min-norm point of the slice, the rest from
    // seeded perturbations of it.
    Vector c = center;
    if (r > 0) c += project(sampler.vector(d));
    for (int k = 1; k <= options.max_iterations; ++k) {
      ++iterations;
      const Matrix g = assemble(c);
      Eigen::SelfAdjointEigenSolver<Matrix> eig(g);
      const double lambda = eig.eigenvalues()(0);
      if (lambda > best_lambda) {
        best_lambda = lambda;
        best_g = g;
      }
      const Vector u = eig.eigenvectors().col(0);
      Vector step(d);
      for (Eigen::Index j = 0; j < d; ++j) {
        step(j) = u.dot(subspace[static_cast<size_t>(j)] * u);
      }
      step = project(step);
      const double norm = step.norm();
      if (norm < 1e-14) break;
      c += (1.0 / k) * step / norm;
    }
  }
  report.lambda_min_achieved = best_lambda;
  report.iterations = iterations;
  if (best_lambda >= kPdMargin) {
    Matrix w = 0.5 * (best_g + best_g.transpose());
    w *= static_cast<double>(n) / w.trace();
    report.witness = MetricCandidate(w);
    report.lambda_min_achieved = report.witness->lambda_min();
  }
}

FeasibilityReport decide(const std::vector<Matrix>& subspace, int n,
                         const FeasibilityOptions& options) {
  FeasibilityReport report;
  report.seed = options.seed;
  report.subspace_dim = static_cast<int>(subspace.size());
  if (subspace.empty()) {
    report.status = Verdict::Infeasible;
    report.certificate = AlgebraElement::Unit(n, 0);
    return report;
  }
  report.certificate = isotropic_certificate(subspace);
  search_positive_definite(subspace, n, options, report);
  if (report.certificate) {
    report.status = Verdict::Infeasible;
    report.witness.reset();
  } else if (report.witness) {
    report.status = Verdict::Feasible;
  } else if (report.lambda_min_achieved <= -kPdMargin || report.iterations == 0) {
    report.status = Verdict::Infeasible;
  } else {
    report.status = Verdict::Undetermined;
  }
  return report;
}

void require_valid(const LieAlgebra& algebra) {
  const double residual = jacobi_residual(algebra);
  if (residual > kJacobiTolerance) {
    throw BadAlgebra("Jacobi residual " + std::to_string(residual) + " exceeds 1e-10");
  }
}

}  // namespace

InvariantLagrangian InvariantLagrangian::quadratic_energy(const Matrix& metric) {
  return {[metric](const AlgebraElement& a) { return 0.5 * a.dot(metric * a); },
          [metric](const AlgebraElement& a) -> AlgebraElement { return metric * a; }, 2.0};
}

InvariantLagrangian InvariantLagrangian::finsler_norm(const Matrix& metric) {
  return {[metric](const AlgebraElement& a) { return std::sqrt(a.dot(metric * a)); },
          [metric](const AlgebraElement& a) -> AlgebraElement {
            const AlgebraElement ga = metric * a;
            return ga / std::sqrt(a.dot(ga));
          },
          1.0};
}

InvariantLagrangian InvariantLagrangian::from_value(
    std::function<double(const AlgebraElement&)> value, std::optional<double> degree) {
  auto gradient = [value](const AlgebraElement& a) {
    return finite_difference_gradient(value, a);
  };
  return {std::move(value), std::move(gradient), degree};
}

AlgebraElement finite_difference_gradient(const std::function<double(const AlgebraElement&)>& f,
                                          const AlgebraElement& alpha) {
  const double h = 1e-6 * (1.0 + alpha.norm());
  AlgebraElement grad(alpha.size());
  for (Eigen::Index i = 0; i < alpha.size(); ++i) {
    AlgebraElement plus = alpha, minus = alpha;
    plus(i) += h;
    minus(i) -= h;
    grad(i) = (f(plus) - f(minus)) / (2.0 * h);
  }
  return grad;
}

double gradient_consistency(const InvariantLagrangian& lagrangian, int dim, int samples,
                            std::uint64_t seed) {
  Sampler sampler(seed);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const AlgebraElement alpha = sampler.nonzero_vector(dim, 0.1);
    const AlgebraElement dir = sampler.nonzero_vector(dim).normalized();
    const double h = 1e-6 * (1.0 + alpha.norm());
    const double fd =
        (lagrangian.value(alpha + h * dir) - lagrangian.value(alpha - h * dir)) / (2.0 * h);
    const double analytic = lagrangian.gradient(alpha).dot(dir);
    const double scale = std::max({std::abs(analytic), std::abs(fd), 1e-3});
    worst = std::max(worst, std::abs(analytic - fd) / scale);
  }
  return worst;
}

MetricCandidate::MetricCandidate(Matrix g) : g_(std::move(g)) {
  if (g_.rows() != g_.cols()) throw DimensionMismatch("metric must be square");
  const double scale = std::max(1.0, g_.cwiseAbs().maxCoeff());
  if ((g_ - g_.transpose()).cwiseAbs().maxCoeff() > kSymmetryTolerance * scale) {
    throw AsymmetricInput("metric candidate is not symmetric");
  }
  eigenvalues_ = Eigen::SelfAdjointEigenSolver<Matrix>(g_, Eigen::EigenvaluesOnly).eigenvalues();
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Feasible:
      return "Feasible";
    case Verdict::Infeasible:
      return "Infeasible";
    case Verdict::Undetermined:
      return "Undetermined";
  }
  return "Undetermined";
}

double el_residual(const LieAlgebra& algebra, const InvariantLagrangian& lagrangian,
                   const AlgebraElement& a, const AlgebraElement& alpha) {
  if (lagrangian.is_finsler_type() && alpha.isZero(0.0)) {
    throw ZeroFiberPoint("1-homogeneous Lagrangian evaluated on the zero section");
  }
  const AlgebraElement ad = bracket(algebra, a, alpha);
  return lagrangian.gradient(alpha).dot(ad);
}

double rapcsak_residual(const LieAlgebra& algebra, const InvariantLagrangian& finsler,
                        const AlgebraElement& a, const AlgebraElement& alpha) {
  if (!finsler.is_finsler_type()) {
    throw InvalidArgument("Rapcsak residual needs a 1-homogeneous Lagrangian");
  }
  return el_residual(algebra, finsler, a, alpha);
}

double skewness_residual(const LieAlgebra& algebra, const Matrix& metric) {
  return skewness_residual(algebra, MetricCandidate(metric));
}

double skewness_residual(const LieAlgebra& algebra, const MetricCandidate& metric) {
  const Matrix& g = metric.matrix();
  if (g.rows() != algebra.dim()) throw DimensionMismatch("metric does not match algebra dim");
  double worst = 0.0;
  for (int i = 0; i < algebra.dim(); ++i) {
    const Matrix ad = ad_matrix(algebra, algebra.basis_vector(i));
    const Matrix sum = ad.transpose() * g + g * ad;
    worst = std::max(worst, sum.cwiseAbs().maxCoeff());
  }
  return worst;
}

std::vector<Matrix> invariant_form_subspace(const LieAlgebra& algebra) {
  const int n = algebra.dim();
  const std::vector<Matrix> sym = symmetric_basis(n);
  std::vector<Matrix> ads;
  for (int i = 0; i < n; ++i) ads.push_back(ad_matrix(algebra, algebra.basis_vector(i)));
  Matrix rows(static_cast<Eigen::Index>(n) * n * n, static_cast<Eigen::Index>(sym.size()));
  for (size_t s = 0; s < sym.size(); ++s) {
    Eigen::Index r = 0;
    for (const auto& ad : ads) {
      const Matrix block = ad.transpose() * sym[s] + sym[s] * ad;
      rows.block(r, static_cast<Eigen::Index>(s), n * n, 1) = block.reshaped();
      r += n * n;
    }
  }
  return null_space(rows, sym);
}

std::optional<AlgebraElement> isotropic_certificate(const std::vector<Matrix>& subspace) {
  if (subspace.empty()) return std::nullopt;
  const auto n = subspace.front().rows();
  for (Eigen::Index p = 0; p < n; ++p) {
    bool forced_zero = true;
    for (const auto& b : subspace) {
      if (std::abs(b(p, p)) > kIsotropicTolerance) {
        forced_zero = false;
        break;
      }
    }
    if (forced_zero) return AlgebraElement::Unit(n, p);
  }
  return std::nullopt;
}

double certificate_residual(const std::vector<Matrix>& subspace, const AlgebraElement& u) {
  double worst = 0.0;
  for (const auto& b : subspace) worst = std::max(worst, std::abs(u.dot(b * u)));
  return worst;
}

FeasibilityReport invariant_metrizability(const LieAlgebra& algebra,
                                          const FeasibilityOptions& options) {
  require_valid(algebra);
  return decide(invariant_form_subspace(algebra), algebra.dim(), options);
}

FeasibilityReport projective_metrizability(const LieAlgebra& algebra,
                                           const FeasibilityOptions& options) {
  require_valid(algebra);
  const int n = algebra.dim();
  const std::vector<Matrix> sym = symmetric_basis(n);
  // The Rapcsak residual of sqrt(alpha^T G alpha) vanishes iff
  // <G alpha, [e_i, alpha]> does; each sample gives one linear row in G.
  const int samples = 4 * static_cast<int>(sym.size()) + 8;
  Sampler sampler(options.seed ^ 0x9e3779b97f4a7c15ULL);
  Matrix rows(static_cast<Eigen::Index>(samples) * n, static_cast<Eigen::Index>(sym.size()));
  Eigen::Index r = 0;
  for (int s = 0; s < samples; ++s) {
    const AlgebraElement alpha = sampler.nonzero_vector(n, 0.1);
    for (int i = 0; i < n; ++i) {
      const AlgebraElement beta = bracket(algebra, algebra.basis_vector(i), alpha);
      for (size_t k = 0; k < sym.size(); ++k) {
        rows(r, static_cast<Eigen::Index>(k)) = alpha.dot(sym[k] * beta);
      }
      ++r;
    }
  }
  return decide(null_space(rows, sym), n, options);
}

double projective_factor_along(const InvariantLagrangian& finsler,
                               const std::function<AlgebraElement(double)>& fiber_curve,
                               double t, double dt) {
  const double f = finsler.value(fiber_curve(t));
  if (!(std::abs(f) > 0.0)) throw ZeroFinslerNorm("F vanishes at the evaluation point");
  const double derivative =
      (finsler.value(fiber_curve(t + dt)) - finsler.value(fiber_curve(t - dt))) / (2.0 * dt);
  return derivative / (2.0 * f);
}

double projective_factor(const LieAlgebra& algebra, const InvariantLagrangian& finsler,
                         const TangentState& state) {
  if (!algebra.has_rep()) throw MissingRep("projective factor needs the canonical flow");
  const MatrixRep& rep = *algebra.rep();
  const Matrix generator = rep.of(state.alpha);
  // Fiber coordinate of the flow: left logarithm of the orbit's velocity.
  auto fiber_curve = [&](double t) -> AlgebraElement {
    const Matrix m = exp_orbit(algebra, state.x, state.alpha, t).matrix;
    const Matrix velocity = m * generator;
    return rep.coordinates(m.partialPivLu().solve(velocity));
  };
  return projective_factor_along(finsler, fiber_curve, 0.0);
}

}  // namespace liemetric
