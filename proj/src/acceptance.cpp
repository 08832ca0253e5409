#include "liemetric/acceptance.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

#include "liemetric/homogeneous_go.hpp"
#include "liemetric/lie_algebra.hpp"
#include "liemetric/metrizability.hpp"
#include "liemetric/spray_geometry.hpp"

namespace liemetric {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

CriterionResult result(int id, std::string name, bool passed, std::string detail) {
  return {id, std::move(name), passed, std::move(detail)};
}

GroupPoint identity_of(const LieAlgebra& algebra) {
  const int m = algebra.rep()->size;
  return {Matrix::Identity(m, m)};
}

GroupPoint random_group_point(const LieAlgebra& algebra, Sampler& sampler) {
  return exp_orbit(algebra, identity_of(algebra), sampler.vector(algebra.dim()), 1.0);
}

Matrix random_spd(int n, Sampler& sampler) {
  Matrix b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b(i, j) = sampler.uniform(-1.0, 1.0);
  }
  Matrix g = b * b.transpose() + 0.5 * Matrix::Identity(n, n);
  return 0.5 * (g + g.transpose());
}

// Hand-derived verdicts: abelian algebras carry every inner product; so3
// (and so3 + R) carry the standard one; heisenberg3, e2 and sl2r have an
// isotropic direction forced in every invariant form.
const std::map<std::string, Verdict>& expected_verdicts() {
  static const std::map<std::string, Verdict> table = [] {
    std::map<std::string, Verdict> t;
    for (int n = 1; n <= 6; ++n) t["abelian(" + std::to_string(n) + ")"] = Verdict::Feasible;
    t["so3"] = Verdict::Feasible;
    t["so3_plus_r"] = Verdict::Feasible;
    t["e2"] = Verdict::Infeasible;
    t["sl2r"] = Verdict::Infeasible;
    return t;
  }();
  return table;
}

CriterionResult heisenberg_verdict(std::uint64_t seed) {
  const LieAlgebra h = catalog("heisenberg3");
  const FeasibilityReport report = invariant_metrizability(h, {seed});
  bool ok = report.status == Verdict::Infeasible && report.certificate.has_value();
  double alignment = 0.0;
  double residual = 1.0;
  if (report.certificate) {
    const AlgebraElement u = report.certificate->normalized();
    alignment = std::abs(u(2));
    residual = certificate_residual(invariant_form_subspace(h), u);
    ok = ok && alignment >= 1.0 - 1e-12 && residual <= 1e-9;
  }
  return result(1, "heisenberg_verdict", ok,
                "status=" + to_string(report.status) + " |<u,e3>|=" + sci(alignment) +
                    " certificate_residual=" + sci(residual));
}

CriterionResult catalog_table(std::uint64_t seed) {
  bool ok = true;
  std::string detail;
  for (const auto& [name, expected] : expected_verdicts()) {
    const LieAlgebra algebra = catalog(name);
    const FeasibilityReport report = invariant_metrizability(algebra, {seed});
    bool row = report.status == expected;
    if (expected == Verdict::Feasible) {
      row = row && report.witness && skewness_residual(algebra, *report.witness) <= 1e-9 &&
            report.witness->lambda_min() >= 1e-6;
    }
    ok = ok && row;
    if (!row) detail += name + "=" + to_string(report.status) + " ";
  }
  return result(2, "catalog_verdict_table", ok,
                ok ? std::to_string(expected_verdicts().size()) + " algebras match" : detail);
}

CriterionResult witness_soundness(std::uint64_t seed) {
  bool ok = true;
  double worst = 0.0;
  int feasible = 0;
  for (const auto& name : catalog_names()) {
    const LieAlgebra algebra = catalog(name);
    const FeasibilityReport report = invariant_metrizability(algebra, {seed});
    if (report.status != Verdict::Feasible) continue;
    ++feasible;
    const InvariantLagrangian energy = InvariantLagrangian::quadratic_energy(report.witness->matrix());
    Sampler sampler(seed);
    for (int s = 0; s < 10000; ++s) {
      const AlgebraElement a = sampler.vector(algebra.dim());
      const AlgebraElement alpha = sampler.vector(algebra.dim());
      worst = std::max(worst, std::abs(el_residual(algebra, energy, a, alpha)));
    }
  }
  ok = feasible > 0 && worst <= 1e-9;
  return result(3, "witness_soundness", ok,
                std::to_string(feasible) + " feasible algebras, max |el_residual|=" + sci(worst));
}

CriterionResult zero_set_equivalence(std::uint64_t seed) {
  constexpr double kZero = 1e-10;
  int mismatches = 0;
  int zeros = 0;
  int total = 0;
  for (const auto& name : catalog_names()) {
    const LieAlgebra algebra = catalog(name);
    const int n = algebra.dim();
    Sampler sampler(seed);
    for (const Matrix& g : {Matrix(Matrix::Identity(n, n)), random_spd(n, sampler)}) {
      const InvariantLagrangian energy = InvariantLagrangian::quadratic_energy(g);
      const InvariantLagrangian norm = InvariantLagrangian::finsler_norm(g);
      for (int s = 0; s < 1000; ++s) {
        const AlgebraElement alpha = sampler.nonzero_vector(n, 0.1);
        // A quarter of the samples lie on the zero set by construction.
        const AlgebraElement a =
            s % 4 == 0 ? AlgebraElement(sampler.uniform(-2.0, 2.0) * alpha) : sampler.vector(n);
        if (!(energy.value(alpha) > 0.0)) continue;
        const bool el_zero = std::abs(el_residual(algebra, energy, a, alpha)) <= kZero;
        const bool rap_zero = std::abs(rapcsak_residual(algebra, norm, a, alpha)) <= kZero;
        ++total;
        zeros += el_zero ? 1 : 0;
        mismatches += el_zero != rap_zero ? 1 : 0;
      }
    }
  }
  return result(4, "zero_set_equivalence", mismatches == 0 && total > 0,
                std::to_string(total) + " samples, " + std::to_string(zeros) + " zeros, " +
                    std::to_string(mismatches) + " mismatches");
}

CriterionResult projective_rigidity(std::uint64_t seed) {
  double worst = 0.0;
  bool same = true;
  std::string differing;
  for (const auto& name : catalog_names()) {
    const LieAlgebra algebra = catalog(name);
    const int n = algebra.dim();
    Sampler sampler(seed);
    const InvariantLagrangian norm = InvariantLagrangian::finsler_norm(random_spd(n, sampler));
    for (int s = 0; s < 100; ++s) {
      const GroupPoint x = random_group_point(algebra, sampler);
      const AlgebraElement alpha = sampler.nonzero_vector(n, 0.1);
      worst = std::max(worst, std::abs(projective_factor(algebra, norm, {x, alpha})));
    }
    const Verdict plain = invariant_metrizability(algebra, {seed}).status;
    const Verdict projective = projective_metrizability(algebra, {seed}).status;
    if (plain != projective) {
      same = false;
      differing += name + " ";
    }
  }
  return result(5, "projective_rigidity", worst <= 1e-7 && same,
                "max |projective_factor|=" + sci(worst) +
                    (same ? ", verdicts coincide" : ", verdicts differ: " + differing));
}

CriterionResult sode_oracle(std::uint64_t) {
  struct Case {
    const char* name;
    std::vector<double> alpha;
  };
  double endpoint = 0.0;
  for (const Case& c : {Case{"heisenberg3", {1.0, 1.0, 0.0}}, Case{"so3", {0.0, 1.0, 0.0}}}) {
    const LieAlgebra algebra = catalog(c.name);
    const AlgebraElement alpha = Eigen::Map<const Vector>(c.alpha.data(), 3);
    const GroupPoint x0 = identity_of(algebra);
    const auto trajectory = integrate_canonical_sode(x0, algebra.rep()->of(alpha), 1.0, 1000);
    const Matrix exact = exp_orbit(algebra, x0, alpha, 1.0).matrix;
    endpoint = std::max(endpoint, (trajectory.points.back().matrix - exact).cwiseAbs().maxCoeff());
  }
  // Convergence order on so3 with a rotation of 10 rad, so every error sits
  // well above roundoff.
  const LieAlgebra so3 = catalog("so3");
  const AlgebraElement fast = 10.0 * so3.basis_vector(1);
  const GroupPoint id = identity_of(so3);
  const Matrix exact = exp_orbit(so3, id, fast, 1.0).matrix;
  std::vector<double> errors;
  for (int steps : {250, 500, 1000}) {
    const auto trajectory = integrate_canonical_sode(id, so3.rep()->of(fast), 1.0, steps);
    errors.push_back((trajectory.points.back().matrix - exact).cwiseAbs().maxCoeff());
  }
  const double order1 = std::log2(errors[0] / errors[1]);
  const double order2 = std::log2(errors[1] / errors[2]);
  const bool ok = endpoint <= 1e-8 && order1 >= 3.7 && order2 >= 3.7;
  return result(6, "sode_exponential_oracle", ok,
                "endpoint error=" + sci(endpoint) + ", observed orders " + sci(order1) + ", " +
                    sci(order2));
}

CriterionResult projector_algebra(std::uint64_t seed) {
  double worst = 0.0;
  for (const auto& name : catalog_names()) {
    const LieAlgebra algebra = catalog(name);
    const int n = algebra.dim();
    Sampler sampler(seed);
    const GroupPoint x = identity_of(algebra);
    for (int s = 0; s < 1000; ++s) {
      const AlgebraElement alpha = sampler.vector(n);
      const SecondTangentVector w{sampler.vector(n), sampler.vector(n)};
      const AlgebraElement v = vertical_apply(algebra, alpha, w);
      const SecondTangentVector h = horizontal_apply(algebra, alpha, w);
      const AlgebraElement zero = AlgebraElement::Zero(n);
      const AlgebraElement vv = vertical_apply(algebra, alpha, {zero, v});
      const SecondTangentVector hh = horizontal_apply(algebra, alpha, h);
      const AlgebraElement spray_v = vertical_apply(algebra, alpha, canonical_spray(algebra, {x, alpha}));
      for (double r : {(h.a - w.a).cwiseAbs().maxCoeff(), (h.b + v - w.b).cwiseAbs().maxCoeff(),
                       (vv - v).cwiseAbs().maxCoeff(), (hh.a - h.a).cwiseAbs().maxCoeff(),
                       (hh.b - h.b).cwiseAbs().maxCoeff(), spray_v.cwiseAbs().maxCoeff()}) {
        worst = std::max(worst, r);
      }
    }
  }
  return result(7, "projector_algebra", worst <= 1e-14, "max residual=" + sci(worst));
}

CriterionResult kappa_geodesics(std::uint64_t) {
  double oracle = 0.0;
  double drift = 0.0;
  double straight = 0.0;
  for (double kappa : {-1.0, 0.0, 0.5, 1.0, 2.0}) {
    for (double speed : {0.5, 1.0, 2.0}) {
      for (double t_end : {1.0, std::numbers::pi}) {
        const Vec2 v = speed * Vec2(0.6, 0.8);
        const auto states = go_geodesic_ode(kappa, {Vec2::Zero(), v}, t_end, 2000);
        const GoState exact = go_geodesic_exp(kappa, v, t_end);
        oracle = std::max(oracle, (states.back().position - exact.position).cwiseAbs().maxCoeff());
        oracle = std::max(oracle, (states.back().velocity - exact.velocity).cwiseAbs().maxCoeff());
        for (size_t i = 0; i < states.size(); ++i) {
          drift = std::max(drift, std::abs(states[i].velocity.norm() - speed));
          if (kappa == 0.0) {
            const double t = t_end * static_cast<double>(i) / 2000.0;
            straight = std::max(straight, (states[i].position - t * v).cwiseAbs().maxCoeff());
          }
        }
      }
    }
  }
  const Vec2 v(1.0, 0.0);
  const double gap1 = (go_geodesic_exp(1.0, -v, std::numbers::pi).position -
                       go_geodesic_exp(1.0, v, -std::numbers::pi).position)
                          .norm();
  const double gap0 = (go_geodesic_exp(0.0, -v, std::numbers::pi).position -
                       go_geodesic_exp(0.0, v, -std::numbers::pi).position)
                          .norm();
  const bool ok = oracle <= 1e-7 && drift <= 1e-9 && straight <= 1e-12 && gap1 >= 0.1 &&
                  gap0 <= 1e-10;
  return result(8, "kappa_family_geodesics", ok,
                "ode-vs-exp=" + sci(oracle) + " speed drift=" + sci(drift) + " straight=" +
                    sci(straight) + " reversal gap k=1: " + sci(gap1) + ", k=0: " + sci(gap0));
}

CriterionResult curvature(std::uint64_t) {
  double worst = 0.0;
  for (double kappa : {0.0, 1.0, 2.0}) {
    for (int i = 0; i < 8; ++i) {
      const double theta = std::numbers::pi * i / 4.0;
      const Vec2 y(std::cos(theta), std::sin(theta));
      worst = std::max(worst, (curvature_numeric(kappa, y) - curvature_kappa(kappa, y)).cwiseAbs().maxCoeff());
    }
  }
  return result(9, "curvature_formula", worst <= 1e-5, "max deviation=" + sci(worst));
}

CriterionResult go_metrizability(std::uint64_t) {
  const auto k0 = go_invariant_metrizability(0.0);
  const auto k1 = go_invariant_metrizability(1.0);
  const auto km1 = go_invariant_metrizability(-1.0);
  const bool ok = k0.verdict == GoVerdict::Metrizable &&
                  k1.verdict == GoVerdict::NotInvariantMetrizable &&
                  km1.verdict == GoVerdict::NotInvariantMetrizable;
  return result(10, "go_invariant_metrizability", ok,
                "k=0: " + to_string(k0.verdict) + ", k=1: " + to_string(k1.verdict) +
                    ", k=-1: " + to_string(km1.verdict));
}

CriterionResult lift_axioms(std::uint64_t seed) {
  double worst = 0.0;
  for (double kappa : {0.0, 1.0}) {
    const LiftAxiomReport r = lift_axiom_report(HomogeneousLift::sigma(kappa), 100, seed);
    worst = std::max({worst, r.projection, r.positive_homogeneity, r.equivariance});
  }
  const double negative =
      lift_homogeneity_residual(HomogeneousLift::sigma(1.0), Vec2(1.0, 0.0), -1.0);
  const bool ok = worst <= 1e-12 && std::abs(negative - 2.0) <= 1e-12;
  return result(11, "lift_axioms", ok,
                "axiom residual=" + sci(worst) + ", s=-1 residual=" + sci(negative));
}

CriterionResult first_integrals(std::uint64_t seed) {
  double worst = 0.0;
  for (double kappa : {0.0, 1.0}) {
    worst = std::max(worst, go_first_integral_check(kappa, 10, 5000, seed).max_deviation);
  }
  return result(12, "go_first_integral", worst <= 1e-9, "max |L(t)-L(0)|=" + sci(worst));
}

}  // namespace

std::vector<Criterion> acceptance_criteria() {
  return {
      {1, "heisenberg_verdict", heisenberg_verdict},
      {2, "catalog_verdict_table", catalog_table},
      {3, "witness_soundness", witness_soundness},
      {4, "zero_set_equivalence", zero_set_equivalence},
      {5, "projective_rigidity", projective_rigidity},
      {6, "sode_exponential_oracle", sode_oracle},
      {7, "projector_algebra", projector_algebra},
      {8, "kappa_family_geodesics", kappa_geodesics},
      {9, "curvature_formula", curvature},
      {10, "go_invariant_metrizability", go_metrizability},
      {11, "lift_axioms", lift_axioms},
      {12, "go_first_integral", first_integrals},
  };
}

std::vector<CriterionResult> run_verify(std::uint64_t seed) {
  auto run_all = [seed] {
    std::vector<CriterionResult> out;
    for (const auto& c : acceptance_criteria()) {
      try {
        out.push_back(c.run(seed));
      } catch (const std::exception& e) {
        out.push_back(result(c.id, c.name, false, std::string("exception: ") + e.what()));
      }
    }
    return out;
  };
  std::vector<CriterionResult> first = run_all();
  const std::string a = format_results(first);
  const std::string b = format_results(run_all());
  first.push_back(result(13, "determinism", a == b,
                         a == b ? "two runs byte-identical (" + std::to_string(a.size()) + " bytes)"
                                : "reports differ between runs"));
  return first;
}

std::string format_results(const std::vector<CriterionResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    char id[8];
    std::snprintf(id, sizeof(id), "%02d", r.id);
    out << (r.passed ? "[PASS] " : "[FAIL] ") << id << ' ' << r.name << ": " << r.detail << '\n';
  }
  return out.str();
}

}  // namespace liemetric
