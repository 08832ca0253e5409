#include "liemetric/lie_algebra.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "liemetric/errors.hpp"

namespace liemetric {

namespace {

constexpr double kRepTolerance = 1e-10;

void require_dim(const LieAlgebra& algebra, const AlgebraElement& x,
                 const char* what) {
  if (x.size() != algebra.dim()) {
    throw DimensionMismatch(std::string(what) + " has " +
                            std::to_string(x.size()) + " coordinates, algebra has dim " +
                            std::to_string(algebra.dim()));
  }
}

Matrix stacked_basis(const std::vector<Matrix>& basis, int size) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  Matrix stacked(size * size, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    stacked.col(i) = basis[static_cast<size_t>(i)].reshaped();
  }
  return stacked;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

std::vector<std::string> default_labels(int dim) {
  std::vector<std::string> labels;
  for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
  return labels;
}

Matrix unit(int m, int row, int col) {
  Matrix e = Matrix::Zero(m, m);
  e(row, col) = 1.0;
  return e;
}

}  // namespace

Matrix MatrixRep::of(const AlgebraElement& x) const {
  if (x.size() != static_cast<Eigen::Index>(basis.size())) {
    throw DimensionMismatch("element has " + std::to_string(x.size()) +
                            " coordinates, representation has " +
                            std::to_string(basis.size()) + " basis matrices");
  }
  Matrix m = Matrix::Zero(size, size);
  for (size_t i = 0; i < basis.size(); ++i) m += x(static_cast<Eigen::Index>(i)) * basis[i];
  return m;
}

AlgebraElement MatrixRep::coordinates(const Matrix& m, double* residual) const {
  const Matrix stacked = stacked_basis(basis, size);
  const Vector target = m.reshaped();
  // Normal equations; LDLT pivots.
  const Matrix gram = stacked.transpose() * stacked;
  AlgebraElement x = gram.ldlt().solve(stacked.transpose() * target);
  if (residual != nullptr) {
    *residual = (stacked * x - target).cwiseAbs().maxCoeff();
  }
  return x;
}

LieAlgebra::LieAlgebra(int dim, std::vector<double> constants,
                       std::vector<std::string> labels,
                       std::optional<MatrixRep> rep)
    : dim_(dim), constants_(std::move(constants)), labels_(std::move(labels)),
      rep_(std::move(rep)) {
  if (dim_ <= 0) throw InvalidArgument("dimension must be positive");
  const auto n = static_cast<size_t>(dim_);
  if (constants_.size() != n * n * n) {
    throw DimensionMismatch("expected " + std::to_string(n * n * n) +
                            " structure constants, got " +
                            std::to_string(constants_.size()));
  }
  if (labels_.empty()) labels_ = default_labels(dim_);
  if (labels_.size() != n) {
    throw DimensionMismatch("expected " + std::to_string(n) + " labels");
  }
  auto at = [&](int i, int j, int k) -> double& {
    return constants_[static_cast<size_t>((i * dim_ + j) * dim_ + k)];
  };
  for (int i = 0; i < dim_; ++i) {
    for (int j = i; j < dim_; ++j) {
      for (int k = 0; k < dim_; ++k) {
        const double v = 0.5 * (at(i, j, k) - at(j, i, k));
        at(i, j, k) = v;
        at(j, i, k) = -v;
      }
    }
  }
  if (rep_) {
    if (rep_->basis.size() != n) {
      throw DimensionMismatch("representation has " + std::to_string(rep_->basis.size()) +
                              " matrices for an algebra of dim " + std::to_string(dim_));
    }
    for (const auto& e : rep_->basis) {
      if (e.rows() != rep_->size || e.cols() != rep_->size) {
        throw DimensionMismatch("representation matrix is not " +
                                std::to_string(rep_->size) + "x" + std::to_string(rep_->size));
      }
    }
    const RepResiduals r = rep_residuals(*this);
    const double scale = std::max(1.0, max_abs_constant());
    if (r.closure > kRepTolerance * scale) {
      throw NotClosed("commutator leaves the span of the representation by " +
                      std::to_string(r.closure));
    }
    if (r.consistency > kRepTolerance * scale) {
      throw NotClosed("representation induces different structure constants (off by " +
                      std::to_string(r.consistency) + ")");
    }
  }
}

double LieAlgebra::max_abs_constant() const {
  double m = 0.0;
  for (double v : constants_) m = std::max(m, std::abs(v));
  return m;
}

LieAlgebra LieAlgebra::scaled(double s) const {
  std::vector<double> c = constants_;
  for (double& v : c) v *= s;
  std::optional<MatrixRep> rep = rep_;
  if (rep) {
    for (auto& e : rep->basis) e *= s;
  }
  return LieAlgebra(dim_, std::move(c), labels_, std::move(rep));
}

AlgebraElement LieAlgebra::basis_vector(int i) const {
  return AlgebraElement::Unit(dim_, i);
}

LieAlgebra from_brackets(int dim, const std::vector<BracketEntry>& entries,
                         std::vector<std::string> labels,
                         std::optional<MatrixRep> rep) {
  if (dim <= 0) throw InvalidArgument("dimension must be positive");
  const auto n = static_cast<size_t>(dim);
  std::vector<double> c(n * n * n, 0.0);
  for (const auto& e : entries) {
    if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= dim || e.j >= dim || e.k >= dim) {
      throw DimensionMismatch("bracket index out of range");
    }
    if (e.i == e.j) {
      if (e.value != 0.0) throw InvalidArgument("[e_i, e_i] must vanish");
      continue;
    }
    c[static_cast<size_t>((e.i * dim + e.j) * dim + e.k)] = e.value;
    c[static_cast<size_t>((e.j * dim + e.i) * dim + e.k)] = -e.value;
  }
  return LieAlgebra(dim, std::move(c), std::move(labels), std::move(rep));
}

AlgebraElement bracket(const LieAlgebra& algebra, const AlgebraElement& x,
                       const AlgebraElement& y) {
  require_dim(algebra, x, "x");
  require_dim(algebra, y, "y");
  const int n = algebra.dim();
  AlgebraElement out = AlgebraElement::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (x(i) == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      if (y(j) == 0.0) continue;
      const double xy = x(i) * y(j);
      for (int k = 0; k < n; ++k) out(k) += algebra.c(i, j, k) * xy;
    }
  }
  return out;
}

double jacobi_residual(const LieAlgebra& algebra) {
  const int n = algebra.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const AlgebraElement ei = algebra.basis_vector(i);
    for (int j = 0; j < n; ++j) {
      const AlgebraElement ej = algebra.basis_vector(j);
      for (int k = 0; k < n; ++k) {
        const AlgebraElement ek = algebra.basis_vector(k);
        const AlgebraElement cyclic = bracket(algebra, bracket(algebra, ei, ej), ek) +
                                      bracket(algebra, bracket(algebra, ej, ek), ei) +
                                      bracket(algebra, bracket(algebra, ek, ei), ej);
        worst = std::max(worst, cyclic.cwiseAbs().maxCoeff());
      }
    }
  }
  return worst;
}

Matrix ad_matrix(const LieAlgebra& algebra, const AlgebraElement& a) {
  require_dim(algebra, a, "a");
  const int n = algebra.dim();
  Matrix ad = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (a(i) == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) ad(k, j) += algebra.c(i, j, k) * a(i);
    }
  }
  return ad;
}

RepResiduals rep_residuals(const LieAlgebra& algebra) {
  RepResiduals r;
  if (!algebra.has_rep()) return r;
  const MatrixRep& rep = *algebra.rep();
  const int n = algebra.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& ei = rep.basis[static_cast<size_t>(i)];
      const auto& ej = rep.basis[static_cast<size_t>(j)];
      const Matrix comm = ei * ej - ej * ei;
      double closure = 0.0;
      const AlgebraElement coeffs = rep.coordinates(comm, &closure);
      r.closure = std::max(r.closure, closure);
      for (int k = 0; k < n; ++k) {
        r.consistency = std::max(r.consistency, std::abs(coeffs(k) - algebra.c(i, j, k)));
      }
    }
  }
  return r;
}

LieAlgebra from_matrix_rep(const std::vector<Matrix>& mats,
                           std::vector<std::string> labels) {
  if (mats.empty()) throw InvalidArgument("empty matrix list");
  const auto m = static_cast<int>(mats.front().rows());
  double scale = 0.0;
  for (const auto& e : mats) {
    if (e.rows() != m || e.cols() != m) {
      throw DimensionMismatch("representation matrices must all be square of the same size");
    }
    scale = std::max(scale, max_abs(e));
  }
  const int n = static_cast<int>(mats.size());
  const Matrix stacked = stacked_basis(mats, m);
  Eigen::ColPivHouseholderQR<Matrix> qr(stacked);
  qr.setThreshold(1e-12);
  if (qr.rank() < n) {
    throw LinearDependence("basis matrices span only " + std::to_string(qr.rank()) +
                           " dimensions, expected " + std::to_string(n));
  }
  MatrixRep rep{m, mats};
  const double tol = kRepTolerance * std::max(1.0, scale * scale);
  std::vector<double> c(static_cast<size_t>(n * n * n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Matrix comm = mats[static_cast<size_t>(i)] * mats[static_cast<size_t>(j)] -
                          mats[static_cast<size_t>(j)] * mats[static_cast<size_t>(i)];
      double residual = 0.0;
      const AlgebraElement coeffs = rep.coordinates(comm, &residual);
      if (residual > tol) {
        throw NotClosed("[E" + std::to_string(i + 1) + ", E" + std::to_string(j + 1) +
                        "] leaves the span (residual " + std::to_string(residual) + ")");
      }
      for (int k = 0; k < n; ++k) {
        c[static_cast<size_t>((i * n + j) * n + k)] = coeffs(k);
        c[static_cast<size_t>((j * n + i) * n + k)] = -coeffs(k);
      }
    }
  }
  return LieAlgebra(n, std::move(c), std::move(labels), std::move(rep));
}

LieAlgebra catalog(std::string_view name) {
  if (name == "heisenberg3") {
    // Strictly upper triangular 3x3: e1 = E12, e2 = E23, e3 = E13.
    return from_matrix_rep({unit(3, 0, 1), unit(3, 1, 2), unit(3, 0, 2)}, {"e1", "e2", "e3"});
  }
  if (name == "so3") {
    Matrix l1 = Matrix::Zero(3, 3), l2 = Matrix::Zero(3, 3), l3 = Matrix::Zero(3, 3);
    l1(2, 1) = 1.0;
    l1(1, 2) = -1.0;
    l2(0, 2) = 1.0;
    l2(2, 0) = -1.0;
    l3(1, 0) = 1.0;
    l3(0, 1) = -1.0;
    return from_matrix_rep({l1, l2, l3}, {"e1", "e2", "e3"});
  }
  if (name == "sl2r") {
    Matrix h = Matrix::Zero(2, 2);
    h(0, 0) = 1.0;
    h(1, 1) = -1.0;
    return from_matrix_rep({h, unit(2, 0, 1), unit(2, 1, 0)}, {"H", "E", "F"});
  }
  if (name == "e2") {
    // Translations P1 = E13, P2 = E23 and the rotation generator J.
    Matrix j = Matrix::Zero(3, 3);
    j(1, 0) = 1.0;
    j(0, 1) = -1.0;
    return from_matrix_rep({unit(3, 0, 2), unit(3, 1, 2), j}, {"P1", "P2", "J"});
  }
  if (name == "so3_plus_r") {
    const LieAlgebra so3 = catalog("so3");
    std::vector<Matrix> mats;
    for (const auto& e : so3.rep()->basis) {
      Matrix big = Matrix::Zero(4, 4);
      big.topLeftCorner(3, 3) = e;
      mats.push_back(big);
    }
    mats.push_back(unit(4, 3, 3));
    return from_matrix_rep(mats, {"e1", "e2", "e3", "z"});
  }
  constexpr std::string_view prefix = "abelian(";
  if (name.substr(0, prefix.size()) == prefix && name.size() > prefix.size() + 1 &&
      name.back() == ')') {
    const std::string_view digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    int n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 1) {
      std::vector<Matrix> mats;
      for (int i = 0; i < n; ++i) mats.push_back(unit(n, i, i));
      return from_matrix_rep(mats);
    }
  }
  throw UnknownName("no catalog algebra named '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (int n = 1; n <= 6; ++n) names.push_back("abelian(" + std::to_string(n) + ")");
  for (const char* s : {"heisenberg3", "so3", "sl2r", "e2", "so3_plus_r"}) names.emplace_back(s);
  return names;
}

}  // namespace liemetric
