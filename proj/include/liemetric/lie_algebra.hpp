#ifndef LIEMETRIC_LIE_ALGEBRA_HPP
#define LIEMETRIC_LIE_ALGEBRA_HPP

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace liemetric {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Coordinates of a Lie algebra element in the algebra's basis.
using AlgebraElement = Eigen::VectorXd;

/// Faithful matrix representation: one m x m matrix per basis element.
struct MatrixRep {
  int size = 0;
  std::vector<Matrix> basis;

  /// Sum_i x^i E_i.
  Matrix of(const AlgebraElement& x) const;

  /// Least-squares coordinates of `m` in span{E_i}; `residual` receives the
  /// max-abs reconstruction error when non-null.
  AlgebraElement coordinates(const Matrix& m, double* residual = nullptr) const;
};

/// Finite-dimensional real Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c(i,j,k) e_k.
///
/// The constants are stored for every (i, j) and antisymmetrized on
/// construction, so c(i,j,k) == -c(j,i,k) holds exactly. The Jacobi identity
/// is not enforced here; see jacobi_residual().
class LieAlgebra {
 public:
  /// `constants` has dim^3 entries, index (i*dim + j)*dim + k.
  /// An attached representation is checked for closure and for agreement
  /// with the constants (NotClosed on failure).
  LieAlgebra(int dim, std::vector<double> constants,
             std::vector<std::string> labels = {},
             std::optional<MatrixRep> rep = std::nullopt);

  int dim() const { return dim_; }
  double c(int i, int j, int k) const {
    return constants_[static_cast<size_t>((i * dim_ + j) * dim_ + k)];
  }
  const std::vector<double>& constants() const { return constants_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::optional<MatrixRep>& rep() const { return rep_; }
  bool has_rep() const { return rep_.has_value(); }
  double max_abs_constant() const;

  /// Same basis, constants multiplied by s (the representation is scaled
  /// accordingly, which realizes the same change).
  LieAlgebra scaled(double s) const;

  AlgebraElement basis_vector(int i) const;

 private:
  int dim_;
  std::vector<double> constants_;
  std::vector<std::string> labels_;
  std::optional<MatrixRep> rep_;
};

/// Entry of a bracket table, 0-based: [e_i, e_j] has coefficient `value` on e_k.
struct BracketEntry {
  int i;
  int j;
  int k;
  double value;
};

/// Builds an algebra from a bracket table listing only i < j (the
/// antisymmetric partner is filled in).
LieAlgebra from_brackets(int dim, const std::vector<BracketEntry>& entries,
                         std::vector<std::string> labels = {},
                         std::optional<MatrixRep> rep = std::nullopt);

AlgebraElement bracket(const LieAlgebra& algebra, const AlgebraElement& x,
                       const AlgebraElement& y);

/// Max over basis triples of the infinity norm of the cyclic Jacobi sum.
double jacobi_residual(const LieAlgebra& algebra);

/// Matrix of alpha -> [a, alpha]: (ad_a)(k, j) = sum_i c(i,j,k) a^i.
Matrix ad_matrix(const LieAlgebra& algebra, const AlgebraElement& a);

struct RepResiduals {
  double closure = 0.0;      // commutators outside span{E_k}
  double consistency = 0.0;  // induced constants vs stored constants
};

RepResiduals rep_residuals(const LieAlgebra& algebra);

/// Structure constants induced by a list of linearly independent matrices
/// closed under the commutator. Throws LinearDependence / NotClosed.
LieAlgebra from_matrix_rep(const std::vector<Matrix>& mats,
                           std::vector<std::string> labels = {});

/// Named algebras: abelian(n), heisenberg3, so3, sl2r, e2, so3_plus_r.
LieAlgebra catalog(std::string_view name);

/// Every catalog entry exercised by the test suites, abelian(1..6) included.
std::vector<std::string> catalog_names();

}  // namespace liemetric

#endif  // LIEMETRIC_LIE_ALGEBRA_HPP
