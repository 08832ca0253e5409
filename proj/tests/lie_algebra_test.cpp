#include "liemetric/lie_algebra.hpp"

#include <gtest/gtest.h>

#include "liemetric/errors.hpp"
#include "liemetric/sampling.hpp"

using namespace liemetric;  // NOLINT

namespace {

Matrix unit(int m, int r, int c) {
  Matrix e = Matrix::Zero(m, m);
  e(r, c) = 1.0;
  return e;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

AlgebraElement e(int n, int i) { return AlgebraElement::Unit(n, i); }

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Bracket, AbelianVanishes) {
  const LieAlgebra a = catalog("abelian(3)");
  EXPECT_EQ(max_abs(bracket(a, e(3, 0), e(3, 1))), 0.0);
}

TEST(Bracket, HeisenbergMatchesMatrixCommutator) {
  // Oracle: commutator of strictly upper triangular matrices E12, E23 is E13.
  const Matrix comm = commutator(unit(3, 0, 1), unit(3, 1, 2));
  ASSERT_EQ(max_abs(comm - unit(3, 0, 2)), 0.0);
  const LieAlgebra h = catalog("heisenberg3");
  EXPECT_LE(max_abs(bracket(h, e(3, 0), e(3, 1)) - e(3, 2)), 1e-14);
}

TEST(Bracket, So3IsCrossProduct) {
  const LieAlgebra so3 = catalog("so3");
  EXPECT_LE(max_abs(bracket(so3, e(3, 0), e(3, 1)) - e(3, 2)), 1e-14);
  Sampler sampler(7);
  for (int s = 0; s < 50; ++s) {
    const Eigen::Vector3d x = sampler.vector(3), y = sampler.vector(3);
    const AlgebraElement expected = x.cross(y);
    EXPECT_LE(max_abs(bracket(so3, x, y) - expected), 1e-14);
  }
}

TEST(Bracket, DimensionMismatchThrows) {
  const LieAlgebra so3 = catalog("so3");
  EXPECT_THROW(bracket(so3, e(2, 0), e(3, 0)), DimensionMismatch);
  EXPECT_THROW(ad_matrix(so3, e(4, 0)), DimensionMismatch);
}

TEST(Jacobi, ExactAlgebras) {
  EXPECT_EQ(jacobi_residual(catalog("abelian(4)")), 0.0);
  EXPECT_LE(jacobi_residual(catalog("so3")), 1e-14);
  for (const auto& name : catalog_names()) {
    EXPECT_LE(jacobi_residual(catalog(name)), 1e-12) << name;
  }
}

TEST(Jacobi, PerturbedSo3) {
  // [e1,e2] = 1.1 e3 keeps the bracket of the form M (x cross y) with M
  // symmetric, which always satisfies Jacobi in dimension 3.
  const std::vector<BracketEntry> scaled{{0, 1, 2, 1.1}, {1, 2, 0, 1.0}, {0, 2, 1, -1.0}};
  EXPECT_LE(jacobi_residual(from_brackets(3, scaled)), 1e-15);

  // [e1,e2] = e3 + 0.1 e1: cyclic sum on (e1,e2,e3) is 0.1 [e1,e3] = -0.1 e2,
  // and triples with a repeated index cancel by antisymmetry.
  const std::vector<BracketEntry> skewed{
      {0, 1, 2, 1.0}, {0, 1, 0, 0.1}, {1, 2, 0, 1.0}, {0, 2, 1, -1.0}};
  EXPECT_NEAR(jacobi_residual(from_brackets(3, skewed)), 0.1, 1e-15);
}

TEST(AdMatrix, Examples) {
  EXPECT_EQ(max_abs(ad_matrix(catalog("abelian(4)"), AlgebraElement::Constant(4, 0.7))), 0.0);

  Matrix heis = Matrix::Zero(3, 3);
  heis(2, 1) = 1.0;  // e2 -> e3
  EXPECT_LE(max_abs(ad_matrix(catalog("heisenberg3"), e(3, 0)) - heis), 1e-14);

  Matrix rot = Matrix::Zero(3, 3);
  rot(1, 0) = 1.0;   // e1 -> e2
  rot(0, 1) = -1.0;  // e2 -> -e1
  EXPECT_LE(max_abs(ad_matrix(catalog("so3"), e(3, 2)) - rot), 1e-14);
}

TEST(FromMatrixRep, E2BlockMatrices) {
  Matrix j = Matrix::Zero(3, 3);
  j(1, 0) = 1.0;
  j(0, 1) = -1.0;
  const Matrix p1 = unit(3, 0, 2), p2 = unit(3, 1, 2);
  // Oracle: the explicit 3x3 commutators.
  ASSERT_EQ(max_abs(commutator(j, p1) - p2), 0.0);
  ASSERT_EQ(max_abs(commutator(j, p2) + p1), 0.0);
  ASSERT_EQ(max_abs(commutator(p1, p2)), 0.0);

  const LieAlgebra g = from_matrix_rep({p1, p2, j});
  EXPECT_LE(max_abs(bracket(g, e(3, 2), e(3, 0)) - e(3, 1)), 1e-12);
  EXPECT_LE(max_abs(bracket(g, e(3, 2), e(3, 1)) + e(3, 0)), 1e-12);
  EXPECT_LE(max_abs(bracket(g, e(3, 0), e(3, 1))), 1e-12);
}

TEST(FromMatrixRep, CommutingDiagonalsGiveAbelian) {
  Matrix d1 = Matrix::Zero(3, 3), d2 = Matrix::Zero(3, 3);
  d1.diagonal() << 1.0, 2.0, 3.0;
  d2.diagonal() << -1.0, 0.0, 5.0;
  const LieAlgebra a = from_matrix_rep({d1, d2});
  EXPECT_EQ(a.dim(), 2);
  EXPECT_EQ(a.max_abs_constant(), 0.0);
}

TEST(FromMatrixRep, UpperTriangularGivesHeisenberg) {
  const LieAlgebra a = from_matrix_rep({unit(3, 0, 1), unit(3, 1, 2), unit(3, 0, 2)});
  const LieAlgebra h = catalog("heisenberg3");
  for (size_t i = 0; i < a.constants().size(); ++i) {
    EXPECT_NEAR(a.constants()[i], h.constants()[i], 1e-12);
  }
}

TEST(FromMatrixRep, Errors) {
  EXPECT_THROW(from_matrix_rep({unit(2, 0, 1), 2.0 * unit(2, 0, 1)}), LinearDependence);
  // span{E12, E21} is not closed: the commutator is diag(1, -1).
  EXPECT_THROW(from_matrix_rep({unit(2, 0, 1), unit(2, 1, 0)}), NotClosed);
}

TEST(Catalog, Entries) {
  const LieAlgebra g = catalog("e2");
  EXPECT_EQ(g.dim(), 3);
  EXPECT_EQ(g.labels(), (std::vector<std::string>{"P1", "P2", "J"}));
  EXPECT_DOUBLE_EQ(g.c(2, 0, 1), 1.0);   // [J,P1] = P2
  EXPECT_DOUBLE_EQ(g.c(2, 1, 0), -1.0);  // [J,P2] = -P1

  const LieAlgebra a5 = catalog("abelian(5)");
  EXPECT_EQ(a5.dim(), 5);
  EXPECT_EQ(a5.max_abs_constant(), 0.0);

  const LieAlgebra h = catalog("heisenberg3");
  int nonzero = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) nonzero += h.c(i, j, k) != 0.0 ? 1 : 0;
    }
  }
  EXPECT_EQ(nonzero, 1);
  EXPECT_DOUBLE_EQ(h.c(0, 1, 2), 1.0);

  const LieAlgebra sl2 = catalog("sl2r");
  EXPECT_DOUBLE_EQ(sl2.c(0, 1, 1), 2.0);   // [H,E] = 2E
  EXPECT_DOUBLE_EQ(sl2.c(0, 2, 2), -2.0);  // [H,F] = -2F
  EXPECT_DOUBLE_EQ(sl2.c(1, 2, 0), 1.0);   // [E,F] = H
}

TEST(Catalog, UnknownNames) {
  for (const char* bad : {"so4", "abelian(0)", "abelian()", "abelian(x)", "abelian(3"}) {
    EXPECT_THROW(catalog(bad), UnknownName) << bad;
  }
}

TEST(LieAlgebra, ConstructionAntisymmetrizes) {
  std::vector<double> c(8, 0.0);
  c[(0 * 2 + 1) * 2 + 1] = 3.0;  // only [e1,e2] = 3 e2 given, [e2,e1] left 0
  const LieAlgebra a(2, c);
  EXPECT_DOUBLE_EQ(a.c(0, 1, 1), 1.5);
  EXPECT_DOUBLE_EQ(a.c(1, 0, 1), -1.5);
  EXPECT_THROW(LieAlgebra(2, std::vector<double>(7, 0.0)), DimensionMismatch);
}

TEST(LieAlgebra, InconsistentRepRejected) {
  const LieAlgebra h = catalog("heisenberg3");
  EXPECT_THROW(from_brackets(3, {{0, 1, 2, 2.0}}, {}, h.rep()), NotClosed);
}

TEST(LieAlgebraProperties, BracketAntisymmetry) {
  for (const auto& name : catalog_names()) {
    const LieAlgebra a = catalog(name);
    Sampler sampler(1);
    for (int s = 0; s < 100; ++s) {
      const AlgebraElement x = sampler.vector(a.dim()), y = sampler.vector(a.dim());
      EXPECT_LE(max_abs(bracket(a, x, y) + bracket(a, y, x)), 1e-14) << name;
    }
  }
}

TEST(LieAlgebraProperties, AdMatchesBracket) {
  for (const auto& name : catalog_names()) {
    const LieAlgebra a = catalog(name);
    Sampler sampler(2);
    for (int s = 0; s < 100; ++s) {
      const AlgebraElement x = sampler.vector(a.dim()), y = sampler.vector(a.dim());
      EXPECT_LE(max_abs(ad_matrix(a, x) * y - bracket(a, x, y)), 1e-14) << name;
    }
  }
}

TEST(LieAlgebraProperties, RepRoundTrip) {
  for (const auto& name : catalog_names()) {
    const LieAlgebra a = catalog(name);
    ASSERT_TRUE(a.has_rep()) << name;
    const LieAlgebra b = from_matrix_rep(a.rep()->basis);
    for (size_t i = 0; i < a.constants().size(); ++i) {
      EXPECT_NEAR(a.constants()[i], b.constants()[i], 1e-10) << name;
    }
    const RepResiduals r = rep_residuals(a);
    EXPECT_LE(r.closure, 1e-10) << name;
    EXPECT_LE(r.consistency, 1e-10) << name;
  }
}

TEST(LieAlgebraProperties, ScaledConstants) {
  const LieAlgebra so3 = catalog("so3").scaled(2.0);
  EXPECT_DOUBLE_EQ(so3.c(0, 1, 2), 2.0);
  EXPECT_LE(rep_residuals(so3).consistency, 1e-10);
}
