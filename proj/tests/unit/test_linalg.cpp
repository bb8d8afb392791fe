#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sgevp/error.hpp"
#include "sgevp/linalg.hpp"

namespace {

using namespace sgevp;

TEST(SymMatrix, SymmetrizesOnConstruction) {
  Matrix m(2, 2);
  m << 1, 2, 4, 3;
  const SymMatrix s(m);
  EXPECT_EQ(s(0, 1), 3.0);
  EXPECT_EQ(s(1, 0), 3.0);
}

TEST(SymMatrix, RejectsNonSquareAndEmpty) {
  EXPECT_THROW(SymMatrix(Matrix(2, 3)), Error);
  EXPECT_THROW(SymMatrix(Matrix(0, 0)), Error);
}

TEST(SymEig, DiagonalValuesAscending) {
  const EigDecomposition e = sym_eig(SymMatrix::diagonal(Vector::Map(std::vector<double>{3, 1, 2}.data(), 3)));
  EXPECT_NEAR(e.values(0), 1.0, 1e-14);
  EXPECT_NEAR(e.values(1), 2.0, 1e-14);
  EXPECT_NEAR(e.values(2), 3.0, 1e-14);
}

TEST(SymEig, IdentityHasUnitValues) {
  const EigDecomposition e = sym_eig(SymMatrix::identity(3));
  for (Index i = 0; i < 3; ++i) EXPECT_NEAR(e.values(i), 1.0, 1e-15);
  EXPECT_LE((e.vectors.transpose() * e.vectors - Matrix::Identity(3, 3)).norm(), 3e-10);
}

TEST(SymEig, ReconstructionAndOrthogonality) {
  oracle::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix m = oracle::random_symmetric(5, rng);
    const EigDecomposition e = sym_eig(SymMatrix(m));
    const Matrix rebuilt = e.vectors * e.values.asDiagonal() * e.vectors.transpose();
    EXPECT_LE((rebuilt - m).norm(), 1e-8 * m.norm());
    EXPECT_LE((e.vectors.transpose() * e.vectors - Matrix::Identity(5, 5)).norm(), 5e-10);
    for (Index i = 1; i < 5; ++i) EXPECT_LE(e.values(i - 1), e.values(i));
  }
}

TEST(SymEig, NonFiniteThrows) {
  Matrix m = Matrix::Identity(2, 2);
  m(0, 0) = std::numeric_limits<double>::quiet_NaN();
  try {
    sym_eig(SymMatrix(m));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonFinite);
  }
  EXPECT_THROW(min_eigenvalue(SymMatrix(m)), Error);
}

TEST(InvSqrt, DiagonalAndIdentity) {
  Vector d(2);
  d << 4, 9;
  const SymMatrix w = inv_sqrt(SymMatrix::diagonal(d));
  EXPECT_NEAR(w(0, 0), 0.5, 1e-15);
  EXPECT_NEAR(w(1, 1), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(w(0, 1), 0.0, 1e-15);
  EXPECT_LE((inv_sqrt(SymMatrix::identity(3)).matrix() - Matrix::Identity(3, 3)).norm(), 1e-15);
}

TEST(InvSqrt, DefiningIdentityAndCommutation) {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix x(6, 4);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 4; ++j) x(i, j) = oracle::normal(rng);
    const Matrix m = x.transpose() * x + Matrix::Identity(4, 4);
    const Matrix w = inv_sqrt(SymMatrix(m)).matrix();
    EXPECT_LE((w * m * w - Matrix::Identity(4, 4)).norm(), 1e-7 * 4);
    EXPECT_LE((w * m - m * w).norm(), 1e-7 * m.norm());
  }
}

TEST(InvSqrt, IndefiniteReportsSmallestEigenvalue) {
  Vector d(2);
  d << -2, 5;
  try {
    inv_sqrt(SymMatrix::diagonal(d));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotPositiveDefinite);
    EXPECT_DOUBLE_EQ(e.value(), -2.0);
  }
  d << 1e-13, 1;
  EXPECT_THROW(require_positive_definite(SymMatrix::diagonal(d), "C"), Error);
}

TEST(MinEigenvalue, MatchesFullDecomposition) {
  Vector d(2);
  d << -2, 5;
  EXPECT_DOUBLE_EQ(min_eigenvalue(SymMatrix::diagonal(d)), -2.0);
  EXPECT_DOUBLE_EQ(min_eigenvalue(SymMatrix::identity(4)), 1.0);
  oracle::Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const SymMatrix m(oracle::random_symmetric(6, rng));
    EXPECT_NEAR(min_eigenvalue(m), sym_eig(m).values(0), 1e-12);
  }
}

TEST(Interlacing, LeadingSubmatrixEigenvalueSitsBetween) {
  oracle::Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const SymMatrix z(oracle::random_symmetric(5, rng));
    const IndexList lead{0, 1, 2, 3};
    const EigDecomposition ez = sym_eig(z);
    const double o1 = min_eigenvalue(principal_submatrix(z, lead));
    EXPECT_LE(ez.values(0), o1 + 1e-12);
    EXPECT_LE(o1, ez.values(1) + 1e-12);
  }
}

TEST(PrincipalSubmatrix, PicksEntriesInOrder) {
  Vector d(3);
  d << 1, 2, 3;
  const SymMatrix m = SymMatrix::diagonal(d);
  const IndexList idx{2, 0};
  const SymMatrix sub = principal_submatrix(m, idx);
  EXPECT_EQ(sub.size(), 2);
  EXPECT_EQ(sub(0, 0), 3.0);
  EXPECT_EQ(sub(1, 1), 1.0);
  EXPECT_EQ(sub(0, 1), 0.0);
  const IndexList one{1};
  EXPECT_EQ(principal_submatrix(m, one)(0, 0), 2.0);
  const IndexList all{0, 1, 2};
  EXPECT_EQ(principal_submatrix(m, all).matrix(), m.matrix());
}

TEST(PrincipalSubmatrix, Errors) {
  const SymMatrix m = SymMatrix::identity(3);
  const IndexList out{0, 3};
  const IndexList dup{1, 1};
  try {
    principal_submatrix(m, out);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IndexOutOfRange);
  }
  try {
    principal_submatrix(m, dup);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DuplicateIndex);
  }
}

TEST(SolveShifted, DiagonalCase) {
  Vector d(2);
  d << 2, 3;
  const EigDecomposition e = sym_eig(SymMatrix::diagonal(d));
  const Vector u = solve_shifted(e, 1.0, Vector::Ones(2));
  EXPECT_NEAR(u(0), -1.0, 1e-15);
  EXPECT_NEAR(u(1), -0.5, 1e-15);
  EXPECT_EQ(solve_shifted(e, 1.0, Vector::Zero(2)).norm(), 0.0);
}

TEST(SolveShifted, ResidualOnRandomInstances) {
  oracle::Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix o = oracle::random_symmetric(4, rng);
    const EigDecomposition e = sym_eig(SymMatrix(o));
    const double alpha = e.values(0) - oracle::uniform(rng, 0.1, 2.0);
    Vector g(4);
    for (int i = 0; i < 4; ++i) g(i) = oracle::normal(rng);
    const Vector u = solve_shifted(e, alpha, g);
    EXPECT_LE(((o - alpha * Matrix::Identity(4, 4)) * u + g).norm(), 1e-7 * g.norm());
  }
}

TEST(SolveShifted, RefusesShiftAtPole) {
  const EigDecomposition e = sym_eig(SymMatrix::identity(2));
  try {
    solve_shifted(e, 1.0, Vector::Ones(2));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), Errc::ShiftTooClose);
  }
  EXPECT_NO_THROW(solve_shifted(e, 1.0 - 2 * shift_guard(1.0), Vector::Ones(2)));
}

}  // namespace
