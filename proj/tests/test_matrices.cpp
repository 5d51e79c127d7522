#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <sstream>

#include "polyinv/dense_eigen.hpp"
#include "polyinv/generators.hpp"
#include "polyinv/matrix_market.hpp"
#include "polyinv/vec.hpp"

using namespace polyinv;

TEST(ConvDiff2D, Example1Dimensions) {
  // n = 2500 operator of the first convection-diffusion experiment
  auto a = gen_convdiff_2d(50, 2.0, 0.0, 0.0);
  EXPECT_EQ(a.n_rows(), 2500u);
  EXPECT_EQ(a.n_cols(), 2500u);
}

TEST(ConvDiff2D, StencilEntries) {
  auto a = gen_convdiff_2d(2, 0.0, 0.0, 0.0);
  EXPECT_EQ(a.n_rows(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_DOUBLE_EQ(a.get(i, i), 4.0);
  }
  EXPECT_DOUBLE_EQ(a.get(0, 1), -1.0);
  EXPECT_DOUBLE_EQ(a.get(0, 2), -1.0);
  EXPECT_DOUBLE_EQ(a.get(1, 0), -1.0);
  EXPECT_DOUBLE_EQ(a.get(3, 2), -1.0);
  EXPECT_DOUBLE_EQ(a.get(0, 3), 0.0);

  // with h = 1/50 the x-coupling entries are -1 -/+ 0.02
  auto b = gen_convdiff_2d(49, 2.0, 0.0, 0.0);
  EXPECT_DOUBLE_EQ(b.get(0, 1), -1.0 + 0.02);
  EXPECT_DOUBLE_EQ(b.get(1, 0), -1.0 - 0.02);
}

TEST(ConvDiff2D, RejectsTinyGrid) {
  EXPECT_THROW(gen_convdiff_2d(1, 0, 0, 0), InvalidArgumentError);
}

TEST(ConvDiff2D, LaplacianIsSpd) {
  auto a = gen_convdiff_2d(6, 0.0, 0.0, 0.0);
  auto he = hermitian_eigen(a.to_dense());
  EXPECT_GT(he.values.front(), 0.0);
}

TEST(ConvDiff1D, StencilAndSymmetry) {
  auto a = gen_convdiff_1d(3, 0.0, 0.0);
  EXPECT_DOUBLE_EQ(a.get(0, 0), 2.0);
  EXPECT_DOUBLE_EQ(a.get(0, 1), -1.0);
  EXPECT_DOUBLE_EQ(a.get(1, 0), -1.0);

  auto b = gen_convdiff_1d(1000, 0.0, 30.0);
  EXPECT_EQ(b.n_rows(), 1000u);
  EXPECT_TRUE(b.is_hermitian());
  const double h = 1.0 / 1001.0;
  EXPECT_DOUBLE_EQ(b.get(0, 0), 2.0 - 900.0 * h * h);

  auto c = gen_convdiff_1d(1000, 5.0, 0.0);
  EXPECT_DOUBLE_EQ(c.get(0, 1), -1.0 + 5.0 * h / 2.0);
  EXPECT_DOUBLE_EQ(c.get(1, 0), -1.0 - 5.0 * h / 2.0);
  EXPECT_FALSE(c.is_hermitian());
}

TEST(BidiagExample11, DiagonalsMatchListing) {
  for (int cs = 1; cs <= 4; ++cs) {
    auto a = gen_bidiag_example11(cs);
    EXPECT_EQ(a.n_rows(), 2500u);
    EXPECT_DOUBLE_EQ(a.get(0, 1), 0.2);
  }
  auto m1 = gen_bidiag_example11(1);
  EXPECT_DOUBLE_EQ(m1.get(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(m1.get(1, 1), 2.0);
  EXPECT_DOUBLE_EQ(m1.get(2, 2), 3.0);
  EXPECT_DOUBLE_EQ(m1.get(2499, 2499), 2500.0);

  auto m2 = gen_bidiag_example11(2);
  EXPECT_DOUBLE_EQ(m2.get(0, 0), 0.1);
  EXPECT_DOUBLE_EQ(m2.get(9, 9), 1.0);
  EXPECT_DOUBLE_EQ(m2.get(2499, 2499), 2491.0);

  auto m3 = gen_bidiag_example11(3);
  EXPECT_DOUBLE_EQ(m3.get(2498, 2498), 2490.0);
  EXPECT_DOUBLE_EQ(m3.get(2499, 2499), 2600.0);

  auto m4 = gen_bidiag_example11(4);
  EXPECT_DOUBLE_EQ(m4.get(2495, 2495), 2600.0);
  EXPECT_DOUBLE_EQ(m4.get(2499, 2499), 3000.0);

  EXPECT_THROW(gen_bidiag_example11(5), InvalidArgumentError);
}

TEST(GapDiag, Listing) {
  auto a = gen_gap_diag();
  EXPECT_EQ(a.n_rows(), 2500u);
  EXPECT_DOUBLE_EQ(a.get(0, 0), 0.1);
  // entry after 50 is 551
  bool found = false;
  for (std::size_t i = 0; i + 1 < 2500; ++i) {
    if (a.get(i, i) == 50.0) {
      EXPECT_DOUBLE_EQ(a.get(i + 1, i + 1), 551.0);
      found = true;
    }
  }
  EXPECT_TRUE(found);
  EXPECT_DOUBLE_EQ(a.get(2499, 2499), 4491.0);
}

TEST(PowerlawDiag, Arithmetic) {
  auto a = gen_powerlaw_diag(1.0);
  EXPECT_EQ(a.n_rows(), 2501u);
  EXPECT_DOUBLE_EQ(a.get(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(a.get(1251, 1251), 1252.0);
  EXPECT_DOUBLE_EQ(a.get(2500, 2500), 2501.0);

  const double p = 1.4;
  auto b = gen_powerlaw_diag(p);
  EXPECT_NEAR(b.get(0, 0), 1.0 / std::pow(1250.5, p - 1.0), 1e-16);
}

TEST(OutlierDemo, SpectrumEdges) {
  auto a = gen_outlier_demo();
  EXPECT_EQ(a.n_rows(), 51u);
  double lo = 1e300, hi = -1e300;
  for (std::size_t i = 0; i < 51; ++i) {
    lo = std::min(lo, a.get(i, i));
    hi = std::max(hi, a.get(i, i));
  }
  EXPECT_DOUBLE_EQ(lo, 0.1);
  EXPECT_DOUBLE_EQ(hi, 2.0);
}

TEST(CirculantShift, PermutationStructure) {
  auto a2 = gen_circulant_shift(2);
  EXPECT_DOUBLE_EQ(a2.get(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(a2.get(1, 0), 1.0);
  EXPECT_DOUBLE_EQ(a2.get(0, 0), 0.0);

  auto a = gen_circulant_shift(7);
  for (std::size_t j = 0; j < 7; ++j) {
    double colsum = 0;
    for (std::size_t i = 0; i < 7; ++i) {
      colsum += a.get(i, j);
    }
    EXPECT_DOUBLE_EQ(colsum, 1.0);
  }
  // eigenvalues are the 7th roots of unity
  auto vals = dense_eigenvalues(a.to_dense());
  for (const auto& v : vals) {
    EXPECT_NEAR(std::abs(v), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(std::pow(v, 7) - cplx(1.0, 0.0)), 0.0, 1e-9);
  }
}

TEST(GenRhs, NormalUnitAndDeterminism) {
  RhsSpec spec;
  spec.kind = RhsKind::normal_unit;
  spec.seed = 77;
  spec.count = 3;
  auto f1 = gen_rhs<double>(100, spec);
  auto f2 = gen_rhs<double>(100, spec);
  ASSERT_EQ(f1.size(), 3u);
  for (std::size_t c = 0; c < 3; ++c) {
    EXPECT_NEAR(nrm2(f1[c]), 1.0, 1e-15);
    EXPECT_EQ(f1[c], f2[c]); // bitwise reproducible
  }
}

TEST(GenRhs, FourPhase) {
  RhsSpec spec;
  spec.kind = RhsKind::four_phase;
  spec.seed = 5;
  spec.count = 1;
  auto f = gen_rhs<cplx>(4, spec);
  for (const auto& v : f[0]) {
    EXPECT_NEAR(std::abs(v), 1.0, 0.0);
    EXPECT_TRUE(v.real() == 0.0 || v.imag() == 0.0);
  }
  EXPECT_THROW(gen_rhs<double>(4, spec), InvalidArgumentError);
}

TEST(Generators, Deterministic) {
  auto a = gen_convdiff_2d(10, 3.0, 1.0, 2.0);
  auto b = gen_convdiff_2d(10, 3.0, 1.0, 2.0);
  EXPECT_EQ(a.values(), b.values());
  EXPECT_EQ(a.col_idx(), b.col_idx());
}

TEST(BidiagExample11, EigenvaluesEqualDiagonal) {
  auto a = gen_bidiag_example11(1);
  // triangular: eigenvalues are the diagonal; spot-check via a small copy
  auto head = SparseMatrix<double>::from_triplets(
      4, 4, {{0, 0, a.get(0, 0)}, {1, 1, a.get(1, 1)}, {2, 2, a.get(2, 2)},
             {3, 3, a.get(3, 3)}, {0, 1, 0.2}, {1, 2, 0.2}, {2, 3, 0.2}});
  auto vals = dense_eigenvalues(head.to_dense());
  for (const auto& v : vals) {
    EXPECT_NEAR(v.imag(), 0.0, 1e-14);
  }
}

TEST(MatrixMarket, ReadGeneralReal) {
  std::istringstream in(
      "%%MatrixMarket matrix coordinate real general\n"
      "% comment\n"
      "2 2 2\n"
      "1 1 2.0\n"
      "2 2 3.0\n");
  auto a = read_matrix_market<double>(in);
  EXPECT_EQ(a.n_rows(), 2u);
  EXPECT_DOUBLE_EQ(a.get(0, 0), 2.0);
  EXPECT_DOUBLE_EQ(a.get(1, 1), 3.0);
  EXPECT_DOUBLE_EQ(a.get(0, 1), 0.0);
}

TEST(MatrixMarket, SymmetricExpansion) {
  std::istringstream in(
      "%%MatrixMarket matrix coordinate real symmetric\n"
      "3 3 4\n"
      "1 1 2.0\n"
      "2 1 -1.0\n"
      "3 2 -1.0\n"
      "3 3 2.0\n");
  auto a = read_matrix_market<double>(in);
  EXPECT_DOUBLE_EQ(a.get(0, 1), -1.0);
  EXPECT_DOUBLE_EQ(a.get(1, 0), -1.0);
  EXPECT_DOUBLE_EQ(a.get(1, 2), -1.0);
  EXPECT_DOUBLE_EQ(a.get(2, 1), -1.0);
  EXPECT_TRUE(a.is_hermitian());
}

TEST(MatrixMarket, HermitianAndSkew) {
  std::istringstream in(
      "%%MatrixMarket matrix coordinate complex hermitian\n"
      "2 2 2\n"
      "1 1 2.0 0.0\n"
      "2 1 1.0 -3.0\n");
  auto a = read_matrix_market<cplx>(in);
  EXPECT_EQ(a.get(0, 1), cplx(1.0, 3.0));
  EXPECT_EQ(a.get(1, 0), cplx(1.0, -3.0));

  std::istringstream in2(
      "%%MatrixMarket matrix coordinate real skew-symmetric\n"
      "2 2 1\n"
      "2 1 5.0\n");
  auto b = read_matrix_market<double>(in2);
  EXPECT_DOUBLE_EQ(b.get(1, 0), 5.0);
  EXPECT_DOUBLE_EQ(b.get(0, 1), -5.0);
}

TEST(MatrixMarket, RejectsPatternAndBadIndices) {
  std::istringstream p(
      "%%MatrixMarket matrix coordinate pattern general\n"
      "2 2 1\n"
      "1 1\n");
  EXPECT_THROW(read_matrix_market<double>(p), IoError);

  std::istringstream bad(
      "%%MatrixMarket matrix coordinate real general\n"
      "2 2 1\n"
      "3 1 1.0\n");
  EXPECT_THROW(read_matrix_market<double>(bad), IoError);

  std::istringstream banner("%%NotMatrixMarket matrix coordinate real general\n2 2 0\n");
  EXPECT_THROW(read_matrix_market<double>(banner), IoError);

  std::istringstream cplx_as_real(
      "%%MatrixMarket matrix coordinate complex general\n"
      "1 1 1\n"
      "1 1 1.0 2.0\n");
  EXPECT_THROW(read_matrix_market<double>(cplx_as_real), IoError);
}

TEST(MatrixMarket, RoundTripBitExact) {
  auto a = gen_convdiff_2d(5, 2.7, 1.3, 4.2);
  std::ostringstream out;
  write_matrix_market(out, a);
  std::istringstream in(out.str());
  auto b = read_matrix_market<double>(in);
  EXPECT_EQ(a.row_ptr(), b.row_ptr());
  EXPECT_EQ(a.col_idx(), b.col_idx());
  EXPECT_EQ(a.values(), b.values()); // bit-exact round trip
}
