#include <doctest.h>

#include <set>

#include "assoc/fixtures.hpp"
#include "assoc/group_scheme.hpp"
#include "support/oracles.hpp"

using namespace assoc;

TEST_CASE("encoding and bilinear form") {
  // lexicographic encoding: first coordinate is the high bit
  CHECK(gf2_bit(0b10, 1, 2) == 1);
  CHECK(gf2_bit(0b10, 2, 2) == 0);
  CHECK(bilinear_form(0b11, 0b11) == 0);  // <11,11> = 1+1 = 0
  CHECK(bilinear_form(0b11, 0b01) == 1);
  CHECK(bilinear_form(0b101, 0b110) == 1);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      CHECK(bilinear_form(x, y) == bilinear_form(y, x));
      for (int z = 0; z < 8; ++z) {
        CHECK(bilinear_form(x ^ y, z) ==
              (bilinear_form(x, z) ^ bilinear_form(y, z)));
      }
    }
  }
}

TEST_CASE("GF(2) matrix basics") {
  Gf2Matrix s = Gf2Matrix::parse("10,11");
  CHECK(s.dim() == 2);
  CHECK(s.str() == "10,11");
  CHECK(s.get(0, 0) == 1);
  CHECK(s.get(0, 1) == 0);
  CHECK(s.get(1, 0) == 1);
  CHECK(s.invertible());
  CHECK_FALSE(s.symmetric());
  CHECK(s.transposed().str() == "11,01");
  CHECK(Gf2Matrix::identity(3).str() == "100,010,001");
  CHECK_FALSE(Gf2Matrix::parse("11,11").invertible());
  CHECK_THROWS_AS(Gf2Matrix::parse("10,1"), std::invalid_argument);
  CHECK_THROWS_AS(Gf2Matrix::parse("1x,11"), std::invalid_argument);

  // apply acts columnwise: column j is the image of basis vector e_j
  Gf2Matrix swap = Gf2Matrix::parse("01,10");
  CHECK(swap.apply(0b10) == 0b01);
  CHECK(swap.apply(0b01) == 0b10);
  CHECK(swap.apply(0b11) == 0b11);
}

TEST_CASE("enumeration of invertible matrices") {
  auto m1 = enumerate_linear_bijections(1);
  REQUIRE(m1.size() == 1);
  CHECK(m1[0].str() == "1");

  auto m2 = enumerate_linear_bijections(2);
  CHECK(m2.size() == 6);
  CHECK(std::count_if(m2.begin(), m2.end(),
                      [](const Gf2Matrix& s) { return s.symmetric(); }) == 4);
  // deterministic lexicographic order by row bit strings
  std::vector<std::string> got;
  for (const auto& s : m2) got.push_back(s.str());
  CHECK(got == std::vector<std::string>{"01,10", "01,11", "10,01", "10,11",
                                        "11,01", "11,10"});

  auto m3 = enumerate_linear_bijections(3);
  CHECK(static_cast<long>(m3.size()) == oracle::gl2_order(3));
  CHECK(m3.size() == 168);
  long sym3 = std::count_if(m3.begin(), m3.end(),
                            [](const Gf2Matrix& s) { return s.symmetric(); });
  CHECK(sym3 == 28);
  // independent route: enumerate symmetric matrices directly from their
  // upper-triangular bit patterns and count the invertible ones
  long sym_direct = 0;
  for (int bits = 0; bits < 64; ++bits) {
    Gf2Matrix s(3);
    int b = bits;
    for (int i = 0; i < 3; ++i) {
      for (int j = i; j < 3; ++j) {
        s.set(i, j, b & 1);
        s.set(j, i, b & 1);
        b >>= 1;
      }
    }
    if (s.invertible()) ++sym_direct;
  }
  CHECK(sym_direct == 28);

  CHECK_THROWS_AS(enumerate_linear_bijections(5), std::invalid_argument);
}

TEST_CASE("enumeration at m = 4 matches the group order") {
  auto m4 = enumerate_linear_bijections(4);
  CHECK(static_cast<long>(m4.size()) == oracle::gl2_order(4));
  CHECK(m4.size() == 20160);
  long sym4 = std::count_if(m4.begin(), m4.end(),
                            [](const Gf2Matrix& s) { return s.symmetric(); });
  CHECK(sym4 == 448);
}

TEST_CASE("sampled invertible matrices are invertible and reproducible") {
  auto a = sample_linear_bijections(5, 20, 7);
  auto b = sample_linear_bijections(5, 20, 7);
  REQUIRE(a.size() == 20);
  for (size_t t = 0; t < a.size(); ++t) {
    CHECK(a[t].invertible());
    CHECK(a[t] == b[t]);
  }
}

TEST_CASE("orderings from matrices") {
  CHECK(sigma_from_matrix(Gf2Matrix::identity(2)) ==
        OrderingPermutation::identity(3));
  CHECK(sigma_from_matrix(Gf2Matrix::parse("01,10")).sigma ==
        std::vector<int>{0, 2, 1, 3});
  CHECK(sigma_from_matrix(Gf2Matrix::parse("10,11")).sigma ==
        std::vector<int>{0, 1, 3, 2});
  CHECK_THROWS_AS(sigma_from_matrix(Gf2Matrix::parse("11,11")),
                  std::invalid_argument);
  // linear permutations fix 0 and are additive
  for (const Gf2Matrix& s : enumerate_linear_bijections(3)) {
    OrderingPermutation sigma = sigma_from_matrix(s);
    CHECK(sigma.sigma[0] == 0);
    CHECK(is_linear_permutation(sigma.sigma));
  }
}

TEST_CASE("group scheme construction") {
  AssociationScheme x1 = build_group_scheme(1);
  CHECK(x1.n() == 2);
  CHECK(x1.relation(0, 1) == 1);

  AssociationScheme x2 = build_group_scheme(2);
  const int want[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) CHECK(x2.relation(x, y) == want[x][y]);
  }

  AssociationScheme x3 = build_group_scheme(3);
  CHECK(x3.n() == 8);
  CHECK(x3.d() == 7);
  VerifyOutcome out = verify_scheme(x3.relations());
  REQUIRE(out.ok());
  CHECK(out.params->k == std::vector<std::int64_t>(8, 1));

  CHECK_THROWS_AS(build_group_scheme(0), std::invalid_argument);
  CHECK_THROWS_AS(build_group_scheme(11), std::invalid_argument);
}

TEST_CASE("associate matrices factor as Kronecker products") {
  for (int m = 2; m <= 4; ++m) {
    AssociationScheme s = build_group_scheme(m);
    oracle::IntMatrix a0{1, 0, 0, 1};
    oracle::IntMatrix a1{0, 1, 1, 0};
    for (int x = 0; x < (1 << m); ++x) {
      oracle::IntMatrix expect{1};
      int size = 1;
      for (int coord = 1; coord <= m; ++coord) {
        const oracle::IntMatrix& factor = gf2_bit(x, coord, m) ? a1 : a0;
        expect = oracle::kronecker(expect, size, factor, 2);
        size *= 2;
      }
      CHECK(oracle::int_matrix(associate_matrix(s, x)) == expect);
    }
  }
}

TEST_CASE("closed-form eigenmatrix") {
  auto h1 = closed_form_eigenmatrix(1);
  CHECK(h1 == std::vector<std::vector<int>>{{1, 1}, {1, -1}});

  auto h2 = closed_form_eigenmatrix(2);
  std::vector<std::vector<int>> want{
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
  CHECK(h2 == want);
  CHECK(h2[3][3] == 1);  // <11,11> = 0

  for (int m = 1; m <= 4; ++m) {
    auto h = closed_form_eigenmatrix(m);
    int n = 1 << m;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        CHECK(h[x][y] == h[y][x]);
        // H H = n I
        long dot = 0;
        for (int t = 0; t < n; ++t) dot += static_cast<long>(h[x][t]) * h[t][y];
        CHECK(dot == (x == y ? n : 0));
      }
    }
  }
}

TEST_CASE("spectral decomposition aligns with the closed form") {
  for (int m = 1; m <= 4; ++m) {
    GroupSchemeData g =
        group_scheme_data(m, ScalarMode::Exact, Tolerance::exact());
    auto h = closed_form_eigenmatrix(m);
    int n = 1 << m;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        CHECK(g.sp.P.at(x, y) == Scalar::exact(h[x][y]));
        CHECK(g.sp.Q.at(x, y) == Scalar::exact(h[x][y]));
      }
    }
    // p and q are both the group table in this indexing
    for (int h_ = 0; h_ < n; ++h_) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          int want = (i ^ j) == h_ ? 1 : 0;
          CHECK(g.params.p.at(h_, i, j) == want);
          CHECK(g.kt.q.at(h_, i, j) == Scalar::exact(want));
        }
      }
    }
  }
}

TEST_CASE("entrywise idempotent products shift the character index") {
  for (int m = 1; m <= 3; ++m) {
    GroupSchemeData g =
        group_scheme_data(m, ScalarMode::Exact, Tolerance::exact());
    auto E = oracle::materialize_idempotents(g.scheme, g.sp);
    int n = 1 << m;
    Scalar inv_n = Scalar::exact_ratio(1, n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        ScalarMatrix lhs = E[x].hadamard(E[y]);
        ScalarMatrix rhs = E[x ^ y].scaled(inv_n);
        CHECK(lhs.equals(rhs, Tolerance::exact()));
      }
    }
  }
}

TEST_CASE("linearity test and the adjoint-symmetry criterion") {
  CHECK(is_linear_permutation({0, 1, 2, 3}));
  CHECK(is_linear_permutation({0, 1, 3, 2}));        // the shear is linear
  CHECK_FALSE(is_linear_permutation({1, 0, 2, 3}));  // does not fix 0
  // swapping two nonzero images of a linear map of Z_2^3 breaks additivity
  std::vector<int> broken{0, 1, 2, 3, 4, 5, 7, 6};
  CHECK_FALSE(is_linear_permutation(broken));

  // over all 24 bijections of Z_2^2: <sigma(x),y> = <x,sigma(y)> for all
  // pairs forces linearity (and a symmetric matrix)
  std::vector<int> perm{0, 1, 2, 3};
  int satisfying = 0;
  do {
    bool adjoint = true;
    for (int x = 0; x < 4 && adjoint; ++x) {
      for (int y = 0; y < 4 && adjoint; ++y) {
        adjoint = bilinear_form(perm[x], y) == bilinear_form(x, perm[y]);
      }
    }
    if (adjoint) {
      ++satisfying;
      CHECK(is_linear_permutation(perm));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(satisfying == 4);  // the four symmetric invertible matrices
}

TEST_CASE("numerical self-duality holds exactly for the linear orderings") {
  NsdLinearityReport r1 = verify_nsd_iff_linear(1, 10, 5);
  CHECK(r1.ok);
  CHECK(r1.linear_total == 1);
  CHECK(r1.linear_nsd == 1);
  CHECK(r1.nonlinear_sampled == 0);  // no nonlinear bijections exist at m=1

  NsdLinearityReport r2 = verify_nsd_iff_linear(2, 10, 5);
  CHECK(r2.ok);
  CHECK(r2.linear_total == 6);
  CHECK(r2.linear_nsd == 6);
  CHECK(r2.nonlinear_sampled == 0);  // all 6 permutations fixing 0 are linear

  NsdLinearityReport r3 = verify_nsd_iff_linear(3, 40, 5);
  CHECK(r3.ok);
  CHECK(r3.linear_total == 168);
  CHECK(r3.linear_nsd == 168);
  CHECK(r3.nonlinear_sampled == 40);
  CHECK(r3.nonlinear_nsd == 0);
}

TEST_CASE("formal self-duality holds exactly for symmetric matrices") {
  FsdSymmetryReport r1 = verify_fsd_iff_symmetric(1);
  CHECK(r1.ok);
  CHECK(r1.fsd_count == 1);

  FsdSymmetryReport r2 = verify_fsd_iff_symmetric(2);
  CHECK(r2.ok);
  CHECK(r2.linear_total == 6);
  CHECK(r2.symmetric_count == 4);
  CHECK(r2.fsd_count == 4);

  FsdSymmetryReport r3 = verify_fsd_iff_symmetric(3);
  CHECK(r3.ok);
  CHECK(r3.linear_total == 168);
  CHECK(r3.symmetric_count == 28);
  CHECK(r3.fsd_count == 28);
  CHECK(r3.disagreements == 0);
}

TEST_CASE("formal self-duality vs symmetry at m = 4") {
  FsdSymmetryReport r = verify_fsd_iff_symmetric(4);
  CHECK(r.ok);
  CHECK(r.linear_total == 20160);
  CHECK(r.symmetric_count == 448);
  CHECK(r.fsd_count == 448);
}

TEST_CASE("classification report counts") {
  Gl2Classification cls = gl2_classify(2, 50, 99, ScalarMode::Exact,
                                       Tolerance::exact());
  CHECK(cls.linear_total == 6);
  CHECK(cls.symmetric == 4);
  CHECK(cls.fsd == 4);
  CHECK(cls.nsd == 6);
  CHECK(cls.nonlinear_sampled == 0);
  CHECK(cls.details.size() == 6);  // details are on by default for m <= 2
  CHECK_THROWS_AS(
      gl2_classify(4, 0, 0, ScalarMode::Exact, Tolerance::exact()),
      std::invalid_argument);
}

TEST_CASE("character alignment rejects non-group spectral data") {
  AssociationScheme s = generate_fixture(FixtureSpec::cycle(6));
  SchemeParameters params = intersection_numbers(s);
  SpectralData sp = decompose(s, params, ScalarMode::Exact, Tolerance::exact());
  CHECK_THROWS_AS(character_alignment(sp), InternalInconsistency);
  SpectralData bad;
  bad.d = 2;  // d+1 = 3 is not a power of two
  CHECK_THROWS_AS(character_alignment(bad), std::invalid_argument);
}
