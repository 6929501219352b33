#include <doctest.h>

#include <Eigen/Dense>

#include <random>

#include "assoc/numerics.hpp"

using namespace assoc;

TEST_CASE("scalar equality, exact") {
  Tolerance tol = Tolerance::exact();
  CHECK(scalar_eq(Scalar::exact_ratio(1, 2), Scalar::exact_ratio(2, 4), tol));
  CHECK_FALSE(
      scalar_eq(Scalar::exact_ratio(1, 3), Scalar::exact_ratio(1, 4), tol));
  CHECK(Scalar::exact_ratio(1, 2).str() == "1/2");
  CHECK(Scalar::exact_ratio(2, 4).str() == "1/2");  // reduced form
  CHECK(Scalar::exact_ratio(-6, 4).str() == "-3/2");
  CHECK(Scalar::exact(7).str() == "7");
}

TEST_CASE("scalar equality, approx tolerance") {
  Tolerance tol = Tolerance::approx(1e-9, 1e-6);
  CHECK(scalar_eq(Scalar::approx(1.0), Scalar::approx(1.0 + 1e-12), tol));
  CHECK_FALSE(scalar_eq(Scalar::approx(1.0), Scalar::approx(1.0 + 1e-6), tol));
}

TEST_CASE("mode mixing is rejected") {
  Tolerance tol = Tolerance::approx();
  CHECK_THROWS_AS(scalar_eq(Scalar::exact(1), Scalar::approx(1.0), tol),
                  std::invalid_argument);
  CHECK_THROWS_AS(Scalar::exact(1) + Scalar::approx(1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(Scalar::compare(Scalar::exact(0), Scalar::approx(0.0)),
                  std::invalid_argument);
}

TEST_CASE("scalar arithmetic and parsing") {
  Scalar a = Scalar::exact_ratio(3, 4), b = Scalar::exact_ratio(1, 4);
  CHECK((a + b).str() == "1");
  CHECK((a - b).str() == "1/2");
  CHECK((a * b).str() == "3/16");
  CHECK((a / b).str() == "3");
  CHECK((-a).str() == "-3/4");
  CHECK_THROWS_AS(a / Scalar::exact(0), std::domain_error);

  CHECK(Scalar::parse("22/7", ScalarMode::Exact).str() == "22/7");
  CHECK(Scalar::parse("-5", ScalarMode::Exact) == Scalar::exact(-5));
  CHECK(Scalar::parse("0.25", ScalarMode::Approx).approx_value() ==
        doctest::Approx(0.25));
  CHECK_THROWS_AS(Scalar::parse("zebra", ScalarMode::Exact),
                  std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("1.5x", ScalarMode::Approx),
                  std::invalid_argument);

  // str/parse round trip preserves the exact value
  Scalar v = Scalar::exact_ratio(-1234567, 891);
  CHECK(Scalar::parse(v.str(), ScalarMode::Exact) == v);
}

TEST_CASE("tolerance validation") {
  CHECK_THROWS_AS(Tolerance::approx(1e-3, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(Tolerance::approx(-1e-9, 1e-6), std::invalid_argument);
}

TEST_CASE("cluster: exact grouping") {
  std::vector<Scalar> values{Scalar::exact(3), Scalar::exact(1),
                             Scalar::exact(1), Scalar::exact(-3)};
  auto groups = cluster(values, Tolerance::exact());
  REQUIRE(groups.size() == 3);
  CHECK(groups[0].representative == Scalar::exact(3));
  CHECK(groups[0].members == std::vector<int>{0});
  CHECK(groups[1].members == std::vector<int>{1, 2});
  CHECK(groups[2].representative == Scalar::exact(-3));
}

TEST_CASE("cluster: approx grouping") {
  Tolerance tol = Tolerance::approx(1e-9, 1e-6);
  std::vector<Scalar> values{Scalar::approx(2.0000000001), Scalar::approx(2.0),
                             Scalar::approx(-1.0)};
  auto groups = cluster(values, tol);
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].members == std::vector<int>{0, 1});
  CHECK(groups[0].representative.approx_value() ==
        doctest::Approx(2.00000000005));
  CHECK(groups[1].members == std::vector<int>{2});
}

TEST_CASE("cluster: 5-cycle adjacency eigenvalues split 1/2/2") {
  // independent oracle: numeric eigendecomposition of the pentagon adjacency
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(5, 5);
  for (int x = 0; x < 5; ++x) {
    a(x, (x + 1) % 5) = 1;
    a(x, (x + 4) % 5) = 1;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  std::vector<Scalar> values;
  for (int i = 0; i < 5; ++i) values.push_back(Scalar::approx(es.eigenvalues()(i)));

  auto groups = cluster(values, Tolerance::approx(1e-9, 1e-6));
  REQUIRE(groups.size() == 3);
  std::vector<size_t> sizes;
  for (const auto& g : groups) sizes.push_back(g.members.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 2, 2});
  // representatives are 2, 2cos(2pi/5), 2cos(4pi/5)
  double top = -10;
  for (const auto& g : groups) top = std::max(top, g.representative.approx_value());
  CHECK(top == doctest::Approx(2.0));
}

TEST_CASE("cluster is a partition (randomized)") {
  std::mt19937_64 rng(20240817);
  std::uniform_real_distribution<double> val(-5.0, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> len(1, 40);
    int count = len(rng);
    std::vector<Scalar> values;
    for (int t = 0; t < count; ++t) values.push_back(Scalar::approx(val(rng)));
    auto groups = cluster(values, Tolerance::approx(1e-9, 1e-3));
    std::vector<int> seen(count, 0);
    for (const auto& g : groups) {
      for (int idx : g.members) ++seen[idx];
    }
    for (int t = 0; t < count; ++t) CHECK(seen[t] == 1);
  }
}

TEST_CASE("scalar matrix basics") {
  ScalarMatrix id = ScalarMatrix::identity(3, ScalarMode::Exact);
  ScalarMatrix two = id.scaled(Scalar::exact(2));
  CHECK(two.multiply(two).at(1, 1) == Scalar::exact(4));
  CHECK(two.hadamard(two).at(2, 2) == Scalar::exact(4));
  CHECK(two.plus(two).at(0, 0) == Scalar::exact(4));
  CHECK(two.at(0, 1) == Scalar::exact(0));
  std::vector<Scalar> v{Scalar::exact(1), Scalar::exact(2), Scalar::exact(3)};
  CHECK(two.apply(v)[2] == Scalar::exact(6));
  CHECK(two.transposed().equals(two, Tolerance::exact()));
}
