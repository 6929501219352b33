#include "assoc/fixtures.hpp"

#include <cstdlib>

#include "assoc/group_scheme.hpp"

namespace assoc {

FixtureSpec FixtureSpec::binary_group(int m) {
  FixtureSpec s;
  s.family = Family::BinaryGroup;
  s.m = m;
  return s;
}

FixtureSpec FixtureSpec::hamming(int n, int q) {
  FixtureSpec s;
  s.family = Family::Hamming;
  s.n = n;
  s.q = q;
  return s;
}

FixtureSpec FixtureSpec::cycle(int n) {
  FixtureSpec s;
  s.family = Family::Cycle;
  s.n = n;
  return s;
}

FixtureSpec::Family FixtureSpec::family_from_name(const std::string& name) {
  if (name == "binary-group") return Family::BinaryGroup;
  if (name == "hamming") return Family::Hamming;
  if (name == "cycle") return Family::Cycle;
  throw std::invalid_argument(
      "unknown family \"" + name +
      "\" (expected binary-group, hamming, or cycle)");
}

std::string FixtureSpec::family_name() const {
  switch (family) {
    case Family::BinaryGroup:
      return "binary-group";
    case Family::Hamming:
      return "hamming";
    case Family::Cycle:
      return "cycle";
  }
  return "?";
}

std::string FixtureSpec::describe() const {
  switch (family) {
    case Family::BinaryGroup:
      return "binary-group m=" + std::to_string(m);
    case Family::Hamming:
      return "hamming n=" + std::to_string(n) + " q=" + std::to_string(q);
    case Family::Cycle:
      return "cycle n=" + std::to_string(n);
  }
  return "?";
}

namespace {

AssociationScheme hamming_scheme(int length, int q) {
  if (length < 1 || q < 2) {
    throw std::invalid_argument("hamming scheme requires n >= 1 and q >= 2");
  }
  double size = 1;
  for (int t = 0; t < length; ++t) size *= q;
  if (size > 4096) {
    throw std::invalid_argument("hamming scheme too large (q^n > 4096)");
  }
  int n_points = static_cast<int>(size);

  // Hamming distance between base-q digit strings of x and y.
  auto dist = [&](int x, int y) {
    int dd = 0;
    for (int t = 0; t < length; ++t) {
      if (x % q != y % q) ++dd;
      x /= q;
      y /= q;
    }
    return dd;
  };

  RelationIndexMatrix rel = RelationIndexMatrix::filled(n_points, length);
  for (int x = 0; x < n_points; ++x) {
    for (int y = 0; y < n_points; ++y) rel.at(x, y) = dist(x, y);
  }
  return AssociationScheme::trusted(std::move(rel));
}

AssociationScheme cycle_scheme(int n) {
  if (n < 3 || n > 4096) {
    throw std::invalid_argument("cycle scheme requires 3 <= n <= 4096");
  }
  int d = n / 2;
  RelationIndexMatrix rel = RelationIndexMatrix::filled(n, d);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      int gap = std::abs(x - y);
      rel.at(x, y) = std::min(gap, n - gap);
    }
  }
  return AssociationScheme::trusted(std::move(rel));
}

}  // namespace

AssociationScheme generate_fixture(const FixtureSpec& spec) {
  switch (spec.family) {
    case FixtureSpec::Family::BinaryGroup:
      return build_group_scheme(spec.m);
    case FixtureSpec::Family::Hamming:
      return hamming_scheme(spec.n, spec.q);
    case FixtureSpec::Family::Cycle:
      return cycle_scheme(spec.n);
  }
  throw std::invalid_argument("bad fixture spec");
}

}  // namespace assoc
