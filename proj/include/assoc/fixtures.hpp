#pragma once

#include <string>

#include "assoc/scheme.hpp"

namespace assoc {

/// Built-in scheme families: the binary group scheme X^(m), the Hamming
/// scheme H(n,q) (relations by Hamming distance on q-ary words of length n),
/// and the cycle scheme C_n (relations by circular distance).
struct FixtureSpec {
  enum class Family { BinaryGroup, Hamming, Cycle };

  Family family = Family::BinaryGroup;
  int m = 0;  // binary-group: 1 <= m <= 10
  int n = 0;  // hamming: word length >= 1; cycle: >= 3
  int q = 0;  // hamming alphabet size >= 2

  static FixtureSpec binary_group(int m);
  static FixtureSpec hamming(int n, int q);
  static FixtureSpec cycle(int n);

  static FixtureSpec::Family family_from_name(const std::string& name);
  std::string family_name() const;
  std::string describe() const;
};

/// Build the scheme; throws std::invalid_argument on bad parameters. Every
/// output satisfies the scheme axioms by construction.
AssociationScheme generate_fixture(const FixtureSpec& spec);

}  // namespace assoc
