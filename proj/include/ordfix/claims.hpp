#pragma once

#include <string>
#include <vector>

#include "ordfix/rational.hpp"

namespace ordfix {

struct Claim {
  std::string id;
  std::string expected;
  std::string measured;
  bool pass = false;
};

struct ClaimReport {
  std::vector<Claim> claims;

  void add(std::string id, std::string expected, std::string measured, bool pass);
  bool all_pass() const;
  /// Throws InvalidReport when the id is absent.
  const Claim& find(const std::string& id) const;
  void append(const ClaimReport& other);
};

/// Shortest round-trip decimal form.
std::string format_number(double x);
inline std::string format_number(const Rational& x) { return to_string(x); }

}  // namespace ordfix
