#include "ordfix/claims.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "ordfix/error.hpp"

namespace ordfix {

void ClaimReport::add(std::string id, std::string expected, std::string measured, bool pass) {
  claims.push_back({std::move(id), std::move(expected), std::move(measured), pass});
}

bool ClaimReport::all_pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

const Claim& ClaimReport::find(const std::string& id) const {
  for (const auto& c : claims)
    if (c.id == id) return c;
  throw Error(ErrorKind::InvalidReport, "no claim '" + id + "'");
}

void ClaimReport::append(const ClaimReport& other) {
  claims.insert(claims.end(), other.claims.begin(), other.claims.end());
}

std::string format_number(double x) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) return "nan";
  return std::string(buf.data(), end);
}

}  // namespace ordfix
