#include "ordfix/dyadic.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>

#include "ordfix/error.hpp"

namespace ordfix {
namespace {

constexpr std::int64_t kMaxMagnitude = std::int64_t{1} << 32;

Dyadic normalized(__int128 num, int shift) {
  while (shift > 0 && num % 2 == 0) {
    num /= 2;
    --shift;
  }
  if (shift > Dyadic::kMaxShift)
    throw Error(ErrorKind::BadGridStep, "dyadic denominator exceeds 2^" + std::to_string(Dyadic::kMaxShift));
  if (num > kMaxMagnitude || num < -kMaxMagnitude)
    throw Error(ErrorKind::BadGridStep, "dyadic numerator out of range");
  return Dyadic::from_parts(static_cast<std::int64_t>(num), shift);
}

}  // namespace

Dyadic Dyadic::from_parts(std::int64_t num, int shift) {
  if (shift < 0 || shift > kMaxShift)
    throw Error(ErrorKind::BadGridStep, "dyadic shift out of range: " + std::to_string(shift));
  Dyadic d;
  while (shift > 0 && num % 2 == 0) {
    num /= 2;
    --shift;
  }
  d.num_ = num;
  d.shift_ = shift;
  return d;
}

Dyadic Dyadic::from_double(double value) {
  if (!std::isfinite(value)) throw Error(ErrorKind::BadGridStep, "non-finite coordinate");
  int shift = 0;
  double scaled = value;
  while (scaled != std::floor(scaled)) {
    if (++shift > kMaxShift) throw Error(ErrorKind::BadGridStep, "value is not a short dyadic rational");
    scaled = std::ldexp(value, shift);
  }
  if (std::fabs(scaled) > static_cast<double>(kMaxMagnitude))
    throw Error(ErrorKind::BadGridStep, "coordinate magnitude out of range");
  return from_parts(static_cast<std::int64_t>(scaled), shift);
}

double Dyadic::to_double() const { return std::ldexp(static_cast<double>(num_), -shift_); }

std::string Dyadic::to_string() const {
  // Exactly representable, so the shortest round-trip text is exact.
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, to_double());
  (void)ec;
  return std::string(buf, end);
}

bool Dyadic::divisible_by(const Dyadic& step) const {
  if (step.num_ == 0) return false;
  // (num_/2^a) / (sn/2^b) = num_ * 2^(b-a) / sn
  __int128 top = num_;
  __int128 bottom = step.num_;
  int diff = step.shift_ - shift_;
  if (diff >= 0) {
    top <<= diff;
  } else {
    bottom <<= -diff;
  }
  return top % bottom == 0;
}

std::int64_t Dyadic::quotient(const Dyadic& step) const {
  __int128 top = num_;
  __int128 bottom = step.num_;
  int diff = step.shift_ - shift_;
  if (diff >= 0) {
    top <<= diff;
  } else {
    bottom <<= -diff;
  }
  return static_cast<std::int64_t>(top / bottom);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  int s = std::max(a.shift_, b.shift_);
  __int128 sum = (static_cast<__int128>(a.num_) << (s - a.shift_)) + (static_cast<__int128>(b.num_) << (s - b.shift_));
  return normalized(sum, s);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
  int s = std::max(a.shift_, b.shift_);
  __int128 diff = (static_cast<__int128>(a.num_) << (s - a.shift_)) - (static_cast<__int128>(b.num_) << (s - b.shift_));
  return normalized(diff, s);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return normalized(static_cast<__int128>(a.num_) * b.num_, a.shift_ + b.shift_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int s = std::max(a.shift_, b.shift_);
  __int128 lhs = static_cast<__int128>(a.num_) << (s - a.shift_);
  __int128 rhs = static_cast<__int128>(b.num_) << (s - b.shift_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace ordfix
