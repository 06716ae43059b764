#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sej {

/// Exact rational on checked 64-bit integers. Arithmetic that would wrap
/// throws std::overflow_error; the semiring law suite depends on exactness,
/// so silent rounding or wrapping is never acceptable here.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d);

  static Rational parse(const std::string& text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  std::string str() const;

private:
  std::int64_t num_;
  std::int64_t den_;  // always > 0, gcd(|num|, den) == 1
};

}  // namespace sej
