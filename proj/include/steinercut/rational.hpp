#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "steinercut/error.hpp"

namespace stc {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt bigint_from_i128(__int128 v) {
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v)
                            : static_cast<unsigned __int128>(v);
  BigInt hi = static_cast<std::uint64_t>(u >> 64);
  BigInt lo = static_cast<std::uint64_t>(u);
  BigInt r = (hi << 64) | lo;
  return neg ? -r : r;
}

// Exact rational arithmetic for all threshold comparisons. Derived
// parameters such as 1/(200*alpha*s) do not stay dyadic, so the
// denominator is arbitrary; every comparison is exact integer
// arithmetic after cross-multiplying.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t v) : num_(v), den_(1) {}  // NOLINT(runtime/explicit)
  Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) fail_invalid("rational with zero denominator");
    normalize();
  }

  static Rational from_i128(__int128 num, __int128 den = 1) {
    return Rational(bigint_from_i128(num), bigint_from_i128(den));
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_dyadic() const {
    BigInt d = den_;
    while (d % 2 == 0) d /= 2;
    return d == 1;
  }

  Rational operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
  }
  Rational operator/(const Rational& o) const {
    if (o.num_ == 0) fail_invalid("rational division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const {
    return num_ * o.den_ < o.num_ * den_;
  }
  bool operator<=(const Rational& o) const {
    return num_ * o.den_ <= o.num_ * den_;
  }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  // Smallest integer >= value.
  BigInt ceil() const {
    BigInt q = num_ / den_;
    if (num_ > 0 && q * den_ != num_) q += 1;
    return q;
  }
  BigInt floor() const {
    BigInt q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) q -= 1;
    return q;
  }

  std::int64_t ceil_i64() const {
    BigInt c = ceil();
    if (c > std::numeric_limits<std::int64_t>::max() ||
        c < std::numeric_limits<std::int64_t>::min())
      fail_internal("rational ceil out of int64 range");
    return static_cast<std::int64_t>(c);
  }

  std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  double to_double() const {
    return static_cast<double>(boost::multiprecision::cpp_rational(num_) /
                               boost::multiprecision::cpp_rational(den_));
  }

  // Parses "a" or "a/b". Used by the CLI for dyadic parameters, which
  // additionally enforces a power-of-two denominator.
  static Rational parse(const std::string& text);

private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    num_ /= g;
    den_ /= g;
  }

  BigInt num_;
  BigInt den_;
};

// Smallest L >= 0 with 2^L >= v (v >= 1).
inline std::int64_t ceil_log2(BigInt v) {
  if (v <= 0) fail_invalid("ceil_log2 of non-positive value");
  std::int64_t l = 0;
  BigInt p = 1;
  while (p < v) {
    p <<= 1;
    ++l;
  }
  return l;
}

inline std::int64_t ceil_log2_i64(std::int64_t v) { return ceil_log2(BigInt(v)); }

}  // namespace stc
