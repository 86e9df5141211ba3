#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

namespace topochar {

/// Arbitrary-precision integer usable as an Eigen scalar.
class Integer {
 public:
  using Raw = boost::multiprecision::cpp_int;

  Integer() = default;
  Integer(long long v) : v_(v) {}  // NOLINT: implicit on purpose, for literals
  explicit Integer(Raw v) : v_(std::move(v)) {}

  const Raw& raw() const noexcept { return v_; }

  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }
  /// Truncating division; exact wherever the library uses it.
  Integer& operator/=(const Integer& o) { v_ /= o.v_; return *this; }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(const Integer& a, const Integer& b) { return Integer(Raw(a.v_ % b.v_)); }
  friend Integer operator-(const Integer& a) { return Integer(Raw(-a.v_)); }

  friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    const int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

  /// Throws std::overflow_error when out of range.
  std::int64_t to_int64() const;
  std::string to_string() const { return v_.str(); }

  friend std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.v_; }

 private:
  Raw v_;
};

inline Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

/// Exact rational, usable as an Eigen scalar.
class Rational {
 public:
  using Raw = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(long long v) : v_(v) {}  // NOLINT
  Rational(const Integer& v) : v_(v.raw()) {}  // NOLINT
  Rational(const Integer& num, const Integer& den);
  explicit Rational(Raw v) : v_(std::move(v)) {}

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(Raw(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.v_ < b.v_ ? std::strong_ordering::less
                       : b.v_ < a.v_ ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }
  Integer numerator() const;
  Integer denominator() const;
  bool is_integer() const { return denominator() == Integer(1); }

  std::string to_string() const { return v_.str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.v_; }

 private:
  Raw v_;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

}  // namespace topochar

namespace Eigen {

template <>
struct NumTraits<topochar::Integer> : GenericNumTraits<topochar::Integer> {
  using Real = topochar::Integer;
  using NonInteger = topochar::Rational;
  using Literal = topochar::Integer;
  using Nested = topochar::Integer;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 32
  };
  static topochar::Integer epsilon() { return 0; }
  static topochar::Integer dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<topochar::Rational> : GenericNumTraits<topochar::Rational> {
  using Real = topochar::Rational;
  using NonInteger = topochar::Rational;
  using Literal = topochar::Rational;
  using Nested = topochar::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
  static topochar::Rational epsilon() { return 0; }
  static topochar::Rational dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

}  // namespace Eigen
