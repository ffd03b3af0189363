#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

#include <compare>
#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

namespace hirsch {

/// Exact integer with an inline 64-bit fast path.
///
/// Values that fit in a signed 64-bit word are stored inline; anything larger
/// is promoted to a shared, immutable boost::multiprecision::cpp_int. Every
/// operation checks for overflow, so arithmetic is exact at any size.
class Integer {
 public:
  using Big = boost::multiprecision::cpp_int;

  Integer() = default;
  template <std::integral T>
  Integer(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_unsigned_v<T> && sizeof(T) >= sizeof(long long)) {
      if (v > static_cast<T>(std::numeric_limits<long long>::max())) {
        assign(Big(v));
        return;
      }
    }
    small_ = static_cast<long long>(v);
  }
  explicit Integer(const Big& v) { assign(v); }

  static Integer parse(std::string_view text);

  [[nodiscard]] bool is_small() const { return !big_; }
  [[nodiscard]] bool is_zero() const { return !big_ && small_ == 0; }
  [[nodiscard]] int sign() const {
    if (big_) return big_->sign();
    return (small_ > 0) - (small_ < 0);
  }
  [[nodiscard]] Big to_big() const { return big_ ? *big_ : Big(small_); }
  /// Throws std::overflow_error when the value does not fit.
  [[nodiscard]] long long to_long() const;
  [[nodiscard]] std::string to_string() const;

  Integer& operator+=(const Integer& o) {
    long long r;
    if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    assign(to_big() + o.to_big());
    return *this;
  }
  Integer& operator-=(const Integer& o) {
    long long r;
    if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    assign(to_big() - o.to_big());
    return *this;
  }
  Integer& operator*=(const Integer& o) {
    long long r;
    if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    assign(to_big() * o.to_big());
    return *this;
  }
  /// Truncating division (rounds toward zero). Division by zero throws.
  Integer& operator/=(const Integer& o);
  /// Remainder of truncating division; sign follows the dividend.
  Integer& operator%=(const Integer& o);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator/(Integer a, const Integer& b) { return a /= b; }
  friend Integer operator%(Integer a, const Integer& b) { return a %= b; }
  friend Integer operator-(const Integer& a) { return Integer(0) - a; }
  friend Integer operator+(const Integer& a) { return a; }

  friend bool operator==(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    return a.to_big() == b.to_big();
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    const Big x = a.to_big();
    const Big y = b.to_big();
    if (x < y) return std::strong_ordering::less;
    if (x > y) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& a) {
    return os << a.to_string();
  }

 private:
  void assign(const Big& v);

  long long small_ = 0;
  std::shared_ptr<const Big> big_;
};

Integer abs(const Integer& a);
/// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);
/// Floor division, used where a non-negative remainder is wanted.
Integer floor_div(const Integer& a, const Integer& b);
/// Remainder in [0, |b|).
Integer mod_floor(const Integer& a, const Integer& b);

}  // namespace hirsch

namespace Eigen {

template <>
struct NumTraits<hirsch::Integer> : GenericNumTraits<hirsch::Integer> {
  using Real = hirsch::Integer;
  using NonInteger = hirsch::Integer;
  using Literal = hirsch::Integer;
  using Nested = hirsch::Integer;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
