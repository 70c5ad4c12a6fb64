#pragma once

// Exact non-negative integer arithmetic used throughout prefixpoly.
//
// Nat wraps boost::multiprecision::cpp_int for storage and schoolbook
// operations. Powers, roots and modular powers are implemented here so the
// algorithms stay visible and independently testable.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace prefixpoly {

/// Raised when an operation's precondition on its arguments is violated.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by div_exact when the divisor does not divide the dividend.
class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a result contradicts a proven property (should never fire).
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Arbitrary-precision non-negative integer.
///
/// Any operation that would produce a negative value throws InvalidArgument,
/// so the value >= 0 invariant holds for every live object.
class Nat {
 public:
  using Storage = boost::multiprecision::cpp_int;

  Nat() = default;
  Nat(std::uint64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  /// Parses a plain decimal string (digits only, no sign, no whitespace).
  static Nat parse(std::string_view text) {
    if (text.empty()) throw InvalidArgument("empty integer literal");
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw InvalidArgument("not a non-negative decimal integer: '" + std::string(text) + "'");
      }
    }
    return Nat(Storage(std::string(text)));
  }

  [[nodiscard]] std::string str() const { return v_.str(); }
  [[nodiscard]] const Storage& raw() const noexcept { return v_; }
  [[nodiscard]] bool is_zero() const noexcept { return v_.is_zero(); }
  [[nodiscard]] bool is_odd() const { return boost::multiprecision::bit_test(v_, 0); }

  /// Number of significant bits; 0 for zero.
  [[nodiscard]] std::size_t bit_length() const {
    return v_.is_zero() ? 0 : static_cast<std::size_t>(boost::multiprecision::msb(v_)) + 1;
  }

  [[nodiscard]] bool bit(std::size_t i) const {
    return boost::multiprecision::bit_test(v_, static_cast<unsigned>(i));
  }

  /// Narrowing conversion; throws if the value does not fit.
  [[nodiscard]] std::uint64_t to_u64() const {
    if (bit_length() > 64) throw InvalidArgument("value " + str() + " exceeds 64 bits");
    return v_.convert_to<std::uint64_t>();
  }

  [[nodiscard]] bool fits_u64() const { return bit_length() <= 64; }

  Nat& operator+=(const Nat& o) { v_ += o.v_; return *this; }
  Nat& operator*=(const Nat& o) { v_ *= o.v_; return *this; }
  Nat& operator-=(const Nat& o) {
    if (v_ < o.v_) throw InvalidArgument("natural subtraction underflow: " + str() + " - " + o.str());
    v_ -= o.v_;
    return *this;
  }
  Nat& operator/=(const Nat& o) {
    if (o.is_zero()) throw InvalidArgument("division by zero");
    v_ /= o.v_;
    return *this;
  }
  Nat& operator%=(const Nat& o) {
    if (o.is_zero()) throw InvalidArgument("modulo by zero");
    v_ %= o.v_;
    return *this;
  }
  Nat& operator<<=(std::size_t s) { v_ <<= s; return *this; }
  Nat& operator>>=(std::size_t s) { v_ >>= s; return *this; }
  Nat& operator++() { ++v_; return *this; }
  Nat& operator--() { *this -= Nat(1); return *this; }

  friend Nat operator+(Nat a, const Nat& b) { return a += b; }
  friend Nat operator-(Nat a, const Nat& b) { return a -= b; }
  friend Nat operator*(Nat a, const Nat& b) { return a *= b; }
  friend Nat operator/(Nat a, const Nat& b) { return a /= b; }
  friend Nat operator%(Nat a, const Nat& b) { return a %= b; }
  friend Nat operator<<(Nat a, std::size_t s) { return a <<= s; }
  friend Nat operator>>(Nat a, std::size_t s) { return a >>= s; }

  friend bool operator==(const Nat& a, const Nat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    const int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Nat& n) { return os << n.v_; }

 private:
  explicit Nat(Storage v) : v_(std::move(v)) {}
  Storage v_;
};

/// base^exp by binary exponentiation. 0^0 = 1.
inline Nat ipow(const Nat& base, const Nat& exp) {
  Nat result(1);
  const std::size_t bits = exp.bit_length();
  for (std::size_t i = bits; i-- > 0;) {
    result *= result;
    if (exp.bit(i)) result *= base;
  }
  return result;
}

/// Floor of the real n-th root of c: the r with r^n <= c < (r+1)^n.
///
/// Integer Newton iteration started above the root at 2^ceil(bits/n); the
/// iterates decrease monotonically to the floor root. A final exact
/// comparison clamps the result by +-1.
inline Nat integer_nth_root(const Nat& c, const Nat& n) {
  if (n.is_zero()) throw InvalidArgument("integer_nth_root: n must be at least 1");
  if (c < Nat(2) || n == Nat(1)) return c;
  const std::size_t bits = c.bit_length();
  // 2^n > c once n >= bits, so the root is 1.
  if (n >= Nat(bits)) return Nat(1);

  const std::uint64_t e = n.to_u64();
  const Nat n_minus_1(e - 1);
  Nat x = Nat(1) << ((bits + e - 1) / e);
  for (;;) {
    Nat y = (n_minus_1 * x + c / ipow(x, n_minus_1)) / n;
    if (y >= x) break;
    x = std::move(y);
  }
  while (ipow(x, n) > c) --x;
  while (ipow(x + Nat(1), n) <= c) ++x;
  return x;
}

/// True iff c is an exact n-th power; the root is written to *root when given.
inline bool is_exact_power(const Nat& c, const Nat& n, Nat* root = nullptr) {
  Nat r = integer_nth_root(c, n);
  const bool exact = ipow(r, n) == c;
  if (root != nullptr) *root = std::move(r);
  return exact;
}

/// base^exp mod modulus, right-to-left square-and-multiply.
inline Nat modpow(const Nat& base, const Nat& exp, const Nat& modulus) {
  if (modulus.is_zero()) throw InvalidArgument("modpow: modulus must be at least 1");
  if (modulus == Nat(1)) return Nat(0);
  Nat result(1);
  Nat b = base % modulus;
  const std::size_t bits = exp.bit_length();
  for (std::size_t i = 0; i < bits; ++i) {
    if (exp.bit(i)) result = (result * b) % modulus;
    b = (b * b) % modulus;
  }
  return result;
}

/// a / b, requiring b to divide a.
inline Nat div_exact(const Nat& a, const Nat& b) {
  if (b.is_zero()) throw InvalidArgument("div_exact: divisor must be at least 1");
  if (!(a % b).is_zero()) {
    throw NotDivisible("div_exact: " + b.str() + " does not divide " + a.str());
  }
  return a / b;
}

}  // namespace prefixpoly
