#pragma once

// Base-B digit handling. Digits are always most-significant first.

#include "prefixpoly/intarith.hpp"

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace prefixpoly {

/// A numeral in a given base; value 0 is represented as digits = [0].
struct DigitString {
  Nat base;
  std::vector<Nat> digits;

  friend bool operator==(const DigitString&, const DigitString&) = default;
};

/// The unique k with B^(k-1) <= x < B^k.
inline Nat digit_count(const Nat& x, const Nat& base) {
  if (x.is_zero()) throw InvalidArgument("digit_count: x must be at least 1");
  if (base < Nat(2)) throw InvalidArgument("digit_count: base must be at least 2");
  Nat k(1);
  Nat bound = base;
  while (bound <= x) {
    bound *= base;
    ++k;
  }
  return k;
}

inline DigitString to_digits(const Nat& x, const Nat& base) {
  if (base < Nat(2)) throw InvalidArgument("to_digits: base must be at least 2");
  DigitString out{base, {}};
  if (x.is_zero()) {
    out.digits.emplace_back(0);
    return out;
  }
  Nat rest = x;
  while (!rest.is_zero()) {
    out.digits.push_back(rest % base);
    rest /= base;
  }
  std::reverse(out.digits.begin(), out.digits.end());
  return out;
}

inline Nat from_digits(const DigitString& d) {
  if (d.base < Nat(2)) throw InvalidArgument("from_digits: base must be at least 2");
  if (d.digits.empty()) throw InvalidArgument("from_digits: empty digit list");
  Nat value(0);
  for (const Nat& digit : d.digits) {
    if (digit >= d.base) {
      throw InvalidArgument("from_digits: digit " + digit.str() + " out of range for base " + d.base.str());
    }
    value = value * d.base + digit;
  }
  return value;
}

/// The base-B numeral of n written directly left of the numeral of x,
/// i.e. B^digit_count(x, B) * n + x.
inline Nat concat_prefix(const Nat& n, const Nat& x, const Nat& base) {
  if (n.is_zero()) throw InvalidArgument("concat_prefix: n must be at least 1");
  const Nat k = digit_count(x, base);
  return ipow(base, k) * n + x;
}

namespace detail {
inline constexpr std::string_view kDigitChars = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";
inline constexpr std::uint64_t kMaxAlnumBase = 36;
}  // namespace detail

/// Subscript-style numeral text: "213_6" for bases up to 36 (digits 0-9A-Z),
/// "[1,15]_40" style bracketed decimal digits above that.
inline std::string render_numeral(const Nat& x, const Nat& base) {
  const DigitString d = to_digits(x, base);
  std::string body;
  if (base <= Nat(detail::kMaxAlnumBase)) {
    for (const Nat& digit : d.digits) body += detail::kDigitChars[digit.to_u64()];
  } else {
    body = "[";
    for (std::size_t i = 0; i < d.digits.size(); ++i) {
      if (i != 0) body += ',';
      body += d.digits[i].str();
    }
    body += "]";
  }
  return body + "_" + base.str();
}

/// Inverse of render_numeral.
inline DigitString parse_numeral(std::string_view text) {
  const auto us = text.rfind('_');
  if (us == std::string_view::npos || us == 0) {
    throw InvalidArgument("numeral missing base suffix: '" + std::string(text) + "'");
  }
  DigitString d{Nat::parse(text.substr(us + 1)), {}};
  if (d.base < Nat(2)) throw InvalidArgument("numeral base must be at least 2");
  std::string_view body = text.substr(0, us);
  if (body.front() == '[') {
    if (body.back() != ']' || body.size() < 3) {
      throw InvalidArgument("unterminated digit list: '" + std::string(text) + "'");
    }
    body = body.substr(1, body.size() - 2);
    std::size_t start = 0;
    for (;;) {
      const auto comma = body.find(',', start);
      d.digits.push_back(Nat::parse(body.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (char c : body) {
      const auto pos = detail::kDigitChars.find(c);
      if (pos == std::string_view::npos) {
        throw InvalidArgument(std::string("bad digit character '") + c + "'");
      }
      d.digits.emplace_back(pos);
    }
  }
  for (const Nat& digit : d.digits) {
    if (digit >= d.base) throw InvalidArgument("digit " + digit.str() + " out of range for base " + d.base.str());
  }
  return d;
}

}  // namespace prefixpoly
