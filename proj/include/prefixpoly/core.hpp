#pragma once

// Prefix polymorphisms: quadruples (x, n, B, k) with x^n = B^k * n + x where
// x has exactly k digits in base B. Equivalently, the base-B numeral of x^n
// is the numeral of n followed by the numeral of x.

#include "prefixpoly/intarith.hpp"
#include "prefixpoly/radix.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace prefixpoly {

struct PrefixPolymorphism {
  Nat x;
  Nat n;
  Nat base;
  Nat k;

  friend bool operator==(const PrefixPolymorphism&, const PrefixPolymorphism&) = default;

  [[nodiscard]] std::string str() const {
    return "(" + x.str() + ", " + n.str() + ", " + base.str() + ", " + k.str() + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const PrefixPolymorphism& p) { return os << p.str(); }
};

/// Condition-by-condition outcome of checking a quadruple.
struct VerifyReport {
  bool equation_holds = false;     // x^n == B^k * n + x
  bool digit_count_holds = false;  // B^(k-1) <= x < B^k
  bool domain_ok = false;          // x >= 2, n >= 2, B >= 2, k >= 1
  Nat computed_k;                  // digit_count(x, B), or 0 when undefined
  bool verdict = false;
};

/// Checks every defining condition independently. Never throws on bad
/// domains; those are reported through domain_ok.
inline VerifyReport verify(const Nat& x, const Nat& n, const Nat& base, const Nat& k) {
  VerifyReport r;
  r.domain_ok = x >= Nat(2) && n >= Nat(2) && base >= Nat(2) && k >= Nat(1);
  if (!x.is_zero() && base >= Nat(2)) {
    r.computed_k = digit_count(x, base);
    r.digit_count_holds = r.computed_k == k;
  }
  r.equation_holds = ipow(x, n) == ipow(base, k) * n + x;
  r.verdict = r.equation_holds && r.digit_count_holds && r.domain_ok;
  return r;
}

inline VerifyReport verify(const PrefixPolymorphism& p) { return verify(p.x, p.n, p.base, p.k); }

/// floor((B^k * n)^(1/n)) + 1: the only integer that can solve x^n = B^k n + x.
inline Nat candidate_x(const Nat& base, const Nat& n, const Nat& k) {
  if (base < Nat(2)) throw InvalidArgument("candidate_x: base must be at least 2");
  if (n < Nat(2)) throw InvalidArgument("candidate_x: n must be at least 2");
  if (k < Nat(1)) throw InvalidArgument("candidate_x: k must be at least 1");
  return integer_nth_root(ipow(base, k) * n, n) + Nat(1);
}

/// Every prefix polymorphism with the given base and exponent, ordered by k.
///
/// Only k = 1, 2 can occur, and k = 2 only when n = 2, so those are the only
/// digit counts probed. Each probe tests the single candidate root.
inline std::vector<PrefixPolymorphism> solve_all(const Nat& base, const Nat& n) {
  if (base < Nat(2)) throw InvalidArgument("solve: base must be at least 2");
  if (n < Nat(2)) throw InvalidArgument("solve: n must be at least 2");
  const std::uint64_t k_limit = n == Nat(2) ? 2 : 1;
  std::vector<PrefixPolymorphism> found;
  for (std::uint64_t k = 1; k <= k_limit; ++k) {
    const Nat x = candidate_x(base, n, Nat(k));
    if (verify(x, n, base, Nat(k)).verdict) {
      for (const auto& prior : found) {
        if (prior.x == x) {
          throw InternalInconsistency("solve: x = " + x.str() + " verified with two digit counts in base " +
                                      base.str());
        }
      }
      found.push_back({x, n, base, Nat(k)});
    }
  }
  return found;
}

/// The smallest-k prefix polymorphism for (B, n), if any.
inline std::optional<PrefixPolymorphism> solve(const Nat& base, const Nat& n) {
  auto all = solve_all(base, n);
  if (all.empty()) return std::nullopt;
  return all.front();
}

/// True iff the base-B numeral of x^n ends with the numeral of x.
inline bool is_n_polymorphic(const Nat& x, const Nat& n, const Nat& base) {
  if (x.is_zero()) throw InvalidArgument("is_n_polymorphic: x must be at least 1");
  if (n < Nat(2)) throw InvalidArgument("is_n_polymorphic: n must be at least 2");
  if (base < Nat(2)) throw InvalidArgument("is_n_polymorphic: base must be at least 2");
  const Nat modulus = ipow(base, digit_count(x, base));
  return modpow(x, n, modulus) == x % modulus;
}

/// "x_B^n = (x^n)_B", e.g. "13_6^2 = 213_6".
inline std::string render_power(const Nat& x, const Nat& n, const Nat& base) {
  return render_numeral(x, base) + "^" + n.str() + " = " + render_numeral(ipow(x, n), base);
}

inline std::string render_power(const PrefixPolymorphism& p) { return render_power(p.x, p.n, p.base); }

}  // namespace prefixpoly
