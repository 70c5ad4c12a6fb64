#pragma once

// The three solution families and their constructive parametrizations.
//
//   Triangular  k = 1, n = 2    (t, 2, t(t-1)/2, 1),        t >= 4
//   Pell        k = 2, n = 2    ((1+z)/2, 2, y, 2),          z^2 - 8y^2 = 1
//   Fermat      k = 1, n >= 3   (t, n, (t^n - t)/n, 1),      t^n = t (mod n)

#include "prefixpoly/core.hpp"
#include "prefixpoly/intarith.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace prefixpoly {

class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

enum class SolutionClass { Triangular, Pell, Fermat };

inline std::string_view to_string(SolutionClass c) {
  switch (c) {
    case SolutionClass::Triangular: return "Triangular";
    case SolutionClass::Pell: return "Pell";
    case SolutionClass::Fermat: return "Fermat";
  }
  return "?";
}

/// The class a (k, n) pair falls in, or nullopt when no prefix polymorphism
/// can have that shape.
inline std::optional<SolutionClass> class_for_shape(const Nat& k, const Nat& n) {
  if (k == Nat(1) && n == Nat(2)) return SolutionClass::Triangular;
  if (k == Nat(2) && n == Nat(2)) return SolutionClass::Pell;
  if (k == Nat(1) && n >= Nat(3)) return SolutionClass::Fermat;
  return std::nullopt;
}

/// Re-verifies p and returns its class.
inline SolutionClass classify(const PrefixPolymorphism& p) {
  if (!verify(p).verdict) throw InvalidArgument("classify: " + p.str() + " is not a prefix polymorphism");
  auto c = class_for_shape(p.k, p.n);
  if (!c) throw InternalInconsistency("classify: verified quadruple " + p.str() + " fits no class");
  return *c;
}

namespace detail {
inline PrefixPolymorphism checked(PrefixPolymorphism p, std::string_view origin) {
  if (!verify(p).verdict) {
    throw InternalInconsistency(std::string(origin) + " produced non-solution " + p.str());
  }
  return p;
}
}  // namespace detail

inline PrefixPolymorphism triangular(const Nat& t) {
  if (t < Nat(4)) throw OutOfRange("triangular: t = " + t.str() + " is below the minimum t = 4");
  return detail::checked({t, Nat(2), t * (t - Nat(1)) / Nat(2), Nat(1)}, "triangular");
}

/// A solution of z^2 - 8y^2 = 1; index t gives z + y*sqrt(8) = (3 + sqrt(8))^t.
struct PellPair {
  Nat z;
  Nat y;
  Nat index;

  friend bool operator==(const PellPair&, const PellPair&) = default;
};

/// First `count` solutions, t = 1, 2, ..., via the exact recurrence
/// (z, y) -> (3z + 8y, z + 3y) from (3, 1).
inline std::vector<PellPair> pell_pairs(std::size_t count) {
  std::vector<PellPair> out;
  out.reserve(count);
  PellPair cur{Nat(3), Nat(1), Nat(1)};
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(cur);
    cur = PellPair{Nat(3) * cur.z + Nat(8) * cur.y, cur.z + Nat(3) * cur.y, cur.index + Nat(1)};
  }
  return out;
}

/// First `count` Pell-class quadruples, starting from t = 2 (t = 1 gives B = 1).
inline std::vector<PrefixPolymorphism> pell_solutions(std::size_t count) {
  std::vector<PrefixPolymorphism> out;
  out.reserve(count);
  const auto pairs = pell_pairs(count + 1);
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    const PellPair& p = pairs[i];
    out.push_back(detail::checked({(Nat(1) + p.z) / Nat(2), Nat(2), p.y, Nat(2)}, "pell_solutions"));
  }
  return out;
}

/// t^n = t (mod n).
inline bool is_weak_fermat_pseudoprime(const Nat& t, const Nat& n) {
  if (n.is_zero()) throw InvalidArgument("is_weak_fermat_pseudoprime: n must be at least 1");
  return modpow(t, n, n) == t % n;
}

enum class FermatRejection { None, CongruenceFails, ExcludedCase };

struct FermatOutcome {
  std::optional<PrefixPolymorphism> solution;
  FermatRejection reason = FermatRejection::None;

  explicit operator bool() const noexcept { return solution.has_value(); }
};

inline FermatOutcome fermat_solution(const Nat& t, const Nat& n) {
  if (t < Nat(2)) throw InvalidArgument("fermat_solution: t must be at least 2");
  if (n < Nat(3)) throw InvalidArgument("fermat_solution: n must be at least 3");
  if (!is_weak_fermat_pseudoprime(t, n)) return {std::nullopt, FermatRejection::CongruenceFails};
  // (2, 3, 2, 1) satisfies the equation, but 2 has two binary digits.
  if (t == Nat(2) && n == Nat(3)) return {std::nullopt, FermatRejection::ExcludedCase};
  const Nat base = div_exact(ipow(t, n) - t, n);
  return {detail::checked({t, n, base, Nat(1)}, "fermat_solution"), FermatRejection::None};
}

inline bool is_prime_by_trial_division(const Nat& p) {
  if (p < Nat(2)) return false;
  if (p < Nat(4)) return true;
  if (!p.is_odd()) return false;
  for (Nat d(3); d * d <= p; d += Nat(2)) {
    if ((p % d).is_zero()) return false;
  }
  return true;
}

/// Fermat-class member for an odd prime exponent. The congruence always
/// holds for primes, so the only empty result is the excluded (2, 3).
inline FermatOutcome prime_family(const Nat& t, const Nat& p) {
  if (p < Nat(3) || !p.is_odd()) throw InvalidArgument("prime_family: p = " + p.str() + " is not an odd prime");
  if (!is_prime_by_trial_division(p)) throw InvalidArgument("prime_family: p = " + p.str() + " is composite");
  auto out = fermat_solution(t, p);
  if (out.reason == FermatRejection::CongruenceFails) {
    throw InternalInconsistency("prime_family: congruence failed for prime " + p.str());
  }
  return out;
}

}  // namespace prefixpoly
