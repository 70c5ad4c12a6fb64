#pragma once

// Exhaustive search over (x, n): since B^k = (x^n - x) / n, B is determined
// by x, n and k, so a bounded (x, n, k) box is searched completely with no
// bound on B.

#include "prefixpoly/classes.hpp"
#include "prefixpoly/core.hpp"
#include "prefixpoly/intarith.hpp"
#include "prefixpoly/radix.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <vector>

namespace prefixpoly {

struct SearchBounds {
  std::uint64_t x_max = 2;
  std::uint64_t n_max = 2;
  std::uint64_t k_max = 6;  // > 2 so the k <= 2 theorem is tested, not assumed

  void validate() const {
    if (x_max < 2) throw InvalidArgument("search bounds: x_max must be at least 2");
    if (n_max < 2) throw InvalidArgument("search bounds: n_max must be at least 2");
    if (k_max < 1) throw InvalidArgument("search bounds: k_max must be at least 1");
  }

  friend bool operator==(const SearchBounds&, const SearchBounds&) = default;
};

struct ClassifiedSolution {
  PrefixPolymorphism value;
  std::optional<SolutionClass> solution_class;  // empty only for theorem-violating shapes

  friend bool operator==(const ClassifiedSolution&, const ClassifiedSolution&) = default;
};

enum class ViolationKind {
  TooManyDigits,          // k >= 3
  MultiDigitHighPower,    // n >= 3 with k != 1
  DigitExponentBound,     // (k-1)(n-1) > digit_count(n, B)
  CandidateMismatch,      // x != floor((B^k n)^(1/n)) + 1
};

inline std::string_view to_string(ViolationKind v) {
  switch (v) {
    case ViolationKind::TooManyDigits: return "k-at-most-2";
    case ViolationKind::MultiDigitHighPower: return "n-at-least-3-implies-k-1";
    case ViolationKind::DigitExponentBound: return "digit-exponent-bound";
    case ViolationKind::CandidateMismatch: return "candidate-root";
  }
  return "?";
}

struct Violation {
  PrefixPolymorphism quadruple;
  ViolationKind kind;
  std::string detail;
};

/// Raised when a non-solution is offered to a SearchResult.
class VerifyFailure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SearchResult {
  std::vector<ClassifiedSolution> solutions;  // sorted by (x, n, k)
  SearchBounds bounds;
  std::vector<Violation> violations;
};

inline bool solution_order(const ClassifiedSolution& a, const ClassifiedSolution& b) {
  return std::tie(a.value.x, a.value.n, a.value.k) < std::tie(b.value.x, b.value.n, b.value.k);
}

/// Adds p to the result after checking it is a genuine solution.
inline void append_verified(SearchResult& result, const PrefixPolymorphism& p) {
  const VerifyReport r = verify(p);
  if (!r.verdict) {
    throw VerifyFailure("rejected " + p.str() + ": equation " + (r.equation_holds ? "holds" : "fails") +
                        ", digit count " + (r.digit_count_holds ? "holds" : "fails"));
  }
  result.solutions.push_back({p, class_for_shape(p.k, p.n)});
}

/// Checks every solution against the structural theorems. Violations are
/// collected, one record per broken rule.
inline std::vector<Violation> validate_theorems(const SearchResult& result) {
  std::vector<Violation> out;
  for (const auto& s : result.solutions) {
    const PrefixPolymorphism& p = s.value;
    if (p.k > Nat(2)) {
      out.push_back({p, ViolationKind::TooManyDigits, "k = " + p.k.str()});
    }
    if (p.n >= Nat(3) && p.k != Nat(1)) {
      out.push_back({p, ViolationKind::MultiDigitHighPower, "n = " + p.n.str() + ", k = " + p.k.str()});
    }
    if (p.base >= Nat(2) && p.k >= Nat(1) && p.n >= Nat(1)) {
      const Nat j = digit_count(p.n, p.base);
      const Nat lhs = (p.k - Nat(1)) * (p.n - Nat(1));
      if (lhs > j) {
        out.push_back({p, ViolationKind::DigitExponentBound, "(k-1)(n-1) = " + lhs.str() + " > j = " + j.str()});
      }
      if (p.n >= Nat(2)) {
        const Nat cand = candidate_x(p.base, p.n, p.k);
        if (cand != p.x) {
          out.push_back({p, ViolationKind::CandidateMismatch, "candidate = " + cand.str()});
        }
      }
    }
  }
  return out;
}

namespace detail {

inline void search_x_range(const SearchBounds& bounds, std::uint64_t x_lo, std::uint64_t x_hi,
                           std::vector<PrefixPolymorphism>& out) {
  for (std::uint64_t xv = x_lo; xv <= x_hi; ++xv) {
    const Nat x(xv);
    Nat power = x;
    for (std::uint64_t nv = 2; nv <= bounds.n_max; ++nv) {
      power *= x;
      const Nat n(nv);
      const Nat c = power - x;
      if (!(c % n).is_zero()) continue;
      const Nat m = c / n;
      for (std::uint64_t kv = 1; kv <= bounds.k_max; ++kv) {
        Nat base;
        if (!is_exact_power(m, Nat(kv), &base)) continue;
        if (base < Nat(2)) continue;
        if (digit_count(x, base) != Nat(kv)) continue;
        out.push_back({x, n, base, Nat(kv)});
      }
    }
  }
}

}  // namespace detail

/// All prefix polymorphisms with x <= x_max, n <= n_max, k <= k_max.
///
/// The x range is split into contiguous chunks across `workers` threads;
/// results are merged and sorted, so output does not depend on the worker
/// count.
inline SearchResult brute_force(const SearchBounds& bounds, unsigned workers = 1) {
  bounds.validate();
  if (workers == 0) workers = 1;
  const std::uint64_t span = bounds.x_max - 1;  // x in [2, x_max]
  if (workers > span) workers = static_cast<unsigned>(span);

  std::vector<std::vector<PrefixPolymorphism>> parts(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    const std::uint64_t chunk = span / workers;
    const std::uint64_t extra = span % workers;
    std::uint64_t lo = 2;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t len = chunk + (w < extra ? 1 : 0);
      const std::uint64_t hi = lo + len - 1;
      threads.emplace_back([&bounds, &parts, w, lo, hi] { detail::search_x_range(bounds, lo, hi, parts[w]); });
      lo = hi + 1;
    }
  }

  SearchResult result;
  result.bounds = bounds;
  for (const auto& part : parts) {
    for (const auto& p : part) append_verified(result, p);
  }
  std::sort(result.solutions.begin(), result.solutions.end(), solution_order);
  result.violations = validate_theorems(result);
  return result;
}

}  // namespace prefixpoly
