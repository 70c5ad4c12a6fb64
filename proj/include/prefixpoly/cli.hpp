#pragma once

// Command-line front end. Kept in a header so tests can drive it in-process.
//
// Exit codes: 0 success, 1 verification false (or search found violations),
// 2 usage or domain error.

#include "prefixpoly/classes.hpp"
#include "prefixpoly/core.hpp"
#include "prefixpoly/radix.hpp"
#include "prefixpoly/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace prefixpoly::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitUsage = 2;

enum class Format { Text, Json, Csv };

struct OutputRecord {
  std::string x;
  std::string n;
  std::string base;
  std::uint64_t k = 0;
  std::string solution_class;
  std::string rendered;
};

inline OutputRecord make_record(const PrefixPolymorphism& p, std::optional<SolutionClass> c) {
  return {p.x.str(), p.n.str(), p.base.str(), p.k.to_u64(),
          c ? std::string(to_string(*c)) : std::string("none"), render_power(p)};
}

inline OutputRecord make_record(const PrefixPolymorphism& p) { return make_record(p, class_for_shape(p.k, p.n)); }

inline nlohmann::ordered_json to_json(const OutputRecord& r) {
  nlohmann::ordered_json j;
  j["x"] = r.x;
  j["n"] = r.n;
  j["B"] = r.base;
  j["k"] = r.k;
  j["class"] = r.solution_class;
  j["rendered"] = r.rendered;
  return j;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline constexpr const char* kCsvHeader = "x,n,B,k,class,rendered";

inline std::string csv_row(const OutputRecord& r) {
  return r.x + "," + r.n + "," + r.base + "," + std::to_string(r.k) + "," + csv_field(r.solution_class) + "," +
         csv_field(r.rendered);
}

inline std::string text_row(const OutputRecord& r) {
  return "(" + r.x + ", " + r.n + ", " + r.base + ", " + std::to_string(r.k) + ")  " + r.solution_class + "  " +
         r.rendered;
}

inline void emit_records(const std::vector<OutputRecord>& records, Format format, std::ostream& out) {
  switch (format) {
    case Format::Text:
      for (const auto& r : records) out << text_row(r) << '\n';
      break;
    case Format::Json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : records) arr.push_back(to_json(r));
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << kCsvHeader << '\n';
      for (const auto& r : records) out << csv_row(r) << '\n';
      break;
  }
}

namespace detail {

inline Nat parse_arg(const std::string& text, const char* what) {
  try {
    return Nat::parse(text);
  } catch (const InvalidArgument&) {
    throw InvalidArgument(std::string(what) + " must be a non-negative decimal integer, got '" + text + "'");
  }
}

inline std::uint64_t parse_small(const std::string& text, const char* what) {
  const Nat v = parse_arg(text, what);
  if (!v.fits_u64()) throw InvalidArgument(std::string(what) + " is too large");
  return v.to_u64();
}

// When k is omitted: the k with (x^n - x)/n = B^k if there is one, so that
// near-misses like (2, 3, 2, 1) are diagnosed against the equation's own k.
inline Nat infer_k(const Nat& x, const Nat& n, const Nat& base) {
  const Nat computed = digit_count(x, base);
  const Nat c = ipow(x, n) - x;
  if (!(c % n).is_zero()) return computed;
  const Nat m = c / n;
  Nat power = base;
  Nat k(1);
  while (power < m) {
    power *= base;
    ++k;
  }
  return power == m ? k : computed;
}

inline int run_verify(const std::vector<std::string>& args, Format format, std::ostream& out, std::ostream& err) {
  const Nat x = parse_arg(args[0], "x");
  const Nat n = parse_arg(args[1], "n");
  const Nat base = parse_arg(args[2], "B");
  if (x < Nat(2)) throw InvalidArgument("domain error: x must be at least 2");
  if (n < Nat(2)) throw InvalidArgument("domain error: n must be at least 2");
  if (base < Nat(2)) throw InvalidArgument("domain error: B must be at least 2");
  Nat k;
  if (args.size() > 3) {
    k = parse_arg(args[3], "k");
    if (k < Nat(1)) throw InvalidArgument("domain error: k must be at least 1");
  } else {
    k = infer_k(x, n, base);
  }
  if (!k.fits_u64()) throw InvalidArgument("domain error: k is too large");

  const VerifyReport report = verify(x, n, base, k);
  const PrefixPolymorphism p{x, n, base, k};
  const OutputRecord record =
      make_record(p, report.verdict ? class_for_shape(k, n) : std::optional<SolutionClass>{});

  switch (format) {
    case Format::Text: {
      auto mark = [](bool ok) { return ok ? "holds" : "FAILS"; };
      out << p.str() << "  " << record.rendered << '\n';
      out << "equation x^n = B^k*n + x: " << mark(report.equation_holds) << '\n';
      out << "digit count (x has " << report.computed_k << " digit(s) in base " << base
          << ", k = " << k << "): " << mark(report.digit_count_holds) << '\n';
      out << "domain x,n,B >= 2 and k >= 1: " << mark(report.domain_ok) << '\n';
      out << "verdict: " << (report.verdict ? "prefix polymorphism (" + record.solution_class + ")"
                                            : std::string("not a prefix polymorphism"))
          << '\n';
      break;
    }
    case Format::Json: {
      nlohmann::ordered_json j = to_json(record);
      j["equation_holds"] = report.equation_holds;
      j["digit_count_holds"] = report.digit_count_holds;
      j["domain_ok"] = report.domain_ok;
      j["computed_k"] = report.computed_k.str();
      j["verdict"] = report.verdict;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      out << kCsvHeader << ",equation_holds,digit_count_holds,domain_ok,computed_k,verdict\n";
      out << csv_row(record) << ',' << report.equation_holds << ',' << report.digit_count_holds << ','
          << report.domain_ok << ',' << report.computed_k << ',' << report.verdict << '\n';
      break;
  }
  (void)err;
  return report.verdict ? kExitOk : kExitFalse;
}

inline int run_solve(const std::string& base_text, const std::string& n_text, Format format, std::ostream& out) {
  const Nat base = parse_arg(base_text, "--base");
  const Nat n = parse_arg(n_text, "--exp");
  if (base < Nat(2)) throw InvalidArgument("domain error: base must be at least 2");
  if (n < Nat(2)) throw InvalidArgument("domain error: exponent must be at least 2");
  std::vector<OutputRecord> records;
  for (const auto& p : solve_all(base, n)) records.push_back(make_record(p));
  if (records.empty() && format == Format::Text) {
    out << "no solution\n";
    return kExitOk;
  }
  emit_records(records, format, out);
  return kExitOk;
}

struct EnumerateArgs {
  std::string solution_class;
  std::optional<std::string> count;
  std::optional<std::string> t_max;
  std::optional<std::string> n_max;
};

inline int run_enumerate(const EnumerateArgs& a, Format format, std::ostream& out) {
  std::vector<OutputRecord> records;
  if (a.solution_class == "triangular" || a.solution_class == "pell") {
    if (!a.count) throw InvalidArgument("--count is required for class " + a.solution_class);
    const std::uint64_t count = parse_small(*a.count, "--count");
    if (count < 1) throw InvalidArgument("--count must be at least 1");
    if (a.solution_class == "triangular") {
      for (std::uint64_t t = 4; t < 4 + count; ++t) records.push_back(make_record(triangular(Nat(t))));
    } else {
      for (const auto& p : pell_solutions(count)) records.push_back(make_record(p));
    }
  } else {
    if (!a.t_max || !a.n_max) throw InvalidArgument("--t-max and --n-max are required for class " + a.solution_class);
    const std::uint64_t t_max = parse_small(*a.t_max, "--t-max");
    const std::uint64_t n_max = parse_small(*a.n_max, "--n-max");
    if (t_max < 2) throw InvalidArgument("--t-max must be at least 2");
    if (n_max < 3) throw InvalidArgument("--n-max must be at least 3");
    const bool primes_only = a.solution_class == "prime-family";
    for (std::uint64_t n = 3; n <= n_max; ++n) {
      if (primes_only && !(n % 2 == 1 && is_prime_by_trial_division(Nat(n)))) continue;
      for (std::uint64_t t = 2; t <= t_max; ++t) {
        const auto r = primes_only ? prime_family(Nat(t), Nat(n)) : fermat_solution(Nat(t), Nat(n));
        if (r) records.push_back(make_record(*r.solution));
      }
    }
  }
  emit_records(records, format, out);
  return kExitOk;
}

struct SearchArgs {
  std::string x_max;
  std::string n_max;
  std::string k_max = "6";
  unsigned workers = 1;
};

inline int run_search(const SearchArgs& a, Format format, std::ostream& out, std::ostream& err) {
  SearchBounds bounds{parse_small(a.x_max, "--x-max"), parse_small(a.n_max, "--n-max"),
                      parse_small(a.k_max, "--k-max")};
  bounds.validate();
  const SearchResult result = brute_force(bounds, a.workers);

  std::vector<OutputRecord> records;
  records.reserve(result.solutions.size());
  for (const auto& s : result.solutions) records.push_back(make_record(s.value, s.solution_class));
  emit_records(records, format, out);

  std::ostream& summary = format == Format::Text ? out : err;
  summary << "solutions: " << result.solutions.size() << ", violations: " << result.violations.size() << '\n';
  for (const auto& v : result.violations) {
    summary << "violation " << to_string(v.kind) << " at " << v.quadruple << ": " << v.detail << '\n';
  }
  return result.violations.empty() ? kExitOk : kExitFalse;
}

}  // namespace detail

/// Runs the tool on argv-style arguments (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verify, solve, enumerate and search prefix polymorphisms x^n = B^k*n + x", "prefixpoly"};
  app.require_subcommand(1);

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

  std::vector<std::string> verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check whether (x, n, B[, k]) is a prefix polymorphism");
  verify_cmd->add_option("values", verify_args, "x n B [k]")->required()->expected(3, 4);
  verify_cmd->fallthrough();

  std::string solve_base;
  std::string solve_exp;
  auto* solve_cmd = app.add_subcommand("solve", "Find x with x^n = B^k*n + x for given B and n");
  solve_cmd->add_option("--base", solve_base, "Base B (>= 2)")->required();
  solve_cmd->add_option("--exp", solve_exp, "Exponent n (>= 2)")->required();
  solve_cmd->fallthrough();

  detail::EnumerateArgs enum_args;
  auto* enum_cmd = app.add_subcommand("enumerate", "List members of a solution family");
  enum_cmd->add_option("--class", enum_args.solution_class, "Family")
      ->required()
      ->check(CLI::IsMember({"triangular", "pell", "fermat", "prime-family"}));
  enum_cmd->add_option("--count", enum_args.count, "Number of members (triangular, pell)");
  enum_cmd->add_option("--t-max", enum_args.t_max, "Largest t (fermat, prime-family)");
  enum_cmd->add_option("--n-max", enum_args.n_max, "Largest exponent (fermat, prime-family)");
  enum_cmd->fallthrough();

  detail::SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive search with theorem validation");
  search_cmd->add_option("--x-max", search_args.x_max, "Largest x")->required();
  search_cmd->add_option("--n-max", search_args.n_max, "Largest n")->required();
  search_cmd->add_option("--k-max", search_args.k_max, "Largest k")->capture_default_str();
  search_cmd->add_option("--workers", search_args.workers, "Worker threads")->capture_default_str()->check(CLI::Range(1u, 1024u));
  search_cmd->fallthrough();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Format format = format_name == "json" ? Format::Json : (format_name == "csv" ? Format::Csv : Format::Text);
  try {
    if (*verify_cmd) return detail::run_verify(verify_args, format, out, err);
    if (*solve_cmd) return detail::run_solve(solve_base, solve_exp, format, out);
    if (*enum_cmd) return detail::run_enumerate(enum_args, format, out);
    if (*search_cmd) return detail::run_search(search_args, format, out, err);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OutOfRange& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace prefixpoly::cli
