#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "defdom/graph.hpp"
#include "defdom/graph_io.hpp"

namespace defdom {

using Assignment = std::vector<bool>;
using Clause = std::array<int, 3>;

// 3-CNF over existential variables 1..a and universal variables a+1..a+b.
// Literal +v / -v. Each clause mentions three distinct variables.
struct E2Formula {
  int a = 0;
  int b = 0;
  std::vector<Clause> clauses;

  int c() const { return static_cast<int>(clauses.size()); }
  bool is_x(int literal) const { return std::abs(literal) <= a; }

  void validate() const {
    if (a < 0 || b < 0) throw InputError("formula: negative variable count");
    for (std::size_t k = 0; k < clauses.size(); ++k) {
      const auto& cl = clauses[k];
      for (int lit : cl)
        if (lit == 0 || std::abs(lit) > a + b)
          throw InputError("formula: clause " + std::to_string(k + 1) + " has literal " + std::to_string(lit) +
                           " outside 1.." + std::to_string(a + b));
      if (std::abs(cl[0]) == std::abs(cl[1]) || std::abs(cl[0]) == std::abs(cl[2]) ||
          std::abs(cl[1]) == std::abs(cl[2]))
        throw InputError("formula: clause " + std::to_string(k + 1) +
                         " must use three occurrences of three distinct variables");
    }
  }
};

inline bool literal_true(int literal, const E2Formula& f, const Assignment& nu, const Assignment& mu) {
  int var = std::abs(literal);
  bool value = var <= f.a ? nu[static_cast<std::size_t>(var) - 1] : mu[static_cast<std::size_t>(var - f.a) - 1];
  return literal > 0 ? value : !value;
}

// Some existential literal of the clause is true under nu.
inline bool satisfied_by_x(const E2Formula& f, const Clause& cl, const Assignment& nu) {
  for (int lit : cl)
    if (f.is_x(lit)) {
      bool value = nu[static_cast<std::size_t>(std::abs(lit)) - 1];
      if (lit > 0 ? value : !value) return true;
    }
  return false;
}

inline bool satisfies(const E2Formula& f, const Assignment& nu, const Assignment& mu) {
  for (const auto& cl : f.clauses) {
    bool ok = false;
    for (int lit : cl) ok = ok || literal_true(lit, f, nu, mu);
    if (!ok) return false;
  }
  return true;
}

inline Assignment assignment_from_bits(std::uint64_t bits, int width) {
  Assignment out(static_cast<std::size_t>(width));
  for (int i = 0; i < width; ++i) out[static_cast<std::size_t>(i)] = (bits >> i) & 1U;
  return out;
}

// First mu (binary counting order, y_1 least significant) making phi true.
inline std::optional<Assignment> find_satisfying_mu(const E2Formula& f, const Assignment& nu) {
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.b); ++bits) {
    auto mu = assignment_from_bits(bits, f.b);
    if (satisfies(f, nu, mu)) return mu;
  }
  return std::nullopt;
}

struct E2SatAnswer {
  bool yes = false;
  Assignment winning_nu;                                    // when yes
  std::vector<std::pair<Assignment, Assignment>> refutation;  // when no: (nu, satisfying mu) for every nu
};

// Exists nu such that no mu satisfies phi. Brute force over 2^(a+b).
inline E2SatAnswer solve_e2sat(const E2Formula& f) {
  f.validate();
  if (f.a + f.b > 30) throw InputError("formula too large for brute force (a + b > 30)");
  E2SatAnswer ans;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.a); ++bits) {
    auto nu = assignment_from_bits(bits, f.a);
    auto mu = find_satisfying_mu(f, nu);
    if (!mu) {
      ans.yes = true;
      ans.winning_nu = nu;
      ans.refutation.clear();
      return ans;
    }
    ans.refutation.emplace_back(nu, *mu);
  }
  return ans;
}

// "p e2cnf <a> <b> <c>" then c clause lines "l1 l2 l3 0".
inline E2Formula read_formula(std::istream& in) {
  E2Formula f;
  std::string line;
  int lineno = 0;
  long long declared = -1;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (declared >= 0 || tok.size() != 5 || tok[1] != "e2cnf")
        throw InputError("expected 'p e2cnf <a> <b> <c>' at " + detail::line_context(lineno, line));
      f.a = static_cast<int>(detail::parse_integer(tok[2], "a"));
      f.b = static_cast<int>(detail::parse_integer(tok[3], "b"));
      declared = detail::parse_integer(tok[4], "c");
      if (f.a < 0 || f.b < 0 || declared < 0) throw InputError("formula header counts must be non-negative");
      continue;
    }
    if (declared < 0) throw InputError("clause before header at " + detail::line_context(lineno, line));
    if (tok.size() != 4 || tok[3] != "0")
      throw InputError("expected three literals and a terminating 0 at " + detail::line_context(lineno, line));
    Clause cl{};
    for (int i = 0; i < 3; ++i) cl[static_cast<std::size_t>(i)] = static_cast<int>(detail::parse_integer(tok[static_cast<std::size_t>(i)], "literal"));
    f.clauses.push_back(cl);
  }
  if (declared < 0) throw InputError("missing 'p e2cnf' header");
  if (declared != f.c())
    throw InputError("header announces " + std::to_string(declared) + " clauses, found " + std::to_string(f.c()));
  f.validate();
  return f;
}

inline E2Formula read_formula_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_formula(in);
}

inline void write_formula(std::ostream& out, const E2Formula& f) {
  out << "p e2cnf " << f.a << ' ' << f.b << ' ' << f.c() << '\n';
  for (const auto& cl : f.clauses) out << cl[0] << ' ' << cl[1] << ' ' << cl[2] << " 0\n";
}

// Clauses over three distinct random variables with random signs.
inline E2Formula random_formula(int a, int b, int c, std::uint64_t seed) {
  if (a < 0 || b < 0 || c < 0) throw InputError("formula sizes must be non-negative");
  if (a + b < 3 && c > 0) throw InputError("need at least three variables to build clauses");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> var(1, a + b), sign(0, 1);
  E2Formula f{a, b, {}};
  for (int k = 0; k < c; ++k) {
    Clause cl{};
    for (int i = 0; i < 3; ++i) {
      int v = 0;
      do {
        v = var(rng);
      } while ((i > 0 && std::abs(cl[0]) == v) || (i > 1 && std::abs(cl[1]) == v));
      cl[static_cast<std::size_t>(i)] = sign(rng) ? v : -v;
    }
    f.clauses.push_back(cl);
  }
  return f;
}

inline std::string format_assignment(const Assignment& a) {
  std::string s;
  for (bool v : a) s += v ? '1' : '0';
  return s;
}

inline Assignment parse_assignment(const std::string& s, int width) {
  if (static_cast<int>(s.size()) != width || s.find_first_not_of("01") != std::string::npos)
    throw InputError("assignment must be " + std::to_string(width) + " characters of 0/1, got '" + s + "'");
  Assignment out;
  for (char ch : s) out.push_back(ch == '1');
  return out;
}

}  // namespace defdom
