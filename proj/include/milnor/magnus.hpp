#pragma once
// Truncated noncommutative integer power series and the Magnus expansion
// E : F(r) -> Z<<X_0, X_1, ...>>, x_i |-> 1 + X_i. Coefficients of E carry
// the Milnor mu numbers, so everything here is exact integer arithmetic.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <milnor/bigint.hpp>
#include <milnor/words.hpp>

namespace milnor {

// A word X_{i1}...X_{id} in the noncommuting variables; degree = length.
// The empty sequence is the unit monomial.
using Monomial = std::vector<std::uint32_t>;

// Graded lexicographic order: by degree, then lexicographically. Fixes the
// storage order and the debug rendering.
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Integer noncommutative power series truncated at a fixed degree. Zero
// coefficients are never stored. Arithmetic between different truncation
// degrees is an error rather than an implicit re-truncation.
class Series {
 public:
  using TermMap = std::map<Monomial, Int, GradedLexLess>;

  explicit Series(int truncation_degree) : degree_(truncation_degree) {
    if (truncation_degree < 1)
      throw std::invalid_argument("truncation degree must be positive");
  }

  static Series one(int truncation_degree) {
    Series s(truncation_degree);
    s.terms_.emplace(Monomial{}, 1);
    return s;
  }

  int truncation_degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }

  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() &&
           terms_.begin()->second == 1;
  }

  // Accumulates c on monomial m, dropping the term if it cancels to zero.
  void add_term(const Monomial& m, const Int& c) {
    if (static_cast<int>(m.size()) > degree_)
      throw std::invalid_argument("monomial degree exceeds truncation degree");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend bool operator==(const Series&, const Series&) = default;

 private:
  int degree_;
  TermMap terms_;
};

// Noncommutative product; monomials of degree above the shared truncation
// degree are discarded.
inline Series series_mul(const Series& a, const Series& b) {
  if (a.truncation_degree() != b.truncation_degree())
    throw std::invalid_argument("mismatched truncation degrees");
  const int degree = a.truncation_degree();
  Series out(degree);
  for (const auto& [ma, ca] : a.terms()) {
    const int budget = degree - static_cast<int>(ma.size());
    for (const auto& [mb, cb] : b.terms()) {
      if (static_cast<int>(mb.size()) > budget) break;  // graded order
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

inline Series operator*(const Series& a, const Series& b) { return series_mul(a, b); }

namespace detail {

// Generalized binomial coefficient C(p, j) for any integer p; always an
// integer (prefix products of j consecutive integers are divisible by j!).
inline Int binomial(std::int64_t p, int j) {
  Int c = 1;
  for (int t = 1; t <= j; ++t) {
    c *= (Int(p) - (t - 1));
    c /= t;
  }
  return c;
}

// E(x_i^p) = (1 + X_i)^p truncated: sum_j C(p, j) X_i^j.
inline Series letter_series(const Letter& l, int degree) {
  Series s(degree);
  Monomial m;
  for (int j = 0; j <= degree; ++j) {
    s.add_term(m, binomial(l.exponent, j));
    m.push_back(l.index);
  }
  return s;
}

}  // namespace detail

// The Magnus expansion of w, truncated at the given degree.
inline Series expand(const Word& w, int degree) {
  Series acc = Series::one(degree);
  for (const Letter& l : w.letters())
    acc = series_mul(acc, detail::letter_series(l, degree));
  return acc;
}

// Stored coefficient of m in s, or 0 if absent.
inline Int coefficient(const Series& s, const Monomial& m) {
  if (static_cast<int>(m.size()) > s.truncation_degree())
    throw std::invalid_argument("monomial degree exceeds truncation degree");
  auto it = s.terms().find(m);
  return it == s.terms().end() ? Int(0) : it->second;
}

// Sets X_g = 0: deletes every term whose monomial contains the index g.
inline Series substitute_zero(const Series& s, std::uint32_t g) {
  Series out(s.truncation_degree());
  for (const auto& [m, c] : s.terms()) {
    bool contains = false;
    for (std::uint32_t i : m)
      if (i == g) {
        contains = true;
        break;
      }
    if (!contains) out.add_term(m, c);
  }
  return out;
}

// Word-problem test through the Magnus expansion. A reduced word with
// syllables (i1,p1)...(is,ps) has coefficient p1...ps on X_{i1}...X_{is},
// so truncating at the syllable count is a complete test; checking the
// truncations of increasing degree is sound and exits early on the first
// nonzero coefficient.
inline bool magnus_trivial(const Word& w) {
  if (w.empty()) return true;
  const int syllables = w.syllable_count();
  for (int d = 1; d <= syllables; ++d)
    if (!expand(w, d).is_one()) return false;
  return true;
}

// Deterministic rendering in graded lexicographic order, e.g.
// "1 + 2 X1 + 1 X1 X2 - 1 X2 X1".
inline std::string to_string(const Series& s) {
  if (s.terms().empty()) return "0";
  std::string out;
  for (const auto& [m, c] : s.terms()) {
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += boost::multiprecision::abs(c).str();
    for (std::uint32_t i : m) {
      out += " X";
      out += std::to_string(i);
    }
  }
  return out;
}

}  // namespace milnor
