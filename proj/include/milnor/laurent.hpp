#pragma once
// Exact one-variable Laurent polynomials over the integers. Two variable
// tags: s stands for sqrt(t) and carries negative exponents; z = s^-1 - s is
// the Conway variable and is an ordinary polynomial variable. The two are
// bridged by exact substitution in both directions.

#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <milnor/bigint.hpp>
#include <milnor/words.hpp>

namespace milnor {

enum class Var : char { s = 's', z = 'z' };

inline char var_letter(Var v) { return static_cast<char>(v); }

// Sparse exact Laurent polynomial. The zero polynomial is the empty map;
// z-tagged polynomials have only nonnegative exponents.
class LaurentPoly {
 public:
  using CoeffMap = std::map<int, Int>;

  explicit LaurentPoly(Var var) : var_(var) {}

  static LaurentPoly zero(Var var) { return LaurentPoly(var); }

  static LaurentPoly constant(Var var, Int c) {
    LaurentPoly p(var);
    p.add_term(0, std::move(c));
    return p;
  }

  static LaurentPoly one(Var var) { return constant(var, 1); }

  static LaurentPoly term(Var var, int exponent, Int c) {
    LaurentPoly p(var);
    p.add_term(exponent, std::move(c));
    return p;
  }

  // The variable itself, s or z.
  static LaurentPoly variable(Var var) { return term(var, 1, 1); }

  Var var() const { return var_; }
  const CoeffMap& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Int coefficient(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? Int(0) : it->second;
  }

  // Lowest/highest exponent of a nonzero polynomial.
  int min_exponent() const {
    require_nonzero();
    return coeffs_.begin()->first;
  }
  int max_exponent() const {
    require_nonzero();
    return coeffs_.rbegin()->first;
  }

  void add_term(int exponent, const Int& c) {
    if (var_ == Var::z && exponent < 0)
      throw std::invalid_argument("z-polynomials cannot have negative exponents");
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void require_nonzero() const {
    if (coeffs_.empty()) throw std::logic_error("zero polynomial has no degree");
  }

  Var var_;
  CoeffMap coeffs_;
};

inline std::string to_string(const LaurentPoly& p);

namespace detail {
inline void require_same_var(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.var() != q.var())
    throw std::invalid_argument("mixed variable tags in Laurent arithmetic");
}
}  // namespace detail

inline LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
  detail::require_same_var(p, q);
  LaurentPoly out = p;
  for (const auto& [e, c] : q.coefficients()) out.add_term(e, c);
  return out;
}

inline LaurentPoly operator-(const LaurentPoly& p) {
  LaurentPoly out(p.var());
  for (const auto& [e, c] : p.coefficients()) out.add_term(e, -c);
  return out;
}

inline LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) {
  return p + (-q);
}

inline LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  detail::require_same_var(p, q);
  LaurentPoly out(p.var());
  for (const auto& [ep, cp] : p.coefficients())
    for (const auto& [eq, cq] : q.coefficients()) out.add_term(ep + eq, cp * cq);
  return out;
}

// Substitutes z = s^-1 - s and expands exactly; a ring homomorphism from
// z-polynomials into s-Laurent polynomials.
inline LaurentPoly z_to_s(const LaurentPoly& p) {
  if (p.var() != Var::z) throw std::invalid_argument("z_to_s expects a z-polynomial");
  const LaurentPoly base =
      LaurentPoly::term(Var::s, -1, 1) - LaurentPoly::variable(Var::s);
  LaurentPoly out(Var::s);
  LaurentPoly power = LaurentPoly::one(Var::s);
  int current = 0;
  for (const auto& [e, c] : p.coefficients()) {
    for (; current < e; ++current) power = power * base;
    out = out + LaurentPoly::constant(Var::s, c) * power;
  }
  return out;
}

// Inverse substitution. Only s-polynomials in the subring generated by
// s^-1 - s (equivalently p(s) = p(-s^-1)) convert; anything else leaves a
// nonzero remainder and is rejected. Back-substitutes from the most
// negative exponent downward: each step removes the s^-d term by
// subtracting c*(s^-1 - s)^d, strictly raising the minimum exponent.
inline LaurentPoly s_to_z(const LaurentPoly& p) {
  if (p.var() != Var::s) throw std::invalid_argument("s_to_z expects an s-polynomial");
  const LaurentPoly base =
      LaurentPoly::term(Var::s, -1, 1) - LaurentPoly::variable(Var::s);
  LaurentPoly out(Var::z);
  LaurentPoly r = p;
  while (!r.is_zero()) {
    const int e = r.min_exponent();
    if (e > 0)
      throw std::domain_error("not expressible in z: nonzero remainder " + to_string(r));
    const int d = -e;
    const Int c = r.coefficient(e);
    out.add_term(d, c);
    LaurentPoly power = LaurentPoly::one(Var::s);
    for (int i = 0; i < d; ++i) power = power * base;
    r = r - LaurentPoly::constant(Var::s, c) * power;
  }
  return out;
}

// Drops all terms of exponent >= m (i.e. reduces mod z^m).
inline LaurentPoly truncate(const LaurentPoly& p, int m) {
  if (p.var() != Var::z) throw std::invalid_argument("truncate expects a z-polynomial");
  if (m < 0) throw std::invalid_argument("truncation exponent must be nonnegative");
  LaurentPoly out(Var::z);
  for (const auto& [e, c] : p.coefficients()) {
    if (e >= m) break;
    out.add_term(e, c);
  }
  return out;
}

// Sum of coefficient * polynomial; assembles skein resolutions whose
// structure the caller supplies.
inline LaurentPoly skein_combine(
    const std::vector<std::pair<LaurentPoly, LaurentPoly>>& parts) {
  LaurentPoly out(Var::z);
  for (const auto& [coeff, poly] : parts) {
    if (coeff.var() != Var::z || poly.var() != Var::z)
      throw std::invalid_argument("skein_combine expects z-polynomials");
    out = out + coeff * poly;
  }
  return out;
}

// The z^k coefficient a_k (0 if absent).
inline Int coefficient_a(const LaurentPoly& p, int k) {
  if (p.var() != Var::z)
    throw std::invalid_argument("coefficient_a expects a z-polynomial");
  if (k < 0) throw std::invalid_argument("coefficient index must be nonnegative");
  return p.coefficient(k);
}

// Canonical rendering, terms in increasing exponent order:
// "1 + 2*z^6 + z^12", "-2*z^7", "s^-1 - s", "0".
inline std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : p.coefficients()) {
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Int mag = boost::multiprecision::abs(c);
    if (e == 0) {
      out += mag.str();
    } else {
      if (mag != 1) {
        out += mag.str();
        out += '*';
      }
      out += var_letter(p.var());
      if (e != 1) {
        out += '^';
        out += std::to_string(e);
      }
    }
  }
  return out;
}

// Parses the canonical rendering back; inverse of to_string.
inline LaurentPoly parse_laurent(std::string_view text, Var var) {
  LaurentPoly out(var);
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  skip_spaces();
  if (pos >= text.size()) throw parse_error("empty polynomial text", pos);
  if (text.substr(pos) == "0") return out;

  bool first = true;
  while (pos < text.size()) {
    skip_spaces();
    int sign = 1;
    if (!first) {
      if (text[pos] == '+') {
        ++pos;
      } else if (text[pos] == '-') {
        sign = -1;
        ++pos;
      } else {
        throw parse_error("expected '+' or '-'", pos);
      }
      skip_spaces();
    } else if (text[pos] == '-') {
      sign = -1;
      ++pos;
    }
    first = false;

    Int mag = 1;
    bool saw_number = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      mag = Int(std::string(text.substr(start, pos - start)));
      saw_number = true;
      if (pos < text.size() && text[pos] == '*') ++pos;
    }

    int exponent = 0;
    if (pos < text.size() && text[pos] == var_letter(var)) {
      ++pos;
      exponent = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::size_t start = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw parse_error("malformed exponent", start);
        exponent = std::stoi(std::string(text.substr(start, pos - start)));
      }
    } else if (!saw_number) {
      throw parse_error("expected coefficient or variable", pos);
    }
    out.add_term(exponent, sign * mag);
    skip_spaces();
  }
  return out;
}

}  // namespace milnor
