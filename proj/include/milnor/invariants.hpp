#pragma once
// Link presentations by longitude words and the Milnor numbers read off
// their Magnus expansions: mu(I), the indeterminacy Delta(I), the residue
// mubar(I), and the multi-index enumerators the decision criteria consume.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <milnor/bigint.hpp>
#include <milnor/magnus.hpp>
#include <milnor/words.hpp>

namespace milnor {

// A nonempty sequence of component ids, e.g. 1122. r(I) is the maximum
// multiplicity of any single id.
class MultiIndex {
 public:
  explicit MultiIndex(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("multi-index must be nonempty");
  }

  // Parses a digit string like "1122"; each character is one component id.
  static MultiIndex parse(std::string_view digits) {
    std::vector<std::uint32_t> entries;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      const char c = digits[i];
      if (c < '0' || c > '9')
        throw parse_error("multi-index must be a digit string", i);
      entries.push_back(static_cast<std::uint32_t>(c - '0'));
    }
    return MultiIndex(std::move(entries));
  }

  const std::vector<std::uint32_t>& entries() const { return entries_; }
  int length() const { return static_cast<int>(entries_.size()); }

  int max_multiplicity() const {
    std::map<std::uint32_t, int> counts;
    for (std::uint32_t e : entries_) ++counts[e];
    int best = 0;
    for (const auto& [id, c] : counts) best = std::max(best, c);
    return best;
  }

  int count(std::uint32_t id) const {
    return static_cast<int>(std::count(entries_.begin(), entries_.end(), id));
  }

  std::string str() const {
    std::string out;
    for (std::uint32_t e : entries_) {
      if (e > 9) {
        // ids above 9 would be ambiguous as bare digits
        if (!out.empty()) out += '.';
        out += std::to_string(e);
      } else {
        out += static_cast<char>('0' + e);
      }
    }
    return out;
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<std::uint32_t> entries_;
};

inline int r(const MultiIndex& index) { return index.max_multiplicity(); }

// An integer residue: value modulo modulus, with modulus 0 meaning an exact
// integer. The canonical representative lies in [0, modulus) when the
// modulus is positive.
struct Residue {
  Int value;
  Int modulus;

  static Residue exact(Int v) { return Residue{std::move(v), 0}; }

  static Residue reduce(const Int& v, const Int& m) {
    if (m == 0) return Residue{v, 0};
    Int canonical = v % m;
    if (canonical < 0) canonical += m;
    return Residue{canonical, m};
  }

  bool is_zero() const { return value == 0; }

  // The representative of least absolute value (ties keep the positive one).
  Int least_absolute() const {
    if (modulus == 0) return value;
    if (2 * value > modulus) return value - modulus;
    return value;
  }

  friend bool operator==(const Residue&, const Residue&) = default;
};

inline std::string to_string(const Residue& r) {
  return r.value.str() + " (mod " + r.modulus.str() + ")";
}

// Per-component longitude words over the meridian generators. Component ids
// are 1..n, or 0..n when a distinguished component K_0 is present; every
// generator index used by a longitude must be a declared id.
class LinkPresentation {
 public:
  LinkPresentation(int n, bool has_component_zero, std::vector<Word> longitudes)
      : n_(n), has_zero_(has_component_zero), longitudes_(std::move(longitudes)) {
    if (n_ < 1) throw std::invalid_argument("a link needs at least one component");
    if (static_cast<int>(longitudes_.size()) != total_components())
      throw std::invalid_argument("longitude count must match component count");
    for (const Word& w : longitudes_)
      for (const Letter& l : w.letters())
        if (!has_component(l.index))
          throw std::invalid_argument("longitude uses undeclared component id m" +
                                      std::to_string(l.index));
  }

  int component_count() const { return n_; }
  bool has_component_zero() const { return has_zero_; }
  int total_components() const { return n_ + (has_zero_ ? 1 : 0); }

  bool has_component(std::uint32_t id) const {
    return (has_zero_ || id >= 1) && id <= static_cast<std::uint32_t>(n_);
  }

  std::vector<std::uint32_t> component_ids() const {
    std::vector<std::uint32_t> ids;
    for (std::uint32_t id = has_zero_ ? 0 : 1; id <= static_cast<std::uint32_t>(n_); ++id)
      ids.push_back(id);
    return ids;
  }

  const Word& longitude(std::uint32_t id) const {
    if (!has_component(id))
      throw std::invalid_argument("unknown component id " + std::to_string(id));
    return longitudes_[has_zero_ ? id : id - 1];
  }

  friend bool operator==(const LinkPresentation&, const LinkPresentation&) = default;

 private:
  int n_;
  bool has_zero_;
  std::vector<Word> longitudes_;
};

// Evaluates mu/delta/mubar against one set of longitude expansions, so that
// table-scale enumerations expand each longitude exactly once.
class MuEvaluator {
 public:
  MuEvaluator(const LinkPresentation& link, int max_length)
      : link_(link), max_length_(max_length) {
    if (max_length_ < 2) throw std::invalid_argument("mu needs |I| >= 2");
    for (std::uint32_t id : link.component_ids())
      expansions_.emplace(id, expand(link.longitude(id), max_length_ - 1));
  }

  const LinkPresentation& link() const { return link_; }

  // mu(I) with I = h_1 ... h_{m-1} j: the coefficient of X_{h_1}...X_{h_{m-1}}
  // in the expansion of the longitude of component j.
  Int mu(const MultiIndex& index) const {
    if (index.length() < 2)
      throw std::invalid_argument("mu is defined for |I| >= 2");
    if (index.length() > max_length_)
      throw std::invalid_argument("multi-index exceeds evaluator length bound");
    for (std::uint32_t e : index.entries())
      if (!link_.has_component(e))
        throw std::invalid_argument("unknown component id " + std::to_string(e));
    const std::uint32_t last = index.entries().back();
    Monomial m(index.entries().begin(), index.entries().end() - 1);
    return coefficient(expansions_.at(last), m);
  }

  // Milnor's indeterminacy: gcd of mu(J) over all J obtained by deleting at
  // least one entry of I (keeping |J| >= 2) and cyclically permuting what
  // remains. The empty gcd is 0.
  Int delta(const MultiIndex& index) const {
    const auto& e = index.entries();
    const int m = index.length();
    std::set<std::vector<std::uint32_t>> seen;
    Int g = 0;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
      std::vector<std::uint32_t> kept;
      for (int t = 0; t < m; ++t)
        if (!((mask >> t) & 1u)) kept.push_back(e[t]);
      if (kept.size() < 2) continue;
      for (std::size_t rot = 0; rot < kept.size(); ++rot) {
        std::vector<std::uint32_t> j(kept.begin() + rot, kept.end());
        j.insert(j.end(), kept.begin(), kept.begin() + rot);
        if (seen.insert(j).second)
          g = boost::multiprecision::gcd(g, boost::multiprecision::abs(mu(MultiIndex(j))));
      }
    }
    return g;
  }

  Residue mubar(const MultiIndex& index) const {
    return Residue::reduce(mu(index), delta(index));
  }

 private:
  const LinkPresentation& link_;
  int max_length_;
  std::map<std::uint32_t, Series> expansions_;
};

inline Int mu(const LinkPresentation& link, const MultiIndex& index) {
  return MuEvaluator(link, std::max(index.length(), 2)).mu(index);
}

inline Int delta(const LinkPresentation& link, const MultiIndex& index) {
  return MuEvaluator(link, std::max(index.length(), 2)).delta(index);
}

inline Residue mubar(const LinkPresentation& link, const MultiIndex& index) {
  return MuEvaluator(link, std::max(index.length(), 2)).mubar(index);
}

using MultiIndexFilter = std::function<bool(const MultiIndex&)>;

// All multi-indices over the component ids with 2 <= |I| <= maxlen,
// optionally filtered, with their mubar residues, in length-then-lex order.
inline std::vector<std::pair<MultiIndex, Residue>> mu_table(
    const LinkPresentation& link, int maxlen, const MultiIndexFilter& filter = {}) {
  if (maxlen < 2) throw std::invalid_argument("mu_table needs maxlen >= 2");
  const MuEvaluator evaluator(link, maxlen);
  const std::vector<std::uint32_t> ids = link.component_ids();
  std::vector<std::pair<MultiIndex, Residue>> out;

  std::vector<std::uint32_t> current;
  auto enumerate = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      MultiIndex index(current);
      if (!filter || filter(index)) out.emplace_back(index, evaluator.mubar(index));
      return;
    }
    for (std::uint32_t id : ids) {
      current.push_back(id);
      self(self, remaining - 1);
      current.pop_back();
    }
  };
  for (int len = 2; len <= maxlen; ++len) enumerate(enumerate, len);
  return out;
}

}  // namespace milnor
