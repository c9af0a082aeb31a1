#pragma once
// Freely reduced words over the indexed meridian generators m0, m1, m2, ...
// in syllable (run-length) form. Free reduction solves the word problem in a
// free group, so emptiness of the reduced form is the triviality test.

#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace milnor {

struct parse_error : std::runtime_error {
  parse_error(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// One syllable m_index^exponent; exponent is never zero.
struct Letter {
  std::uint32_t index = 0;
  std::int64_t exponent = 0;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// A freely reduced word. Adjacent letters always have distinct indices; the
// empty sequence is the identity. Construction reduces, so every Word value
// is canonical. Immutable after construction.
class Word {
 public:
  Word() = default;

  explicit Word(std::vector<Letter> letters) {
    for (const Letter& l : letters) push_reduced(l);
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  int syllable_count() const { return static_cast<int>(letters_.size()); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  void push_reduced(const Letter& l) {
    if (l.exponent == 0) return;
    if (!letters_.empty() && letters_.back().index == l.index) {
      letters_.back().exponent += l.exponent;
      if (letters_.back().exponent == 0) letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  std::vector<Letter> letters_;
};

// Parses whitespace-separated tokens of the form `m<index>` or
// `m<index>^<int>`, e.g. "m1 m2^-1 m0^3". Throws parse_error on malformed
// tokens and on explicit zero exponents.
inline Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::string_view token = text.substr(start, pos - start);

    if (token.size() < 2 || token[0] != 'm')
      throw parse_error("malformed token '" + std::string(token) + "'", start);

    std::uint32_t index = 0;
    const char* digits_begin = token.data() + 1;
    const char* token_end = token.data() + token.size();
    auto [after_index, ec] = std::from_chars(digits_begin, token_end, index);
    if (ec != std::errc() || after_index == digits_begin)
      throw parse_error("malformed generator index in '" + std::string(token) + "'", start);

    std::int64_t exponent = 1;
    if (after_index != token_end) {
      if (*after_index != '^')
        throw parse_error("malformed token '" + std::string(token) + "'", start);
      const char* exp_begin = after_index + 1;
      auto [after_exp, ec2] = std::from_chars(exp_begin, token_end, exponent);
      if (ec2 != std::errc() || after_exp != token_end)
        throw parse_error("malformed exponent in '" + std::string(token) + "'", start);
      if (exponent == 0)
        throw parse_error("zero exponent in '" + std::string(token) + "'", start);
    }
    letters.push_back(Letter{index, exponent});
  }
  return Word(std::move(letters));
}

// Group law: freely reduced concatenation.
inline Word multiply(const Word& u, const Word& v) {
  std::vector<Letter> all = u.letters();
  all.insert(all.end(), v.letters().begin(), v.letters().end());
  return Word(std::move(all));
}

inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

inline Word invert(const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.letters().size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it)
    out.push_back(Letter{it->index, -it->exponent});
  return Word(std::move(out));
}

// The homomorphism sending m_g to 1 and fixing all other generators.
inline Word erase_generator(const Word& u, std::uint32_t g) {
  std::vector<Letter> out;
  out.reserve(u.letters().size());
  for (const Letter& l : u.letters())
    if (l.index != g) out.push_back(l);
  return Word(std::move(out));
}

inline bool is_trivial(const Word& u) { return u.empty(); }

// Canonical reduced token sequence; the empty word renders as "".
inline std::string to_string(const Word& u) {
  std::string out;
  for (const Letter& l : u.letters()) {
    if (!out.empty()) out += ' ';
    out += 'm';
    out += std::to_string(l.index);
    if (l.exponent != 1) {
      out += '^';
      out += std::to_string(l.exponent);
    }
  }
  return out;
}

}  // namespace milnor
