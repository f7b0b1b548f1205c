#pragma once

// Words over the alphabet {x, y} and finite rational linear combinations of
// them (elements of the Hoffman algebra Q<x, y>).

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mzv {

using rational = mpq_class;
using integer = mpz_class;

enum class letter : std::uint8_t { x = 0, y = 1 };

inline char to_char(letter l) { return l == letter::x ? 'x' : 'y'; }

/// Packed word: letter i lives in bit i (x = 0, y = 1).
class Word {
 public:
  static constexpr std::size_t max_length = 64;

  Word() = default;

  static Word parse(std::string_view text) {
    Word w;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (c == 'x') {
        w.push_back(letter::x);
      } else if (c == 'y') {
        w.push_back(letter::y);
      } else {
        throw std::invalid_argument("word: unexpected character '" + std::string(1, c) +
                                    "' at position " + std::to_string(i));
      }
    }
    return w;
  }

  static Word repeat(letter l, std::size_t n) {
    Word w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(l);
    return w;
  }

  std::size_t size() const { return size_; }
  std::size_t weight() const { return size_; }
  bool empty() const { return size_ == 0; }
  std::uint64_t bits() const { return bits_; }

  letter operator[](std::size_t i) const { return static_cast<letter>((bits_ >> i) & 1U); }
  letter front() const { return (*this)[0]; }
  letter back() const { return (*this)[size_ - 1]; }

  void push_back(letter l) {
    if (size_ == max_length) throw std::length_error("word longer than 64 letters");
    if (l == letter::y) bits_ |= std::uint64_t{1} << size_;
    ++size_;
  }

  Word operator+(const Word& tail) const {
    if (size_ + tail.size_ > max_length) throw std::length_error("word longer than 64 letters");
    Word w = *this;
    if (tail.size_ > 0) w.bits_ |= tail.bits_ << size_;
    w.size_ = static_cast<std::uint8_t>(size_ + tail.size_);
    return w;
  }

  Word with(letter l) const {
    Word w = *this;
    w.push_back(l);
    return w;
  }

  Word prefix(std::size_t n) const {
    Word w;
    w.size_ = static_cast<std::uint8_t>(n);
    w.bits_ = n == 64 ? bits_ : bits_ & ((std::uint64_t{1} << n) - 1);
    return w;
  }

  Word suffix_from(std::size_t start) const {
    Word w;
    if (start >= size_) return w;
    w.size_ = static_cast<std::uint8_t>(size_ - start);
    w.bits_ = bits_ >> start;
    return w;
  }

  /// Reverse the letters and exchange x <-> y: the image of a word under t -> 1 - t.
  Word dual_reversed() const {
    Word w;
    for (std::size_t i = size_; i-- > 0;) {
      w.push_back((*this)[i] == letter::x ? letter::y : letter::x);
    }
    return w;
  }

  std::size_t count(letter l) const {
    auto ones = static_cast<std::size_t>(__builtin_popcountll(bits_));
    return l == letter::y ? ones : size_ - ones;
  }

  std::size_t trailing(letter l) const {
    std::size_t n = 0;
    while (n < size_ && (*this)[size_ - 1 - n] == l) ++n;
    return n;
  }

  /// Empty, or starts with y.
  bool in_h1() const { return empty() || front() == letter::y; }
  /// Empty, or starts with y and ends with x.
  bool in_h0() const { return empty() || (front() == letter::y && back() == letter::x); }

  std::string str() const {
    std::string s;
    s.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) s.push_back(to_char((*this)[i]));
    return s;
  }

  friend bool operator==(const Word&, const Word&) = default;

  /// Graded lexicographic order with x < y.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    for (std::size_t i = 0; i < a.size_; ++i) {
      auto la = static_cast<int>(a[i]);
      auto lb = static_cast<int>(b[i]);
      if (la != lb) return la <=> lb;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::uint64_t bits_ = 0;
  std::uint8_t size_ = 0;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = w.bits() * 0x9E3779B97F4A7C15ULL ^ (static_cast<std::uint64_t>(w.size()) << 57);
    h ^= h >> 31;
    return static_cast<std::size_t>(h);
  }
};

struct WordPairHash {
  std::size_t operator()(const std::pair<Word, Word>& p) const noexcept {
    WordHash h;
    return h(p.first) * 31 + (h(p.second) ^ 0x5bd1e995U);
  }
};

/// Finite Q-linear combination of words; zero coefficients are never stored.
class NcPoly {
 public:
  using map_type = std::unordered_map<Word, rational, WordHash>;

  NcPoly() = default;
  NcPoly(const Word& w, const rational& c = 1) { add(w, c); }  // NOLINT

  static NcPoly one() { return NcPoly(Word{}); }
  static NcPoly parse(std::string_view text);

  void add(const Word& w, const rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  rational coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  NcPoly& operator+=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  NcPoly& operator-=(const NcPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  NcPoly& operator*=(const rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }
  void add_scaled(const NcPoly& o, const rational& s) {
    if (s == 0) return;
    for (const auto& [w, c] : o.terms_) add(w, c * s);
  }

  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator-(NcPoly a) { return a *= rational(-1); }
  friend NcPoly operator*(NcPoly a, const rational& s) { return a *= s; }
  friend NcPoly operator*(const rational& s, NcPoly a) { return a *= s; }

  friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }

  /// Every term multiplied on the right by `tail`.
  NcPoly appended(const Word& tail) const {
    NcPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& [w, c] : terms_) r.terms_.emplace(w + tail, c);
    return r;
  }
  /// Every term multiplied on the left by `head`.
  NcPoly prepended(const Word& head) const {
    NcPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& [w, c] : terms_) r.terms_.emplace(head + w, c);
    return r;
  }

  bool in_h1() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.in_h1(); });
  }
  bool in_h0() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.in_h0(); });
  }
  /// True iff every term has weight n (the zero polynomial is homogeneous of every weight).
  bool homogeneous(std::size_t n) const {
    return std::all_of(terms_.begin(), terms_.end(), [n](const auto& t) { return t.first.size() == n; });
  }

  std::vector<std::pair<Word, rational>> sorted_terms() const {
    std::vector<std::pair<Word, rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  /// "2*yxyx+4*yyxx"; the empty word prints as 1, the zero polynomial as 0.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : sorted_terms()) {
      std::string word = w.empty() ? "1" : w.str();
      if (c < 0) {
        out += "-";
      } else if (!first) {
        out += "+";
      }
      rational a = abs(c);
      if (a == 1) {
        out += word;
      } else if (w.empty()) {
        out += a.get_str();
      } else {
        out += a.get_str() + "*" + word;
      }
      first = false;
    }
    return out;
  }

 private:
  map_type terms_;
};

/// Inverse of NcPoly::str() (accepts "0", "1", "1/2", "yx", "-3/2*yyx+yx").
inline NcPoly NcPoly::parse(std::string_view text) {
  NcPoly p;
  if (text == "0") return p;
  std::size_t i = 0;
  while (i < text.size()) {
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
      negative = text[i] == '-';
      ++i;
    }
    std::size_t end = text.find_first_of("+-", i);
    if (end == std::string_view::npos) end = text.size();
    std::string_view term = text.substr(i, end - i);
    if (term.empty()) throw std::invalid_argument("polynomial: empty term at position " + std::to_string(i));
    rational c = 1;
    std::string_view word = term;
    if (auto star = term.find('*'); star != std::string_view::npos) {
      c = rational(std::string(term.substr(0, star)));
      c.canonicalize();
      word = term.substr(star + 1);
    } else if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      c = rational(std::string(term));
      c.canonicalize();
      word = "1";
    }
    if (negative) c = -c;
    p.add(word == "1" ? Word{} : Word::parse(word), c);
    i = end;
  }
  return p;
}

}  // namespace mzv

template <>
struct std::hash<mzv::Word> : mzv::WordHash {};
