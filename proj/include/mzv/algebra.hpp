#pragma once

// Shuffle and harmonic products, the automorphism sigma and the map S, and the
// correspondence between indices and z-words z_{k_1}...z_{k_r}, z_k = y x^{k-1}.

#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "mzv/index.hpp"
#include "mzv/word.hpp"

namespace mzv {

class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline Word z_letter(int k) {
  Word w;
  w.push_back(letter::y);
  for (int i = 1; i < k; ++i) w.push_back(letter::x);
  return w;
}

inline Word word_of_index(const Index& k) {
  Word w;
  for (int p : k) w = w + z_letter(p);
  return w;
}

inline Index index_of_word(const Word& w) {
  if (!w.in_h1()) throw domain_error("word '" + w.str() + "' is not in H^1 (must be empty or start with y)");
  std::vector<int> parts;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == letter::y) {
      parts.push_back(1);
    } else {
      ++parts.back();
    }
  }
  return Index(std::move(parts));
}

/// Linear extension of word_of_index to a coefficient mapping over indices.
template <class Combo>
NcPoly words_of_combo(const Combo& combo) {
  NcPoly p;
  for (const auto& [k, c] : combo) p.add(word_of_index(k), c);
  return p;
}

namespace detail {

using product_memo = std::unordered_map<std::pair<Word, Word>, NcPoly, WordPairHash>;

inline product_memo& shuffle_memo() {
  thread_local product_memo memo;
  return memo;
}
inline product_memo& harmonic_memo() {
  thread_local product_memo memo;
  return memo;
}

// Split a non-empty H^1 word into (prefix, k) with word = prefix * z_k.
inline std::pair<Word, int> split_last_z(const Word& w) {
  std::size_t last_y = 63 - static_cast<std::size_t>(__builtin_clzll(w.bits()));
  return {w.prefix(last_y), static_cast<int>(w.size() - last_y)};
}

}  // namespace detail

inline void clear_product_caches() {
  detail::shuffle_memo().clear();
  detail::harmonic_memo().clear();
}

/// w1 u1 sh w2 u2 = (w1 sh w2 u2) u1 + (w1 u1 sh w2) u2, with w sh 1 = 1 sh w = w.
inline const NcPoly& shuffle(const Word& a, const Word& b) {
  auto& memo = detail::shuffle_memo();
  std::pair<Word, Word> key = a < b ? std::pair{a, b} : std::pair{b, a};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  NcPoly result;
  if (a.empty() || b.empty()) {
    result = NcPoly(a + b);
  } else {
    Word ua = a.suffix_from(a.size() - 1);
    Word ub = b.suffix_from(b.size() - 1);
    result = shuffle(a.prefix(a.size() - 1), b).appended(ua);
    result += shuffle(a, b.prefix(b.size() - 1)).appended(ub);
  }
  return memo.emplace(std::move(key), std::move(result)).first->second;
}

inline NcPoly shuffle(const NcPoly& a, const NcPoly& b) {
  NcPoly r;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) r.add_scaled(shuffle(wa, wb), ca * cb);
  }
  return r;
}

/// w1 z_k * w2 z_l = (w1 * w2 z_l) z_k + (w1 z_k * w2) z_l + (w1 * w2) z_{k+l}, on H^1.
inline const NcPoly& harmonic(const Word& a, const Word& b) {
  if (!a.in_h1() || !b.in_h1()) {
    throw domain_error("harmonic product needs H^1 words, got '" + a.str() + "' and '" + b.str() + "'");
  }
  auto& memo = detail::harmonic_memo();
  std::pair<Word, Word> key = a < b ? std::pair{a, b} : std::pair{b, a};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  NcPoly result;
  if (a.empty() || b.empty()) {
    result = NcPoly(a + b);
  } else {
    auto [wa, k] = detail::split_last_z(a);
    auto [wb, l] = detail::split_last_z(b);
    result = harmonic(wa, b).appended(z_letter(k));
    result += harmonic(a, wb).appended(z_letter(l));
    result += harmonic(wa, wb).appended(z_letter(k + l));
  }
  return memo.emplace(std::move(key), std::move(result)).first->second;
}

inline NcPoly harmonic(const NcPoly& a, const NcPoly& b) {
  NcPoly r;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) r.add_scaled(harmonic(wa, wb), ca * cb);
  }
  return r;
}

enum class product { shuffle, harmonic };

inline const char* to_string(product p) { return p == product::shuffle ? "sh" : "ast"; }

inline NcPoly multiply(product p, const NcPoly& a, const NcPoly& b) {
  return p == product::shuffle ? shuffle(a, b) : harmonic(a, b);
}

/// sigma(x) = x, sigma(y) = x + y, extended multiplicatively.
inline NcPoly sigma(const Word& w) {
  std::vector<Word> expanded{Word{}};
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::size_t n = expanded.size();
    if (w[i] == letter::x) {
      for (auto& e : expanded) e.push_back(letter::x);
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        expanded.push_back(expanded[j].with(letter::y));
        expanded[j].push_back(letter::x);
      }
    }
  }
  NcPoly p;
  for (const auto& e : expanded) p.add(e, 1);
  return p;
}

inline NcPoly sigma(const NcPoly& p) {
  NcPoly r;
  for (const auto& [w, c] : p) r.add_scaled(sigma(w), c);
  return r;
}

/// S(1) = 1, S(y w) = y sigma(w).
inline NcPoly s_map(const NcPoly& p) {
  NcPoly r;
  Word y = Word::repeat(letter::y, 1);
  for (const auto& [w, c] : p) {
    if (!w.in_h1()) throw domain_error("S is defined on H^1; term '" + w.str() + "' starts with x");
    if (w.empty()) {
      r.add(w, c);
    } else {
      r.add_scaled(sigma(w.suffix_from(1)).prepended(y), c);
    }
  }
  return r;
}

}  // namespace mzv
