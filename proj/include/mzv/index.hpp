#pragma once

// Indices: finite sequences of positive integers.

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

class parse_error : public std::invalid_argument {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class Index {
 public:
  Index() = default;
  Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}
  explicit Index(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
      if (p < 1) throw std::invalid_argument("index parts must be positive, got " + std::to_string(p));
    }
  }

  /// Comma-separated positive integers; the empty string is the empty index.
  static Index parse(std::string_view text) {
    std::vector<int> parts;
    if (text.empty()) return Index{};
    std::size_t pos = 0;
    while (true) {
      std::size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(pos, end - pos);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1), ++pos;
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      if (tok.empty()) throw parse_error("index: empty entry", pos);
      long value = 0;
      for (std::size_t i = 0; i < tok.size(); ++i) {
        char c = tok[i];
        if (c < '0' || c > '9') throw parse_error("index: '" + std::string(tok) + "' is not a positive integer", pos + i);
        value = value * 10 + (c - '0');
        if (value > 1000000) throw parse_error("index: entry too large", pos);
      }
      if (value < 1) throw parse_error("index: entries must be positive, got " + std::string(tok), pos);
      parts.push_back(static_cast<int>(value));
      if (end == text.size()) break;
      pos = end + 1;
      if (pos == text.size()) throw parse_error("index: trailing comma", end);
    }
    return Index(std::move(parts));
  }

  std::size_t depth() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
  }
  bool admissible() const { return parts_.empty() || parts_.back() >= 2; }
  /// Every part equals 1 and the index is non-empty: the shape {1}^r.
  bool all_ones() const {
    if (parts_.empty()) return false;
    for (int p : parts_) {
      if (p != 1) return false;
    }
    return true;
  }

  int operator[](std::size_t i) const { return parts_[i]; }
  int front() const { return parts_.front(); }
  int back() const { return parts_.back(); }
  const std::vector<int>& parts() const { return parts_; }
  auto begin() const { return parts_.begin(); }
  auto end() const { return parts_.end(); }

  /// (k_{s+1}, ..., k_r, k_1, ..., k_s), 0 <= s <= r.
  Index rotated(std::size_t s) const {
    std::vector<int> v;
    v.reserve(parts_.size());
    for (std::size_t i = 0; i < parts_.size(); ++i) v.push_back(parts_[(s + i) % parts_.size()]);
    return Index(std::move(v));
  }

  Index reversed() const { return Index(std::vector<int>(parts_.rbegin(), parts_.rend())); }

  Index slice(std::size_t from, std::size_t to) const {
    return Index(std::vector<int>(parts_.begin() + static_cast<long>(from), parts_.begin() + static_cast<long>(to)));
  }

  friend Index operator+(const Index& a, const Index& b) {
    Index r = a;
    r.parts_.insert(r.parts_.end(), b.parts_.begin(), b.parts_.end());
    return r;
  }

  Index with(int part) const {
    Index r = *this;
    if (part < 1) throw std::invalid_argument("index parts must be positive");
    r.parts_.push_back(part);
    return r;
  }

  /// "1,2,3"; the empty index prints as the empty string.
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend bool operator==(const Index&, const Index&) = default;
  friend auto operator<=>(const Index&, const Index&) = default;

 private:
  std::vector<int> parts_;
};

/// Weight, then depth, then lexicographic.
struct graded_index_less {
  bool operator()(const Index& a, const Index& b) const {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    if (a.depth() != b.depth()) return a.depth() < b.depth();
    return a < b;
  }
};

struct IndexHash {
  std::size_t operator()(const Index& k) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int p : k) h = (h ^ static_cast<std::size_t>(p)) * 1099511628211ULL;
    return h ^ k.depth();
  }
};

/// All compositions of `weight` into `depth` positive parts, in lexicographic order.
inline std::vector<Index> compositions(int weight, int depth) {
  std::vector<Index> out;
  if (depth < 0 || weight < 0) return out;
  if (depth == 0) {
    if (weight == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int slots) {
    if (slots == 1) {
      if (remaining >= 1) {
        cur.push_back(remaining);
        out.emplace_back(cur);
        cur.pop_back();
      }
      return;
    }
    for (int p = 1; p <= remaining - (slots - 1); ++p) {
      cur.push_back(p);
      rec(remaining - p, slots - 1);
      cur.pop_back();
    }
  };
  rec(weight, depth);
  return out;
}

/// Every non-empty index of weight 1..max_weight, ordered by weight, depth, then lexicographically.
inline std::vector<Index> indices_up_to_weight(int max_weight) {
  std::vector<Index> out;
  for (int w = 1; w <= max_weight; ++w) {
    for (int r = 1; r <= w; ++r) {
      auto c = compositions(w, r);
      out.insert(out.end(), c.begin(), c.end());
    }
  }
  return out;
}

}  // namespace mzv
