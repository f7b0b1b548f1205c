#pragma once

// Exact verification of the index-space identities used to derive the cyclic
// sum formula for t-adic symmetric MZVs from the one for the star values.

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "mzv/index_space.hpp"
#include "mzv/report.hpp"

namespace mzv {

/// A zeta symbol: an index together with the power of t multiplying it.
struct Symbol {
  Index index;
  int t_power = 0;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Finite Q-linear combination of symbols, i.e. an element of R[t] truncated in t.
class SymbolCombo {
 public:
  void add(const Index& k, int t_power, const rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(Symbol{k, t_power}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void add_scaled(const SymbolCombo& o, const rational& s) {
    for (const auto& [sym, c] : o.terms_) add(sym.index, sym.t_power, c * s);
  }
  bool is_zero() const { return terms_.empty(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  friend bool operator==(const SymbolCombo&, const SymbolCombo&) = default;

  /// Replace every star symbol by the sum over its comma/plus contractions.
  SymbolCombo star_expanded() const {
    SymbolCombo r;
    for (const auto& [sym, c] : terms_) {
      for (const auto& [k, e] : star_expand(sym.index)) r.add(k, sym.t_power, c * e);
    }
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [sym, c] : terms_) {
      if (c < 0) {
        out += "-";
      } else if (!first) {
        out += "+";
      }
      rational a = abs(c);
      if (a != 1) out += a.get_str() + "*";
      out += "(" + sym.index.str() + ")";
      if (sym.t_power > 0) out += "t^" + std::to_string(sym.t_power);
      first = false;
    }
    return out;
  }

 private:
  std::map<Symbol, rational> terms_;
};

namespace detail {

// sum_{j=0}^{L_d - 1 - skip} (j+1, L_1, ..., L_{d-1}, L_d - j)
inline IndexCombo split_first_last(const Index& l, int skip) {
  IndexCombo r;
  int last = l.back();
  Index middle = l.slice(0, l.depth() - 1);
  for (int j = 0; j <= last - 1 - skip; ++j) r.add((Index{j + 1} + middle).with(last - j), 1);
  return r;
}

inline IndexCombo prepend_part(const IndexCombo& m, int part) {
  return m.map([part](const Index& l) { return IndexCombo(Index{part} + l); });
}

inline IndexCombo append_part(const IndexCombo& m, int part) {
  return m.map([part](const Index& l) { return IndexCombo(l.with(part)); });
}

inline int sign(std::size_t m) { return m % 2 ? -1 : 1; }

}  // namespace detail

using combo_sides = std::pair<IndexCombo, IndexCombo>;

/// Cyclic symmetrization of S_m(k) against the direct sum over interior fillings
/// of every rotation. With `starred`, both sides are star-expanded.
inline combo_sides lemma112_sides(const Index& k, std::size_t m, bool starred = false,
                                  cut_policy policy = cut_policy::smallest_comma) {
  IndexCombo lhs = cyclic_symmetrize(s_m(k, m, policy));
  IndexCombo rhs;
  std::size_t r = k.depth();
  for (std::size_t i = 1; i <= r; ++i) {
    Index rot = k.rotated(i);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (r - 1)); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) == m) rhs.add(contract(rot.parts(), mask), 1);
    }
  }
  if (starred) return {star_expand(lhs), star_expand(rhs)};
  return {lhs, rhs};
}

inline combo_sides prop1_sides(const Index& k, int j) {
  IndexCombo lhs;
  std::size_t r = k.depth();
  for (std::size_t s = 0; s < r; ++s) {
    Index rot = k.rotated(s);
    std::vector<int> merged = rot.parts();
    merged[0] += j + 1;
    lhs.add(Index(merged), 1);
    lhs.add(Index{j + 1} + rot, 1);
  }
  IndexCombo rhs;
  for (std::size_t m = 0; m < r; ++m) {
    rhs.add_scaled(star_expand(detail::prepend_part(cyclic_symmetrize(s_m(k, m)), j + 1)), detail::sign(m));
  }
  return {lhs, rhs};
}

inline combo_sides prop2_sides(const Index& k) {
  std::size_t r = k.depth();
  IndexCombo lhs;
  for (std::size_t m = 0; m < r; ++m) {
    IndexCombo inner = cyclic_symmetrize(s_m(k, m)).map([](const Index& l) { return detail::split_first_last(l, 0); });
    lhs.add_scaled(star_expand(inner), detail::sign(m));
  }
  IndexCombo rhs;
  for (std::size_t i = 1; i <= r; ++i) rhs += detail::split_first_last(k.rotated(i), 0);
  rhs.add_scaled(star_expand(Index{k.weight() + 1}), -detail::sign(r) * k.weight());
  return {lhs, rhs};
}

inline combo_sides prop3_sides(const Index& k) {
  std::size_t r = k.depth();
  IndexCombo lhs;
  for (std::size_t m = 0; m < r; ++m) {
    lhs.add_scaled(star_expand(detail::append_part(cyclic_symmetrize(s_m(k, m)), 1)), detail::sign(m));
  }
  IndexCombo rhs;
  for (std::size_t i = 1; i <= r; ++i) {
    Index rot = k.rotated(i);
    rhs.add(rot.with(1), 1);
    std::vector<int> bumped = rot.parts();
    bumped.back() += 1;
    rhs.add(Index(bumped), 1);
  }
  return {lhs, rhs};
}

/// The cyclic-sum combination for t-adic symmetric MZVs, as plain symbols with
/// the infinite j-sums truncated at t^order.
inline SymbolCombo csf_hat_formal(const Index& k, int order) {
  SymbolCombo out;
  std::size_t r = k.depth();
  for (std::size_t i = 1; i <= r; ++i) {
    for (const auto& [idx, c] : detail::split_first_last(k.rotated(i), 1)) out.add(idx, 0, c);
  }
  for (std::size_t i = 1; i <= r; ++i) {
    Index from_i = k.rotated(i - 1);
    for (int j = 0; j <= order; ++j) {
      std::vector<int> merged = from_i.parts();
      merged[0] += j + 1;
      out.add(Index(merged), j, -1);
      out.add(Index{j + 1} + k.rotated(i), j, -1);
    }
  }
  for (std::size_t i = 1; i <= r; ++i) {
    std::vector<int> bumped = k.rotated(i).parts();
    bumped.back() += 1;
    out.add(Index(bumped), 0, -1);
  }
  return out;
}

/// The cyclic-sum combination for t-adic symmetric star values, as star symbols.
inline SymbolCombo csf_star_hat_formal(const Index& l, int order) {
  SymbolCombo out;
  std::size_t d = l.depth();
  for (std::size_t i = 1; i <= d; ++i) {
    for (const auto& [idx, c] : detail::split_first_last(l.rotated(i), 1)) out.add(idx, 0, c);
  }
  for (std::size_t i = 1; i <= d; ++i) {
    for (int j = 0; j <= order; ++j) out.add(Index{j + 1} + l.rotated(i), j, -1);
  }
  out.add(Index{l.weight() + 1}, 0, -l.weight());
  return out;
}

/// The plain combination for k against sum_m (-1)^m sum_{l in S_m(k)} of the
/// star combination for l, star symbols expanded into plain ones.
inline std::pair<SymbolCombo, SymbolCombo> csf_reduction_sides(const Index& k, int order) {
  SymbolCombo lhs = csf_hat_formal(k, order);
  SymbolCombo rhs;
  for (std::size_t m = 0; m < k.depth(); ++m) {
    for (const auto& [l, c] : s_m(k, m)) rhs.add_scaled(csf_star_hat_formal(l, order).star_expanded(), c * detail::sign(m));
  }
  return {lhs, rhs};
}

enum class index_identity { lemma112, prop1, prop2, prop3, csf_reduction };

inline index_identity parse_index_identity(const std::string& name) {
  if (name == "lemma112") return index_identity::lemma112;
  if (name == "prop1") return index_identity::prop1;
  if (name == "prop2") return index_identity::prop2;
  if (name == "prop3") return index_identity::prop3;
  if (name == "csf_reduction") return index_identity::csf_reduction;
  throw std::invalid_argument("unknown index identity '" + name + "'");
}

inline const char* to_string(index_identity id) {
  switch (id) {
    case index_identity::lemma112: return "lemma112";
    case index_identity::prop1: return "prop1";
    case index_identity::prop2: return "prop2";
    case index_identity::prop3: return "prop3";
    case index_identity::csf_reduction: return "csf_reduction";
  }
  return "?";
}

struct IdentityParams {
  /// lemma112: the number of pluses; unset checks every m in [0, r-1].
  std::optional<std::size_t> m;
  /// prop1: the shift j; unset checks every j in [0, 4].
  std::optional<int> j;
  /// csf_reduction: truncation order in t.
  int order = 2;
};

inline Report verify_index_identity(index_identity id, const Index& k, const IdentityParams& params = {}) {
  stopwatch clock;
  if (k.empty()) throw domain_error("index identities need a non-empty index");
  Report rep;
  rep.identity = to_string(id);
  rep.index = k.str();
  rep.pass = true;
  auto record = [&rep](bool equal, const std::string& label, const std::string& lhs, const std::string& rhs) {
    rep.residuals.push_back(equal ? 0.0 : 1.0);
    if (!equal) {
      rep.pass = false;
      rep.detail += label + ": lhs=" + lhs + " rhs=" + rhs + "\n";
    } else if (rep.detail.size() < 2000) {
      rep.detail += label + ": " + lhs + "\n";
    }
  };
  switch (id) {
    case index_identity::lemma112: {
      std::size_t lo = params.m.value_or(0);
      std::size_t hi = params.m.value_or(k.depth() - 1);
      if (hi + 1 > k.depth()) throw domain_error("lemma112: m must be at most depth-1");
      for (std::size_t m = lo; m <= hi; ++m) {
        auto [l, r] = lemma112_sides(k, m);
        record(l == r, "m=" + std::to_string(m), l.str(), r.str());
        auto [ls, rs] = lemma112_sides(k, m, true);
        record(ls == rs, "m=" + std::to_string(m) + " starred", ls.str(), rs.str());
      }
      break;
    }
    case index_identity::prop1: {
      int lo = params.j.value_or(0);
      int hi = params.j.value_or(4);
      if (lo < 0) throw domain_error("prop1: j must be non-negative");
      for (int j = lo; j <= hi; ++j) {
        auto [l, r] = prop1_sides(k, j);
        record(l == r, "j=" + std::to_string(j), l.str(), r.str());
      }
      break;
    }
    case index_identity::prop2: {
      auto [l, r] = prop2_sides(k);
      record(l == r, "prop2", l.str(), r.str());
      break;
    }
    case index_identity::prop3: {
      auto [l, r] = prop3_sides(k);
      record(l == r, "prop3", l.str(), r.str());
      break;
    }
    case index_identity::csf_reduction: {
      if (params.order < 0) throw domain_error("csf_reduction: order must be non-negative");
      rep.order = params.order;
      auto [l, r] = csf_reduction_sides(k, params.order);
      record(l == r, "csf_reduction", l.str(), r.str());
      break;
    }
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

}  // namespace mzv
