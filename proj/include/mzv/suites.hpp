#pragma once

// Verification suites: enumerate the cases of a sweep and run them on a pool
// of workers, handing reports back in enumeration order.

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "mzv/algebra.hpp"
#include "mzv/index_identities.hpp"
#include "mzv/numerics.hpp"
#include "mzv/posets.hpp"
#include "mzv/regularization.hpp"
#include "mzv/report.hpp"
#include "mzv/tadic.hpp"

namespace mzv {

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"algebra-laws", "poset-laws", "regularization",
                                                 "index-identities", "second-main", "key-prop",
                                                 "csf-mzsv", "csf-tsmzsv", "csf-tsmzv-exact"};
  return names;
}

struct SuiteSpec {
  std::string suite = "all";
  int max_weight = 5;
  int t_order = 2;
  /// Single-case mode: only this index (or its cyclic class).
  std::optional<Index> index;
  std::optional<long> cutoff_n;
  std::optional<double> tol;

  void validate() const {
    if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
      throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    if (max_weight < 1) throw std::invalid_argument("max-weight must be at least 1");
    if (t_order < 0) throw std::invalid_argument("t-order must be non-negative");
    if (index && index->empty()) throw std::invalid_argument("--index needs a non-empty index");
    if (cutoff_n && *cutoff_n < 2) throw std::invalid_argument("cutoff-N must be at least 2");
    if (tol && !(*tol > 0)) throw std::invalid_argument("tolerance must be positive");
  }

  /// Evaluation settings for a suite; the default tolerance follows the suite's kind.
  EvalConfig config_for(const std::string& name) const {
    EvalConfig cfg;
    if (cutoff_n) cfg.N = *cutoff_n;
    cfg.tol = (name == "csf-mzsv" || name == "regularization") ? 1e-6 : 1e-5;
    if (tol) cfg.tol = *tol;
    return cfg;
  }
};

struct SuiteCase {
  std::string suite;
  std::string label;
  std::function<std::vector<Report>()> run;
};

namespace detail {

inline Report exact_report(const std::string& identity, const Index& k, int order) {
  Report r;
  r.identity = identity;
  r.index = k.str();
  r.order = order;
  r.pass = true;
  return r;
}

inline void check(Report& rep, bool ok, const std::string& label, const std::string& diff = {}) {
  rep.residuals.push_back(ok ? 0.0 : 1.0);
  if (!ok) {
    rep.pass = false;
    rep.detail += label + (diff.empty() ? "" : ": " + diff) + "\n";
  }
}

// Products of z_k with the words of small companion indices.
inline Report algebra_laws(const Index& k, int max_weight) {
  stopwatch clock;
  Report rep = exact_report("algebra-laws", k, -1);
  Word zk = word_of_index(k);
  std::vector<Word> companions;
  for (const Index& l : indices_up_to_weight(std::max(1, max_weight - k.weight()))) {
    if (companions.size() == 6) break;
    companions.push_back(word_of_index(l));
  }
  for (product op : {product::shuffle, product::harmonic}) {
    std::string name = to_string(op);
    for (const Word& u : companions) {
      NcPoly ab = multiply(op, NcPoly(zk), NcPoly(u));
      check(rep, ab == multiply(op, NcPoly(u), NcPoly(zk)), name + " commutativity with " + u.str());
      check(rep, ab.homogeneous(zk.size() + u.size()), name + " weight grading with " + u.str());
      for (const Word& v : companions) {
        NcPoly left = multiply(op, ab, NcPoly(v));
        NcPoly right = multiply(op, NcPoly(zk), multiply(op, NcPoly(u), NcPoly(v)));
        if (left != right) check(rep, false, name + " associativity with " + u.str() + ", " + v.str());
      }
      NcPoly sum(u);
      sum += NcPoly(zk);
      NcPoly dist = multiply(op, NcPoly(zk), sum);
      check(rep, dist == (ab + multiply(op, NcPoly(zk), NcPoly(zk))), name + " distributivity with " + u.str());
    }
    for (const NcPoly& w : {NcPoly(zk), s_map(NcPoly(zk))}) {
      NcPoly back = recombine(decompose(w, op), op);
      check(rep, back == w, name + " decompose round trip", (back - w).str());
    }
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

inline Report poset_laws(const Index& k, int order) {
  stopwatch clock;
  Report rep = exact_report("poset-laws", k, order);
  TwoPoset p = x_star(k);
  NcPoly wk = w_map(p);
  check(rep, p.admissible() == k.admissible(), "admissibility of X*(k) matches the index");
  check(rep, wk.in_h0() == k.admissible(), "W(X*(k)) in H^0 iff k admissible");
  check(rep, wk.homogeneous(static_cast<std::size_t>(k.weight())), "W(X*(k)) homogeneous");
  if (k.depth() == 1) check(rep, wk == NcPoly(word_of_index(k)), "single block is z_k", wk.str());
  for (const Index& other : {Index{1}, Index{2}, Index{1, 2}}) {
    NcPoly lhs = w_map(disjoint_union(p, x_star(other)));
    check(rep, lhs == shuffle(wk, w_star(other)), "W(X*(k) u X*(" + other.str() + ")) = shuffle");
  }
  auto images = x_star_hat(k, order).w_images();
  const WordSeries& direct = w_star_hat(k, order);
  for (int n = 0; n <= order; ++n) {
    const NcPoly& d = direct[n];
    check(rep, images[static_cast<std::size_t>(n)] == d, "W(X*_S(k)) at t^" + std::to_string(n),
          (images[static_cast<std::size_t>(n)] - d).str());
    check(rep, d.homogeneous(static_cast<std::size_t>(k.weight() + n)), "w*_S(k) homogeneous at t^" + std::to_string(n));
  }
  rep.elapsed_ms = clock.elapsed_ms();
  return rep;
}

inline std::vector<Report> regularization_reports(const Index& k, const EvalConfig& cfg) {
  stopwatch clock;
  Report exact = exact_report("decompose", k, -1);
  for (product op : {product::shuffle, product::harmonic}) {
    for (const NcPoly& w : {NcPoly(word_of_index(k)), s_map(NcPoly(word_of_index(k))), w_star(k)}) {
      NcPoly back = recombine(decompose(w, op), op);
      check(exact, back == w, std::string(to_string(op)) + " round trip of " + w.str(), (back - w).str());
    }
  }
  exact.elapsed_ms = clock.elapsed_ms();
  std::vector<Report> out{exact};
  for (reg_comparison c : {reg_comparison::ikz, reg_comparison::muneta, reg_comparison::ky}) {
    out.push_back(verify_reg_comparison<double>(c, k, cfg));
  }
  out.push_back(compare_star_regs<double>(k, cfg));
  return out;
}

inline std::vector<Report> index_identity_reports(const Index& k, int order) {
  std::vector<Report> out;
  for (index_identity id : {index_identity::lemma112, index_identity::prop1, index_identity::prop2,
                            index_identity::prop3, index_identity::csf_reduction}) {
    IdentityParams params;
    params.order = order;
    out.push_back(verify_index_identity(id, k, params));
  }
  // S_m is independent of the cut policy once cyclically symmetrized.
  stopwatch clock;
  Report policy = exact_report("s_m-policy", k, -1);
  for (std::size_t m = 0; m < k.depth(); ++m) {
    IndexCombo a = cyclic_symmetrize(s_m(k, m, cut_policy::smallest_comma));
    IndexCombo b = cyclic_symmetrize(s_m(k, m, cut_policy::largest_comma));
    check(policy, a == b, "m=" + std::to_string(m), (a - b).str());
  }
  IndexCombo round = star_expand(star_invert(k));
  check(policy, round == IndexCombo(k), "star_expand(star_invert(k)) = k", round.str());
  policy.elapsed_ms = clock.elapsed_ms();
  out.push_back(policy);
  return out;
}

template <class Item>
void add_cases(std::vector<SuiteCase>& out, const std::string& suite, const std::vector<Item>& items,
               std::function<std::vector<Report>(const Item&)> f) {
  for (const Item& it : items) out.push_back({suite, it.str(), [f, it] { return f(it); }});
}

}  // namespace detail

/// All cases of the sweep, in the deterministic order of the report stream:
/// suite, then weight, depth and lexicographic order of the index.
inline std::vector<SuiteCase> build_cases(const SuiteSpec& spec) {
  spec.validate();
  std::vector<std::string> names = spec.suite == "all" ? suite_names() : std::vector<std::string>{spec.suite};
  std::vector<Index> indices = spec.index ? std::vector<Index>{*spec.index} : indices_up_to_weight(spec.max_weight);
  std::vector<CyclicClass> classes =
      spec.index ? std::vector<CyclicClass>{CyclicClass::of(*spec.index)} : cyclic_classes_up_to(spec.max_weight);
  int order = spec.t_order;
  int weight = spec.max_weight;
  std::vector<SuiteCase> out;
  for (const std::string& name : names) {
    EvalConfig cfg = spec.config_for(name);
    using F = std::function<std::vector<Report>(const Index&)>;
    if (name == "algebra-laws") {
      detail::add_cases(out, name, indices, F([weight](const Index& k) {
                          return std::vector<Report>{detail::algebra_laws(k, weight)};
                        }));
    } else if (name == "poset-laws") {
      detail::add_cases(out, name, indices,
                        F([order](const Index& k) { return std::vector<Report>{detail::poset_laws(k, order)}; }));
    } else if (name == "regularization") {
      detail::add_cases(out, name, indices, F([cfg](const Index& k) { return detail::regularization_reports(k, cfg); }));
    } else if (name == "index-identities") {
      detail::add_cases(out, name, indices, F([order](const Index& k) { return detail::index_identity_reports(k, order); }));
    } else if (name == "second-main") {
      detail::add_cases(out, name, indices,
                        F([order](const Index& k) { return std::vector<Report>{verify_second_main(k, order)}; }));
    } else if (name == "key-prop") {
      detail::add_cases(out, name, classes, std::function<std::vector<Report>(const CyclicClass&)>([order](const CyclicClass& a) {
                          std::vector<Report> r{verify_key_prop(a, order)};
                          if (a.weight() <= 5) r.push_back(verify_abc(a, order));
                          return r;
                        }));
    } else {
      csf_check which = name == "csf-mzsv" ? csf_check::mzsv : name == "csf-tsmzsv" ? csf_check::tsmzsv : csf_check::tsmzv_exact;
      detail::add_cases(out, name, indices, F([which, order, cfg](const Index& k) {
                          return std::vector<Report>{verify_csf<double>(which, k, order, cfg)};
                        }));
    }
  }
  return out;
}

/// Runs every case on `jobs` workers. `emit` is called from a single thread at a
/// time, in case order, with each case's reports. Returns true iff all passed.
inline bool run_cases(const std::vector<SuiteCase>& cases, unsigned jobs,
                      const std::function<void(const SuiteCase&, const std::vector<Report>&)>& emit) {
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(cases.size(), 1))));
  std::vector<std::optional<std::vector<Report>>> results(cases.size());
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::condition_variable ready;
  auto evaluate = [&](std::size_t i) {
    std::vector<Report> reports;
    try {
      reports = cases[i].run();
    } catch (const std::exception& e) {
      Report r;
      r.identity = cases[i].suite;
      r.index = cases[i].label;
      r.detail = std::string("error: ") + e.what();
      reports.push_back(r);
    }
    return reports;
  };
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      auto reports = evaluate(i);
      std::lock_guard lock(mu);
      results[i] = std::move(reports);
      ready.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs && jobs > 1; ++j) pool.emplace_back(worker);
  bool all_pass = true;
  std::size_t written = 0;
  auto drain = [&](std::unique_lock<std::mutex>& lock) {
    while (written < cases.size() && results[written]) {
      std::vector<Report> reports = std::move(*results[written]);
      lock.unlock();
      for (const Report& r : reports) all_pass = all_pass && r.pass;
      emit(cases[written], reports);
      lock.lock();
      ++written;
    }
  };
  if (jobs == 1) {
    for (std::size_t i = 0; i < cases.size(); ++i) {
      auto reports = evaluate(i);
      for (const Report& r : reports) all_pass = all_pass && r.pass;
      emit(cases[i], reports);
    }
    return all_pass;
  }
  {
    std::unique_lock lock(mu);
    while (written < cases.size()) {
      ready.wait(lock, [&] { return results[written].has_value(); });
      drain(lock);
    }
  }
  for (auto& t : pool) t.join();
  return all_pass;
}

}  // namespace mzv
