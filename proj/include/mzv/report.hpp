#pragma once

// Verification reports shared by every checker, serialized one JSON object per line.

#include <chrono>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace mzv {

struct Report {
  std::string identity;
  std::string index;
  /// Truncation order in t, or -1 when the identity has no t-expansion.
  int order = -1;
  /// Exact checks: number of mismatching terms per coefficient. Numeric checks: |lhs - rhs| per coefficient.
  std::vector<double> residuals;
  double tolerance = 0;
  bool pass = false;
  double elapsed_ms = 0;
  /// Human-readable detail; on failure it carries the per-coefficient difference.
  std::string detail;

  double max_residual() const {
    double m = 0;
    for (double r : residuals) m = r > m ? r : m;
    return m;
  }
};

inline void to_json(nlohmann::json& j, const Report& r) {
  j = nlohmann::json{{"identity", r.identity}, {"index", r.index},       {"order", r.order},
                     {"residuals", r.residuals}, {"tolerance", r.tolerance}, {"pass", r.pass},
                     {"elapsed_ms", r.elapsed_ms}};
  if (!r.detail.empty()) j["detail"] = r.detail;
}

inline void from_json(const nlohmann::json& j, Report& r) {
  j.at("identity").get_to(r.identity);
  j.at("index").get_to(r.index);
  j.at("order").get_to(r.order);
  j.at("residuals").get_to(r.residuals);
  j.at("tolerance").get_to(r.tolerance);
  j.at("pass").get_to(r.pass);
  j.at("elapsed_ms").get_to(r.elapsed_ms);
  r.detail = j.value("detail", std::string{});
}

/// Wall-clock stopwatch used to fill Report::elapsed_ms.
class stopwatch {
 public:
  stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace mzv
