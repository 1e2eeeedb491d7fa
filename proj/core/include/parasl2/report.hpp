#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "parasl2/bi_theta.hpp"
#include "parasl2/matrix.hpp"
#include "parasl2/theta_series.hpp"

namespace parasl2 {

/// Version string written into every report.
std::string artifact_version();

/// First nonzero entry of a discrepancy.
struct Witness {
  nlohmann::json position;
  std::string value;
};

struct Check {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  bool passed = false;
  std::optional<Witness> witness;
};

/// Ordered list of named pass/fail checks. Serializes to
///   {"artifact_version": ..., "checks": [{"name", "params", "status", "witness"}]}
/// where witness is {"position": ..., "value": ...} or null.
class Report {
 public:
  void add(Check check) { checks_.push_back(std::move(check)); }
  void append(const Report& other) { checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end()); }

  const std::vector<Check>& checks() const { return checks_; }
  bool all_passed() const;
  std::size_t failures() const;

  /// First check with the given name whose params contain every key/value of `match`.
  const Check* find(const std::string& name, const nlohmann::json& match = nlohmann::json::object()) const;

  nlohmann::json to_json() const;
  static Report from_json(const nlohmann::json& doc);

  /// One line per check: "PASS name {params}" followed by an indented
  /// witness line when present.
  std::string to_text() const;

 private:
  std::vector<Check> checks_;
};

std::optional<Witness> find_witness(const Matrix<Rational>& diff);
std::optional<Witness> find_witness(const Matrix<Series>& diff);
std::optional<Witness> find_witness(const Matrix<BiSeries>& diff);
std::optional<Witness> find_witness(const Series& diff);
std::optional<Witness> find_witness(const BiSeries& diff);
std::optional<Witness> find_witness(const HPoly& diff);

/// Check that passes iff `diff` is identically zero.
template <class M>
Check zero_check(std::string name, nlohmann::json params, const M& diff) {
  Check c{std::move(name), std::move(params), false, find_witness(diff)};
  c.passed = !c.witness.has_value();
  return c;
}

}  // namespace parasl2
