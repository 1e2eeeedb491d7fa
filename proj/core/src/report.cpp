#include "parasl2/report.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "parasl2/version.hpp"

namespace parasl2 {

std::string artifact_version() { return PARASL2_VERSION; }

bool Report::all_passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; }));
}

const Check* Report::find(const std::string& name, const nlohmann::json& match) const {
  for (const auto& c : checks_) {
    if (c.name != name) continue;
    bool ok = true;
    for (auto it = match.begin(); it != match.end() && ok; ++it)
      ok = c.params.contains(it.key()) && c.params.at(it.key()) == it.value();
    if (ok) return &c;
  }
  return nullptr;
}

nlohmann::json Report::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json w = nullptr;
    if (c.witness) w = {{"position", c.witness->position}, {"value", c.witness->value}};
    checks.push_back({{"name", c.name}, {"params", c.params}, {"status", c.passed ? "pass" : "fail"}, {"witness", w}});
  }
  return {{"artifact_version", artifact_version()}, {"checks", checks}};
}

Report Report::from_json(const nlohmann::json& doc) {
  Report r;
  for (const auto& c : doc.at("checks")) {
    Check check;
    check.name = c.at("name").get<std::string>();
    check.params = c.at("params");
    const auto status = c.at("status").get<std::string>();
    if (status != "pass" && status != "fail") throw std::invalid_argument("unknown check status '" + status + "'");
    check.passed = status == "pass";
    if (!c.at("witness").is_null())
      check.witness = Witness{c.at("witness").at("position"), c.at("witness").at("value").get<std::string>()};
    r.add(std::move(check));
  }
  return r;
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& c : checks_) {
    out += fmt::format("{} {}", c.passed ? "PASS" : "FAIL", c.name);
    for (auto it = c.params.begin(); it != c.params.end(); ++it) {
      if (it.key() == "note") continue;
      out += fmt::format(" {}={}", it.key(), it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
    }
    out += "\n";
    if (c.params.contains("note")) out += fmt::format("    note: {}\n", c.params.at("note").get<std::string>());
    if (c.witness) out += fmt::format("    witness {} = {}\n", c.witness->position.dump(), c.witness->value);
  }
  return out;
}

std::optional<Witness> find_witness(const Matrix<Rational>& diff) {
  auto pos = first_entry_where(diff, [](const Rational& x) { return !is_zero(x); });
  if (!pos) return std::nullopt;
  return Witness{{{"row", pos->first}, {"col", pos->second}}, to_string(diff(pos->first, pos->second))};
}

std::optional<Witness> find_witness(const Matrix<Series>& diff) {
  auto pos = first_entry_where(diff, [](const Series& x) { return !x.is_zero(); });
  if (!pos) return std::nullopt;
  const Series& s = diff(pos->first, pos->second);
  std::size_t k = 0;
  while (is_zero(s[k])) ++k;
  return Witness{{{"row", pos->first}, {"col", pos->second}, {"theta_degree", k}}, to_string(s[k])};
}

std::optional<Witness> find_witness(const Matrix<BiSeries>& diff) {
  auto pos = first_entry_where(diff, [](const BiSeries& x) { return !x.is_zero(); });
  if (!pos) return std::nullopt;
  const BiSeries& s = diff(pos->first, pos->second);
  for (int a = 0; a <= s.order1(); ++a)
    for (int b = 0; b <= s.order2(); ++b)
      if (!is_zero(s.at(a, b)))
        return Witness{{{"row", pos->first}, {"col", pos->second}, {"theta1_degree", a}, {"theta2_degree", b}},
                       to_string(s.at(a, b))};
  return std::nullopt;
}

std::optional<Witness> find_witness(const Series& diff) {
  for (std::size_t k = 0; k < diff.coefficients().size(); ++k)
    if (!is_zero(diff[k])) return Witness{{{"theta_degree", k}}, to_string(diff[k])};
  return std::nullopt;
}

std::optional<Witness> find_witness(const BiSeries& diff) {
  for (int a = 0; a <= diff.order1(); ++a)
    for (int b = 0; b <= diff.order2(); ++b)
      if (!is_zero(diff.at(a, b))) return Witness{{{"theta1_degree", a}, {"theta2_degree", b}}, to_string(diff.at(a, b))};
  return std::nullopt;
}

std::optional<Witness> find_witness(const HPoly& diff) {
  const auto& cs = diff.coefficients();
  for (std::size_t k = 0; k < cs.size(); ++k)
    if (!is_zero(cs[k])) return Witness{{{"H_degree", k}}, to_string(cs[k])};
  return std::nullopt;
}

}  // namespace parasl2
