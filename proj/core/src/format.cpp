#include <fmt/format.h>

#include <string>
#include <vector>

#include "parasl2/bi_theta.hpp"
#include "parasl2/polynomial.hpp"
#include "parasl2/theta_series.hpp"

namespace parasl2 {

namespace {

std::string power_of(const char* var, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return fmt::format("{}^{}", var, k);
}

// Joins signed terms "a", "-b", "c" into "a - b + c".
std::string join_signed(const std::vector<std::string>& terms) {
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (t.front() == '-')
      out += " - " + t.substr(1);
    else
      out += " + " + t;
  }
  return out;
}

// Wraps a compound expression in parentheses when it is used as a factor.
std::string as_factor(const std::string& s) {
  int depth = 0;
  bool compound = false;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ' ' && depth == 0) compound = true;
  }
  return compound ? "(" + s + ")" : s;
}

std::string series_term(const std::string& coeff, const char* var, std::size_t k) {
  if (k == 0) return coeff;
  const std::string p = power_of(var, k);
  if (coeff == "1") return p;
  if (coeff == "-1") return "-" + p;
  return as_factor(coeff) + "*" + p;
}

}  // namespace

std::string to_string(const HPoly& p) {
  if (p.is_zero()) return "0";
  mpz_class den = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());

  std::vector<std::string> terms;
  const auto& cs = p.coefficients();
  for (std::size_t k = cs.size(); k-- > 0;) {
    if (is_zero(cs[k])) continue;
    const Rational scaled = cs[k] * Rational(den);
    const std::string c = scaled.get_num().get_str();
    terms.push_back(series_term(c, HVar::name, k));
  }
  std::string body = join_signed(terms);
  if (den == 1) return body;
  if (terms.size() == 1 && body.front() == '-') return "-" + as_factor(body.substr(1)) + "/" + den.get_str();
  return as_factor(body) + "/" + den.get_str();
}

std::string to_string(const LambdaPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::string> terms;
  const auto& cs = p.coefficients();
  for (std::size_t k = cs.size(); k-- > 0;) {
    if (is_zero(cs[k])) continue;
    terms.push_back(series_term(to_string(cs[k]), LambdaVar::name, k));
  }
  return join_signed(terms);
}

namespace {

template <class C>
std::string series_to_string(const ThetaSeries<C>& s) {
  std::vector<std::string> terms;
  for (std::size_t k = 0; k < s.coefficients().size(); ++k) {
    if (is_zero(s[k])) continue;
    terms.push_back(series_term(to_string(s[k]), "theta", k));
  }
  return join_signed(terms);
}

}  // namespace

std::string to_string(const Series& s) { return series_to_string(s); }
std::string to_string(const ThetaSeries<HPoly>& s) { return series_to_string(s); }
std::string to_string(const ThetaSeries<LambdaPoly>& s) { return series_to_string(s); }

std::vector<std::string> to_strings(const Series& s) {
  std::vector<std::string> out;
  for (const auto& c : s.coefficients()) out.push_back(to_string(c));
  return out;
}

std::string to_string(const BiSeries& s) {
  std::vector<std::string> terms;
  for (int a = 0; a <= s.order1(); ++a)
    for (int b = 0; b <= s.order2(); ++b) {
      if (is_zero(s.at(a, b))) continue;
      std::string mono = power_of("theta1", static_cast<std::size_t>(a));
      const std::string t2 = power_of("theta2", static_cast<std::size_t>(b));
      if (!mono.empty() && !t2.empty()) mono += "*";
      mono += t2;
      const std::string c = to_string(s.at(a, b));
      if (mono.empty())
        terms.push_back(c);
      else if (c == "1")
        terms.push_back(mono);
      else if (c == "-1")
        terms.push_back("-" + mono);
      else
        terms.push_back(c + "*" + mono);
    }
  return join_signed(terms);
}

std::vector<std::vector<std::string>> to_strings(const BiSeries& s) {
  std::vector<std::vector<std::string>> out;
  for (int a = 0; a <= s.order1(); ++a) {
    auto& row = out.emplace_back();
    for (int b = 0; b <= s.order2(); ++b) row.push_back(to_string(s.at(a, b)));
  }
  return out;
}

}  // namespace parasl2
