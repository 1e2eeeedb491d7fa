#include "parasl2/rational.hpp"

#include <stdexcept>

#include "parasl2/errors.hpp"

namespace parasl2 {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den)))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");

  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Rational out;
  out.get_num() = mpz_class(n, 10);
  if (slash == std::string_view::npos) {
    out.get_den() = 1;
  } else {
    std::string d(den);
    if (d.front() == '+') d.erase(0, 1);
    out.get_den() = mpz_class(d, 10);
    if (out.get_den() == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& x) { return x.get_str(10); }

Rational make_rational(long num, long den) {
  if (den == 0) throw not_a_unit("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational inverse(const Rational& x) {
  if (is_zero(x)) throw not_a_unit("not a unit: zero has no inverse");
  return Rational(1) / x;
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return pow(inverse(base), -exponent);
  Rational out(1);
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

}  // namespace parasl2
