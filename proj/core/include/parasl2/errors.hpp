#pragma once

#include <stdexcept>
#include <string>

namespace parasl2 {

/// Operands that cannot be combined: mismatched truncation orders,
/// dimensions or coefficient rings.
class structural_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inversion of an element whose constant term is not invertible.
class not_a_unit : public std::domain_error {
 public:
  explicit not_a_unit(const std::string& what = "not a unit") : std::domain_error(what) {}
};

/// Argument outside the domain of a formula (vanishing denominator,
/// non-nilpotent exponent argument, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace parasl2
