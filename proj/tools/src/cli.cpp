#include "parasl2_cli/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "parasl2/cbh.hpp"
#include "parasl2/hopf.hpp"
#include "parasl2/limits.hpp"
#include "parasl2/psi.hpp"
#include "parasl2/rmatrix.hpp"
#include "parasl2/sl2_rep.hpp"

namespace parasl2::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string spin;
  std::optional<int> order;
  std::optional<int> order1;
  std::optional<int> order2;
  std::string delta;
  std::string delta1;
  std::string delta2;
  int kmax = 2;
  std::string format = "text";
  std::string out;
};

struct Output {
  Report report;
  std::string text;  // printed before the report
  nlohmann::json data = nlohmann::json::object();
};

Rational rational_arg(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError(fmt::format("{}: {}", flag, e.what()));
  }
}

Spin spin_arg(const std::string& text) {
  try {
    return Spin::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(fmt::format("--spin: {}", e.what()));
  }
}

int order_arg(int value, const char* flag) {
  if (value < 0) throw UsageError(fmt::format("{}: order must be >= 0, got {}", flag, value));
  return value;
}

Output cmd_verify(const Options& o) {
  std::vector<Spin> spins;
  std::vector<int> orders;
  std::vector<Rational> deltas;
  if (o.spin.empty())
    spins = {Spin::from_twice(1), Spin::from_twice(2), Spin::from_twice(3)};
  else
    spins = {spin_arg(o.spin)};
  if (o.order)
    orders = {order_arg(*o.order, "--order")};
  else
    orders = {0, 1, 2, 3};
  if (o.delta.empty())
    deltas = {Rational(1, 2), Rational(1, 3)};
  else
    deltas = {rational_arg(o.delta, "--delta")};

  Output res;
  for (Spin j : spins)
    for (int r : orders)
      for (const Rational& d : deltas) {
        res.report.append(check_defining_relations(j, d, r));
        res.report.append(check_hopf_axioms(j, d, r));
      }
  return res;
}

Output cmd_psi(const Options& o) {
  if (o.kmax < 0) throw UsageError(fmt::format("--kmax must be >= 0, got {}", o.kmax));
  Output res;
  const auto psi = psi_polynomials(o.kmax);
  for (std::size_t k = 0; k < psi.size(); ++k) {
    res.text += fmt::format("psi_{} = {}\n", k, to_string(psi[k]));
    res.data["psi"].push_back(to_string(psi[k]));
  }
  res.report = check_psi_division(o.kmax);
  return res;
}

Output cmd_rmatrix(const Options& o) {
  const Spin j = o.spin.empty() ? Spin::from_twice(1) : spin_arg(o.spin);
  const Rational delta = o.delta.empty() ? Rational(1, 2) : rational_arg(o.delta, "--delta");
  Output res;
  const auto rows = format_matrix(build_R(j, j, delta), delta);
  res.text += fmt::format("R (j1={}, j2={}, delta={}):\n", j.str(), j.str(), to_string(delta));
  for (const auto& row : rows) {
    std::string line;
    for (const auto& e : row) line += fmt::format("{:>12}", e);
    res.text += line + "\n";
  }
  res.data["R"] = rows;
  res.data["U"] = format_matrix(build_U(j, j, delta), delta);
  res.report.append(check_r_matrix(j, j, delta));
  res.report.append(check_intertwiner(j, j, delta));
  const Report ybe = check_ybe(j, delta);
  res.report.append(ybe);
  const char* status = ybe.all_passed() ? "pass" : "fail";
  res.text += fmt::format("YBE: {}\n", status);
  res.data["ybe"] = status;
  return res;
}

Output cmd_cbh(const Options& o) {
  const int r1 = order_arg(o.order1.value_or(1), "--order1");
  const int r2 = order_arg(o.order2.value_or(1), "--order2");
  const Rational d1 = o.delta1.empty() ? Rational(1, 2) : rational_arg(o.delta1, "--delta1");
  const Rational d2 = o.delta2.empty() ? Rational(1, 3) : rational_arg(o.delta2, "--delta2");
  Output res;
  const ComposedTheta theta = compose_theta(d1, d2, r1, r2);
  res.text += fmt::format("theta (r1={}, r2={}, delta1={}, delta2={}):\n", r1, r2, to_string(d1), to_string(d2));
  res.data["theta"] = nlohmann::json::array();
  for (int a = 0; a <= r1; ++a)
    for (int b = 0; b <= r2; ++b) {
      const Rational& c = theta.value.at(a, b);
      if (is_zero(c)) continue;
      res.text += fmt::format("  theta1^{}*theta2^{}: {}\n", a, b, to_string(c));
      res.data["theta"].push_back({{"theta1", a}, {"theta2", b}, {"coefficient", to_string(c)}});
    }
  res.report = check_exp_identity(d1, d2, r1, r2);
  return res;
}

Output cmd_limits(const Options& o) {
  const int r = order_arg(o.order.value_or(3), "--order");
  if (r < 1) throw UsageError("--order: the limit needs r >= 1");
  Output res;
  const NonlinearTarget target = nonlinear_target(r);
  const std::string finite = to_string(unit_circle_commutator(r));
  res.text += fmt::format("[J+,J-] → {}\n", to_string(target.commutator));
  res.text += fmt::format("finite n: [J+,J-] = {}\n", finite);
  res.data["limit"] = to_string(target.commutator);
  res.data["finite_n"] = finite;
  res.data["relation"] = target.relation;
  res.data["higgs_type"] = target.higgs_type;
  res.report = check_limits(r);
  return res;
}

std::string render(const Output& res, const std::string& command, const std::string& format) {
  if (format == "json") {
    nlohmann::json doc = res.report.to_json();
    doc["command"] = command;
    if (!res.data.empty()) doc["data"] = res.data;
    return doc.dump(2) + "\n";
  }
  return res.text + res.report.to_text() +
         fmt::format("{} checks, {} failed\n", res.report.checks().size(), res.report.failures());
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact verification of the paragrassmannian deformation of sl(2)", "parasl2"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out, "write output to PATH");
  };
  const auto with_order = [&o](CLI::App* sub) {
    sub->add_option_function<int>("--order", [&o](const int& v) { o.order = v; }, "truncation order r");
  };

  CLI::App* verify = app.add_subcommand("verify", "defining relations and Hopf axioms over a grid");
  verify->add_option("--spin", o.spin, "spin j, e.g. 1/2");
  with_order(verify);
  verify->add_option("--delta", o.delta, "rational delta p/q");
  common(verify);

  CLI::App* psi = app.add_subcommand("psi", "psi_k polynomials");
  psi->add_option("--kmax", o.kmax, "largest k");
  common(psi);

  CLI::App* rmatrix = app.add_subcommand("rmatrix", "order-1 R-matrix, intertwiner and Yang-Baxter");
  rmatrix->add_option("--spin", o.spin, "spin j");
  rmatrix->add_option("--delta", o.delta, "rational delta p/q");
  common(rmatrix);

  CLI::App* cbh = app.add_subcommand("cbh", "composed nilpotent element of two variables");
  cbh->add_option_function<int>("--order1", [&o](const int& v) { o.order1 = v; }, "order r1");
  cbh->add_option_function<int>("--order2", [&o](const int& v) { o.order2 = v; }, "order r2");
  cbh->add_option("--delta1", o.delta1, "rational delta1");
  cbh->add_option("--delta2", o.delta2, "rational delta2");
  common(cbh);

  CLI::App* limits = app.add_subcommand("limits", "unit-circle limit of the commutator");
  with_order(limits);
  common(limits);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Output res;
  std::string command;
  try {
    if (verify->parsed()) {
      command = "verify";
      res = cmd_verify(o);
    } else if (psi->parsed()) {
      command = "psi";
      res = cmd_psi(o);
    } else if (rmatrix->parsed()) {
      command = "rmatrix";
      res = cmd_rmatrix(o);
    } else if (cbh->parsed()) {
      command = "cbh";
      res = cmd_cbh(o);
    } else {
      command = "limits";
      res = cmd_limits(o);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string text = render(res, command, o.format);
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out);
    if (!file) {
      err << "error: cannot open " << o.out << "\n";
      return 2;
    }
    file << text;
  }
  return res.report.all_passed() ? 0 : 1;
}

}  // namespace parasl2::cli
