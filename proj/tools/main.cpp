#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bernstein/basis.hpp"
#include "bernstein/bernstein_operator.hpp"
#include "bernstein/identities.hpp"
#include "bernstein/q_bernstein.hpp"
#include "bernstein/report.hpp"
#include "bernstein/test_functions.hpp"

namespace {

using bernstein::BigInt;
using bernstein::InvalidInput;
using bernstein::Rational;

// Shortest representation that round-trips; locale-independent.
std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return parts;
}

// Decimal digit string to BigInt. Leading zeros are stripped first: the
// bigint string constructor would read "025" as octal.
BigInt parse_bigint(const std::string& text) {
  std::string::size_type pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size())
    throw InvalidInput("could not parse integer '" + text + "'");
  for (std::string::size_type i = pos; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw InvalidInput("could not parse integer '" + text + "'");
  auto first = text.find_first_not_of('0', pos);
  BigInt value(first == std::string::npos ? "0" : text.substr(first));
  return negative ? BigInt(-value) : value;
}

// "a/b", "12", and "0.25" all parse exactly ("0.05" becomes 1/20).
Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(parse_bigint(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  BigInt den = 1;
  for (std::string::size_type i = dot + 1; i < text.size(); ++i) den *= 10;
  return Rational(parse_bigint(digits), den);
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& part : split_list(text)) out.push_back(parse_rational(part));
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& part : split_list(text)) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size())
      throw InvalidInput("could not parse integer '" + part + "'");
    out.push_back(value);
  }
  return out;
}

void write_output(const std::optional<std::string>& path, const std::string& payload) {
  if (!path) {
    std::cout << payload;
    return;
  }
  std::ofstream file(*path);
  if (!file) throw InvalidInput("cannot open output file '" + *path + "'");
  file << payload;
}

bernstein::SimplexPointQ make_exact_point(const std::vector<Rational>& coords) {
  return bernstein::SimplexPointQ(coords);
}

struct EvalOptions {
  int k = 0;
  int n = 0;
  std::string v_text;
  std::string x_text;
  std::string q_text;
  std::optional<std::string> output;
};

int run_eval(const EvalOptions& opt) {
  std::vector<int> v_entries = parse_int_list(opt.v_text);
  if (static_cast<int>(v_entries.size()) != opt.k)
    throw bernstein::DimensionMismatch("--v has " + std::to_string(v_entries.size()) +
                                       " entries but --k is " + std::to_string(opt.k));
  std::vector<Rational> coords = parse_rational_list(opt.x_text);
  if (static_cast<int>(coords.size()) != opt.k)
    throw bernstein::DimensionMismatch("--x has " + std::to_string(coords.size()) +
                                       " entries but --k is " + std::to_string(opt.k));
  bernstein::BasisId id(bernstein::MultiIndex(v_entries), opt.n);
  bernstein::SimplexPointQ exact = make_exact_point(coords);

  std::string line;
  if (!opt.q_text.empty()) {
    bernstein::QParam q(bernstein::to_double(parse_rational(opt.q_text)));
    line = format_double(bernstein::q_basis_eval(bernstein::QBasisId(id, q),
                                                 bernstein::to_float(exact)));
  } else if (opt.x_text.find('/') != std::string::npos) {
    std::ostringstream exact_text;
    exact_text << bernstein::eval<Rational>(id, exact);
    line = exact_text.str();
  } else {
    line = format_double(bernstein::eval<double>(id, bernstein::to_float(exact)));
  }
  write_output(opt.output, line + "\n");
  return 0;
}

struct CheckOptions {
  int k = 2;
  int n_max = 5;
  bool thm1 = false;
  bool thm2 = false;
  bool thm3 = false;
  bool thm4 = false;
  bool all = false;
  std::string q_text = "1/4,1/2,3/4";
  std::uint64_t seed = bernstein::kDefaultSeed;
  bool inject_weight_bug = false;
  std::optional<std::string> output;
};

int run_check(const CheckOptions& opt) {
  bool t1 = opt.thm1, t2 = opt.thm2, t3 = opt.thm3, t4 = opt.thm4;
  if (opt.all || (!t1 && !t2 && !t3 && !t4)) t1 = t2 = t3 = t4 = true;

  const auto rule = opt.inject_weight_bug
                        ? bernstein::DecompositionWeight::shifted_denominator
                        : bernstein::DecompositionWeight::standard;
  bernstein::CheckConfig cfg;
  cfg.seed = opt.seed;
  bernstein::QCheckConfig qcfg;
  qcfg.base.seed = opt.seed;

  std::vector<double> qs;
  for (const Rational& r : parse_rational_list(opt.q_text))
    qs.push_back(bernstein::to_double(r));

  nlohmann::json out = nlohmann::json::object();
  bool violation = false;
  if (t1) {
    bernstein::Report r = bernstein::check_decomposition(opt.k, opt.n_max, cfg, rule);
    violation = violation || !r.passed();
    out["thm1"] = to_json(r);
  }
  if (t2) {
    bernstein::Report axis = bernstein::check_axis_symmetry(opt.k, opt.n_max, cfg);
    bernstein::Report perm = bernstein::check_permutation_symmetry(opt.k, opt.n_max, cfg);
    violation = violation || !axis.passed() || !perm.passed();
    nlohmann::json merged = to_json(axis);
    for (nlohmann::json& entry : to_json(perm)) merged.push_back(std::move(entry));
    out["thm2"] = std::move(merged);
  }
  if (t3) {
    bernstein::Report r = bernstein::check_q_decomposition(opt.k, opt.n_max, qs, qcfg, rule);
    violation = violation || !r.passed();
    out["thm3"] = to_json(r);
  }
  if (t4) {
    bernstein::Report r = bernstein::check_q_symmetry(opt.k, opt.n_max, qs, qcfg);
    violation = violation || !r.passed();
    out["thm4"] = to_json(r);
  }
  write_output(opt.output, out.dump(2) + "\n");
  return violation ? 1 : 0;
}

struct TableOptions {
  std::string function;
  int k = 2;
  std::string degrees_text;
  std::string grid_step_text = "1/20";
  std::string format = "csv";
  std::optional<std::string> output;
};

int run_table(const TableOptions& opt) {
  bernstein::SampledFunction f = bernstein::make_test_function(opt.function, opt.k);
  std::vector<int> degrees = parse_int_list(opt.degrees_text);
  Rational step = parse_rational(opt.grid_step_text);
  std::vector<bernstein::ConvergenceRow> rows =
      bernstein::convergence_table(f, degrees, step);

  std::string payload;
  if (opt.format == "csv") {
    std::ostringstream csv;
    csv << "function,k,n,grid_step,sup_error\n";
    for (const bernstein::ConvergenceRow& row : rows)
      csv << row.function << ',' << row.k << ',' << row.degree << ','
          << row.grid_step << ',' << format_double(row.sup_error) << '\n';
    payload = csv.str();
  } else if (opt.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const bernstein::ConvergenceRow& row : rows) {
      nlohmann::json item;
      item["function"] = row.function;
      item["k"] = row.k;
      item["n"] = row.degree;
      item["grid_step"] = bernstein::to_json(row.grid_step);
      item["sup_error"] = row.sup_error;
      arr.push_back(std::move(item));
    }
    payload = arr.dump(2) + "\n";
  } else {
    throw InvalidInput("unknown format '" + opt.format + "' (expected csv or json)");
  }
  write_output(opt.output, payload);
  return 0;
}

struct ApproxOptions {
  std::string function;
  int k = 2;
  int n = 0;
  std::string x_text;
  std::optional<std::string> output;
};

int run_approx(const ApproxOptions& opt) {
  bernstein::SampledFunction f = bernstein::make_test_function(opt.function, opt.k);
  std::vector<Rational> coords = parse_rational_list(opt.x_text);
  if (static_cast<int>(coords.size()) != opt.k)
    throw bernstein::DimensionMismatch("--x has " + std::to_string(coords.size()) +
                                       " entries but --k is " + std::to_string(opt.k));
  if (opt.n < 1) throw InvalidInput("--n must be a positive degree");
  bernstein::SimplexPointF x = bernstein::to_float(make_exact_point(coords));
  write_output(opt.output, format_double(bernstein::apply(f, opt.n, x)) + "\n");
  return 0;
}

struct GenfunOptions {
  std::string v_text;
  std::string x_text;
  std::string t_text = "1";
  int truncation = 40;
  std::optional<std::string> output;
};

int run_genfun(const GenfunOptions& opt) {
  bernstein::MultiIndex v(parse_int_list(opt.v_text));
  bernstein::SimplexPointQ exact = make_exact_point(parse_rational_list(opt.x_text));
  bernstein::SimplexPointF x = bernstein::to_float(exact);
  double t = bernstein::to_double(parse_rational(opt.t_text));

  double partial = bernstein::generating_partial(v, x, t, opt.truncation);
  double closed = bernstein::generating_closed(v, x, t);
  nlohmann::json out;
  out["partial"] = partial;
  out["closed"] = closed;
  out["abs_error"] = std::abs(partial - closed);
  write_output(opt.output, out.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplex Bernstein basis toolkit: evaluation, identity checks, "
               "convergence tables, generating-series comparison"};
  app.require_subcommand(1);

  EvalOptions eval_opt;
  CLI::App* eval_cmd = app.add_subcommand(
      "eval", "Evaluate one basis member at a point (fractions route to exact "
              "arithmetic; --q switches to the q-deformed basis)");
  eval_cmd->add_option("--k", eval_opt.k, "Simplex dimension")->required();
  eval_cmd->add_option("--n", eval_opt.n, "Degree")->required();
  eval_cmd->add_option("--v", eval_opt.v_text, "Multi-index, comma-separated")->required();
  eval_cmd->add_option("--x", eval_opt.x_text,
                       "Point coordinates, comma-separated (\"1/4\" or \"0.25\")")
      ->required();
  eval_cmd->add_option("--q", eval_opt.q_text, "Deformation parameter in (0,1]");
  eval_cmd->add_option("--output", eval_opt.output, "Write to file instead of stdout");

  CheckOptions check_opt;
  CLI::App* check_cmd = app.add_subcommand(
      "check", "Run identity suites and emit a JSON counterexample report "
               "(exit 1 if any identity fails)");
  check_cmd->add_option("--k", check_opt.k, "Simplex dimension");
  check_cmd->add_option("--n-max", check_opt.n_max, "Largest degree checked");
  check_cmd->add_flag("--thm1", check_opt.thm1, "Degree decomposition");
  check_cmd->add_flag("--thm2", check_opt.thm2, "Axis and permutation symmetry");
  check_cmd->add_flag("--thm3", check_opt.thm3, "q-deformed decomposition");
  check_cmd->add_flag("--thm4", check_opt.thm4, "q-deformed symmetry");
  check_cmd->add_flag("--all", check_opt.all, "All suites (default when none chosen)");
  check_cmd->add_option("--q", check_opt.q_text, "Deformation values, comma-separated");
  check_cmd->add_option("--seed", check_opt.seed, "Point-sampler seed");
  check_cmd->add_flag("--inject-weight-bug", check_opt.inject_weight_bug,
                      "Deliberately break the decomposition weight "
                      "(demonstrates the checks catch coefficient bugs)");
  check_cmd->add_option("--output", check_opt.output, "Write to file instead of stdout");

  TableOptions table_opt;
  CLI::App* table_cmd = app.add_subcommand(
      "table", "Sup-error of the approximation operator per degree, as CSV or JSON");
  table_cmd->add_option("--f", table_opt.function, "Test function label")->required();
  table_cmd->add_option("--k", table_opt.k, "Simplex dimension");
  table_cmd->add_option("--degrees", table_opt.degrees_text,
                        "Ascending degree list, comma-separated")
      ->required();
  table_cmd->add_option("--grid-step", table_opt.grid_step_text,
                        "Evaluation lattice step, a unit fraction");
  table_cmd->add_option("--format", table_opt.format, "csv (default) or json");
  table_cmd->add_option("--output", table_opt.output, "Write to file instead of stdout");

  ApproxOptions approx_opt;
  CLI::App* approx_cmd = app.add_subcommand(
      "approx", "Apply the approximation operator of a bundled test function "
                "at one point");
  approx_cmd->add_option("--f", approx_opt.function, "Test function label")->required();
  approx_cmd->add_option("--k", approx_opt.k, "Simplex dimension");
  approx_cmd->add_option("--n", approx_opt.n, "Operator degree")->required();
  approx_cmd->add_option("--x", approx_opt.x_text, "Point coordinates, comma-separated")
      ->required();
  approx_cmd->add_option("--output", approx_opt.output, "Write to file instead of stdout");

  GenfunOptions genfun_opt;
  CLI::App* genfun_cmd = app.add_subcommand(
      "genfun", "Compare the truncated generating series against its closed form");
  genfun_cmd->add_option("--v", genfun_opt.v_text, "Multi-index, comma-separated")->required();
  genfun_cmd->add_option("--x", genfun_opt.x_text, "Point coordinates, comma-separated")
      ->required();
  genfun_cmd->add_option("--t", genfun_opt.t_text, "Series variable");
  genfun_cmd->add_option("--truncation", genfun_opt.truncation,
                         "Last series degree kept (default 40)");
  genfun_cmd->add_option("--output", genfun_opt.output, "Write to file instead of stdout");

  try {
    app.parse(argc, argv);
    if (eval_cmd->parsed()) return run_eval(eval_opt);
    if (check_cmd->parsed()) return run_check(check_opt);
    if (table_cmd->parsed()) return run_table(table_opt);
    if (approx_cmd->parsed()) return run_approx(approx_opt);
    if (genfun_cmd->parsed()) return run_genfun(genfun_opt);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const bernstein::DomainError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
