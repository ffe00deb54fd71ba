#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "selschur/complex_integrals.hpp"
#include "selschur/errors.hpp"
#include "selschur/json_io.hpp"
#include "selschur/oracle.hpp"
#include "selschur/verify.hpp"

namespace {

using nlohmann::json;
using namespace selschur;

struct CommonInputs {
  std::string a_text = "1";
  std::string b_text = "1";
  std::string rho_text = "1";
  int n_vars = 1;
  std::string shape_text;          // "n,m"
  std::string shape_bar_text;
  std::string partition_text;      // "2,1"
  std::string partition_bar_text;
  int m = -1;
  int mbar = -1;
  int q = -1;
  int nodes = 0;
  long long budget = 0;
  unsigned long long seed = 12345;
  int workers = 1;
  std::string format = "pretty";
  std::string out_path;
};

SelbergParams make_params(const CommonInputs& in) {
  SelbergParams p;
  p.a = parse_complex(in.a_text);
  p.b = parse_complex(in.b_text);
  p.rho = parse_complex(in.rho_text);
  p.n_vars = in.n_vars;
  p.validate();
  return p;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

TwoColumnShape parse_shape(const std::string& text, int n_vars) {
  std::vector<int> v = parse_int_list(text);
  if (v.size() != 2)
    throw std::invalid_argument("--shape expects two integers n,m");
  TwoColumnShape s{v[0], v[1], n_vars};
  s.validate();
  return s;
}

Partition parse_partition_arg(const std::string& text) {
  if (text.empty()) return Partition{};
  std::vector<int> v = parse_int_list(text);
  return Partition(std::span<const int>(v));
}

long long budget_from_env_or(long long explicit_budget) {
  if (explicit_budget > 0) return explicit_budget;
  if (const char* env = std::getenv("SELSCHUR_BUDGET")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 10'000'000;
}

std::ostream& open_output(const CommonInputs& in, std::ofstream& file) {
  if (in.out_path.empty()) return std::cout;
  file.open(in.out_path);
  if (!file) throw std::invalid_argument("cannot open output file " + in.out_path);
  return file;
}

struct EvalResult {
  Complex value;
  Complex log_value;  // complex logarithm of the value
  std::string shape_desc;
};

EvalResult eval_formula(const std::string& formula, const CommonInputs& in) {
  SelbergParams p = make_params(in);
  EvalResult r;
  auto from_log = [&](Complex logv) {
    r.log_value = logv;
    r.value = std::exp(logv);
  };
  if (formula == "selberg_J0") {
    from_log(log_selberg_j0(p));
  } else if (formula == "aomoto") {
    if (in.m < 0) throw std::invalid_argument("aomoto requires --m");
    from_log(log_aomoto(p, in.m));
    r.shape_desc = "m=" + std::to_string(in.m);
  } else if (formula == "kadell_rho1") {
    Partition lam = parse_partition_arg(in.partition_text);
    from_log(log_kadell_rho1(p, lam));
    r.shape_desc = lam.to_string();
  } else if (formula == "theorem5") {
    TwoColumnShape s = parse_shape(in.shape_text, p.n_vars);
    from_log(log_monomial_two_column_integral(p, s.twos, s.rows));
    r.shape_desc = s.to_partition().to_string();
  } else if (formula == "theorem7") {
    TwoColumnShape s = parse_shape(in.shape_text, p.n_vars);
    from_log(log_selberg_schur(p, s));
    r.shape_desc = s.to_partition().to_string();
  } else if (formula == "dotsenko") {
    r.value = dotsenko_j00(p);
    r.log_value = std::log(r.value);
  } else if (formula == "complex_aomoto") {
    if (in.m < 0 || in.mbar < 0)
      throw std::invalid_argument("complex_aomoto requires --m and --mbar");
    r.value = complex_aomoto(p, in.m, in.mbar);
    r.log_value = std::log(r.value);
    r.shape_desc =
        "m=" + std::to_string(in.m) + ",mbar=" + std::to_string(in.mbar);
  } else if (formula == "theorem14") {
    ComplexPairShape shapes;
    if (!in.shape_text.empty())
      shapes.left = parse_shape(in.shape_text, p.n_vars).to_partition();
    else
      shapes.left = parse_partition_arg(in.partition_text);
    if (!in.shape_bar_text.empty())
      shapes.right = parse_shape(in.shape_bar_text, p.n_vars).to_partition();
    else
      shapes.right = parse_partition_arg(in.partition_bar_text);
    r.value = complex_selberg_schur(p, shapes);
    r.log_value = std::log(r.value);
    r.shape_desc = shapes.left.to_string() + "," + shapes.right.to_string();
  } else if (formula == "prop9_factor") {
    if (in.q < 1) throw std::invalid_argument("prop9_factor requires --q");
    r.value = region_recursion_factor(p, in.q);
    r.log_value = std::log(r.value);
    r.shape_desc = "q=" + std::to_string(in.q);
  } else if (formula == "corollary12_ratio") {
    r.value = corollary12_ratio(p);
    r.log_value = std::log(r.value);
  } else {
    throw std::invalid_argument("unknown formula: " + formula);
  }
  return r;
}

void print_conditions_pretty(std::ostream& os, const ConditionReport& cr) {
  os << "conditions: real_ok=" << (cr.real_ok ? "true" : "false")
     << " complex_ok=" << (cr.complex_ok ? "true" : "false") << "\n";
  for (const auto& v : cr.violated)
    os << "  violated: " << v.name << " (slack=" << v.slack << ")\n";
}

int run_eval(const std::string& formula, const CommonInputs& in) {
  SelbergParams p = make_params(in);
  EvalResult r = eval_formula(formula, in);
  ConditionReport cr = validate_conditions(p);
  LogComplex lf = to_logform(r.log_value);

  std::ofstream file;
  std::ostream& os = open_output(in, file);
  if (in.format == "json") {
    json j{{"formula", formula},
           {"params", params_to_json(p)},
           {"shape", r.shape_desc},
           {"value", complex_to_json(r.value)},
           {"logform", logform_to_json(lf)},
           {"conditions", conditions_to_json(cr)}};
    os << j.dump(2) << "\n";
  } else if (in.format == "csv") {
    os << "formula,shape,re,im,logabs,arg\n";
    os.precision(17);
    os << formula << "," << r.shape_desc << "," << r.value.real() << ","
       << r.value.imag() << "," << lf.log_abs << "," << lf.arg << "\n";
  } else {
    os.precision(17);
    os << "formula: " << formula;
    if (!r.shape_desc.empty()) os << "  shape: " << r.shape_desc;
    os << "\n";
    os << "value: " << complex_to_string(r.value) << "\n";
    os << "  re = " << r.value.real() << "\n";
    os << "  im = " << r.value.imag() << "\n";
    os << "  logabs = " << lf.log_abs << ", arg = " << lf.arg << "\n";
    print_conditions_pretty(os, cr);
  }
  return 0;
}

int run_verify(const std::string& suite, const CommonInputs& in,
               std::optional<double> pin_a, std::optional<double> pin_b,
               std::optional<double> pin_rho, std::optional<int> pin_n) {
  VerifyOptions opt;
  opt.suite = suite;
  pin_grid(opt.grid, pin_a, pin_b, pin_rho, pin_n);
  if (in.nodes > 0) opt.nodes_override = in.nodes;
  opt.budget = budget_from_env_or(in.budget);
  opt.workers = in.workers;

  std::vector<VerificationReport> reports = run_verify(opt);
  VerifySummary s = summarize(reports);

  std::ofstream file;
  std::ostream& os = open_output(in, file);
  if (in.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r));
    os << arr.dump(2) << "\n";
  } else if (in.format == "csv") {
    os << "formula,shape,N,a,b,rho,closed_re,closed_im,oracle_re,oracle_im,"
          "abs_error,rel_error,tier,pass\n";
    os.precision(17);
    for (const auto& r : reports) {
      os << r.formula << "," << r.shape << "," << r.params.n_vars << ","
         << r.params.a.real() << "," << r.params.b.real() << ","
         << r.params.rho.real() << "," << r.closed_form.real() << ","
         << r.closed_form.imag() << "," << r.oracle_value.real() << ","
         << r.oracle_value.imag() << "," << r.abs_error << "," << r.rel_error
         << "," << r.tier << "," << (r.pass ? "1" : "0") << "\n";
    }
  } else {
    os.precision(6);
    for (const auto& r : reports) {
      os << (r.pass ? "[pass] " : "[FAIL] ") << r.formula;
      if (!r.shape.empty()) os << " " << r.shape;
      os << "  N=" << r.params.n_vars << " a=" << r.params.a.real()
         << " b=" << r.params.b.real() << " rho=" << r.params.rho.real()
         << "  rel_err=" << r.rel_error << " tier=" << r.tier << "\n";
    }
  }
  std::cerr << "verified " << s.passed << "/" << s.total
            << " cases, max rel error = " << s.max_rel_error << "\n";
  return s.passed == s.total ? 0 : 1;
}

int run_sweep(const std::string& formula, const CommonInputs& in,
              const std::string& axis, double start, double stop, int count) {
  if (count < 1) throw std::invalid_argument("sweep count must be >= 1");
  if (axis != "a" && axis != "b" && axis != "rho")
    throw std::invalid_argument("sweep axis must be one of a, b, rho");

  struct Row {
    double axis_value;
    std::string status;
    Complex value{};
    LogComplex lf{};
  };
  std::vector<Row> rows;
  for (int i = 0; i < count; ++i) {
    double x = count == 1 ? start
                          : start + (stop - start) * i / (count - 1);
    CommonInputs point = in;
    std::ostringstream val;
    val.precision(17);
    val << x;
    if (axis == "a") point.a_text = val.str();
    if (axis == "b") point.b_text = val.str();
    if (axis == "rho") point.rho_text = val.str();
    Row row;
    row.axis_value = x;
    try {
      EvalResult r = eval_formula(formula, point);
      row.status = "ok";
      row.value = r.value;
      row.lf = to_logform(r.log_value);
    } catch (const PoleError&) {
      row.status = "pole";
    } catch (const EvalError&) {
      row.status = "error";
    }
    rows.push_back(row);
  }

  std::ofstream file;
  std::ostream& os = open_output(in, file);
  if (in.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json j{{"formula", formula}, {axis, r.axis_value}, {"status", r.status}};
      if (r.status == "ok") {
        j["value"] = complex_to_json(r.value);
        j["logform"] = logform_to_json(r.lf);
      }
      arr.push_back(j);
    }
    os << arr.dump(2) << "\n";
  } else if (in.format == "pretty") {
    os.precision(17);
    for (const Row& r : rows) {
      os << axis << " = " << r.axis_value << ": ";
      if (r.status == "ok")
        os << complex_to_string(r.value);
      else
        os << "[" << r.status << "]";
      os << "\n";
    }
  } else {
    os << "index," << axis << ",re,im,logabs,arg,status\n";
    os.precision(17);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Row& r = rows[i];
      os << i << "," << r.axis_value << ",";
      if (r.status == "ok")
        os << r.value.real() << "," << r.value.imag() << "," << r.lf.log_abs
           << "," << r.lf.arg;
      else
        os << ",,,";
      os << "," << r.status << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Selberg-type integral evaluator and verification driver"};
  app.require_subcommand(1);

  CommonInputs in;
  std::string formula, suite, axis = "rho";
  double start = 0.5, stop = 2.0;
  int count = 16;
  double pin_a_v = 0, pin_b_v = 0, pin_rho_v = 0;
  int pin_n_v = 0;
  bool has_a = false, has_b = false, has_rho = false, has_n = false;

  auto add_common = [&](CLI::App* cmd, bool params_common) {
    if (params_common) {
      cmd->add_option("--a", in.a_text, "parameter a (re or re+imi)");
      cmd->add_option("--b", in.b_text, "parameter b (re or re+imi)");
      cmd->add_option("--rho", in.rho_text, "parameter rho (re or re+imi)");
      cmd->add_option("--N", in.n_vars, "number of variables");
    }
    cmd->add_option("--nodes", in.nodes, "oracle nodes per dimension");
    cmd->add_option("--budget", in.budget, "oracle node budget");
    cmd->add_option("--seed", in.seed, "Monte Carlo seed");
    cmd->add_option("--workers", in.workers, "oracle worker threads");
    cmd->add_option("--format", in.format, "output format: json|csv|pretty");
    cmd->add_option("--out", in.out_path, "output path (default stdout)");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate a closed form");
  eval->add_option("formula", formula,
                   "selberg_J0|aomoto|kadell_rho1|theorem5|theorem7|dotsenko|"
                   "complex_aomoto|theorem14|prop9_factor|corollary12_ratio")
      ->required();
  add_common(eval, true);
  eval->add_option("--shape", in.shape_text, "two-column shape n,m");
  eval->add_option("--shape-bar", in.shape_bar_text, "conjugate shape n,m");
  eval->add_option("--partition", in.partition_text, "partition, e.g. 2,2,1");
  eval->add_option("--partition-bar", in.partition_bar_text,
                   "conjugate partition");
  eval->add_option("--m", in.m, "elementary degree m");
  eval->add_option("--mbar", in.mbar, "conjugate elementary degree");
  eval->add_option("--q", in.q, "region recursion index q");

  std::string grid_name = "default";
  CLI::App* verify = app.add_subcommand("verify", "oracle verification suite");
  verify->add_option("suite", suite,
                     "theorem7|theorem5|aomoto|kadell|psi|lemmas|complex|"
                     "region|all")
      ->required();
  verify->add_option("--a", pin_a_v, "fix a");
  verify->add_option("--b", pin_b_v, "fix b");
  verify->add_option("--rho", pin_rho_v, "fix rho");
  verify->add_option("--N", pin_n_v, "fix N");
  verify->add_option("--grid", grid_name, "parameter grid (default)");
  add_common(verify, false);

  CLI::App* sweep = app.add_subcommand("sweep", "sweep one parameter axis");
  sweep->add_option("formula", formula, "formula id as in eval")->required();
  add_common(sweep, true);
  sweep->add_option("--shape", in.shape_text, "two-column shape n,m");
  sweep->add_option("--partition", in.partition_text, "partition");
  sweep->add_option("--m", in.m, "elementary degree m");
  sweep->add_option("--mbar", in.mbar, "conjugate elementary degree");
  sweep->add_option("--q", in.q, "region recursion index q");
  sweep->add_option("--axis", axis, "a|b|rho");
  sweep->add_option("--start", start, "axis start");
  sweep->add_option("--stop", stop, "axis stop");
  sweep->add_option("--count", count, "number of points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  if (grid_name != "default") {
    std::cerr << "usage error: unknown grid " << grid_name << "\n";
    return 1;
  }
  if (in.format != "pretty" && in.format != "json" && in.format != "csv") {
    std::cerr << "usage error: --format must be json, csv or pretty\n";
    return 1;
  }
  has_a = verify->count("--a") > 0;
  has_b = verify->count("--b") > 0;
  has_rho = verify->count("--rho") > 0;
  has_n = verify->count("--N") > 0;

  try {
    if (eval->parsed()) return run_eval(formula, in);
    if (verify->parsed())
      return run_verify(suite, in,
                        has_a ? std::optional<double>(pin_a_v) : std::nullopt,
                        has_b ? std::optional<double>(pin_b_v) : std::nullopt,
                        has_rho ? std::optional<double>(pin_rho_v)
                                : std::nullopt,
                        has_n ? std::optional<int>(pin_n_v) : std::nullopt);
    if (sweep->parsed())
      return run_sweep(formula, in, axis, start, stop, count);
  } catch (const EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::overflow_error& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
