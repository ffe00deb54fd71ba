#include "selschur/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "selschur/complex_integrals.hpp"
#include "selschur/errors.hpp"

namespace selschur {

namespace {

std::string shape_desc(const TwoColumnShape& s) {
  std::ostringstream os;
  os << "(2^" << s.twos << " 1^" << s.ones() << ")";
  return os.str();
}

QuadratureSpec spec_for(const SelbergParams& p, const VerifyOptions& opt,
                        int degree_hint) {
  TierInfo tier = oracle_tier(p, degree_hint);
  QuadratureSpec spec;
  spec.nodes_per_dim = opt.nodes_override.value_or(tier.recommended_nodes);
  spec.budget = opt.budget;
  spec.workers = opt.workers;
  return spec;
}

// A case that failed with an evaluation error is flagged and reported; it
// does not abort the run.
VerificationReport error_report(std::string formula, const SelbergParams& p,
                                std::string shape, const std::exception& e,
                                const QuadratureSpec& spec) {
  VerificationReport rep;
  rep.formula = std::move(formula);
  rep.params = p;
  rep.shape = std::move(shape) + " [" + e.what() + "]";
  rep.tier = "error";
  rep.pass = false;
  rep.conditions = validate_conditions(p);
  rep.nodes_per_dim = spec.nodes_per_dim;
  rep.seed = spec.seed;
  return rep;
}

VerificationReport closed_vs_oracle(std::string formula,
                                    const SelbergParams& p, std::string shape,
                                    Complex closed, double oracle,
                                    const QuadratureSpec& spec) {
  VerificationReport rep;
  rep.formula = std::move(formula);
  rep.params = p;
  rep.shape = std::move(shape);
  rep.closed_form = closed;
  rep.oracle_value = oracle;
  rep.abs_error = std::abs(closed - Complex(oracle));
  rep.rel_error = rep.abs_error / std::max(std::abs(closed), 1e-300);
  rep.node_count = 1;
  for (int i = 0; i < p.n_vars; ++i) rep.node_count *= spec.nodes_per_dim;
  rep.conditions = validate_conditions(p);
  TierInfo tier = oracle_tier(p);
  rep.tier = tier.name;
  rep.pass = rep.rel_error <= tier.tolerance;
  rep.nodes_per_dim = spec.nodes_per_dim;
  rep.seed = spec.seed;
  return rep;
}

std::vector<TwoColumnShape> all_shapes(int n_vars) {
  std::vector<TwoColumnShape> shapes;
  for (int m = 0; m <= n_vars; ++m)
    for (int n = 0; n <= m; ++n) shapes.push_back({n, m, n_vars});
  return shapes;
}

void verify_tensor_suite(const std::string& which, const VerifyOptions& opt,
                         std::vector<VerificationReport>& out) {
  // theorem7: Schur-polynomial integrand vs the 4F3 closed form;
  // theorem5: plain-monomial integrand vs the 3F2 closed form;
  // aomoto: elementary-polynomial integrand; kadell: rho = 1 closed form.
  for (int n_vars : opt.grid.n_values) {
    for (double rho : opt.grid.rho_values) {
      if (which == "kadell" && rho != 1.0) continue;
      for (double a : opt.grid.a_values) {
        for (double b : opt.grid.b_values) {
          SelbergParams p{{a, 0.0}, {b, 0.0}, {rho, 0.0}, n_vars};
          QuadratureSpec spec = spec_for(p, opt, 2 * n_vars + 2);

          std::vector<TensorIntegrand> fs;
          std::vector<std::string> labels;
          std::vector<Complex> closed;
          if (which == "theorem7" || which == "kadell") {
            for (const TwoColumnShape& s : all_shapes(n_vars)) {
              fs.push_back(
                  TensorIntegrand::from_schur(s.to_partition()));
              labels.push_back(shape_desc(s));
              closed.push_back(which == "theorem7"
                                   ? selberg_schur(p, s)
                                   : kadell_rho1(p, s.to_partition()));
            }
            if (which == "kadell" && n_vars >= 3) {
              // Taller partitions exercise the general Schur path.
              for (Partition lam : {Partition{3}, Partition{3, 1}}) {
                fs.push_back(TensorIntegrand::from_schur(lam));
                labels.push_back(lam.to_string());
                closed.push_back(kadell_rho1(p, lam));
              }
            }
          } else if (which == "theorem5") {
            for (const TwoColumnShape& s : all_shapes(n_vars)) {
              fs.push_back(
                  TensorIntegrand::from_monomial_shape(s.twos, s.rows));
              labels.push_back(shape_desc(s));
              closed.push_back(
                  monomial_two_column_integral(p, s.twos, s.rows));
            }
          } else if (which == "aomoto") {
            for (int m = 0; m <= n_vars; ++m) {
              TwoColumnShape s{0, m, n_vars};
              fs.push_back(TensorIntegrand::from_schur(s.to_partition()));
              std::ostringstream os;
              os << "m=" << m;
              labels.push_back(os.str());
              closed.push_back(aomoto(p, m));
            }
          }
          try {
            std::vector<double> oracle = integrate_selberg_multi(p, fs, spec);
            for (std::size_t i = 0; i < fs.size(); ++i)
              out.push_back(closed_vs_oracle(which, p, labels[i], closed[i],
                                             oracle[i], spec));
          } catch (const EvalError& e) {
            out.push_back(error_report(which, p, "grid point", e, spec));
          }
        }
      }
    }
  }
}

void verify_psi(const VerifyOptions& opt,
                std::vector<VerificationReport>& out) {
  for (int n_vars : opt.grid.n_values) {
    for (double rho : opt.grid.rho_values) {
      for (double a : opt.grid.a_values) {
        for (double b : opt.grid.b_values) {
          SelbergParams p{{a, 0.0}, {b, 0.0}, {rho, 0.0}, n_vars};
          QuadratureSpec spec = spec_for(p, opt, 2 * n_vars + 2);
          for (int m = 1; m <= n_vars; ++m) {
            for (int n = 0; n < m; ++n) {
              try {
                out.push_back(check_psi_recurrence(p, m, n, spec));
              } catch (const EvalError& e) {
                out.push_back(error_report("psi", p, "recurrence", e, spec));
              }
            }
          }
        }
      }
    }
  }
}

void verify_lemmas(const VerifyOptions& opt,
                   std::vector<VerificationReport>& out) {
  for (int n_vars : opt.grid.n_values) {
    if (n_vars < 2) continue;  // the identities need a transposition partner
    for (double rho : opt.grid.rho_values) {
      for (double a : opt.grid.a_values) {
        for (double b : opt.grid.b_values) {
          SelbergParams p{{a, 0.0}, {b, 0.0}, {rho, 0.0}, n_vars};
          QuadratureSpec spec = spec_for(p, opt, 2 * n_vars + 4);
          for (int m = 1; m <= n_vars; ++m) {
            for (int n = 0; n < m; ++n) {
              auto guarded = [&](int id, std::optional<int> k) {
                try {
                  out.push_back(check_lemma(id, p, n, m, k, spec));
                } catch (const EvalError& e) {
                  out.push_back(error_report(
                      "lemma" + std::to_string(id), p, "case", e, spec));
                }
              };
              for (int id : {1, 3})
                for (int k = 2; k <= n_vars; ++k) guarded(id, k);
              if (b >= 1.0 || std::abs(b - 1.0) <= 1e-12) {
                // b < 1 is skipped outright: the two boundary integrals of
                // the identity diverge individually there.
                guarded(2, std::nullopt);
              }
              guarded(4, std::nullopt);
            }
          }
        }
      }
    }
  }
}

void verify_complex(const VerifyOptions& opt,
                    std::vector<VerificationReport>& out) {
  const std::vector<std::pair<Partition, Partition>> pairs = {
      {Partition{}, Partition{}},
      {Partition{1}, Partition{1}},
      {Partition{2}, Partition{1}},
  };
  for (double a : {0.2, 0.3}) {
    for (double b : {0.2, 0.3}) {
      SelbergParams p{{a, 0.0}, {b, 0.0}, {0.35, 0.0}, 1};
      QuadratureSpec spec;
      spec.nodes_per_dim = opt.nodes_override.value_or(96);
      spec.budget = opt.budget;
      for (const auto& [lam, lbar] : pairs) {
        Complex closed = complex_selberg_schur(p, {lam, lbar});
        Complex oracle = integrate_complex_n1(p, lam.part(1), lbar.part(1),
                                              spec);
        VerificationReport rep;
        rep.formula = "theorem14";
        rep.params = p;
        rep.shape = lam.to_string() + "," + lbar.to_string();
        rep.closed_form = closed;
        rep.oracle_value = oracle;
        rep.abs_error = std::abs(closed - oracle);
        rep.rel_error = rep.abs_error / std::max(std::abs(closed), 1e-300);
        rep.node_count = static_cast<long long>(spec.nodes_per_dim) * 4 *
                         spec.nodes_per_dim * 6;
        rep.region = "plane-N1";
        rep.tier = "plane";
        rep.pass = rep.rel_error <= 1e-3;
        rep.conditions = validate_conditions(p);
        rep.nodes_per_dim = spec.nodes_per_dim;
        out.push_back(rep);
      }
    }
  }
}

void verify_region(const VerifyOptions& opt,
                   std::vector<VerificationReport>& out) {
  // The two beta-integral evaluations at N = 1: J_1 / J_0 against the
  // region recursion factor.
  for (double a : {0.2, 0.3}) {
    for (double b : {0.3, 0.4}) {
      SelbergParams p{{a, 0.0}, {b, 0.0}, {0.5, 0.0}, 1};
      QuadratureSpec spec;
      spec.nodes_per_dim = opt.nodes_override.value_or(64);
      spec.budget = opt.budget;
      double j1 = integrate_region(p, Partition{}, 1, spec);
      double j0 = integrate_region(p, Partition{}, 0, spec);
      Complex factor = region_recursion_factor(p, 1);
      VerificationReport rep;
      rep.formula = "prop9_factor";
      rep.params = p;
      rep.closed_form = factor;
      rep.oracle_value = j1 / j0;
      rep.abs_error = std::abs(factor - Complex(j1 / j0));
      rep.rel_error = rep.abs_error / std::max(std::abs(factor), 1e-300);
      rep.node_count = 2 * spec.nodes_per_dim;
      rep.region = "mixed(q)";
      rep.tier = "region";
      rep.pass = rep.rel_error <= 1e-8;
      rep.conditions = validate_conditions(p);
      rep.nodes_per_dim = spec.nodes_per_dim;
      out.push_back(rep);
    }
  }
}

}  // namespace

void pin_grid(VerifyGrid& grid, std::optional<double> a,
              std::optional<double> b, std::optional<double> rho,
              std::optional<int> n) {
  if (a) grid.a_values = {*a};
  if (b) grid.b_values = {*b};
  if (rho) grid.rho_values = {*rho};
  if (n) grid.n_values = {*n};
}

std::vector<VerificationReport> run_verify(const VerifyOptions& options) {
  std::vector<VerificationReport> out;
  const std::string& suite = options.suite;
  bool known = false;
  for (const char* name : {"theorem7", "theorem5", "aomoto", "kadell"}) {
    if (suite == name || suite == "all") {
      verify_tensor_suite(name, options, out);
      known = true;
      if (suite != "all") return out;
    }
  }
  if (suite == "psi" || suite == "all") {
    verify_psi(options, out);
    known = true;
  }
  if (suite == "lemmas" || suite == "all") {
    verify_lemmas(options, out);
    known = true;
  }
  if (suite == "complex" || suite == "all") {
    verify_complex(options, out);
    known = true;
  }
  if (suite == "region" || suite == "all") {
    verify_region(options, out);
    known = true;
  }
  if (!known) throw std::invalid_argument("unknown verification suite: " + suite);
  return out;
}

VerifySummary summarize(const std::vector<VerificationReport>& reports) {
  VerifySummary s;
  s.total = static_cast<int>(reports.size());
  for (const auto& r : reports) {
    if (r.pass) ++s.passed;
    s.max_rel_error = std::max(s.max_rel_error, r.rel_error);
  }
  return s;
}

}  // namespace selschur
