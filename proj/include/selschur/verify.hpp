#pragma once

#include <optional>
#include <string>
#include <vector>

#include "selschur/oracle.hpp"

namespace selschur {

// Parameter grid for verification sweeps. The default grid sits inside the
// real convergence domain with margin.
struct VerifyGrid {
  std::vector<double> a_values{0.7, 1.5, 2.3};
  std::vector<double> b_values{0.7, 1.5, 2.3};
  std::vector<double> rho_values{0.5, 1.0, 1.7};
  std::vector<int> n_values{1, 2, 3};
};

struct VerifyOptions {
  std::string suite;  // theorem7 | theorem5 | aomoto | kadell | psi |
                      // lemmas | complex | region | all
  VerifyGrid grid;
  std::optional<int> nodes_override;
  long long budget = 10'000'000;
  int workers = 1;
};

// Replaces grid axes by single fixed values where given.
void pin_grid(VerifyGrid& grid, std::optional<double> a,
              std::optional<double> b, std::optional<double> rho,
              std::optional<int> n);

std::vector<VerificationReport> run_verify(const VerifyOptions& options);

struct VerifySummary {
  int total = 0;
  int passed = 0;
  double max_rel_error = 0.0;
};
VerifySummary summarize(const std::vector<VerificationReport>& reports);

}  // namespace selschur
