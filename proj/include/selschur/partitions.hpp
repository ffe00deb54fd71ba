#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace selschur {

// Integer partition in canonical form: weakly decreasing positive parts,
// trailing zeros never stored. Rows are indexed from 1 in every formula in
// this library, and part(i) returns 0 beyond the length.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::span<const int> parts);

  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

  // 1-based row index; 0 for rows beyond the length.
  int part(int i) const;

  const std::vector<int>& parts() const { return parts_; }
  Partition conjugate() const;
  std::string to_string() const;  // "(2,1)"; the empty partition prints "0"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Shape lambda = (2^twos 1^(rows-twos)) on n_vars variables.
struct TwoColumnShape {
  int twos = 0;    // number of rows equal to 2
  int rows = 0;    // total number of rows (the partition length)
  int n_vars = 1;  // number of variables N

  int ones() const { return rows - twos; }
  void validate() const;  // requires 0 <= twos <= rows <= n_vars
  Partition to_partition() const;
};

// Dominance order restricted to equal weights: true iff all prefix sums of
// mu are bounded by those of lam.
bool dominance_leq(const Partition& mu, const Partition& lam);

// All partitions dominated by the two-column shape, as (mu_r, r) with
// mu_r = (2^(twos-r) 1^(ones+2r)) for r = 0..twos. Entries whose length
// exceeds n_vars are kept; the monomial specialization vanishes on them.
std::vector<std::pair<Partition, int>> dominated_two_column(
    const TwoColumnShape& shape);

// Number of standard Young tableaux of shape (2^r 1^d):
// (d+1)/(d+2r+1) * C(d+2r+1, r). Exact; throws std::overflow_error.
long long kostka_two_column(int d, int r);

// The rotated-complement partition with rows
// lam^N_i = lam_1 + lam_N - lam_(N-i+1), i = 1..n_vars.
Partition n_conjugate(const Partition& lam, int n_vars);

// Monomial symmetric polynomial at the all-ones point: the number of
// distinct coordinate arrangements of the exponent multiset. Returns 0 when
// the partition is longer than n_vars.
long long monomial_spec_ones(const Partition& mu, int n_vars);

// Schur polynomial at the all-ones point via the hook-content product
// prod_{u} (n_vars + content(u)) / hook(u). Exact integer; returns 0 when
// the partition is longer than n_vars.
long long schur_spec_ones(const Partition& lam, int n_vars);

// Recognize lam = (2^n 1^(m-n)); nullopt if some part exceeds 2 or the
// length exceeds n_vars.
std::optional<TwoColumnShape> as_two_column(const Partition& lam, int n_vars);

// Overflow-checked integer helpers.
long long checked_mul(long long x, long long y);
long long checked_add(long long x, long long y);
long long binomial_ll(int n, int k);  // exact C(n,k), overflow-checked

}  // namespace selschur
