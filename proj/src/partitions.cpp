#include "selschur/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace selschur {

namespace {

std::vector<int> canonicalize(std::span<const int> parts) {
  std::vector<int> out;
  out.reserve(parts.size());
  int prev = -1;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("partition part is negative");
    if (prev >= 0 && p > prev)
      throw std::invalid_argument("partition parts must be weakly decreasing");
    prev = p;
    if (p > 0) {
      if (!out.empty() && out.back() < p)
        throw std::invalid_argument(
            "partition parts must be weakly decreasing");
      out.push_back(p);
    }
  }
  return out;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : parts_(canonicalize(std::span<const int>(parts.begin(), parts.size()))) {
}

Partition::Partition(std::span<const int> parts)
    : parts_(canonicalize(parts)) {}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("partition rows are indexed from 1");
  return i <= length() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
  Partition out;
  if (parts_.empty()) return out;
  out.parts_.resize(parts_.front());
  for (int j = 1; j <= parts_.front(); ++j) {
    int count = 0;
    for (int p : parts_)
      if (p >= j) ++count;
    out.parts_[j - 1] = count;
  }
  return out;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

void TwoColumnShape::validate() const {
  if (twos < 0 || twos > rows || rows > n_vars || n_vars < 1)
    throw std::invalid_argument("two-column shape requires 0 <= n <= m <= N");
}

Partition TwoColumnShape::to_partition() const {
  validate();
  std::vector<int> parts(rows, 1);
  std::fill(parts.begin(), parts.begin() + twos, 2);
  return Partition(parts);
}

bool dominance_leq(const Partition& mu, const Partition& lam) {
  if (mu.weight() != lam.weight()) return false;
  long long pmu = 0, plam = 0;
  int rows = std::max(mu.length(), lam.length());
  for (int i = 1; i <= rows; ++i) {
    pmu += mu.part(i);
    plam += lam.part(i);
    if (pmu > plam) return false;
  }
  return true;
}

std::vector<std::pair<Partition, int>> dominated_two_column(
    const TwoColumnShape& shape) {
  shape.validate();
  std::vector<std::pair<Partition, int>> out;
  out.reserve(shape.twos + 1);
  for (int r = 0; r <= shape.twos; ++r) {
    std::vector<int> parts(shape.rows + r, 1);
    std::fill(parts.begin(), parts.begin() + (shape.twos - r), 2);
    out.emplace_back(Partition(parts), r);
  }
  return out;
}

long long checked_mul(long long x, long long y) {
  long long r = 0;
  if (__builtin_mul_overflow(x, y, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

long long checked_add(long long x, long long y) {
  long long r = 0;
  if (__builtin_add_overflow(x, y, &r))
    throw std::overflow_error("integer overflow in addition");
  return r;
}

long long binomial_ll(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long result = 1;
  for (int i = 1; i <= k; ++i) {
    // C(n-k+i, i) is integral, so the division is exact at every step.
    result = checked_mul(result, n - k + i) / i;
  }
  return result;
}

long long kostka_two_column(int d, int r) {
  if (d < 0 || r < 0)
    throw std::invalid_argument("kostka_two_column requires d, r >= 0");
  long long c = binomial_ll(d + 2 * r + 1, r);
  long long num = checked_mul(c, d + 1);
  if (num % (d + 2 * r + 1) != 0)
    throw std::logic_error("kostka_two_column: non-exact division");
  return num / (d + 2 * r + 1);
}

Partition n_conjugate(const Partition& lam, int n_vars) {
  if (n_vars < 1) throw std::invalid_argument("n_vars must be positive");
  if (lam.length() > n_vars)
    throw std::invalid_argument("n_conjugate requires length(lam) <= n_vars");
  int head = lam.part(1) + lam.part(n_vars);
  std::vector<int> parts(n_vars);
  for (int i = 1; i <= n_vars; ++i)
    parts[i - 1] = head - lam.part(n_vars - i + 1);
  return Partition(parts);
}

long long monomial_spec_ones(const Partition& mu, int n_vars) {
  if (n_vars < 1) throw std::invalid_argument("n_vars must be positive");
  if (mu.length() > n_vars) return 0;
  // Multinomial: place each run of equal parts, zeros included.
  long long result = 1;
  int remaining = n_vars;
  const auto& parts = mu.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    result = checked_mul(result, binomial_ll(remaining, static_cast<int>(j - i)));
    remaining -= static_cast<int>(j - i);
    i = j;
  }
  return result;  // zeros fill the remaining slots in one way
}

long long schur_spec_ones(const Partition& lam, int n_vars) {
  if (n_vars < 1) throw std::invalid_argument("n_vars must be positive");
  if (lam.length() > n_vars) return 0;
  if (lam.empty()) return 1;
  Partition conj = lam.conjugate();
  long long num = 1, den = 1;
  for (int i = 1; i <= lam.length(); ++i) {
    for (int j = 1; j <= lam.part(i); ++j) {
      long long content = j - i;
      long long hook = lam.part(i) - j + conj.part(j) - i + 1;
      num = checked_mul(num, n_vars + content);
      den = checked_mul(den, hook);
      long long g = std::gcd(num, den);
      num /= g;
      den /= g;
    }
  }
  if (den != 1)
    throw std::logic_error("schur_spec_ones: hook-content product not integral");
  return num;
}

std::optional<TwoColumnShape> as_two_column(const Partition& lam, int n_vars) {
  if (lam.length() > n_vars || lam.max_part() > 2) return std::nullopt;
  int twos = 0;
  while (twos < lam.length() && lam.part(twos + 1) == 2) ++twos;
  return TwoColumnShape{twos, lam.length(), n_vars};
}

}  // namespace selschur
